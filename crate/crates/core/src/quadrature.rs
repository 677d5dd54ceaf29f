//! Adaptive Gauss–Kronrod (7/15) integration by interval bisection.

use crate::scalar::Scalar;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

// Gauss weights for the odd-indexed Kronrod nodes (XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_DEPTH: u32 = 48;

/// One G7/K15 panel: returns (Kronrod estimate, |Kronrod - Gauss|).
fn panel<T: Scalar, F: Fn(T) -> T>(f: &F, lo: T, hi: T) -> (T, T) {
    let half = (hi - lo) * T::lit(0.5);
    let mid = lo + half;
    let fc = f(mid);
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = half * T::lit(XGK[j]);
        let pair = f(mid - dx) + f(mid + dx);
        kronrod = kronrod + pair * T::lit(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + pair * T::lit(WG[j / 2]);
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Integrates `f` over `[lo, hi]`, bisecting panels until each panel's error
/// estimate is below `rel_tol` times its own magnitude.
///
/// Intended for smooth integrands of one sign, where per-panel relative
/// error bounds the relative error of the total.
pub fn integrate<T: Scalar, F: Fn(T) -> T>(f: F, lo: T, hi: T, rel_tol: T) -> T {
    let floor = T::min_positive_value();
    let mut total = T::zero();
    let mut stack = vec![(lo, hi, 0u32)];
    while let Some((a, b, depth)) = stack.pop() {
        let (value, err) = panel(&f, a, b);
        if err <= rel_tol * value.abs() || err <= floor || depth >= MAX_DEPTH {
            total = total + value;
        } else {
            let m = a + (b - a) * T::lit(0.5);
            stack.push((m, b, depth + 1));
            stack.push((a, m, depth + 1));
        }
    }
    total
}
