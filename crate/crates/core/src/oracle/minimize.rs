//! Golden-section search on a bracket.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Minimizes `f` on `[lo, hi]`, shrinking the bracket until it is narrower
/// than `xtol`. Returns `(x, f(x))` for the best point evaluated.
///
/// Only a local minimum is guaranteed unless `f` is unimodal on the bracket.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    // Bounded: each step shrinks the bracket by 1/phi.
    for _ in 0..200 {
        if hi - lo <= xtol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
