//! Brute-force pseudohyperbolic distance from a point to the real diameter.

use num_complex::Complex64;

use super::minimize::golden_section;

/// Number of coarse grid points scanned before golden-section refinement.
pub const COARSE_POINTS: usize = 1024;

/// Minimum of `rho(z, x)` over real `x` in `(-1, 1)`, and where it is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiameterDistance {
    pub rho_min: f64,
    pub x_star: f64,
}

#[inline]
fn rho_sq(z: Complex64, x: f64) -> f64 {
    let dr = z.re - x;
    let er = 1.0 - z.re * x;
    let ei = z.im * x;
    (dr * dr + z.im * z.im) / (er * er + ei * ei)
}

// Exact: COARSE_POINTS is a power of two.
const CELL: f64 = 1.0 / COARSE_POINTS as f64;

#[inline]
fn grid_x(k: usize) -> f64 {
    -1.0 + (2 * k + 1) as f64 * CELL
}

/// Index and value of the smallest `rho²` on the coarse grid (first on ties).
fn coarse_scan(z: Complex64) -> (usize, f64) {
    let mut values = [0.0f64; COARSE_POINTS];
    for (k, v) in values.iter_mut().enumerate() {
        *v = rho_sq(z, grid_x(k));
    }
    values.iter().enumerate().fold(
        (0, f64::INFINITY),
        |best, (k, &v)| if v < best.1 { (k, v) } else { best },
    )
}

fn refine(z: Complex64, k: usize, coarse: f64, tol: f64) -> DiameterDistance {
    let lo = if k == 0 { -1.0 } else { grid_x(k - 1) };
    let hi = if k + 1 == COARSE_POINTS {
        1.0
    } else {
        grid_x(k + 1)
    };
    let (x, v) = golden_section(|x| rho_sq(z, x), lo, hi, tol);
    let (x, v) = if v <= coarse {
        (x, v)
    } else {
        (grid_x(k), coarse)
    };
    DiameterDistance {
        rho_min: v.sqrt(),
        x_star: x,
    }
}

/// Coarse scan over [`COARSE_POINTS`] abscissae, then golden-section search on
/// the two cells around the best one until the bracket is narrower than `tol`.
///
/// Does not assume `rho(z, ·)` is unimodal on the whole diameter.
pub fn distance_to_diameter(z: Complex64, tol: f64) -> DiameterDistance {
    let (k, v) = coarse_scan(z);
    refine(z, k, v, tol)
}

/// Same decision as `distance_to_diameter(z, tol).rho_min < r`, answering
/// early when the coarse abscissa nearest `Re z` (or any other) is already
/// closer than `r`.
pub fn within_diameter_distance(z: Complex64, r: f64, tol: f64) -> bool {
    let r_sq = r * r;
    let near = ((z.re + 1.0) / (2.0 * CELL))
        .floor()
        .clamp(0.0, (COARSE_POINTS - 1) as f64);
    if rho_sq(z, grid_x(near as usize)) < r_sq {
        return true;
    }
    let (k, v) = coarse_scan(z);
    v < r_sq || refine(z, k, v, tol).rho_min < r
}
