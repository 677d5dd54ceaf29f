//! Pointwise upper envelope of a sampled disk family.

use num_complex::Complex64;

use crate::complex::{Circle, Polyline};
use crate::disks::PseudoDisk;
use crate::error::{GeometryError, Result};

const MIN_SAMPLES: usize = 16;

fn cell_centers(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| -1.0 + (2 * k + 1) as f64 / n as f64)
}

/// For `n_u` abscissae `u` in `(-1, 1)`, the largest height `v(u)` reached by
/// the upper semicircle of any Euclidean disk `D_rho(x, r)` with `x` on an
/// `n_x` grid; `v(u) = 0` where no disk covers `u`.
pub fn brute_envelope(r: f64, n_u: usize, n_x: usize) -> Result<Polyline<f64>> {
    if n_u < MIN_SAMPLES || n_x < MIN_SAMPLES {
        return Err(GeometryError::Domain {
            name: "n_u, n_x",
            value: n_u.min(n_x) as f64,
            domain: ">= 16",
        });
    }
    let family: Vec<(f64, f64)> = cell_centers(n_x)
        .map(|x| {
            let e = PseudoDisk::new(Complex64::new(x, 0.0), r).map(|d| d.to_euclidean())?;
            Ok((e.center().re, e.radius()))
        })
        .collect::<Result<_>>()?;
    let points = cell_centers(n_u)
        .map(|u| {
            let v_sq = family
                .iter()
                .map(|&(p, rad)| rad * rad - (u - p) * (u - p))
                .fold(0.0f64, f64::max);
            Complex64::new(u, v_sq.sqrt())
        })
        .collect();
    Polyline::new(points)
}

/// Largest Euclidean distance from a vertex of `line` to `circle`.
pub fn max_deviation(line: &Polyline<f64>, circle: &Circle<f64>) -> f64 {
    line.points()
        .iter()
        .map(|&z| circle.distance_to(z))
        .fold(0.0, f64::max)
}

/// Sum of Euclidean segment lengths, accumulated in vertex order.
pub fn polyline_length(p: &Polyline<f64>) -> f64 {
    p.segments().map(|(a, b)| (b - a).norm()).sum()
}
