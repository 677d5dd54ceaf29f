//! Pseudohyperbolic and hyperbolic distances on the unit disk.
//!
//! `rho(a, b) = |a - b| / |1 - conj(a) b|` and `P = log((1 + rho)/(1 - rho))`,
//! so that `rho = tanh(P / 2)`. Curve lengths use the density `2|dz|/(1 - |z|²)`.

use crate::complex::{check_disk_point, ComplexPoint, Polyline};
use crate::error::{GeometryError, Result};
use crate::quadrature;
use crate::scalar::Scalar;

/// Vertices farther than this from the origin are rejected by [`curve_length`].
pub const BOUNDARY_GUARD: f64 = 1e-9;

const CURVE_REL_TOL: f64 = 1e-10;

/// A pseudohyperbolic distance together with its hyperbolic counterpart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceValue<T> {
    pub rho: T,
    pub hyperbolic: T,
}

impl<T: Scalar> DistanceValue<T> {
    pub fn between(a: ComplexPoint<T>, b: ComplexPoint<T>) -> Result<Self> {
        Self::from_rho(rho(a, b)?)
    }

    pub fn from_rho(rho: T) -> Result<Self> {
        Ok(Self {
            rho,
            hyperbolic: rho_to_p(rho)?,
        })
    }

    pub fn from_hyperbolic(p: T) -> Result<Self> {
        Ok(Self {
            rho: p_to_rho(p)?,
            hyperbolic: p,
        })
    }
}

/// Pseudohyperbolic distance between two disk points.
pub fn rho<T: Scalar>(a: ComplexPoint<T>, b: ComplexPoint<T>) -> Result<T> {
    let a = check_disk_point(a)?;
    let b = check_disk_point(b)?;
    Ok(rho_unchecked(a, b))
}

#[inline]
pub(crate) fn rho_unchecked<T: Scalar>(a: ComplexPoint<T>, b: ComplexPoint<T>) -> T {
    let one = ComplexPoint::new(T::one(), T::zero());
    (a - b).norm() / (one - a.conj() * b).norm()
}

/// Hyperbolic (Poincaré) distance between two disk points.
pub fn hyp_dist<T: Scalar>(a: ComplexPoint<T>, b: ComplexPoint<T>) -> Result<T> {
    rho_to_p(rho(a, b)?)
}

/// `log((1 + rho)/(1 - rho))` for `rho` in `[0, 1)`.
pub fn rho_to_p<T: Scalar>(rho: T) -> Result<T> {
    if !(rho.is_finite() && rho >= T::zero() && rho < T::one()) {
        return Err(GeometryError::Domain {
            name: "rho",
            value: rho.to_f64_lossy(),
            domain: "[0, 1)",
        });
    }
    Ok(rho.ln_1p() - (-rho).ln_1p())
}

/// `tanh(P / 2)` for `P >= 0`.
pub fn p_to_rho<T: Scalar>(p: T) -> Result<T> {
    if !(p.is_finite() && p >= T::zero()) {
        return Err(GeometryError::Domain {
            name: "P",
            value: p.to_f64_lossy(),
            domain: "[0, inf)",
        });
    }
    Ok((p * T::lit(0.5)).tanh())
}

/// Hyperbolic length of a polyline, each segment integrated adaptively.
pub fn curve_length<T: Scalar>(gamma: &Polyline<T>) -> Result<T> {
    let limit = T::one() - T::lit(BOUNDARY_GUARD);
    for &v in gamma.points() {
        if v.norm() > limit {
            return Err(GeometryError::OutsideDisk {
                re: v.re.to_f64_lossy(),
                im: v.im.to_f64_lossy(),
            });
        }
    }
    let rel_tol = T::tol(CURVE_REL_TOL);
    let two = T::lit(2.0);
    let total = gamma
        .segments()
        .map(|(a, b)| {
            let delta = b - a;
            let speed = delta.norm();
            quadrature::integrate(
                |s: T| {
                    let z = a + delta * s;
                    two * speed / (T::one() - z.norm_sqr())
                },
                T::zero(),
                T::one(),
                rel_tol,
            )
        })
        .fold(T::zero(), |acc, x| acc + x);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn rho_examples() {
        let a = C::new(0.3, 0.4);
        assert_eq!(rho(a, a).unwrap(), 0.0);
        assert_eq!(rho(C::new(0.0, 0.0), C::new(0.0, 0.5)).unwrap(), 0.5);
        assert!((rho(C::new(0.5, 0.0), C::new(-0.5, 0.0)).unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn rho_rejects_outside_points() {
        let inside = C::new(0.1, 0.0);
        assert!(matches!(
            rho(inside, C::new(1.0, 0.0)),
            Err(GeometryError::OutsideDisk { .. })
        ));
        assert!(rho(C::new(0.0, -2.0), inside).is_err());
    }

    #[test]
    fn hyp_dist_examples() {
        let a = C::new(-0.2, 0.7);
        assert_eq!(hyp_dist(a, a).unwrap(), 0.0);
        let log3 = 3f64.ln();
        assert!((hyp_dist(C::new(0.0, 0.0), C::new(0.5, 0.0)).unwrap() - log3).abs() < 1e-15);
        let p = hyp_dist(C::new(0.5, 0.0), C::new(-0.5, 0.0)).unwrap();
        assert!((p - 9f64.ln()).abs() < 1e-14);
        assert!((p - 2.0 * log3).abs() < 1e-14);
    }

    #[test]
    fn rho_p_conversions() {
        assert_eq!(rho_to_p(0.0f64).unwrap(), 0.0);
        assert!((rho_to_p(0.5f64).unwrap() - 3f64.ln()).abs() < 1e-15);
        for x in [0.1f64, 0.5, 0.9, 0.999] {
            assert!((p_to_rho(rho_to_p(x).unwrap()).unwrap() - x).abs() < 1e-14);
        }
        assert!(rho_to_p(1.0f64).is_err());
        assert!(rho_to_p(-0.1f64).is_err());
        assert!(p_to_rho(-1.0f64).is_err());
        let d = DistanceValue::from_hyperbolic(1.5f64).unwrap();
        assert!((d.rho - (0.75f64).tanh()).abs() < 1e-15);
    }

    #[test]
    fn curve_length_of_real_segment() {
        let seg = Polyline::new(vec![C::new(0.0, 0.0), C::new(0.5, 0.0)]).unwrap();
        assert!((curve_length(&seg).unwrap() - 3f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn curve_length_guard() {
        let seg = Polyline::new(vec![C::new(0.0, 0.0), C::new(1.0 - 1e-10, 0.0)]).unwrap();
        assert!(curve_length(&seg).is_err());
        let ok = Polyline::new(vec![C::new(0.0, 0.0), C::new(1.0 - 1e-8, 0.0)]).unwrap();
        let exact = ((2.0 - 1e-8) / 1e-8f64).ln();
        assert!((curve_length(&ok).unwrap() - exact).abs() < 1e-9 * exact);
    }

    #[test]
    fn single_precision_distance() {
        let r = rho(
            num_complex::Complex32::new(0.5, 0.0),
            num_complex::Complex32::new(-0.5, 0.0),
        )
        .unwrap();
        assert!((r - 0.8).abs() < 1e-6);
    }
}
