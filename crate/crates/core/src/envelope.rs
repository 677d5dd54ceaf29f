//! Envelope of the family `D_rho(x, r)`, `-1 < x < 1`, for a fixed radius `r`.
//!
//! The union of the family is the lens bounded by two circles through `±1`:
//! the upper boundary lies on `|w + i(1 - r²)/(2r)| = (1 + r²)/(2r)` and the
//! lower one on its mirror image. Both arcs meet the real axis at the angle
//! `beta` with `sin(beta) = 2r/(1 + r²)` and `tan(beta) = 2r/(1 - r²)`.

use num_complex::Complex;

use crate::complex::{check_open_interval, Circle, ComplexPoint, Polyline};
use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

fn check_r<T: Scalar>(r: T) -> Result<T> {
    check_open_interval("r", r, T::zero(), T::one(), "(0, 1)")
}

/// Closed-form envelope data for one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeSpec<T> {
    pub r: T,
    /// Carries the upper boundary arc.
    pub circle_upper: Circle<T>,
    /// Mirror image of `circle_upper`; carries the lower boundary arc.
    pub circle_lower: Circle<T>,
    /// Angle between the boundary arcs and the real axis at `±1`.
    pub beta: T,
    /// `π/2 - beta`.
    pub alpha: T,
}

impl<T: Scalar> EnvelopeSpec<T> {
    pub fn new(r: T) -> Result<Self> {
        let r = check_r(r)?;
        let two_r = T::lit(2.0) * r;
        let r2 = r * r;
        let offset = (T::one() - r2) / two_r;
        let radius = (T::one() + r2) / two_r;
        let beta = (two_r / (T::one() + r2)).asin();
        Ok(Self {
            r,
            circle_upper: Circle::new(Complex::new(T::zero(), -offset), radius)?,
            circle_lower: Circle::new(Complex::new(T::zero(), offset), radius)?,
            beta,
            alpha: T::FRAC_PI_2() - beta,
        })
    }

    /// `2r/(1 - r²)`, evaluated directly rather than through `beta`.
    pub fn tan_beta(&self) -> T {
        let r = self.r;
        T::lit(2.0) * r / (T::one() - r * r)
    }

    /// Membership in the open lens, i.e. in the union of the disk family.
    pub fn lens_contains(&self, z: ComplexPoint<T>) -> bool {
        self.circle_upper.contains_open(z) && self.circle_lower.contains_open(z)
    }

    /// Euclidean length of the upper boundary arc.
    pub fn arc_length(&self) -> T {
        let r = self.r;
        T::lit(2.0) * (T::one() + r * r) / r * r.atan()
    }

    /// Euclidean area of the union of the family.
    pub fn area(&self) -> T {
        let r = self.r;
        let k = (T::one() + r * r) / r;
        k * k * r.atan() - (T::one() - r * r) / r
    }
}

/// See [`EnvelopeSpec::new`].
pub fn envelope_spec<T: Scalar>(r: T) -> Result<EnvelopeSpec<T>> {
    EnvelopeSpec::new(r)
}

/// Membership in the cone `{|Im z| < tan(beta)(1 - Re z)}` with cusp at `z = 1`.
pub fn cone_contains<T: Scalar>(beta: T, z: ComplexPoint<T>) -> bool {
    z.im.abs() < beta.tan() * (T::one() - z.re)
}

/// Whether `z` lies in the union of `D_rho(x, r)` over `-1 < x < 1`.
pub fn union_contains<T: Scalar>(r: T, z: ComplexPoint<T>) -> Result<bool> {
    Ok(EnvelopeSpec::new(r)?.lens_contains(z))
}

/// `n >= 2` samples of the upper boundary arc from `-1` to `1`, uniform in
/// central angle.
pub fn boundary_arc<T: Scalar>(r: T, n: usize) -> Result<Polyline<T>> {
    let spec = EnvelopeSpec::new(r)?;
    if n < 2 {
        return Err(GeometryError::InvalidPolyline("fewer than two points"));
    }
    let circle = spec.circle_upper;
    let one = Complex::new(T::one(), T::zero());
    let start = circle.angle_of(-one);
    let stop = circle.angle_of(one);
    let last = T::from_usize(n - 1).unwrap();
    let mut pts: Vec<_> = (0..n)
        .map(|k| {
            let s = T::from_usize(k).unwrap() / last;
            circle.point_at(start + (stop - start) * s)
        })
        .collect();
    pts[0] = -one;
    pts[n - 1] = one;
    Polyline::new(pts)
}

/// `2(1 + r²)/r · arctan(r)`.
pub fn arc_length_closed_form<T: Scalar>(r: T) -> Result<T> {
    Ok(EnvelopeSpec::new(r)?.arc_length())
}

/// `((1 + r²)/r)² · arctan(r) - (1 - r²)/r`.
pub fn region_area_closed_form<T: Scalar>(r: T) -> Result<T> {
    Ok(EnvelopeSpec::new(r)?.area())
}

/// Tangency construction in the right half-plane for the family member `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPoint<T> {
    /// Distance from the origin to the tangent point on the common tangent.
    pub t: T,
    /// Where the normal to the tangent at that point meets the real axis.
    pub x_t: T,
    pub center: T,
    pub radius: T,
}

/// Rebuilds the half-plane disk touching the common tangent at distance
/// `t = (1 + a)/(1 - a)`; agrees with [`crate::disks::halfplane_image`]`(a, r)`.
pub fn tangent_point_data<T: Scalar>(r: T, a: T) -> Result<TangentPoint<T>> {
    let r = check_r(r)?;
    let a = check_open_interval("a", a, -T::one(), T::one(), "(-1, 1)")?;
    let one = T::one();
    let r2 = r * r;
    let t = (one + a) / (one - a);
    let x_t = (one + r2) / (one - r2) * t;
    Ok(TangentPoint {
        t,
        x_t,
        center: x_t,
        radius: x_t * (T::lit(2.0) * r / (one + r2)),
    })
}

/// Membership of a right half-plane point in the open wedge `|arg w| < beta`.
pub fn halfplane_wedge_contains<T: Scalar>(r: T, w: ComplexPoint<T>) -> Result<bool> {
    let spec = EnvelopeSpec::new(r)?;
    if w.re.is_nan() || w.re <= T::zero() {
        return Err(GeometryError::Domain {
            name: "Re w",
            value: w.re.to_f64_lossy(),
            domain: "(0, inf)",
        });
    }
    Ok(w.im.abs() < spec.tan_beta() * w.re)
}
