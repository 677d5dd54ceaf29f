//! Points, circles, polylines and Möbius transforms of the complex plane.

use num_complex::Complex;

use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

/// A point of the plane. Disk points additionally satisfy `|z| < 1`.
pub type ComplexPoint<T> = Complex<T>;

const DET_TOL: f64 = 1e-12;
const POLE_TOL: f64 = 1e-14;

pub(crate) fn check_finite<T: Scalar>(z: ComplexPoint<T>) -> Result<ComplexPoint<T>> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(GeometryError::NonFinite {
            re: z.re.to_f64_lossy(),
            im: z.im.to_f64_lossy(),
        })
    }
}

/// Accepts `z` only if it lies in the open unit disk.
pub fn check_disk_point<T: Scalar>(z: ComplexPoint<T>) -> Result<ComplexPoint<T>> {
    let z = check_finite(z)?;
    if z.norm_sqr() < T::one() {
        Ok(z)
    } else {
        Err(GeometryError::OutsideDisk {
            re: z.re.to_f64_lossy(),
            im: z.im.to_f64_lossy(),
        })
    }
}

pub(crate) fn check_open_interval<T: Scalar>(
    name: &'static str,
    value: T,
    lo: T,
    hi: T,
    domain: &'static str,
) -> Result<T> {
    if value.is_finite() && value > lo && value < hi {
        Ok(value)
    } else {
        Err(GeometryError::Domain {
            name,
            value: value.to_f64_lossy(),
            domain,
        })
    }
}

/// Euclidean circle with positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle<T> {
    center: ComplexPoint<T>,
    radius: T,
}

impl<T: Scalar> Circle<T> {
    pub fn new(center: ComplexPoint<T>, radius: T) -> Result<Self> {
        let center = check_finite(center)?;
        if !(radius.is_finite() && radius > T::zero()) {
            return Err(GeometryError::Domain {
                name: "radius",
                value: radius.to_f64_lossy(),
                domain: "(0, inf)",
            });
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> ComplexPoint<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    /// Point of the circle at central angle `angle` (radians, from the positive real direction).
    pub fn point_at(&self, angle: T) -> ComplexPoint<T> {
        self.center + Complex::from_polar(self.radius, angle)
    }

    /// Central angle of `z` as seen from the center.
    pub fn angle_of(&self, z: ComplexPoint<T>) -> T {
        (z - self.center).arg()
    }

    /// Euclidean distance from `z` to the circle curve.
    pub fn distance_to(&self, z: ComplexPoint<T>) -> T {
        ((z - self.center).norm() - self.radius).abs()
    }

    /// Strict membership in the open disk bounded by the circle.
    pub fn contains_open(&self, z: ComplexPoint<T>) -> bool {
        (z - self.center).norm_sqr() < self.radius * self.radius
    }
}

/// Ordered list of at least two points with no two consecutive points equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline<T> {
    points: Vec<ComplexPoint<T>>,
}

impl<T: Scalar> Polyline<T> {
    pub fn new(points: Vec<ComplexPoint<T>>) -> Result<Self> {
        if points.len() < 2 {
            return Err(GeometryError::InvalidPolyline("fewer than two points"));
        }
        for &p in &points {
            check_finite(p)?;
        }
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(GeometryError::InvalidPolyline(
                "consecutive points coincide",
            ));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[ComplexPoint<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> ComplexPoint<T> {
        self.points[0]
    }

    pub fn last(&self) -> ComplexPoint<T> {
        self.points[self.points.len() - 1]
    }

    pub fn segments(&self) -> impl Iterator<Item = (ComplexPoint<T>, ComplexPoint<T>)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    /// Splits every segment into `k` equal pieces, keeping the trace unchanged.
    pub fn subdivide(&self, k: usize) -> Self {
        let k = k.max(1);
        let step = T::one() / T::from_usize(k).unwrap();
        let mut out = Vec::with_capacity((self.points.len() - 1) * k + 1);
        for (a, b) in self.segments() {
            for j in 0..k {
                let s = T::from_usize(j).unwrap() * step;
                out.push(a + (b - a) * s);
            }
        }
        out.push(self.last());
        Self { points: out }
    }

    pub fn into_points(self) -> Vec<ComplexPoint<T>> {
        self.points
    }
}

/// The map `z ↦ (az + b)/(cz + d)`.
///
/// Coefficients are kept normalized so the largest one has modulus 1; two
/// transforms are equal when their coefficient matrices agree up to a nonzero
/// scalar (see [`MoebiusTransform::projective_eq`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusTransform<T> {
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
}

impl<T: Scalar> MoebiusTransform<T> {
    /// Builds a transform, rejecting `|ad - bc| <= 1e-12` after normalization.
    pub fn new(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Result<Self> {
        for z in [a, b, c, d] {
            check_finite(z)?;
        }
        let m =
            Self::normalized(a, b, c, d).ok_or(GeometryError::DegenerateTransform { det: 0.0 })?;
        let det = m.determinant().norm();
        if det <= T::lit(DET_TOL) {
            return Err(GeometryError::DegenerateTransform {
                det: det.to_f64_lossy(),
            });
        }
        Ok(m)
    }

    fn normalized(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Option<Self> {
        let scale = [a, b, c, d]
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), T::max);
        if scale == T::zero() {
            return None;
        }
        let inv = T::one() / scale;
        Some(Self {
            a: a * inv,
            b: b * inv,
            c: c * inv,
            d: d * inv,
        })
    }

    pub fn identity() -> Self {
        let (zero, one) = (
            Complex::new(T::zero(), T::zero()),
            Complex::new(T::one(), T::zero()),
        );
        Self {
            a: one,
            b: zero,
            c: zero,
            d: one,
        }
    }

    pub fn coefficients(&self) -> [Complex<T>; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> Complex<T> {
        self.a * self.d - self.b * self.c
    }

    /// Evaluates the transform at `z`; fails with a pole error when `|cz + d| <= 1e-14`.
    pub fn apply(&self, z: ComplexPoint<T>) -> Result<ComplexPoint<T>> {
        let z = check_finite(z)?;
        let den = self.c * z + self.d;
        if den.norm() <= T::lit(POLE_TOL) {
            return Err(GeometryError::Pole {
                re: z.re.to_f64_lossy(),
                im: z.im.to_f64_lossy(),
            });
        }
        Ok((self.a * z + self.b) / den)
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Self) -> Self {
        let a = self.a * other.a + self.b * other.c;
        let b = self.a * other.b + self.b * other.d;
        let c = self.c * other.a + self.d * other.c;
        let d = self.c * other.b + self.d * other.d;
        // A product of invertible matrices is never the zero matrix.
        Self::normalized(a, b, c, d).expect("product of invertible matrices is nonzero")
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Equality up to a nonzero scalar factor, with absolute coefficient tolerance `tol`.
    pub fn projective_eq(&self, other: &Self, tol: T) -> bool {
        let lhs = self.coefficients();
        let rhs = other.coefficients();
        let pivot = (0..4)
            .max_by(|&i, &j| lhs[i].norm().partial_cmp(&lhs[j].norm()).unwrap())
            .unwrap();
        if rhs[pivot].norm() <= tol {
            return false;
        }
        let lambda = rhs[pivot] / lhs[pivot];
        lhs.iter()
            .zip(rhs.iter())
            .all(|(&l, &r)| (l * lambda - r).norm() <= tol * lambda.norm().max(T::one()))
    }
}

/// Blaschke factor `S_a(z) = (a - z)/(1 - conj(a) z)`.
///
/// An involutive automorphism of the unit disk swapping `a` and `0`.
pub fn blaschke<T: Scalar>(a: ComplexPoint<T>) -> Result<MoebiusTransform<T>> {
    automorphism(T::zero(), a)
}

/// Disk automorphism `z ↦ e^{iθ}(a - z)/(1 - conj(a) z)`.
pub fn automorphism<T: Scalar>(theta: T, a: ComplexPoint<T>) -> Result<MoebiusTransform<T>> {
    let a = check_disk_point(a)?;
    if !theta.is_finite() {
        return Err(GeometryError::Domain {
            name: "theta",
            value: theta.to_f64_lossy(),
            domain: "finite",
        });
    }
    let rot = Complex::from_polar(T::one(), theta);
    let one = Complex::new(T::one(), T::zero());
    MoebiusTransform::new(-rot, rot * a, -a.conj(), one)
}

/// The map `(1 + z)/(1 - z)` from the unit disk onto the right half-plane.
pub fn cayley<T: Scalar>() -> MoebiusTransform<T> {
    let one = Complex::new(T::one(), T::zero());
    MoebiusTransform {
        a: one,
        b: one,
        c: -one,
        d: one,
    }
}
