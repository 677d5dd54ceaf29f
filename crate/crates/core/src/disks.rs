//! Pseudohyperbolic disks and their Euclidean descriptions.

use num_complex::Complex;

use crate::complex::{check_disk_point, check_open_interval, Circle, ComplexPoint, Polyline};
use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

const COLLINEAR_TOL: f64 = 1e-14;

/// The set `{z ∈ 𝔻 : rho(z, center) < radius}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoDisk<T> {
    center: ComplexPoint<T>,
    radius: T,
}

/// Open Euclidean disk `D(center, radius)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanDisk<T> {
    center: ComplexPoint<T>,
    radius: T,
}

/// Image of `D_rho(x, r)`, `x` real, under the Cayley map: a disk centred on the
/// positive real axis meeting it at `w_min < w_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfplaneDisk<T> {
    pub center_x: T,
    pub radius: T,
    pub w_min: T,
    pub w_max: T,
}

/// Extreme Euclidean distances from the origin to points of a pseudohyperbolic disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremeDistances<T> {
    /// `(|a| - r)/(1 - r|a|)`, or zero when `origin_enclosed`.
    pub d_min: T,
    pub d_max: T,
    /// Set when `|a| <= r`: the origin lies in the closed disk.
    pub origin_enclosed: bool,
}

/// Hyperbolic geodesic segment between two disk points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicArc<T> {
    /// Straight segment on a line through the origin.
    Diameter {
        start: ComplexPoint<T>,
        end: ComplexPoint<T>,
    },
    /// Arc of a circle orthogonal to the unit circle.
    Circular {
        circle: Circle<T>,
        start: ComplexPoint<T>,
        end: ComplexPoint<T>,
    },
}

impl<T: Scalar> PseudoDisk<T> {
    pub fn new(center: ComplexPoint<T>, radius: T) -> Result<Self> {
        let center = check_disk_point(center)?;
        let radius = check_open_interval("r", radius, T::zero(), T::one(), "(0, 1)")?;
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> ComplexPoint<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    /// The Euclidean disk that equals this disk as a point set.
    pub fn to_euclidean(&self) -> EuclideanDisk<T> {
        let r2 = self.radius * self.radius;
        let m2 = self.center.norm_sqr();
        let den = T::one() - r2 * m2;
        EuclideanDisk {
            center: self.center * ((T::one() - r2) / den),
            radius: (T::one() - m2) * self.radius / den,
        }
    }

    pub fn extreme_distances(&self) -> ExtremeDistances<T> {
        let m = self.center.norm();
        let r = self.radius;
        let d_max = (m + r) / (T::one() + r * m);
        if m > r {
            ExtremeDistances {
                d_min: (m - r) / (T::one() - r * m),
                d_max,
                origin_enclosed: false,
            }
        } else {
            ExtremeDistances {
                d_min: T::zero(),
                d_max,
                origin_enclosed: true,
            }
        }
    }

    pub fn contains(&self, z: ComplexPoint<T>) -> bool {
        z.norm_sqr() < T::one() && crate::metric::rho_unchecked(z, self.center) < self.radius
    }
}

impl<T: Scalar> EuclideanDisk<T> {
    pub fn new(center: ComplexPoint<T>, radius: T) -> Result<Self> {
        let circle = Circle::new(center, radius)?;
        Ok(Self {
            center: circle.center(),
            radius: circle.radius(),
        })
    }

    pub fn center(&self) -> ComplexPoint<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn boundary(&self) -> Circle<T> {
        Circle::new(self.center, self.radius).expect("validated at construction")
    }

    /// Recovers the pseudohyperbolic disk whose Euclidean image is `self`.
    ///
    /// With `m = |a|`, the extreme distances `|p| + R` and `|p| - R` are the
    /// hyperbolic-tangent sum and difference of `m` and `r`, so both follow
    /// from half-sums of inverse hyperbolic tangents.
    pub fn to_pseudo(&self) -> Result<PseudoDisk<T>> {
        let dist = self.center.norm();
        let far = dist + self.radius;
        if far >= T::one() {
            return Err(GeometryError::Domain {
                name: "|p| + R",
                value: far.to_f64_lossy(),
                domain: "[0, 1)",
            });
        }
        let near = dist - self.radius;
        let (s, t) = (far.atanh(), near.atanh());
        let half = T::lit(0.5);
        let m = ((s + t) * half).tanh();
        let r = ((s - t) * half).tanh();
        let center = if dist > T::zero() {
            self.center * (m / dist)
        } else {
            Complex::new(T::zero(), T::zero())
        };
        PseudoDisk::new(center, r)
    }
}

/// See [`PseudoDisk::to_euclidean`].
pub fn to_euclidean<T: Scalar>(d: &PseudoDisk<T>) -> EuclideanDisk<T> {
    d.to_euclidean()
}

/// See [`EuclideanDisk::to_pseudo`].
pub fn from_euclidean<T: Scalar>(e: &EuclideanDisk<T>) -> Result<PseudoDisk<T>> {
    e.to_pseudo()
}

/// See [`PseudoDisk::extreme_distances`].
pub fn extreme_distances<T: Scalar>(d: &PseudoDisk<T>) -> ExtremeDistances<T> {
    d.extreme_distances()
}

fn check_x_r<T: Scalar>(x: T, r: T) -> Result<(T, T)> {
    Ok((
        check_open_interval("x", x, -T::one(), T::one(), "(-1, 1)")?,
        check_open_interval("r", r, T::zero(), T::one(), "(0, 1)")?,
    ))
}

/// Cayley image of `D_rho(x, r)` for a real center `x`.
pub fn halfplane_image<T: Scalar>(x: T, r: T) -> Result<HalfplaneDisk<T>> {
    let (x, r) = check_x_r(x, r)?;
    let one = T::one();
    let scale = (one + x) / (one - x);
    let r2 = r * r;
    Ok(HalfplaneDisk {
        center_x: (one + r2) / (one - r2) * scale,
        radius: T::lit(2.0) * r / (one - r2) * scale,
        w_min: (one - r) / (one + r) * scale,
        w_max: (one + r) / (one - r) * scale,
    })
}

/// Where the boundary of `D_rho(x, r)` crosses the real diameter, as `(x_M, x_m)`
/// with `x_M = (x - r)/(1 - xr) < x_m = (x + r)/(1 + xr)`.
pub fn endpoints_on_diameter<T: Scalar>(x: T, r: T) -> Result<(T, T)> {
    let (x, r) = check_x_r(x, r)?;
    let one = T::one();
    Ok(((x - r) / (one - x * r), (x + r) / (one + x * r)))
}

/// The hyperbolic geodesic segment joining `a` and `b`.
pub fn geodesic_arc<T: Scalar>(a: ComplexPoint<T>, b: ComplexPoint<T>) -> Result<GeodesicArc<T>> {
    let a = check_disk_point(a)?;
    let b = check_disk_point(b)?;
    if a == b {
        return Err(GeometryError::Degenerate("geodesic endpoints coincide"));
    }
    let cross = (a.conj() * b).im;
    if cross.abs() <= T::lit(COLLINEAR_TOL) * (T::one() + a.norm() * b.norm()) {
        return Ok(GeodesicArc::Diameter { start: a, end: b });
    }
    // Center c solves 2 Re(conj(c) z) = |z|² + 1 for z = a and z = b.
    let two = T::lit(2.0);
    let (ka, kb) = (a.norm_sqr() + T::one(), b.norm_sqr() + T::one());
    let det = two * cross;
    let cx = (ka * b.im - kb * a.im) / det;
    let cy = (kb * a.re - ka * b.re) / det;
    let center = Complex::new(cx, cy);
    let radius = (center.norm_sqr() - T::one()).sqrt();
    Ok(GeodesicArc::Circular {
        circle: Circle::new(center, radius)?,
        start: a,
        end: b,
    })
}

impl<T: Scalar> GeodesicArc<T> {
    pub fn start(&self) -> ComplexPoint<T> {
        match *self {
            GeodesicArc::Diameter { start, .. } | GeodesicArc::Circular { start, .. } => start,
        }
    }

    pub fn end(&self) -> ComplexPoint<T> {
        match *self {
            GeodesicArc::Diameter { end, .. } | GeodesicArc::Circular { end, .. } => end,
        }
    }

    /// `n >= 2` points along the geodesic from start to end, endpoints exact.
    pub fn sample(&self, n: usize) -> Result<Polyline<T>> {
        if n < 2 {
            return Err(GeometryError::InvalidPolyline("fewer than two points"));
        }
        let last = T::from_usize(n - 1).unwrap();
        let mut pts = Vec::with_capacity(n);
        match *self {
            GeodesicArc::Diameter { start, end } => {
                for k in 0..n {
                    let s = T::from_usize(k).unwrap() / last;
                    pts.push(start + (end - start) * s);
                }
            }
            GeodesicArc::Circular { circle, start, end } => {
                let t0 = circle.angle_of(start);
                let mut sweep = circle.angle_of(end) - t0;
                // The part of the circle inside the disk subtends less than π.
                if sweep > T::PI() {
                    sweep = sweep - T::TAU();
                } else if sweep < -T::PI() {
                    sweep = sweep + T::TAU();
                }
                for k in 0..n {
                    let s = T::from_usize(k).unwrap() / last;
                    pts.push(circle.point_at(t0 + sweep * s));
                }
            }
        }
        pts[0] = self.start();
        pts[n - 1] = self.end();
        Polyline::new(pts)
    }
}
