//! Pseudohyperbolic geometry of the unit disk.
//!
//! Distances ([`metric`]), Möbius maps ([`complex`]), pseudohyperbolic disks
//! ([`disks`]) and the closed-form envelope of the disk family `D_rho(x, r)`
//! along the real diameter ([`envelope`]). The [`oracle`] module re-derives
//! each closed form by brute force.
//!
//! Geometry is generic over [`Scalar`] (`f32` or `f64`); the aliases below fix
//! `f64`, which is what the oracles use.

pub mod complex;
pub mod disks;
pub mod envelope;
pub mod error;
pub mod metric;
pub mod oracle;
pub mod quadrature;
pub mod scalar;

pub use complex::{
    automorphism, blaschke, cayley, check_disk_point, Circle, ComplexPoint, MoebiusTransform,
    Polyline,
};
pub use disks::{
    endpoints_on_diameter, extreme_distances, from_euclidean, geodesic_arc, halfplane_image,
    to_euclidean, EuclideanDisk, ExtremeDistances, GeodesicArc, HalfplaneDisk, PseudoDisk,
};
pub use envelope::{
    arc_length_closed_form, boundary_arc, cone_contains, envelope_spec, halfplane_wedge_contains,
    region_area_closed_form, tangent_point_data, union_contains, EnvelopeSpec, TangentPoint,
};
pub use error::{GeometryError, Result};
pub use metric::{curve_length, hyp_dist, p_to_rho, rho, rho_to_p, DistanceValue};
pub use scalar::Scalar;

pub type Point = ComplexPoint<f64>;
pub type Moebius = MoebiusTransform<f64>;
pub type Circle64 = Circle<f64>;
pub type Polyline64 = Polyline<f64>;
pub type PseudoDisk64 = PseudoDisk<f64>;
pub type EuclideanDisk64 = EuclideanDisk<f64>;
pub type Envelope64 = EnvelopeSpec<f64>;

pub type Point32 = ComplexPoint<f32>;
pub type Moebius32 = MoebiusTransform<f32>;
pub type PseudoDisk32 = PseudoDisk<f32>;
pub type Envelope32 = EnvelopeSpec<f32>;
