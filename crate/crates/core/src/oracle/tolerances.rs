//! Thresholds used by the verification battery.

/// Internal tangency of each family disk with the envelope circle.
pub const TANGENCY: f64 = 1e-12;
/// `R_x / C_x` against `2r/(1 + r²)`.
pub const TANGENT_RATIO: f64 = 1e-13;
/// Tangency construction against the half-plane image.
pub const TANGENT_POINT: f64 = 1e-12;
/// Brute-force envelope vertices against the envelope circle.
pub const ENVELOPE_DEVIATION: f64 = 1e-3;
/// Inscribed polyline length against the closed-form arc length.
pub const ARC_LENGTH: f64 = 1e-6;
/// Grid-counted area against the closed-form area.
pub const AREA: f64 = 5e-3;
/// `rho -> P -> rho` roundtrip.
pub const RHO_ROUNDTRIP: f64 = 1e-14;
/// Relative error of the cosh identity.
pub const COSH_IDENTITY: f64 = 1e-11;
/// Hyperbolic length of the real segment `[0, 0.5]` against `log 3`.
pub const SEGMENT_LENGTH: f64 = 1e-10;
/// `from_euclidean ∘ to_euclidean` on centre and radius.
pub const DISK_ROUNDTRIP: f64 = 1e-11;
/// `d_min`, `d_max` against `|p| ∓ R`.
pub const EXTREME_DISTANCES: f64 = 1e-12;
/// Sampled geodesic length against `hyp_dist`.
pub const GEODESIC_LENGTH: f64 = 1e-6;
/// Points this close (Euclidean) to the lens boundary are not compared.
pub const MEMBERSHIP_BAND: f64 = 1e-6;

/// Grid sizes.
pub const BRUTE_SAMPLES: usize = 4096;
pub const ARC_SAMPLES: usize = 20_000;
pub const AREA_GRID: usize = 2000;
pub const GEODESIC_SAMPLES: usize = 10_000;
