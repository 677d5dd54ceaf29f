//! Independent brute-force verifiers for the closed forms in [`crate::envelope`],
//! [`crate::disks`] and [`crate::metric`].
//!
//! Everything here works in `f64`. Parallel loops reduce with integer counts,
//! maxima, or in-order collection, so results do not depend on thread count.

pub mod area;
pub mod battery;
pub mod diameter;
pub mod envelope;
pub mod minimize;
pub mod report;
pub mod sampler;
pub mod schwarz_pick;
pub mod tolerances;

pub use area::{grid_area, grid_counts, monte_carlo_area, GridCounts};
pub use battery::run_battery;
pub use diameter::{distance_to_diameter, within_diameter_distance, DiameterDistance};
pub use envelope::{brute_envelope, max_deviation, polyline_length};
pub use report::CheckReport;
pub use sampler::SeededSampler;
pub use schwarz_pick::{check_pair, schwarz_pick_suite, TestMap};
