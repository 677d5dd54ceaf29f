//! Schwarz–Pick contraction checks on sampled holomorphic self-maps of the disk.

use num_complex::Complex64;
use rayon::prelude::*;

use super::report::CheckReport;
use super::sampler::SeededSampler;
use crate::complex::automorphism;
use crate::error::Result;
use crate::metric::rho;

/// Allowed excess of `rho(f(z), f(w))` over `rho(z, w)`, and the allowed
/// mismatch for automorphisms.
pub const SLACK: f64 = 1e-12;

/// Largest modulus of a sampled Blaschke zero or automorphism parameter.
pub const MAX_ZERO_MODULUS: f64 = 0.8;

/// Largest modulus of a sampled test point.
pub const MAX_POINT_MODULUS: f64 = 0.95;

/// Holomorphic self-map of the unit disk used as a test subject.
#[derive(Debug, Clone, PartialEq)]
pub enum TestMap {
    /// `e^{iθ} ∏ (z - a_k)/(1 - conj(a_k) z)`.
    Blaschke {
        rotation: f64,
        zeros: Vec<Complex64>,
    },
    /// `z ↦ c z` with `|c| < 1`.
    Scaled(Complex64),
    /// `z ↦ e^{iθ}(a - z)/(1 - conj(a) z)`; an isometry.
    Automorphism { theta: f64, a: Complex64 },
}

impl TestMap {
    pub fn name(&self) -> &'static str {
        match self {
            TestMap::Blaschke { .. } => "schwarz_pick_blaschke",
            TestMap::Scaled(_) => "schwarz_pick_scaled",
            TestMap::Automorphism { .. } => "schwarz_pick_automorphism",
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            TestMap::Blaschke { rotation, zeros } => {
                let one = Complex64::new(1.0, 0.0);
                let prod = zeros
                    .iter()
                    .fold(one, |acc, &a| acc * (z - a) / (one - a.conj() * z));
                Ok(Complex64::from_polar(1.0, *rotation) * prod)
            }
            TestMap::Scaled(c) => Ok(c * z),
            TestMap::Automorphism { theta, a } => automorphism(*theta, *a)?.apply(z),
        }
    }

    /// Draws one of the three map kinds; `kind` selects it modulo 3.
    pub fn sample(kind: usize, s: &mut SeededSampler) -> Self {
        match kind % 3 {
            0 => {
                let degree = 2 + s.index(3);
                let zeros = (0..degree)
                    .map(|_| s.disk_point(MAX_ZERO_MODULUS))
                    .collect();
                TestMap::Blaschke {
                    rotation: s.uniform(0.0, std::f64::consts::TAU),
                    zeros,
                }
            }
            1 => TestMap::Scaled(s.disk_point(0.999)),
            _ => TestMap::Automorphism {
                theta: s.uniform(0.0, std::f64::consts::TAU),
                a: s.disk_point(MAX_ZERO_MODULUS),
            },
        }
    }
}

/// Compares `rho(f(z), f(w))` (computed) against `rho(z, w)` (expected):
/// one-sided for contractions, two-sided for automorphisms.
pub fn check_pair(map: &TestMap, z: Complex64, w: Complex64) -> Result<CheckReport> {
    let before = rho(z, w)?;
    let after = rho(map.eval(z)?, map.eval(w)?)?;
    Ok(match map {
        TestMap::Automorphism { .. } => CheckReport::new(map.name(), 0.0, after, before, SLACK),
        _ => CheckReport::at_most(map.name(), 0.0, after, before, SLACK),
    })
}

/// Runs `n_cases` seeded cases; case `i` uses `sampler.fork(i)` and map kind `i mod 3`.
pub fn schwarz_pick_suite(sampler: &SeededSampler, n_cases: usize) -> Result<Vec<CheckReport>> {
    (0..n_cases)
        .into_par_iter()
        .map(|i| {
            let mut s = sampler.fork(i as u64);
            let map = TestMap::sample(i, &mut s);
            let z = s.disk_point(MAX_POINT_MODULUS);
            let w = s.disk_point(MAX_POINT_MODULUS);
            check_pair(&map, z, w)
        })
        .collect()
}
