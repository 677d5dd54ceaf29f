//! The full set of checks run for one envelope radius.

use num_complex::Complex64;

use super::area::grid_area;
use super::diameter::within_diameter_distance;
use super::envelope::{brute_envelope, max_deviation, polyline_length};
use super::report::CheckReport;
use super::sampler::SeededSampler;
use super::schwarz_pick::schwarz_pick_suite;
use super::tolerances as tol;
use crate::complex::Polyline;
use crate::disks::{geodesic_arc, halfplane_image, PseudoDisk};
use crate::envelope::{boundary_arc, tangent_point_data, EnvelopeSpec};
use crate::error::Result;
use crate::metric::{curve_length, hyp_dist, p_to_rho, rho_to_p};

/// Keeps the report with the largest error (the first one on ties).
fn worst(reports: impl IntoIterator<Item = CheckReport>) -> Option<CheckReport> {
    reports.into_iter().fold(None, |acc, rep| match acc {
        Some(best)
            if (rep.abs_err.is_nan() || rep.abs_err <= best.abs_err)
                && best.abs_err.is_finite() =>
        {
            Some(best)
        }
        _ => Some(rep),
    })
}

fn worst_or_empty(name: &str, r: f64, reports: Vec<CheckReport>, tolerance: f64) -> CheckReport {
    worst(reports).unwrap_or_else(|| CheckReport::new(name, r, 0.0, 0.0, tolerance))
}

/// `|p - c| + R` against the envelope radius for `n` centres evenly spread in `(-0.99, 0.99)`.
pub fn check_tangency(r: f64, n: usize) -> Result<CheckReport> {
    let spec = EnvelopeSpec::new(r)?;
    let circle = spec.circle_upper;
    let reports = (0..n)
        .map(|k| {
            let x = -0.99 + 1.98 * (k as f64 + 0.5) / n as f64;
            let e = PseudoDisk::new(Complex64::new(x, 0.0), r)?.to_euclidean();
            let reach = (e.center() - circle.center()).norm() + e.radius();
            Ok(CheckReport::new(
                "tangency",
                r,
                reach,
                circle.radius(),
                tol::TANGENCY,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(worst_or_empty("tangency", r, reports, tol::TANGENCY))
}

/// `R_x / C_x` against `2r/(1 + r²)` for the given centres.
pub fn check_tangent_ratio(r: f64, xs: &[f64]) -> Result<CheckReport> {
    let expected = 2.0 * r / (1.0 + r * r);
    let reports = xs
        .iter()
        .map(|&x| {
            let h = halfplane_image(x, r)?;
            Ok(CheckReport::new(
                "common_tangent_ratio",
                r,
                h.radius / h.center_x,
                expected,
                tol::TANGENT_RATIO,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(worst_or_empty(
        "common_tangent_ratio",
        r,
        reports,
        tol::TANGENT_RATIO,
    ))
}

/// Tangency construction `(C(t), R(t))` against the half-plane image `(C_a, R_a)`.
pub fn check_tangent_point(r: f64, xs: &[f64]) -> Result<CheckReport> {
    let mut reports = Vec::with_capacity(2 * xs.len());
    for &a in xs {
        let tp = tangent_point_data(r, a)?;
        let h = halfplane_image(a, r)?;
        reports.push(CheckReport::new(
            "tangent_point",
            r,
            tp.center,
            h.center_x,
            tol::TANGENT_POINT,
        ));
        reports.push(CheckReport::new(
            "tangent_point",
            r,
            tp.radius,
            h.radius,
            tol::TANGENT_POINT,
        ));
    }
    Ok(worst_or_empty(
        "tangent_point",
        r,
        reports,
        tol::TANGENT_POINT,
    ))
}

/// Largest distance from the brute-force envelope to the upper envelope circle.
pub fn check_envelope_deviation(r: f64, n_u: usize, n_x: usize) -> Result<CheckReport> {
    let spec = EnvelopeSpec::new(r)?;
    let env = brute_envelope(r, n_u, n_x)?;
    let dev = max_deviation(&env, &spec.circle_upper);
    Ok(CheckReport::new(
        "envelope_deviation",
        r,
        dev,
        0.0,
        tol::ENVELOPE_DEVIATION,
    ))
}

pub fn check_arc_length(r: f64, n: usize) -> Result<CheckReport> {
    let spec = EnvelopeSpec::new(r)?;
    let len = polyline_length(&boundary_arc(r, n)?);
    Ok(CheckReport::new(
        "arc_length",
        r,
        len,
        spec.arc_length(),
        tol::ARC_LENGTH,
    ))
}

pub fn check_area(r: f64, n: usize) -> Result<CheckReport> {
    let spec = EnvelopeSpec::new(r)?;
    Ok(CheckReport::new(
        "area",
        r,
        grid_area(r, n),
        spec.area(),
        tol::AREA,
    ))
}

/// Counts disagreements between the lens predicate and the brute-force
/// diameter-distance predicate, skipping points within the boundary band.
pub fn check_union_membership(r: f64, points: &[Complex64]) -> Result<CheckReport> {
    let spec = EnvelopeSpec::new(r)?;
    let (up, low) = (spec.circle_upper, spec.circle_lower);
    let mismatches = points
        .iter()
        .filter(|&&z| up.distance_to(z).min(low.distance_to(z)) >= tol::MEMBERSHIP_BAND)
        .filter(|&&z| spec.lens_contains(z) != within_diameter_distance(z, r, 1e-12))
        .count();
    Ok(CheckReport::new(
        "union_membership",
        r,
        mismatches as f64,
        0.0,
        0.0,
    ))
}

pub fn check_rho_roundtrip(r: f64, values: &[f64]) -> Result<CheckReport> {
    let reports = values
        .iter()
        .map(|&x| {
            let back = p_to_rho(rho_to_p(x)?)?;
            Ok(CheckReport::new(
                "rho_p_roundtrip",
                r,
                back,
                x,
                tol::RHO_ROUNDTRIP,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(worst_or_empty(
        "rho_p_roundtrip",
        r,
        reports,
        tol::RHO_ROUNDTRIP,
    ))
}

/// `|a - b|² / ((1 - |a|²)(1 - |b|²))` against `(cosh P - 1)/2`, as relative error.
pub fn check_cosh_identity(r: f64, pairs: &[(Complex64, Complex64)]) -> Result<CheckReport> {
    let reports = pairs
        .iter()
        .map(|&(a, b)| {
            let lhs = (a - b).norm_sqr() / ((1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr()));
            let p = hyp_dist(a, b)?;
            let rhs = 0.5 * ((p.exp() + (-p).exp()) / 2.0 - 1.0);
            let rel = if rhs == 0.0 {
                lhs.abs()
            } else {
                (lhs - rhs).abs() / rhs.abs()
            };
            Ok(CheckReport::with_error(
                "cosh_identity",
                r,
                lhs,
                rhs,
                rel,
                tol::COSH_IDENTITY,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(worst_or_empty(
        "cosh_identity",
        r,
        reports,
        tol::COSH_IDENTITY,
    ))
}

pub fn check_segment_length(r: f64) -> Result<CheckReport> {
    let seg = Polyline::new(vec![Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0)])?;
    Ok(CheckReport::new(
        "curve_length_segment",
        r,
        curve_length(&seg)?,
        3f64.ln(),
        tol::SEGMENT_LENGTH,
    ))
}

/// `from_euclidean ∘ to_euclidean` on centre and radius, worst over `disks`.
pub fn check_disk_roundtrip(r: f64, disks: &[PseudoDisk<f64>]) -> Result<CheckReport> {
    let reports = disks
        .iter()
        .map(|d| {
            let back = d.to_euclidean().to_pseudo()?;
            let err = (back.center() - d.center())
                .norm()
                .max((back.radius() - d.radius()).abs());
            Ok(CheckReport::with_error(
                "disk_roundtrip",
                r,
                back.radius(),
                d.radius(),
                err,
                tol::DISK_ROUNDTRIP,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(worst_or_empty(
        "disk_roundtrip",
        r,
        reports,
        tol::DISK_ROUNDTRIP,
    ))
}

/// `d_max = |p| + R` always, and `d_min = |p| - R` when `|a| > r`.
pub fn check_extreme_distances(r: f64, disks: &[PseudoDisk<f64>]) -> Result<CheckReport> {
    let mut reports = Vec::new();
    for d in disks {
        let e = d.to_euclidean();
        let ext = d.extreme_distances();
        let dist = e.center().norm();
        reports.push(CheckReport::new(
            "extreme_distances",
            r,
            ext.d_max,
            dist + e.radius(),
            tol::EXTREME_DISTANCES,
        ));
        if !ext.origin_enclosed {
            reports.push(CheckReport::new(
                "extreme_distances",
                r,
                ext.d_min,
                dist - e.radius(),
                tol::EXTREME_DISTANCES,
            ));
        }
    }
    Ok(worst_or_empty(
        "extreme_distances",
        r,
        reports,
        tol::EXTREME_DISTANCES,
    ))
}

/// Hyperbolic length of an `n`-point sampling of the geodesic against `hyp_dist`.
pub fn check_geodesic_length(
    r: f64,
    pairs: &[(Complex64, Complex64)],
    n: usize,
) -> Result<CheckReport> {
    let reports = pairs
        .iter()
        .map(|&(a, b)| {
            let len = curve_length(&geodesic_arc(a, b)?.sample(n)?)?;
            Ok(CheckReport::new(
                "geodesic_length",
                r,
                len,
                hyp_dist(a, b)?,
                tol::GEODESIC_LENGTH,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(worst_or_empty(
        "geodesic_length",
        r,
        reports,
        tol::GEODESIC_LENGTH,
    ))
}

/// Worst Schwarz–Pick case per map kind over `n_cases` seeded cases.
pub fn check_schwarz_pick(
    r: f64,
    sampler: &SeededSampler,
    n_cases: usize,
) -> Result<Vec<CheckReport>> {
    let cases = schwarz_pick_suite(sampler, n_cases)?;
    let mut out = Vec::new();
    for name in [
        "schwarz_pick_blaschke",
        "schwarz_pick_scaled",
        "schwarz_pick_automorphism",
    ] {
        let of_kind: Vec<_> = cases.iter().filter(|c| c.name == name).cloned().collect();
        let mut rep = worst_or_empty(name, r, of_kind, super::schwarz_pick::SLACK);
        rep.r = r;
        out.push(rep);
    }
    Ok(out)
}

/// Random real centres in `(-0.99, 0.99)`.
pub fn sample_centers(s: &mut SeededSampler, n: usize) -> Vec<f64> {
    (0..n).map(|_| s.uniform(-0.99, 0.99)).collect()
}

pub fn sample_pairs(
    s: &mut SeededSampler,
    n: usize,
    max_modulus: f64,
) -> Vec<(Complex64, Complex64)> {
    (0..n)
        .map(|_| (s.disk_point(max_modulus), s.disk_point(max_modulus)))
        .collect()
}

// Stream ids: one per check that consumes randomness.
const STREAM_RATIO: u64 = 1;
const STREAM_TANGENT: u64 = 2;
const STREAM_MEMBERSHIP: u64 = 3;
const STREAM_SCHWARZ: u64 = 4;
const STREAM_RHO: u64 = 5;
const STREAM_COSH: u64 = 6;
const STREAM_DISKS: u64 = 7;
const STREAM_GEODESIC: u64 = 8;

/// Runs every check for radius `r`. Output order is fixed; identical inputs
/// give identical reports.
pub fn run_battery(r: f64, seed: u64) -> Result<Vec<CheckReport>> {
    EnvelopeSpec::new(r)?;
    let root = SeededSampler::new(seed);
    let mut reports = vec![
        check_tangency(r, 50)?,
        check_tangent_ratio(r, &sample_centers(&mut root.fork(STREAM_RATIO), 500))?,
        check_tangent_point(r, &sample_centers(&mut root.fork(STREAM_TANGENT), 100))?,
        check_envelope_deviation(r, tol::BRUTE_SAMPLES, tol::BRUTE_SAMPLES)?,
        check_arc_length(r, tol::ARC_SAMPLES)?,
        check_area(r, tol::AREA_GRID)?,
    ];
    let mut s = root.fork(STREAM_MEMBERSHIP);
    let points: Vec<_> = (0..2000).map(|_| s.disk_point(1.0)).collect();
    reports.push(check_union_membership(r, &points)?);
    reports.extend(check_schwarz_pick(r, &root.fork(STREAM_SCHWARZ), 1000)?);

    let mut s = root.fork(STREAM_RHO);
    let values: Vec<_> = (0..1000).map(|_| s.uniform(0.0, 0.999)).collect();
    reports.push(check_rho_roundtrip(r, &values)?);
    reports.push(check_cosh_identity(
        r,
        &sample_pairs(&mut root.fork(STREAM_COSH), 500, 0.95),
    )?);
    reports.push(check_segment_length(r)?);

    let mut s = root.fork(STREAM_DISKS);
    let disks = (0..200)
        .map(|_| PseudoDisk::new(s.disk_point(0.95), r))
        .collect::<Result<Vec<_>>>()?;
    reports.push(check_disk_roundtrip(r, &disks)?);
    reports.push(check_extreme_distances(r, &disks)?);
    reports.push(check_geodesic_length(
        r,
        &sample_pairs(&mut root.fork(STREAM_GEODESIC), 20, 0.9),
        tol::GEODESIC_SAMPLES,
    )?);
    Ok(reports)
}
