//! Envelope closed forms against their brute-force oracles.

use approx::assert_relative_eq;
use num_complex::Complex64 as C;
use pseudohyp::oracle::{
    brute_envelope, distance_to_diameter, grid_area, max_deviation, schwarz_pick_suite,
    within_diameter_distance, SeededSampler,
};
use pseudohyp::{
    boundary_arc, cayley, cone_contains, envelope_spec, halfplane_image, halfplane_wedge_contains,
    region_area_closed_form, tangent_point_data, union_contains, EnvelopeSpec, PseudoDisk,
};

#[test]
fn family_members_touch_envelope_from_inside() {
    for i in 1..=50 {
        let r = i as f64 / 51.0;
        let spec = envelope_spec(r).unwrap();
        for j in 1..=9 {
            let x = -0.9 + 0.225 * (j - 1) as f64;
            let e = PseudoDisk::new(C::new(x, 0.0), r).unwrap().to_euclidean();
            for c in [spec.circle_upper, spec.circle_lower] {
                let gap = c.radius() - (e.center() - c.center()).norm() - e.radius();
                assert!(gap.abs() < 1e-12, "r={r} x={x} gap={gap}");
            }
        }
    }
}

#[test]
fn spec_invariants_hold_for_all_radii() {
    let mut s = SeededSampler::new(21);
    for _ in 0..200 {
        let r = s.uniform(1e-3, 0.999);
        let spec = EnvelopeSpec::new(r).unwrap();
        assert_relative_eq!(
            spec.beta.sin(),
            2.0 * r / (1.0 + r * r),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            spec.tan_beta(),
            2.0 * r / (1.0 - r * r),
            max_relative = 1e-14
        );
        assert_relative_eq!(spec.alpha + spec.beta, std::f64::consts::FRAC_PI_2);
        for z in [C::new(1.0, 0.0), C::new(-1.0, 0.0), C::new(0.0, r)] {
            assert!(spec.circle_upper.distance_to(z) < 1e-12 * spec.circle_upper.radius());
        }
    }
}

#[test]
fn boundary_arc_maps_to_wedge_edge() {
    let psi = cayley::<f64>();
    for r in [0.1, 0.5, 0.9] {
        let beta = envelope_spec(r).unwrap().beta;
        let arc = boundary_arc(r, 401).unwrap();
        for &z in &arc.points()[1..400] {
            let w = psi.apply(z).unwrap();
            assert!((w.arg() - beta).abs() < 1e-10, "r={r} z={z}");
        }
    }
}

#[test]
fn union_lies_in_cone_and_is_symmetric() {
    let mut s = SeededSampler::new(22);
    for r in [0.1, 0.5, 0.9] {
        let beta = envelope_spec(r).unwrap().beta;
        for _ in 0..5000 {
            let z = s.disk_point(1.0);
            let inside = union_contains(r, z).unwrap();
            assert_eq!(inside, union_contains(r, z.conj()).unwrap());
            assert_eq!(inside, union_contains(r, -z).unwrap());
            if inside && z.re >= 0.0 {
                assert!(cone_contains(beta + 1e-12, z), "r={r} z={z}");
            }
        }
    }
}

#[test]
fn halfplane_disks_stay_in_closed_wedge() {
    let mut s = SeededSampler::new(23);
    for _ in 0..500 {
        let (x, r) = (s.uniform(-0.95, 0.95), s.uniform(0.01, 0.95));
        let h = halfplane_image(x, r).unwrap();
        let tan_beta = envelope_spec(r).unwrap().tan_beta();
        let w = C::new(h.center_x, 0.0)
            + C::from_polar(h.radius, s.uniform(0.0, std::f64::consts::TAU));
        assert!(w.im.abs() <= tan_beta * w.re + 1e-12 * w.norm());
        assert!(halfplane_wedge_contains(r, C::new(h.center_x, 0.0)).unwrap());
    }
}

#[test]
fn tangent_point_rebuilds_halfplane_image() {
    let mut s = SeededSampler::new(24);
    for _ in 0..100 {
        let (a, r) = (s.uniform(-0.95, 0.95), s.uniform(0.01, 0.95));
        let tp = tangent_point_data(r, a).unwrap();
        let h = halfplane_image(a, r).unwrap();
        assert_relative_eq!(tp.center, h.center_x, max_relative = 1e-12);
        assert_relative_eq!(tp.radius, h.radius, max_relative = 1e-12);
        // Tangent point sits on the disk boundary at distance t along the wedge edge.
        let beta = envelope_spec(r).unwrap().beta;
        let touch = C::from_polar(tp.t, beta);
        assert!(((touch - tp.center).norm() - tp.radius).abs() < 1e-12 * tp.radius);
    }
}

#[test]
fn diameter_distance_decision_flips_at_minimum() {
    let z = C::new(0.5, 0.4);
    let d = distance_to_diameter(z, 1e-12);
    assert!(d.rho_min > 0.0 && d.rho_min < 1.0);
    assert!(within_diameter_distance(z, d.rho_min + 1e-3, 1e-12));
    assert!(!within_diameter_distance(z, d.rho_min - 1e-3, 1e-12));
    assert!(distance_to_diameter(C::new(0.3, 0.0), 1e-12).rho_min < 1e-10);
}

#[test]
fn brute_envelope_converges_with_resolution() {
    let spec = envelope_spec(0.5).unwrap();
    let coarse = max_deviation(&brute_envelope(0.5, 257, 256).unwrap(), &spec.circle_upper);
    let fine = max_deviation(&brute_envelope(0.5, 257, 4096).unwrap(), &spec.circle_upper);
    assert!(fine < coarse, "{fine} vs {coarse}");
    let line = brute_envelope(0.5, 257, 4096).unwrap();
    let top = line.points()[128];
    assert!(top.re.abs() < 1e-12 && (top.im - 0.5).abs() < 1e-3);
}

#[test]
fn grid_area_converges() {
    let exact = region_area_closed_form(0.5).unwrap();
    let a = [
        grid_area(0.5, 250),
        grid_area(0.5, 500),
        grid_area(0.5, 1000),
    ];
    assert!((a[2] - a[1]).abs() < (a[1] - a[0]).abs() + 1e-4);
    assert!((a[2] - exact).abs() < 5e-3);
    let thin = grid_area(0.05, 1000);
    assert!(thin < 0.3 && thin > 0.0);
}

#[test]
fn schwarz_pick_suite_is_deterministic() {
    let s = SeededSampler::new(25);
    let first = schwarz_pick_suite(&s, 1000).unwrap();
    let second = schwarz_pick_suite(&s, 1000).unwrap();
    assert_eq!(first.len(), 1000);
    assert!(first.iter().all(|c| c.pass));
    for (x, y) in first.iter().zip(&second) {
        assert_eq!(x.computed.to_bits(), y.computed.to_bits());
        assert_eq!(x.expected.to_bits(), y.expected.to_bits());
    }
}
