//! Invariants of the Möbius algebra, the metrics and the disk conversions.

use num_complex::Complex64 as C;
use proptest::prelude::*;
use pseudohyp::oracle::SeededSampler;
use pseudohyp::{
    automorphism, blaschke, cayley, curve_length, endpoints_on_diameter, geodesic_arc,
    halfplane_image, hyp_dist, rho, GeodesicArc, Moebius, Polyline, PseudoDisk,
};

fn disk_point(max: f64) -> impl Strategy<Value = C> {
    (0.0..max, 0.0..std::f64::consts::TAU).prop_map(|(m, t)| C::from_polar(m, t))
}

fn automorphisms() -> impl Strategy<Value = Moebius> {
    (0.0..std::f64::consts::TAU, disk_point(0.9)).prop_map(|(t, a)| automorphism(t, a).unwrap())
}

fn close(a: C, b: C, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #[test]
    fn composition_is_associative(f in automorphisms(), g in automorphisms(), h in automorphisms(), z in disk_point(0.9)) {
        let left = f.compose(&g).compose(&h).apply(z).unwrap();
        let right = f.compose(&g.compose(&h)).apply(z).unwrap();
        let nested = f.apply(g.apply(h.apply(z).unwrap()).unwrap()).unwrap();
        prop_assert!(close(left, right, 1e-12));
        prop_assert!(close(left, nested, 1e-12));
    }

    #[test]
    fn inverse_undoes_transform(f in automorphisms(), z in disk_point(0.9)) {
        let back = f.inverse().apply(f.apply(z).unwrap()).unwrap();
        prop_assert!(close(back, z, 1e-12));
        prop_assert!(f.compose(&f.inverse()).projective_eq(&Moebius::identity(), 1e-12));
    }

    #[test]
    fn blaschke_is_involution(a in disk_point(0.95), z in disk_point(0.95)) {
        let s = blaschke(a).unwrap();
        let twice = s.apply(s.apply(z).unwrap()).unwrap();
        prop_assert!((twice - z).norm() < 1e-13 / (1.0 - a.norm()));
    }

    #[test]
    fn rho_is_automorphism_invariant(f in automorphisms(), a in disk_point(0.9), b in disk_point(0.9)) {
        let before = rho(a, b).unwrap();
        let after = rho(f.apply(a).unwrap(), f.apply(b).unwrap()).unwrap();
        prop_assert!((before - after).abs() < 1e-12);
    }

    #[test]
    fn hyperbolic_distance_is_a_metric(a in disk_point(0.9), b in disk_point(0.9), c in disk_point(0.9)) {
        let ab = hyp_dist(a, b).unwrap();
        prop_assert!((ab - hyp_dist(b, a).unwrap()).abs() < 1e-14);
        prop_assert!(ab <= hyp_dist(a, c).unwrap() + hyp_dist(c, b).unwrap() + 1e-12);
        prop_assert!(rho(a, b).unwrap() < 1.0);
    }

    #[test]
    fn polylines_are_no_shorter_than_geodesics(pts in proptest::collection::vec(disk_point(0.9), 2..6)) {
        prop_assume!(pts.windows(2).all(|w| w[0] != w[1]));
        let line = Polyline::new(pts.clone()).unwrap();
        let len = curve_length(&line).unwrap();
        prop_assert!(len >= hyp_dist(pts[0], *pts.last().unwrap()).unwrap() - 1e-8);
        let finer = curve_length(&line.subdivide(3)).unwrap();
        prop_assert!((finer - len).abs() < 1e-10 * len.max(1.0));
    }

    #[test]
    fn disks_rotate_with_their_center(a in disk_point(0.95), r in 0.01..0.99f64, theta in 0.0..std::f64::consts::TAU) {
        let rot = C::from_polar(1.0, theta);
        let e = PseudoDisk::new(a, r).unwrap().to_euclidean();
        let er = PseudoDisk::new(a * rot, r).unwrap().to_euclidean();
        prop_assert!((er.center() - e.center() * rot).norm() < 1e-12);
        prop_assert!((er.radius() - e.radius()).abs() < 1e-12);
    }
}

#[test]
fn blaschke_half_involution_on_samples() {
    let s = blaschke(C::new(0.5, 0.0)).unwrap();
    let ss = s.compose(&s);
    let mut sampler = SeededSampler::new(11);
    for _ in 0..20 {
        let z = sampler.disk_point(0.99);
        assert!((ss.apply(z).unwrap() - z).norm() < 1e-14);
    }
}

#[test]
fn cayley_maps_disk_to_right_half_plane() {
    let psi = cayley::<f64>();
    let mut s = SeededSampler::new(12);
    for _ in 0..50 {
        assert!(psi.apply(s.disk_point(0.999)).unwrap().re > 0.0);
    }
    for k in 1..200 {
        let theta = 0.05 + (std::f64::consts::TAU - 0.1) * k as f64 / 200.0;
        let w = psi.apply(C::from_polar(1.0, theta)).unwrap();
        assert!(w.re.abs() < 1e-10 * w.norm().max(1.0), "{theta}: {w}");
    }
}

#[test]
fn automorphism_is_isometry_on_pairs() {
    let f = automorphism(1.1, C::new(0.3, 0.2)).unwrap();
    let mut s = SeededSampler::new(13);
    for _ in 0..30 {
        let (z, w) = (s.disk_point(0.99), s.disk_point(0.99));
        let fz = f.apply(z).unwrap();
        let fw = f.apply(w).unwrap();
        assert!(fz.norm() < 1.0 && fw.norm() < 1.0);
        assert!((rho(fz, fw).unwrap() - rho(z, w).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn euclidean_boundary_is_rho_circle() {
    let mut s = SeededSampler::new(14);
    for _ in 0..200 {
        let d = PseudoDisk::new(s.disk_point(0.95), s.uniform(0.01, 0.99)).unwrap();
        let circle = d.to_euclidean().boundary();
        assert!(circle.center().norm() + circle.radius() < 1.0);
        for k in 0..50 {
            let z = circle.point_at(std::f64::consts::TAU * k as f64 / 50.0);
            assert!((rho(z, d.center()).unwrap() - d.radius()).abs() < 1e-10);
        }
    }
}

#[test]
fn halfplane_image_is_cayley_image_of_boundary() {
    let psi = cayley::<f64>();
    let mut s = SeededSampler::new(15);
    for _ in 0..100 {
        let (x, r) = (s.uniform(-0.95, 0.95), s.uniform(0.01, 0.95));
        let h = halfplane_image(x, r).unwrap();
        let scale = h.center_x;
        assert!((h.center_x - (h.w_max + h.w_min) / 2.0).abs() < 1e-12 * scale);
        assert!((h.radius - (h.w_max - h.w_min) / 2.0).abs() < 1e-12 * scale);
        assert!(0.0 < h.w_min && h.w_min < h.w_max);

        let circle = PseudoDisk::new(C::new(x, 0.0), r)
            .unwrap()
            .to_euclidean()
            .boundary();
        for k in 0..50 {
            let z = circle.point_at(std::f64::consts::TAU * (k as f64 + 0.5) / 50.0);
            let w = psi.apply(z).unwrap();
            assert!(((w - C::new(h.center_x, 0.0)).norm() - h.radius).abs() < 1e-10 * scale);
        }

        // The crossing with the smaller abscissa maps to the smaller crossing in the half-plane.
        let (x_lo, x_hi) = endpoints_on_diameter(x, r).unwrap();
        assert!(x_lo < x_hi);
        let w_lo = psi.apply(C::new(x_lo, 0.0)).unwrap();
        let w_hi = psi.apply(C::new(x_hi, 0.0)).unwrap();
        assert!((w_lo.re - h.w_min).abs() < 1e-12 * scale);
        assert!((w_hi.re - h.w_max).abs() < 1e-12 * scale);
    }
}

#[test]
fn extreme_distances_match_euclidean_disk() {
    let mut s = SeededSampler::new(16);
    for _ in 0..200 {
        let d = PseudoDisk::new(s.disk_point(0.95), s.uniform(0.01, 0.99)).unwrap();
        let e = d.to_euclidean();
        let ext = d.extreme_distances();
        assert!((ext.d_max - (e.center().norm() + e.radius())).abs() < 1e-12);
        if d.center().norm() > d.radius() {
            assert!(!ext.origin_enclosed);
            assert!((ext.d_min - (e.center().norm() - e.radius())).abs() < 1e-12);
        } else {
            assert!(ext.origin_enclosed && ext.d_min == 0.0);
        }
    }
}

#[test]
fn geodesic_circles_are_orthogonal_to_unit_circle() {
    let mut s = SeededSampler::new(17);
    for _ in 0..200 {
        let (a, b) = (s.disk_point(0.99), s.disk_point(0.99));
        match geodesic_arc(a, b).unwrap() {
            GeodesicArc::Circular { circle, start, end } => {
                let c = circle.center();
                let rad = circle.radius();
                assert!((c.norm_sqr() - rad * rad - 1.0).abs() < 1e-10 * c.norm_sqr().max(1.0));
                assert!(circle.distance_to(start) < 1e-12 * rad.max(1.0));
                assert!(circle.distance_to(end) < 1e-12 * rad.max(1.0));
            }
            GeodesicArc::Diameter { .. } => panic!("random pair unexpectedly collinear"),
        }
    }
}

#[test]
fn sampled_geodesic_realizes_distance() {
    let (a, b) = (C::new(0.5, 0.0), C::new(0.0, 0.5));
    let line = geodesic_arc(a, b).unwrap().sample(1001).unwrap();
    let len = curve_length(&line).unwrap();
    assert!((len - hyp_dist(a, b).unwrap()).abs() < 1e-6);
    // The straight chord is longer.
    let chord = curve_length(&Polyline::new(vec![a, b]).unwrap()).unwrap();
    assert!(chord > len);
}
