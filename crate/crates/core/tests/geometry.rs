use spiralbox::geometry::*;

fn max_distance(a: &[Vec2], b: &[Vec2]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (*p - *q).norm()).fold(0.0, f64::max)
}

fn start_frame(s0: f64, position: Vec2) -> FrenetState {
    FrenetState::standard(s0, position)
}

#[test]
fn frenet_matches_polyene_closed_form() {
    for s2 in [0.004, 0.0009] {
        let sigma: f64 = f64::sqrt(s2);
        let (s0, s1) = (0.2, 2.0);
        let law = CurvatureLaw::polyene(sigma).unwrap();
        let start = polyene_curve_framed(sigma, s0, s0, Vec2::ZERO).unwrap();
        let num = frenet_integrate(|s| law.curvature(s), s0, s1, 400, start_frame(s0, start)).unwrap();
        let exact: Vec<Vec2> = num.s_values.iter().map(|&s| polyene_curve_framed(sigma, s, s0, Vec2::ZERO).unwrap()).collect();
        let err = max_distance(&num.points, &exact);
        assert!(err < 1e-8, "σ² = {s2}: {err:e}");
    }
}

#[test]
fn frenet_matches_hydrogen_closed_form() {
    let sigma = 0.4;
    let (s0, s1) = (0.05, 6.0);
    let law = CurvatureLaw::hydrogen(sigma).unwrap();
    let centre = Vec2::new(0.3, -1.2);
    let start = hydrogen_curve(sigma, s0, s0, centre).unwrap();
    let num = frenet_integrate(|s| law.curvature(s), s0, s1, 300, start_frame(s0, start)).unwrap();
    for (i, &s) in num.s_values.iter().enumerate() {
        let p = hydrogen_curve(sigma, s, s0, centre).unwrap();
        let t = hydrogen_tangent(sigma, s, s0).unwrap();
        assert!((num.points[i] - p).norm() < 1e-8, "s = {s}");
        assert!((num.tangents[i] - t).norm() < 1e-8);
    }
}

#[test]
fn unframed_polyene_curve_is_a_rigid_motion_of_the_framed_one() {
    let sigma = 0.0014f64.sqrt();
    let s_values = logspace(0.1, 1.0, 50);
    let framed: Vec<Vec2> = s_values.iter().map(|&s| polyene_curve_framed(sigma, s, 1.0, Vec2::ZERO).unwrap()).collect();
    let from = (polyene_curve_framed(sigma, 1.0, 1.0, Vec2::ZERO).unwrap(), Vec2::new(1.0, 0.0));
    let to = (polyene_curve(sigma, 1.0).unwrap(), polyene_tangent(sigma, 1.0).unwrap());
    let moved = align_to_frame(&framed, from, to);
    let direct: Vec<Vec2> = s_values.iter().map(|&s| polyene_curve(sigma, s).unwrap()).collect();
    assert!(max_distance(&moved, &direct) < 1e-12);
}

#[test]
fn radius_identities_at_log_spaced_points() {
    let s_values = logspace(1e-3, 1e3, 100);
    for s2 in [0.004, 0.0014, 0.0009, 0.00045, 1.0, 25.0] {
        let sigma: f64 = f64::sqrt(s2);
        for &s in &s_values {
            let r = polyene_curve(sigma, s).unwrap().norm();
            let expected = sigma * s / (1.0 + s2).sqrt();
            assert!((r / expected - 1.0).abs() < 1e-12);
            let centre = Vec2::new(-2.0, 0.5);
            let r_h = (hydrogen_curve(sigma, s, 0.7, centre).unwrap() - centre).norm();
            let expected_h = sigma * (s + s2 / 4.0).sqrt();
            assert!((r_h / expected_h - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn radius_grows_geometrically_per_turn() {
    // one full turn multiplies s, and so the polyene radius, by e^{2πσ}
    let sigma = 0.004f64.sqrt();
    let factor = (2.0 * std::f64::consts::PI * sigma).exp();
    let mut s = 0.01;
    for _ in 0..10 {
        let a = polyene_curve(sigma, s).unwrap();
        let b = polyene_curve(sigma, s * factor).unwrap();
        assert!((b.norm() / a.norm() - factor).abs() < 1e-12);
        assert!((a.normalized() - b.normalized()).norm() < 1e-10);
        s *= factor;
    }
}

#[test]
fn reconstructed_curvature_within_a_tenth_of_a_percent() {
    let sigma = 0.004f64.sqrt();
    let samples = sample_polyene(sigma, &linspace(0.5, 1.5, 4001)).unwrap();
    let k = curvature_of_samples(&samples).unwrap();
    for (i, &ki) in k.iter().enumerate() {
        let s = samples.s_values[i + 1];
        assert!((ki * sigma * s - 1.0).abs() < 1e-3, "s = {s}: {ki}");
    }
    let sigma = 0.5;
    let samples = sample_hydrogen(sigma, 0.1, Vec2::ZERO, &linspace(0.1, 4.0, 2001)).unwrap();
    for (i, &ki) in curvature_of_samples(&samples).unwrap().iter().enumerate() {
        let s = samples.s_values[i + 1];
        assert!((ki * sigma * s.sqrt() - 1.0).abs() < 1e-3);
    }
}

#[test]
fn reconstructed_curvature_of_general_power_law() {
    let (sigma, p) = (0.8, 0.75);
    let samples = sample_power_law(sigma, p, 0.5, 3.0, 3001).unwrap();
    assert!(samples.center.is_none());
    for (i, &ki) in curvature_of_samples(&samples).unwrap().iter().enumerate() {
        let s = samples.s_values[i + 1];
        assert!((ki * sigma * s.powf(p) - 1.0).abs() < 1e-3);
    }
}

#[test]
fn power_law_sampler_dispatches_to_closed_forms() {
    let a = sample_power_law(0.1, 1.0, 0.2, 1.0, 11).unwrap();
    let b = sample_polyene(0.1, &linspace(0.2, 1.0, 11)).unwrap();
    assert_eq!(a, b);
    let h = sample_power_law(0.1, 0.5, 0.2, 1.0, 11).unwrap();
    assert_eq!(h.center, Some(Vec2::ZERO));
    assert!(sample_power_law(0.1, 1.0, 0.0, 1.0, 11).is_err());
    assert!(sample_power_law(0.1, 0.0, 0.0, 1.0, 11).is_ok());
}

#[test]
fn polyline_length_converges_to_arc_length() {
    let sigma = 0.0009f64.sqrt();
    let mut errors = Vec::new();
    for n in [2001, 4001, 8001] {
        let samples = sample_polyene(sigma, &linspace(0.5, 1.0, n)).unwrap();
        errors.push(0.5 - samples.polyline_length());
    }
    assert!(errors.iter().all(|e| *e > 0.0));
    // chords undershoot by O(h²)
    for w in errors.windows(2) {
        assert!((w[0] / w[1] - 4.0).abs() < 0.05, "{errors:?}");
    }
}

#[test]
fn frenet_result_is_insensitive_to_output_spacing() {
    let law = CurvatureLaw::new(1.3, 0.3).unwrap();
    let start = start_frame(0.5, Vec2::ZERO);
    let coarse = frenet_integrate(|s| law.curvature(s), 0.5, 4.0, 7, start).unwrap();
    let fine = frenet_integrate(|s| law.curvature(s), 0.5, 4.0, 700, start).unwrap();
    let gap = (coarse.points[7] - fine.points[700]).norm();
    assert!(gap < 1e-8, "{gap:e}");
}
