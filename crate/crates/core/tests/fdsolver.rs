use nalgebra::{DMatrix, SymmetricEigen};
use spiralbox::fdsolver::*;
use spiralbox::specfun::bessel_j_zeros;

fn dense(op: &TridiagonalOperator) -> DMatrix<f64> {
    let n = op.dim();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = op.diagonal[i];
        if i + 1 < n {
            m[(i, i + 1)] = op.off_diagonal[i];
            m[(i + 1, i)] = op.off_diagonal[i];
        }
    }
    m
}

fn dense_eigenvalues(op: &TridiagonalOperator) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(dense(op)).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn wiggly(s: f64) -> f64 {
    30.0 * (7.0 * s).sin() + 5.0 / (s + 0.1)
}

#[test]
fn bisection_matches_dense_eigensolver() {
    let op = discretize(wiggly, 1.0, 80).unwrap();
    let dense_ev = dense_eigenvalues(&op);
    let ours = eigenvalues_lowest(&op, 80).unwrap();
    for (a, b) in ours.iter().zip(&dense_ev) {
        assert!((a - b).abs() <= 1e-9 * b.abs().max(1.0), "{a} vs {b}");
    }
}

#[test]
fn sturm_count_matches_dense_count() {
    for op in [discretize(wiggly, 2.0, 60).unwrap(), discretize(inverse_square(62.0), 1.0, 60).unwrap()] {
        let ev = dense_eigenvalues(&op);
        let (lo, hi) = op.gershgorin_bounds();
        for k in 0..=40 {
            let shift = lo + (hi - lo) * (k as f64 + 0.37) / 41.0;
            let expected = ev.iter().filter(|&&e| e < shift).count();
            assert_eq!(op.sturm_count(shift), expected, "shift {shift}");
            assert_eq!(op.plain_sturm_count(shift), expected);
        }
    }
}

#[test]
fn leading_blocks_interlace() {
    let op = discretize(wiggly, 1.0, 50).unwrap();
    let a20 = eigenvalues_lowest(&op.leading(20).unwrap(), 20).unwrap();
    let a21 = eigenvalues_lowest(&op.leading(21).unwrap(), 21).unwrap();
    for i in 0..20 {
        assert!(a21[i] <= a20[i] + 1e-9 && a20[i] <= a21[i + 1] + 1e-9, "i = {i}");
    }
}

fn log_log_slope(h: &[f64], err: &[f64]) -> f64 {
    let n = h.len() as f64;
    let xs: Vec<f64> = h.iter().map(|x| x.ln()).collect();
    let ys: Vec<f64> = err.iter().map(|y| y.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

#[test]
fn discretisation_error_is_second_order() {
    for omega in [0.5, 7.88987] {
        let exact = bessel_j_zeros(omega, 1).unwrap()[0].powi(2);
        let c = omega * omega - 0.25;
        let (mut hs, mut errs) = (Vec::new(), Vec::new());
        for n in [200, 400, 800, 1600] {
            let op = discretize(inverse_square(c), 1.0, n).unwrap();
            hs.push(op.grid_step);
            errs.push((eigenvalues_lowest(&op, 1).unwrap()[0] - exact).abs());
        }
        let slope = log_log_slope(&hs, &errs);
        assert!((slope - 2.0).abs() < 0.1, "ω = {omega}: slope {slope}");
    }
}

#[test]
fn richardson_matches_bessel_zeros() {
    for omega in [0.5, 2.0, 7.88987, 23.5649] {
        let exact: Vec<f64> = bessel_j_zeros(omega, 3).unwrap().iter().map(|j| j * j).collect();
        let grids = richardson_grids(inverse_square(omega * omega - 0.25), 1.0, 3, 2000).unwrap();
        for (n, &e) in exact.iter().enumerate() {
            let rel_coarse = (grids.coarse[n] - e).abs() / e;
            let rel = (grids.extrapolated[n] - e).abs() / e;
            assert!(rel < 1e-8, "ω = {omega}, n = {}: {rel:e}", n + 1);
            assert!(rel < rel_coarse);
        }
    }
}

#[test]
fn box_length_scales_eigenvalues() {
    let c = 3.75;
    let one = richardson_refine(inverse_square(c), 1.0, 2, 1000).unwrap();
    let two = richardson_refine(inverse_square(c), 2.0, 2, 1000).unwrap();
    for (a, b) in one.iter().zip(&two) {
        assert!((a / b - 4.0).abs() < 1e-9);
    }
}
