use proptest::prelude::*;
use spiralbox::geometry::{hydrogen_curve, polyene_curve, Vec2};
use spiralbox::output::fmt_num;
use spiralbox::quantum::omega_from_sigma;
use spiralbox::specfun::{bessel_j, bessel_j_zeros, laguerre, log_gamma};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bessel_three_term_recurrence(nu in 1.0f64..40.0, x in 0.1f64..60.0) {
        let lower = bessel_j(nu - 1.0, x).unwrap();
        let mid = bessel_j(nu, x).unwrap();
        let upper = bessel_j(nu + 1.0, x).unwrap();
        let residual = lower + upper - 2.0 * nu / x * mid;
        let scale = lower.abs().max(upper.abs()).max(1e-300);
        prop_assert!(residual.abs() <= 1e-8, "ν = {nu}, x = {x}: {residual:e}");
        prop_assert!(residual.abs() <= 1e-10 * scale.max(1.0) || residual.abs() <= 1e-12, "ν = {nu}, x = {x}: {residual:e} vs {scale:e}");
    }

    #[test]
    fn bessel_zeros_interlace(nu in 0.0f64..30.0) {
        let a = bessel_j_zeros(nu, 4).unwrap();
        let b = bessel_j_zeros(nu + 1.0, 4).unwrap();
        for n in 0..4 {
            prop_assert!(a[n] < b[n]);
            if n + 1 < 4 {
                prop_assert!(b[n] < a[n + 1]);
            }
            prop_assert!(bessel_j(nu, a[n]).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn log_gamma_recurrence(x in 0.05f64..150.0) {
        let diff = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
        prop_assert!((diff - x.ln()).abs() < 1e-12 * log_gamma(x + 1.0).unwrap().abs().max(1.0));
    }

    #[test]
    fn laguerre_derivative_identity(n in 1usize..12, alpha in 0.0f64..6.0, x in 0.0f64..20.0) {
        // L_n^{α}(x) = L_n^{α+1}(x) − L_{n−1}^{α+1}(x)
        let lhs = laguerre(n, alpha, x);
        let rhs = laguerre(n, alpha + 1.0, x) - laguerre(n - 1, alpha + 1.0, x);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0));
    }

    #[test]
    fn omega_formula(sigma in 1e-3f64..1e3) {
        let w = omega_from_sigma(sigma).unwrap();
        prop_assert!(w >= 0.0);
        prop_assert!((4.0 * w * w - (1.0 - 1.0 / (sigma * sigma)).abs()).abs() <= 1e-12 * (4.0 * w * w).max(1.0));
    }

    #[test]
    fn spiral_radius_laws(sigma in 0.01f64..5.0, s in 1e-3f64..1e3) {
        let r = polyene_curve(sigma, s).unwrap().norm();
        prop_assert!((r / (sigma * s / (1.0 + sigma * sigma).sqrt()) - 1.0).abs() < 1e-12);
        let rh = hydrogen_curve(sigma, s, 1.0, Vec2::ZERO).unwrap().norm();
        prop_assert!((rh / (sigma * (s + sigma * sigma / 4.0).sqrt()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn formatted_numbers_keep_ten_digits(x in prop::num::f64::NORMAL) {
        let text = fmt_num(x);
        let back: f64 = text.parse().unwrap();
        prop_assert!(((back - x) / x).abs() < 5.1e-10, "{x} -> {text}");
        prop_assert!(!text.contains(',') && !text.contains('+'));
    }
}
