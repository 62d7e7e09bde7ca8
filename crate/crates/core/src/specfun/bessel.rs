//! Bessel functions of the first kind for real, non-negative order.
//!
//! Small arguments are summed directly from the power series. Everything
//! else goes through Miller's backward recurrence started well above
//! `max(ν, x)` and normalised with the Neumann-type sum
//!
//! ```text
//! (x/2)^μ = Σ_k (μ + 2k) Γ(μ + k) / k! · J_{μ+2k}(x),   0 ≤ μ < 1,
//! ```
//!
//! which reduces to `J_0 + 2 Σ J_{2k} = 1` for integer orders.

use std::f64::consts::FRAC_PI_4;

use crate::error::{domain, Error, Result};
use crate::specfun::gamma::{gamma_small, log_gamma_unchecked};

/// A validated Bessel order ν ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() && nu >= 0.0 {
            Ok(Self(nu))
        } else {
            Err(domain("BesselOrder", format!("order must be finite and non-negative, got {nu}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn j(self, x: f64) -> Result<f64> {
        bessel_j(self.0, x)
    }

    pub fn zero(self, n: usize) -> Result<f64> {
        bessel_j_zero(self.0, n)
    }
}

fn check_order(func: &'static str, nu: f64) -> Result<()> {
    BesselOrder::new(nu).map(|_| ()).map_err(|_| domain(func, format!("order must be finite and non-negative, got {nu}")))
}

/// Below this argument the power series is always used.
const SERIES_X_MAX: f64 = 12.0;

/// The series loses roughly exp(x² / (2(ν + 1))) to cancellation; it is
/// used while that stays below e⁹.
fn use_series(nu: f64, x: f64) -> bool {
    x <= SERIES_X_MAX || x * x <= 18.0 * (nu + 1.0)
}

/// J_ν(x) for ν ≥ 0, x ≥ 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_order("bessel_j", nu)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("bessel_j", format!("argument must be finite and non-negative, got {x}")));
    }
    Ok(bessel_j_unchecked(nu, x))
}

pub(crate) fn bessel_j_unchecked(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if use_series(nu, x) {
        series(nu, x)
    } else {
        miller(nu, x)
    }
}

/// (x/2)^ν / Γ(ν + 1), built as a product so that neither factor overflows
/// on its own.
fn series_prefactor(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let m = nu.floor();
    let mu = nu - m;
    let m = m as usize;
    if m > 2000 {
        return (nu * half.ln() - log_gamma_unchecked(nu + 1.0)).exp();
    }
    let mut pref = half.powf(mu) / gamma_small(mu + 1.0);
    for j in 1..=m {
        pref *= half / (mu + j as f64);
        if pref == 0.0 {
            break;
        }
    }
    pref
}

fn series(nu: f64, x: f64) -> f64 {
    let pref = series_prefactor(nu, x);
    if pref == 0.0 {
        return 0.0;
    }
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..1000 {
        let kf = k as f64;
        term *= -q / (kf * (kf + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && kf > q.sqrt() {
            break;
        }
    }
    pref * sum
}

fn miller_start(order_index: usize, x: f64) -> usize {
    let base = (order_index as f64).max(x).ceil() as usize;
    base + 30 + (10.0 * x.cbrt()).ceil() as usize
}

fn miller(nu: f64, x: f64) -> f64 {
    let m = nu.floor();
    let mu = nu - m;
    let m = m as usize;
    let top = miller_start(m, x);

    // f[k] ∝ J_{μ+k}(x)
    let mut f = vec![0.0f64; top + 2];
    f[top] = 1e-30;
    let two_over_x = 2.0 / x;
    for k in (1..=top).rev() {
        let next = two_over_x * (mu + k as f64) * f[k] - f[k + 1];
        f[k - 1] = next;
        if next.abs() > 1e250 {
            for v in &mut f[k - 1..] {
                *v *= 1e-250;
            }
        }
    }

    // Σ c_i f[2i], c_0 = Γ(μ+1), c_i = (μ+2i) Γ(μ+i)/i!
    let gamma_mu1 = gamma_small(mu + 1.0);
    let mut norm = gamma_mu1 * f[0];
    let mut g = gamma_mu1; // Γ(μ+i)/i! at i = 1
    let mut i = 1usize;
    while 2 * i <= top {
        let fi = i as f64;
        norm += (mu + 2.0 * fi) * g * f[2 * i];
        g *= (mu + fi) / (fi + 1.0);
        i += 1;
    }
    f[m] * (0.5 * x).powf(mu) / norm
}

/// J_{ν−1}(x). For ν ≥ 1 this is a direct evaluation; below that the order
/// would be negative, so it comes from the three-term recurrence
/// J_{ν−1} = (2ν/x) J_ν − J_{ν+1}.
pub fn bessel_j_order_below(nu: f64, x: f64) -> Result<f64> {
    check_order("bessel_j_order_below", nu)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("bessel_j_order_below", format!("argument must be positive, got {x}")));
    }
    if nu >= 1.0 {
        Ok(bessel_j_unchecked(nu - 1.0, x))
    } else {
        Ok(2.0 * nu / x * bessel_j_unchecked(nu, x) - bessel_j_unchecked(nu + 1.0, x))
    }
}

/// J_ν′(x) for x > 0.
pub fn bessel_j_derivative(nu: f64, x: f64) -> Result<f64> {
    check_order("bessel_j_derivative", nu)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("bessel_j_derivative", format!("argument must be positive, got {x}")));
    }
    Ok(derivative_unchecked(nu, x))
}

fn derivative_unchecked(nu: f64, x: f64) -> f64 {
    if nu >= 1.0 {
        0.5 * (bessel_j_unchecked(nu - 1.0, x) - bessel_j_unchecked(nu + 1.0, x))
    } else {
        // J_{ν−1} − (ν/x) J_ν with J_{ν−1} from the recurrence
        let j = bessel_j_unchecked(nu, x);
        let below = 2.0 * nu / x * j - bessel_j_unchecked(nu + 1.0, x);
        below - nu / x * j
    }
}

const SCAN_STEP: f64 = FRAC_PI_4;
const BISECT_WIDTH: f64 = 1e-6;
const NEWTON_TOL: f64 = 1e-12;

/// The first `count` positive zeros j_{ν,1} < … < j_{ν,count}.
pub fn bessel_j_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    check_order("bessel_j_zeros", nu)?;
    let mut zeros = Vec::with_capacity(count);
    if count == 0 {
        return Ok(zeros);
    }
    let max_steps = ((count as f64 + nu + 10.0) * 8.0) as usize;

    let mut a = nu + 0.5;
    let mut fa = bessel_j_unchecked(nu, a);
    for _ in 0..max_steps {
        let b = a + SCAN_STEP;
        let fb = bessel_j_unchecked(nu, b);
        if fa == 0.0 {
            zeros.push(a);
        } else if fa * fb < 0.0 {
            zeros.push(refine(nu, a, fa, b)?);
        }
        if zeros.len() == count {
            return Ok(zeros);
        }
        a = b;
        fa = fb;
    }
    Err(Error::ZeroSearch {
        nu,
        detail: format!("found only {} of {count} zeros before the scan limit", zeros.len()),
    })
}

/// The n-th positive zero j_{ν,n}, n ≥ 1.
pub fn bessel_j_zero(nu: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(domain("bessel_j_zero", "zero index starts at 1"));
    }
    Ok(bessel_j_zeros(nu, n)?[n - 1])
}

fn refine(nu: f64, mut lo: f64, mut flo: f64, mut hi: f64) -> Result<f64> {
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        let fm = bessel_j_unchecked(nu, mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm * flo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let fx = bessel_j_unchecked(nu, x);
        let dfx = derivative_unchecked(nu, x);
        let step = fx / dfx;
        let next = x - step;
        if !next.is_finite() || next <= lo || next >= hi {
            return Err(Error::ZeroSearch {
                nu,
                detail: format!("Newton step left the bracket [{lo}, {hi}]"),
            });
        }
        x = next;
        if step.abs() <= NEWTON_TOL * x.max(1.0) {
            return Ok(x);
        }
    }
    Err(Error::ZeroSearch {
        nu,
        detail: format!("Newton refinement near {x} did not settle"),
    })
}
