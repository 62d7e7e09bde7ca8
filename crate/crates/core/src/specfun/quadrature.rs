//! Adaptive Simpson quadrature.

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions == 0 {
            return Err(domain(
                "QuadratureSpec",
                format!("tolerances must be positive and subdivisions non-zero (abs {abs_tol}, rel {rel_tol}, max {max_subdivisions})"),
            ));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-11,
            max_subdivisions: 200_000,
        }
    }
}

/// Initial uniform partition; keeps oscillatory integrands from fooling the
/// first error estimate.
const INITIAL_PANELS: usize = 32;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// ∫_a^b f(x) dx. A non-finite value at `a` itself is tolerated (the point
/// is nudged inward); anywhere else it is an error.
pub fn integrate<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(domain("integrate", format!("need finite a < b, got [{a}, {b}]")));
    }
    let eval = |x: f64| -> Result<f64> {
        let mut v = f(x);
        if !v.is_finite() && x == a {
            v = f(a + (b - a) * 1e-14);
        }
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { s: x, value: v })
        }
    };

    let width = (b - a) / INITIAL_PANELS as f64;
    let mut stack = Vec::with_capacity(64);
    let mut left = eval(a)?;
    let mut coarse = 0.0;
    for i in 0..INITIAL_PANELS {
        let pa = a + i as f64 * width;
        let pb = if i + 1 == INITIAL_PANELS { b } else { pa + width };
        let fm = eval(0.5 * (pa + pb))?;
        let fb = eval(pb)?;
        let whole = simpson(pa, pb, left, fm, fb);
        coarse += whole;
        stack.push(Panel {
            a: pa,
            b: pb,
            fa: left,
            fm,
            fb,
            whole,
        });
        left = fb;
    }

    let target = spec.abs_tol.max(spec.rel_tol * coarse.abs());
    let span = b - a;
    let mut total = 0.0;
    let mut err_total = 0.0;
    let mut splits = 0usize;
    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let flm = eval(0.5 * (p.a + m))?;
        let frm = eval(0.5 * (m + p.b))?;
        let lw = simpson(p.a, m, p.fa, flm, p.fm);
        let rw = simpson(m, p.b, p.fm, frm, p.fb);
        let diff = lw + rw - p.whole;
        let local = target * (p.b - p.a) / span;
        if diff.abs() <= 15.0 * local || (p.b - p.a) <= span * 1e-15 {
            total += lw + rw + diff / 15.0;
            err_total += diff.abs() / 15.0;
            continue;
        }
        splits += 1;
        if splits > spec.max_subdivisions {
            return Err(Error::QuadratureNotConverged {
                subdivisions: splits - 1,
                estimate: total + p.whole,
                error: err_total + diff.abs(),
            });
        }
        stack.push(Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: rw,
        });
        stack.push(Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: lw,
        });
    }
    Ok(total)
}
