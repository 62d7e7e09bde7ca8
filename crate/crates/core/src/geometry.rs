//! Plane curves with power-law curvature k(s) = 1/(σ s^p).
//!
//! Every arc-length parametrised plane curve satisfies the Frenet system
//! t′ = k n, n′ = −k t, α′ = t. For power-law curvature the tangent angle is
//! θ(s) = s^(1−p)/(σ(1−p)) (or ln s/σ at p = 1), and the tangent integrates in
//! closed form for p = 1/2 (hydrogen curve) and p = 1 (polyene curve). Both
//! are spirals winding infinitely often around a centre as s → 0, so every
//! routine here requires s > 0.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn normalized(self) -> Vec2 {
        self * (1.0 / self.norm())
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// k(s) = 1/(σ s^p) with σ > 0.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CurvatureLaw {
    sigma: f64,
    p: f64,
}

impl CurvatureLaw {
    pub fn new(sigma: f64, p: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() || !p.is_finite() {
            return Err(domain("CurvatureLaw", format!("need finite sigma > 0 and finite p, got sigma = {sigma}, p = {p}")));
        }
        Ok(Self { sigma, p })
    }

    pub fn hydrogen(sigma: f64) -> Result<Self> {
        Self::new(sigma, 0.5)
    }

    pub fn polyene(sigma: f64) -> Result<Self> {
        Self::new(sigma, 1.0)
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn curvature(&self, s: f64) -> f64 {
        1.0 / (self.sigma * s.powf(self.p))
    }

    /// Tangent angle θ(s), an antiderivative of k.
    pub fn turning_angle(&self, s: f64) -> f64 {
        if self.p == 1.0 {
            s.ln() / self.sigma
        } else {
            let e = 1.0 - self.p;
            s.powf(e) / (self.sigma * e)
        }
    }
}

fn check_arc(func: &'static str, s: f64) -> Result<()> {
    if s > 0.0 && s.is_finite() {
        Ok(())
    } else {
        Err(domain(func, format!("arc length must be positive and finite, got {s}")))
    }
}

/// (C_p(s), S_p(s)) = (cos θ(s), sin θ(s)).
pub fn cs_functions(law: &CurvatureLaw, s: f64) -> Result<(f64, f64)> {
    check_arc("cs_functions", s)?;
    let (sin, cos) = law.turning_angle(s).sin_cos();
    Ok((cos, sin))
}

/// R_p(s) = [[C, S], [−S, C]] applied to v.
fn rotate_by(cs: (f64, f64), v: Vec2) -> Vec2 {
    let (c, s) = cs;
    Vec2::new(c * v.x + s * v.y, -s * v.x + c * v.y)
}

/// Closed-form hydrogen curve (p = 1/2) with t(s₀) = (1, 0), n(s₀) = (0, 1),
/// spiralling around `center`.
pub fn hydrogen_curve(sigma: f64, s: f64, s0: f64, center: Vec2) -> Result<Vec2> {
    check_arc("hydrogen_curve", s)?;
    check_arc("hydrogen_curve", s0)?;
    let law = CurvatureLaw::hydrogen(sigma)?;
    let (c, sn) = cs_functions(&law, s)?;
    let half_sq = 0.5 * sigma * sigma;
    let root = sigma * s.sqrt();
    let inner = Vec2::new(half_sq * c + root * sn, -root * c + half_sq * sn);
    Ok(rotate_by(cs_functions(&law, s0)?, inner) + center)
}

/// Unit tangent of [`hydrogen_curve`]: (cos(θ(s) − θ(s₀)), sin(θ(s) − θ(s₀))).
pub fn hydrogen_tangent(sigma: f64, s: f64, s0: f64) -> Result<Vec2> {
    check_arc("hydrogen_tangent", s)?;
    check_arc("hydrogen_tangent", s0)?;
    let law = CurvatureLaw::hydrogen(sigma)?;
    Ok(rotate_by(cs_functions(&law, s0)?, tangent_angle_vec(&law, s)))
}

fn tangent_angle_vec(law: &CurvatureLaw, s: f64) -> Vec2 {
    let (sin, cos) = law.turning_angle(s).sin_cos();
    Vec2::new(cos, sin)
}

/// The explicit polyene curve with s₀ = 1 and centre at the origin:
/// σs/(1+σ²) · (cos φ + σ sin φ, sin φ − σ cos φ), φ = ln s / σ.
///
/// Its tangent at s = 1 is (2σ, 1 − σ²)/(1 + σ²), not (1, 0); use
/// [`polyene_curve_framed`] for the normalised initial frame.
pub fn polyene_curve(sigma: f64, s: f64) -> Result<Vec2> {
    check_arc("polyene_curve", s)?;
    let law = CurvatureLaw::polyene(sigma)?;
    let (c, sn) = cs_functions(&law, s)?;
    let scale = sigma * s / (1.0 + sigma * sigma);
    Ok(Vec2::new(c + sigma * sn, sn - sigma * c) * scale)
}

/// Unit tangent of [`polyene_curve`].
pub fn polyene_tangent(sigma: f64, s: f64) -> Result<Vec2> {
    check_arc("polyene_tangent", s)?;
    let law = CurvatureLaw::polyene(sigma)?;
    let (c, sn) = cs_functions(&law, s)?;
    let a = sigma - 1.0 / sigma;
    let scale = sigma / (1.0 + sigma * sigma);
    Ok(Vec2::new(2.0 * c + a * sn, 2.0 * sn - a * c) * scale)
}

/// Polyene curve with t(s₀) = (1, 0), n(s₀) = (0, 1) spiralling around
/// `center`: σs/(1+σ²) · R₁(s₀) [[σ, 1], [−1, σ]] (C₁, S₁)ᵀ + α₀.
pub fn polyene_curve_framed(sigma: f64, s: f64, s0: f64, center: Vec2) -> Result<Vec2> {
    check_arc("polyene_curve_framed", s)?;
    check_arc("polyene_curve_framed", s0)?;
    let law = CurvatureLaw::polyene(sigma)?;
    let (c, sn) = cs_functions(&law, s)?;
    let scale = sigma * s / (1.0 + sigma * sigma);
    let inner = Vec2::new(sigma * c + sn, -c + sigma * sn) * scale;
    Ok(rotate_by(cs_functions(&law, s0)?, inner) + center)
}

/// Unit tangent of [`polyene_curve_framed`].
pub fn polyene_framed_tangent(sigma: f64, s: f64, s0: f64) -> Result<Vec2> {
    check_arc("polyene_framed_tangent", s)?;
    check_arc("polyene_framed_tangent", s0)?;
    let law = CurvatureLaw::polyene(sigma)?;
    Ok(rotate_by(cs_functions(&law, s0)?, tangent_angle_vec(&law, s)))
}

/// Position and moving frame at arc length `s`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FrenetState {
    pub s: f64,
    pub position: Vec2,
    pub tangent: Vec2,
    pub normal: Vec2,
}

impl FrenetState {
    /// Frame at `position` with t = (1, 0), n = (0, 1).
    pub fn standard(s: f64, position: Vec2) -> Self {
        Self {
            s,
            position,
            tangent: Vec2::new(1.0, 0.0),
            normal: Vec2::new(0.0, 1.0),
        }
    }

    pub fn is_orthonormal(&self, tol: f64) -> bool {
        (self.tangent.norm() - 1.0).abs() <= tol
            && (self.normal.norm() - 1.0).abs() <= tol
            && self.tangent.dot(self.normal).abs() <= tol
    }
}

/// Arc-length indexed samples of a plane curve.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PlaneCurveSamples {
    pub s_values: Vec<f64>,
    pub points: Vec<Vec2>,
    pub tangents: Vec<Vec2>,
    /// s₀ of the parametrisation.
    pub start_s: f64,
    /// Spiral centre α₀, when known.
    pub center: Option<Vec2>,
}

impl PlaneCurveSamples {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Total length of the sample polyline.
    pub fn polyline_length(&self) -> f64 {
        self.points.windows(2).map(|w| (w[1] - w[0]).norm()).sum()
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// `n` log-spaced values from `a` to `b` (both > 0).
pub fn logspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    linspace(a.ln(), b.ln(), n).into_iter().map(f64::exp).collect()
}

fn check_s_values(s_values: &[f64]) -> Result<()> {
    if let Some(bad) = s_values.iter().find(|s| !(**s > 0.0) || !s.is_finite()) {
        return Err(domain("sample", format!("arc lengths must be positive, got {bad}")));
    }
    if s_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(domain("sample", "arc lengths must be strictly increasing"));
    }
    Ok(())
}

pub fn sample_hydrogen(sigma: f64, s0: f64, center: Vec2, s_values: &[f64]) -> Result<PlaneCurveSamples> {
    check_s_values(s_values)?;
    let points = s_values.iter().map(|&s| hydrogen_curve(sigma, s, s0, center)).collect::<Result<_>>()?;
    let tangents = s_values.iter().map(|&s| hydrogen_tangent(sigma, s, s0)).collect::<Result<_>>()?;
    Ok(PlaneCurveSamples {
        s_values: s_values.to_vec(),
        points,
        tangents,
        start_s: s0,
        center: Some(center),
    })
}

/// Samples of [`polyene_curve`] (s₀ = 1, centre at the origin).
pub fn sample_polyene(sigma: f64, s_values: &[f64]) -> Result<PlaneCurveSamples> {
    check_s_values(s_values)?;
    let points = s_values.iter().map(|&s| polyene_curve(sigma, s)).collect::<Result<_>>()?;
    let tangents = s_values.iter().map(|&s| polyene_tangent(sigma, s)).collect::<Result<_>>()?;
    Ok(PlaneCurveSamples {
        s_values: s_values.to_vec(),
        points,
        tangents,
        start_s: 1.0,
        center: Some(Vec2::ZERO),
    })
}

/// `samples` points on s ∈ [s_min, s_max] of the curve with k = 1/(σ s^p).
///
/// p = 1 uses [`polyene_curve`] and p = 1/2 uses [`hydrogen_curve`] with
/// s₀ = s_min, both centred at the origin. Any other p is integrated with
/// [`frenet_integrate`] from the origin with t = (1, 0); there s_min = 0 is
/// accepted when p <= 0.
pub fn sample_power_law(sigma: f64, p: f64, s_min: f64, s_max: f64, samples: usize) -> Result<PlaneCurveSamples> {
    let law = CurvatureLaw::new(sigma, p)?;
    // k is bounded at s = 0 only for p <= 0
    let lower_ok = s_min > 0.0 || (s_min == 0.0 && p <= 0.0);
    if !(lower_ok && s_min < s_max && s_max.is_finite()) {
        return Err(domain("sample_power_law", format!("need 0 < s_min < s_max, got [{s_min}, {s_max}]")));
    }
    if samples < 2 {
        return Err(domain("sample_power_law", format!("need at least 2 samples, got {samples}")));
    }
    let s_values = linspace(s_min, s_max, samples);
    if p == 1.0 {
        sample_polyene(sigma, &s_values)
    } else if p == 0.5 {
        sample_hydrogen(sigma, s_min, Vec2::ZERO, &s_values)
    } else {
        frenet_integrate(|s| law.curvature(s), s_min, s_max, samples - 1, FrenetState::standard(s_min, Vec2::ZERO))
    }
}

/// Largest turning angle k·Δs allowed in one Runge-Kutta sub-step.
pub const MAX_TURN_PER_STEP: f64 = 0.02;

#[derive(Clone, Copy)]
struct FrameDeriv {
    dp: Vec2,
    dt: Vec2,
    dn: Vec2,
}

/// Integrates t′ = k n, n′ = −k t, α′ = t from `s0` to `s1` with classical
/// RK4, returning `steps + 1` equally spaced samples. Each output interval is
/// split so that every sub-step turns by at most [`MAX_TURN_PER_STEP`]; the
/// frame is re-orthonormalised after each sub-step.
pub fn frenet_integrate<K>(k: K, s0: f64, s1: f64, steps: usize, initial: FrenetState) -> Result<PlaneCurveSamples>
where
    K: Fn(f64) -> f64,
{
    if !(s0 < s1) || !s0.is_finite() || !s1.is_finite() {
        return Err(domain("frenet_integrate", format!("need s0 < s1, got [{s0}, {s1}]")));
    }
    if steps == 0 {
        return Err(domain("frenet_integrate", "steps must be positive"));
    }
    if !initial.is_orthonormal(1e-10) {
        return Err(domain("frenet_integrate", "initial frame is not orthonormal"));
    }
    let eval_k = |s: f64| -> Result<f64> {
        let v = k(s);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { s, value: v })
        }
    };
    let deriv = |s: f64, t: Vec2, n: Vec2| -> Result<FrameDeriv> {
        let kv = eval_k(s)?;
        Ok(FrameDeriv {
            dp: t,
            dt: n * kv,
            dn: t * (-kv),
        })
    };

    let ds = (s1 - s0) / steps as f64;
    let mut s_values = Vec::with_capacity(steps + 1);
    let mut points = Vec::with_capacity(steps + 1);
    let mut tangents = Vec::with_capacity(steps + 1);

    let mut p = initial.position;
    let mut t = initial.tangent;
    let mut n = initial.normal;
    s_values.push(s0);
    points.push(p);
    tangents.push(t);

    for i in 0..steps {
        let a = s0 + i as f64 * ds;
        let b = if i + 1 == steps { s1 } else { s0 + (i + 1) as f64 * ds };
        let kmax = eval_k(a)?.abs().max(eval_k(0.5 * (a + b))?.abs()).max(eval_k(b)?.abs());
        let sub = ((kmax * (b - a)) / MAX_TURN_PER_STEP).ceil().max(1.0) as usize;
        let h = (b - a) / sub as f64;
        for j in 0..sub {
            let s = a + j as f64 * h;
            let k1 = deriv(s, t, n)?;
            let k2 = deriv(s + 0.5 * h, t + k1.dt * (0.5 * h), n + k1.dn * (0.5 * h))?;
            let k3 = deriv(s + 0.5 * h, t + k2.dt * (0.5 * h), n + k2.dn * (0.5 * h))?;
            let k4 = deriv(s + h, t + k3.dt * h, n + k3.dn * h)?;
            let w = h / 6.0;
            p = p + (k1.dp + k2.dp * 2.0 + k3.dp * 2.0 + k4.dp) * w;
            t = t + (k1.dt + k2.dt * 2.0 + k3.dt * 2.0 + k4.dt) * w;
            n = n + (k1.dn + k2.dn * 2.0 + k3.dn * 2.0 + k4.dn) * w;
            t = t.normalized();
            n = (n - t * n.dot(t)).normalized();
        }
        s_values.push(b);
        points.push(p);
        tangents.push(t);
    }

    Ok(PlaneCurveSamples {
        s_values,
        points,
        tangents,
        start_s: s0,
        center: None,
    })
}

/// Finite-difference curvature ‖α̇ × α̈‖/‖α̇‖³ at the interior nodes of a
/// uniformly spaced sample set.
pub fn curvature_of_samples(samples: &PlaneCurveSamples) -> Result<Vec<f64>> {
    let pts = &samples.points;
    if pts.len() < 3 || samples.s_values.len() != pts.len() {
        return Err(domain("curvature_of_samples", format!("need at least 3 samples, got {}", pts.len())));
    }
    let s = &samples.s_values;
    let h = (s[s.len() - 1] - s[0]) / (s.len() - 1) as f64;
    if s.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > 1e-6 * h.abs().max(1e-300)) {
        return Err(domain("curvature_of_samples", "samples must be uniformly spaced in arc length"));
    }
    Ok(pts
        .windows(3)
        .map(|w| {
            let d1 = (w[2] - w[0]) * (0.5 / h);
            let d2 = (w[2] - w[1] * 2.0 + w[0]) * (1.0 / (h * h));
            d1.cross(d2).abs() / d1.norm().powi(3)
        })
        .collect())
}

/// Rigid motion taking frame `from` onto frame `to` (position and tangent),
/// applied to `points`.
pub fn align_to_frame(points: &[Vec2], from: (Vec2, Vec2), to: (Vec2, Vec2)) -> Vec<Vec2> {
    let (from_p, from_t) = from;
    let (to_p, to_t) = to;
    let cos = from_t.dot(to_t);
    let sin = from_t.cross(to_t);
    points
        .iter()
        .map(|&q| {
            let d = q - from_p;
            Vec2::new(cos * d.x - sin * d.y, sin * d.x + cos * d.y) + to_p
        })
        .collect()
}
