//! Finite-difference oracle for −ψ″ + W(s)ψ = εψ on [0, L] with Dirichlet
//! ends.
//!
//! The three-point Laplacian on interior nodes s_i = i·h, h = L/(n+1),
//! gives a symmetric tridiagonal matrix; its lowest eigenvalues come from
//! Sturm-sequence counting and bisection. Potentials singular at s = 0 are
//! never evaluated there because the Dirichlet node is eliminated.

use crate::error::{domain, Error, Result};

pub const MIN_INTERIOR: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<f64>,
    pub grid_step: f64,
    pub length: f64,
    /// W(s_i) when the operator came from [`discretize`]; enables the
    /// cancellation-free Sturm recurrence.
    potential: Option<Vec<f64>>,
}

impl TridiagonalOperator {
    /// Builds the operator directly from its bands.
    pub fn from_bands(diagonal: Vec<f64>, off_diagonal: Vec<f64>, grid_step: f64, length: f64) -> Result<Self> {
        if diagonal.is_empty() || off_diagonal.len() + 1 != diagonal.len() {
            return Err(domain("TridiagonalOperator", format!("band lengths {} and {} do not match", diagonal.len(), off_diagonal.len())));
        }
        Ok(Self {
            diagonal,
            off_diagonal,
            grid_step,
            length,
            potential: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    /// Interior node positions s_i = i·h.
    pub fn nodes(&self) -> Vec<f64> {
        (1..=self.dim()).map(|i| i as f64 * self.grid_step).collect()
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off_diagonal[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off_diagonal[i].abs() } else { 0.0 };
            lo = lo.min(self.diagonal[i] - left - right);
            hi = hi.max(self.diagonal[i] + left + right);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `shift`.
    pub fn sturm_count(&self, shift: f64) -> usize {
        match &self.potential {
            Some(w) => self.scaled_sturm_count(w, shift),
            None => self.plain_sturm_count(shift),
        }
    }

    /// Sturm count for diag = 2/h² + W, off-diag = −1/h², with pivots
    /// written as q_i = (1 + t_i)/h²:
    ///   t_i = t_{i−1}/(1 + t_{i−1}) + h²(W_i − λ),  t_1 = 1 + h²(W_1 − λ).
    /// This avoids forming 2/h² − λ, so small eigenvalues keep their
    /// relative accuracy on fine grids.
    fn scaled_sturm_count(&self, w: &[f64], shift: f64) -> usize {
        let h2 = self.grid_step * self.grid_step;
        let mut count = 0;
        let mut t = 1.0 + h2 * (w[0] - shift);
        for (i, wi) in w.iter().enumerate() {
            if i > 0 {
                t = t / (1.0 + t) + h2 * (wi - shift);
            }
            if 1.0 + t == 0.0 {
                t = -1.0 - f64::EPSILON;
            }
            if 1.0 + t < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Textbook Sturm count for arbitrary bands.
    pub fn plain_sturm_count(&self, shift: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE * self.off_diagonal.iter().fold(1.0f64, |m, e| m.max(e * e));
        let mut count = 0;
        let mut q = self.diagonal[0] - shift;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            let e = self.off_diagonal[i - 1];
            q = (self.diagonal[i] - shift) - e * e / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Leading k×k principal submatrix.
    pub fn leading(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.dim() {
            return Err(domain("TridiagonalOperator::leading", format!("size {k} outside 1..={}", self.dim())));
        }
        Ok(Self {
            diagonal: self.diagonal[..k].to_vec(),
            off_diagonal: self.off_diagonal[..k - 1].to_vec(),
            grid_step: self.grid_step,
            length: self.grid_step * (k + 1) as f64,
            potential: self.potential.as_ref().map(|w| w[..k].to_vec()),
        })
    }
}

/// Three-point discretisation with `n_interior` unknowns:
/// diagonal 2/h² + W(s_i), off-diagonal −1/h².
pub fn discretize<W>(potential: W, length: f64, n_interior: usize) -> Result<TridiagonalOperator>
where
    W: Fn(f64) -> f64,
{
    if !(length > 0.0) || !length.is_finite() {
        return Err(domain("discretize", format!("length must be positive, got {length}")));
    }
    if n_interior < MIN_INTERIOR {
        return Err(domain("discretize", format!("need at least {MIN_INTERIOR} interior nodes, got {n_interior}")));
    }
    let h = length / (n_interior + 1) as f64;
    let inv_h2 = 1.0 / (h * h);
    let mut diagonal = Vec::with_capacity(n_interior);
    let mut values = Vec::with_capacity(n_interior);
    for i in 1..=n_interior {
        let s = i as f64 * h;
        let w = potential(s);
        if !w.is_finite() {
            return Err(Error::NonFinite { s, value: w });
        }
        diagonal.push(2.0 * inv_h2 + w);
        values.push(w);
    }
    Ok(TridiagonalOperator {
        diagonal,
        off_diagonal: vec![-inv_h2; n_interior - 1],
        grid_step: h,
        length,
        potential: Some(values),
    })
}

/// The `count` smallest eigenvalues in increasing order.
///
/// Each eigenvalue is bracketed independently inside the Gershgorin
/// interval and bisected until the bracket is a few ulps wide relative to
/// the eigenvalue itself, so the result does not depend on evaluation
/// order.
pub fn eigenvalues_lowest(op: &TridiagonalOperator, count: usize) -> Result<Vec<f64>> {
    if count > op.dim() {
        return Err(domain("eigenvalues_lowest", format!("requested {count} eigenvalues of a {}-dimensional operator", op.dim())));
    }
    let (lo0, hi0) = op.gershgorin_bounds();
    // floor for eigenvalues near zero
    let abs_floor = f64::EPSILON * f64::EPSILON * lo0.abs().max(hi0.abs());
    Ok((0..count).map(|k| bisect_eigenvalue(op, k, lo0, hi0, abs_floor)).collect())
}

const MAX_BISECTIONS: usize = 2100;

fn bisect_eigenvalue(op: &TridiagonalOperator, index: usize, mut lo: f64, mut hi: f64, abs_floor: f64) -> f64 {
    // invariant: count(lo) <= index < count(hi)
    let pad = f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
    hi += pad;
    lo -= pad;
    for _ in 0..MAX_BISECTIONS {
        let tol = (4.0 * f64::EPSILON * lo.abs().max(hi.abs())).max(abs_floor);
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if op.sturm_count(mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Eigenvalues on the coarse and doubled grids together with their
/// Richardson extrapolation.
#[derive(Debug, Clone, PartialEq)]
pub struct RichardsonGrids {
    pub coarse_step: f64,
    pub fine_step: f64,
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
    pub extrapolated: Vec<f64>,
}

/// Solves on `n_coarse` and `2·n_coarse` interior nodes and cancels the
/// O(h²) term: ε ≈ (h_c² ε_f − h_f² ε_c)/(h_c² − h_f²).
pub fn richardson_grids<W>(potential: W, length: f64, count: usize, n_coarse: usize) -> Result<RichardsonGrids>
where
    W: Fn(f64) -> f64,
{
    let coarse_op = discretize(&potential, length, n_coarse)?;
    let fine_op = discretize(&potential, length, 2 * n_coarse)?;
    let coarse = eigenvalues_lowest(&coarse_op, count)?;
    let fine = eigenvalues_lowest(&fine_op, count)?;
    let hc2 = coarse_op.grid_step.powi(2);
    let hf2 = fine_op.grid_step.powi(2);
    let extrapolated = coarse.iter().zip(&fine).map(|(c, f)| (hc2 * f - hf2 * c) / (hc2 - hf2)).collect();
    Ok(RichardsonGrids {
        coarse_step: coarse_op.grid_step,
        fine_step: fine_op.grid_step,
        coarse,
        fine,
        extrapolated,
    })
}

pub fn richardson_refine<W>(potential: W, length: f64, count: usize, n_coarse: usize) -> Result<Vec<f64>>
where
    W: Fn(f64) -> f64,
{
    Ok(richardson_grids(potential, length, count, n_coarse)?.extrapolated)
}

/// W(s) = c/s².
pub fn inverse_square(coefficient: f64) -> impl Fn(f64) -> f64 + Copy {
    move |s| coefficient / (s * s)
}
