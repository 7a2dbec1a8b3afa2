//! Finite-difference gradients, used as an independent ground truth for the
//! analytic backpropagation gradients.
//!
//! For every weight `w` the oracle evaluates the network error at `w + eps`
//! and `w - eps` and takes the central difference. It walks the weight
//! matrices structurally and computes the error itself from forward passes,
//! so it shares nothing with the analytic gradient code beyond `forward`.

use crate::backprop::Gradient;
use crate::data::Sample;
use crate::error::{Error, Result};
use crate::network::Network;

/// Absolute deviation below which an analytic/numeric gradient pair is
/// accepted regardless of scale.
pub const ABS_TOLERANCE: f64 = 1e-6;
/// Relative deviation below which a pair is accepted regardless of magnitude.
pub const REL_TOLERANCE: f64 = 1e-4;

/// Perturbation step for central differences. The default of 1e-6 balances
/// truncation against rounding error in 64-bit arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteDiffConfig {
    pub epsilon: f64,
}

impl Default for FiniteDiffConfig {
    fn default() -> Self {
        FiniteDiffConfig { epsilon: 1e-6 }
    }
}

impl FiniteDiffConfig {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(Error::Invalid(format!(
                "epsilon must be > 0, got {epsilon}"
            )));
        }
        Ok(FiniteDiffConfig { epsilon })
    }
}

/// Squared-error sum computed directly from a forward pass; deliberately local
/// to this module.
fn sample_error(net: &Network, sample: &Sample) -> Result<f64> {
    let out = net.output(&sample.input)?;
    if out.len() != sample.target.len() {
        return Err(Error::Dimension(format!(
            "network has {} outputs but target has {} entries",
            out.len(),
            sample.target.len()
        )));
    }
    Ok(out
        .iter()
        .zip(&sample.target)
        .map(|(o, d)| (o - d) * (o - d))
        .sum())
}

/// Central-difference estimate of dE/dw for every weight in `net` on one
/// sample: `[E(w + eps) - E(w - eps)] / (2 eps)`.
pub fn finite_diff_gradient(
    net: &Network,
    sample: &Sample,
    cfg: &FiniteDiffConfig,
) -> Result<Gradient> {
    FiniteDiffConfig::new(cfg.epsilon)?;
    if !net.is_differentiable() {
        return Err(Error::NonDifferentiable);
    }
    // Surfaces dimension errors once, before the perturbation loop.
    sample_error(net, sample)?;

    let eps = cfg.epsilon;
    let mut work = net.clone();
    let mut layers = Vec::with_capacity(net.layers().len());
    for l in 0..net.layers().len() {
        let n_rows = net.layers()[l].n_neurons();
        let mut rows = Vec::with_capacity(n_rows);
        for j in 0..n_rows {
            let row_len = net.layers()[l].weights()[j].len();
            let mut row = Vec::with_capacity(row_len);
            for i in 0..row_len {
                let original = net.layers()[l].weights()[j][i];
                work.layers_mut()[l].weights_mut()[j][i] = original + eps;
                let e_plus = sample_error(&work, sample)?;
                work.layers_mut()[l].weights_mut()[j][i] = original - eps;
                let e_minus = sample_error(&work, sample)?;
                work.layers_mut()[l].weights_mut()[j][i] = original;
                row.push((e_plus - e_minus) / (2.0 * eps));
            }
            rows.push(row);
        }
        layers.push(rows);
    }
    Ok(Gradient::from_layers(layers))
}

/// Worst-case disagreement between two gradients of identical shape.
///
/// `within_tolerance` is an entrywise verdict: every entry must be within
/// `abs_tol` absolutely or within `rel_tol` relative to the larger magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationReport {
    pub max_abs: f64,
    pub max_rel: f64,
    pub within_tolerance: bool,
}

/// Compares two gradients entrywise and reports the largest absolute and
/// relative deviations.
pub fn compare_gradients(
    a: &Gradient,
    b: &Gradient,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<DeviationReport> {
    let (la, lb) = (a.layers(), b.layers());
    if la.len() != lb.len()
        || la
            .iter()
            .zip(lb)
            .any(|(x, y)| x.len() != y.len() || x.iter().zip(y).any(|(r, s)| r.len() != s.len()))
    {
        return Err(Error::Dimension("gradient shapes differ".into()));
    }
    let mut report = DeviationReport {
        max_abs: 0.0,
        max_rel: 0.0,
        within_tolerance: true,
    };
    for (x, y) in la.iter().zip(lb) {
        for (r, s) in x.iter().zip(y) {
            for (&u, &v) in r.iter().zip(s) {
                let abs = (u - v).abs();
                let scale = u.abs().max(v.abs());
                let rel = if scale > 0.0 { abs / scale } else { 0.0 };
                report.max_abs = report.max_abs.max(abs);
                report.max_rel = report.max_rel.max(rel);
                if abs > abs_tol && rel > rel_tol {
                    report.within_tolerance = false;
                }
            }
        }
    }
    Ok(report)
}
