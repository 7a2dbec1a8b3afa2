use serde::{Deserialize, Serialize};

/// Output function of a neuron: the map from activation (weighted sum) to output.
///
/// `Identity` gives a linear neuron, `Sigmoid` the classic smooth squashing
/// function, and `Threshold(theta)` a hard step that fires iff the activation
/// strictly exceeds `theta`. Threshold neurons are evaluable but not
/// differentiable, so networks containing them cannot be trained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActivationKind {
    Identity,
    Sigmoid,
    Threshold(f64),
}

impl ActivationKind {
    /// Applies the output function to an activation value.
    ///
    /// - `Identity`: `a`
    /// - `Sigmoid`: `1 / (1 + e^-a)`
    /// - `Threshold(theta)`: `1.0` iff `a > theta` (strict), else `0.0`
    pub fn apply(self, a: f64) -> f64 {
        match self {
            ActivationKind::Identity => a,
            ActivationKind::Sigmoid => 1.0 / (1.0 + (-a).exp()),
            ActivationKind::Threshold(theta) => {
                if a > theta {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// True for the differentiable kinds (`Identity`, `Sigmoid`).
    pub fn is_differentiable(self) -> bool {
        !matches!(self, ActivationKind::Threshold(_))
    }

    /// dO/dA expressed through the output value `o`.
    ///
    /// For the sigmoid this is `o * (1 - o)`; for the identity it is 1.
    /// Returns `None` for threshold neurons.
    pub(crate) fn derivative_from_output(self, o: f64) -> Option<f64> {
        match self {
            ActivationKind::Identity => Some(1.0),
            ActivationKind::Sigmoid => Some(o * (1.0 - o)),
            ActivationKind::Threshold(_) => None,
        }
    }

    /// A threshold must carry a finite theta; the other kinds are always valid.
    pub(crate) fn is_valid(self) -> bool {
        match self {
            ActivationKind::Threshold(theta) => theta.is_finite(),
            _ => true,
        }
    }
}
