//! Layered feed-forward networks and their forward evaluation.
//!
//! A [`Network`] is an ordered stack of [`Layer`]s. Each layer holds one weight
//! row per neuron; a neuron's activation is the weighted sum of the layer's
//! inputs (plus a constant 1.0 input when the layer has a bias unit), and its
//! output is the layer's output function applied to that activation.
//! [`Network::forward`] keeps every intermediate activation and output in a
//! [`ForwardTrace`] so gradients can be computed afterwards.

use crate::activation::ActivationKind;
use crate::error::{Error, Result};

/// Dot product of an input vector with a weight vector.
pub fn weighted_sum(inputs: &[f64], weights: &[f64]) -> Result<f64> {
    if inputs.len() != weights.len() {
        return Err(Error::Dimension(format!(
            "weighted_sum got {} inputs but {} weights",
            inputs.len(),
            weights.len()
        )));
    }
    Ok(inputs.iter().zip(weights).map(|(x, w)| x * w).sum())
}

/// One fully connected layer: a weight matrix, an output function, and an
/// optional bias unit.
///
/// Weight rows are per neuron. When `has_bias` is true every row carries one
/// extra trailing weight that multiplies a constant input of 1.0.
#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    weights: Vec<Vec<f64>>,
    activation: ActivationKind,
    has_bias: bool,
}

impl Layer {
    /// Builds a layer after validating its invariants: at least one neuron,
    /// at least one (non-bias) input, rectangular rows, finite entries.
    pub fn new(weights: Vec<Vec<f64>>, activation: ActivationKind, has_bias: bool) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Invalid("layer has no neurons".into()));
        }
        let row_len = weights[0].len();
        let min_len = if has_bias { 2 } else { 1 };
        if row_len < min_len {
            return Err(Error::Invalid(format!(
                "layer rows have {row_len} weights; a layer needs at least one non-bias input"
            )));
        }
        for (j, row) in weights.iter().enumerate() {
            if row.len() != row_len {
                return Err(Error::Invalid(format!(
                    "ragged weight matrix: row {j} has {} entries, row 0 has {row_len}",
                    row.len()
                )));
            }
            if let Some(w) = row.iter().find(|w| !w.is_finite()) {
                return Err(Error::Invalid(format!("non-finite weight {w} in row {j}")));
            }
        }
        if !activation.is_valid() {
            return Err(Error::Invalid("threshold theta must be finite".into()));
        }
        Ok(Layer {
            weights,
            activation,
            has_bias,
        })
    }

    pub fn n_neurons(&self) -> usize {
        self.weights.len()
    }

    /// Number of incoming signals, excluding the bias column.
    pub fn in_dim(&self) -> usize {
        self.weights[0].len() - usize::from(self.has_bias)
    }

    pub fn activation(&self) -> ActivationKind {
        self.activation
    }

    pub fn has_bias(&self) -> bool {
        self.has_bias
    }

    /// One weight row per neuron, bias column (if any) last.
    pub fn weights(&self) -> &[Vec<f64>] {
        &self.weights
    }

    pub(crate) fn weights_mut(&mut self) -> &mut Vec<Vec<f64>> {
        &mut self.weights
    }
}

/// An ordered, dimension-checked stack of layers.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    input_dim: usize,
    layers: Vec<Layer>,
}

impl Network {
    /// Builds a network, checking that consecutive layers chain: each layer's
    /// input width must equal the previous layer's neuron count (the network
    /// input width for the first layer).
    pub fn new(input_dim: usize, layers: Vec<Layer>) -> Result<Self> {
        if input_dim == 0 {
            return Err(Error::Invalid(
                "network input dimension must be >= 1".into(),
            ));
        }
        if layers.is_empty() {
            return Err(Error::Invalid("network has no layers".into()));
        }
        let mut expected = input_dim;
        for (k, layer) in layers.iter().enumerate() {
            if layer.in_dim() != expected {
                return Err(Error::Dimension(format!(
                    "layer {k} expects {} inputs but receives {expected}",
                    layer.in_dim()
                )));
            }
            expected = layer.n_neurons();
        }
        Ok(Network { input_dim, layers })
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    /// Width of the final layer.
    pub fn output_dim(&self) -> usize {
        self.layers.last().expect("network has layers").n_neurons()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub(crate) fn layers_mut(&mut self) -> &mut [Layer] {
        &mut self.layers
    }

    /// True iff no layer uses a threshold output function.
    pub fn is_differentiable(&self) -> bool {
        self.layers
            .iter()
            .all(|l| l.activation().is_differentiable())
    }

    /// Evaluates the network on `input`, recording every layer's activations
    /// and outputs.
    pub fn forward(&self, input: &[f64]) -> Result<ForwardTrace> {
        if input.len() != self.input_dim {
            return Err(Error::Dimension(format!(
                "network expects {} inputs, got {}",
                self.input_dim,
                input.len()
            )));
        }
        let mut activations = Vec::with_capacity(self.layers.len());
        let mut outputs: Vec<Vec<f64>> = Vec::with_capacity(self.layers.len());
        let mut current = input.to_vec();
        for layer in &self.layers {
            if layer.has_bias() {
                current.push(1.0);
            }
            let mut acts = Vec::with_capacity(layer.n_neurons());
            let mut outs = Vec::with_capacity(layer.n_neurons());
            for row in layer.weights() {
                let a = weighted_sum(&current, row)?;
                acts.push(a);
                outs.push(layer.activation().apply(a));
            }
            current = outs.clone();
            activations.push(acts);
            outputs.push(outs);
        }
        Ok(ForwardTrace {
            input: input.to_vec(),
            activations,
            outputs,
        })
    }

    /// Convenience wrapper returning only the final layer's outputs.
    pub fn output(&self, input: &[f64]) -> Result<Vec<f64>> {
        Ok(self.forward(input)?.into_output())
    }
}

/// Everything a forward pass produced: the input it was run on and, per layer,
/// the activation (pre output function) and output vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardTrace {
    input: Vec<f64>,
    activations: Vec<Vec<f64>>,
    outputs: Vec<Vec<f64>>,
}

impl ForwardTrace {
    pub fn input(&self) -> &[f64] {
        &self.input
    }

    /// Per-layer activation vectors (weighted sums).
    pub fn activations(&self) -> &[Vec<f64>] {
        &self.activations
    }

    /// Per-layer output vectors.
    pub fn outputs(&self) -> &[Vec<f64>] {
        &self.outputs
    }

    /// The final layer's outputs: the network output.
    pub fn output(&self) -> &[f64] {
        self.outputs.last().expect("trace has layers")
    }

    pub fn into_output(mut self) -> Vec<f64> {
        self.outputs.pop().expect("trace has layers")
    }

    /// The vector feeding layer `l`: the network input for `l == 0`, otherwise
    /// the previous layer's outputs. Bias inputs are not included.
    pub(crate) fn layer_input(&self, l: usize) -> &[f64] {
        if l == 0 {
            &self.input
        } else {
            &self.outputs[l - 1]
        }
    }
}
