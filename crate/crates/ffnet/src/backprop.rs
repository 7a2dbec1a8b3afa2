//! Squared-error functions, analytic gradients, and the gradient-descent
//! update.
//!
//! The error of one output neuron is `(O - d)^2` and the network error is the
//! sum over output neurons, with no 1/2 normalization, so every gradient
//! carries an explicit factor of 2. Gradients flow backwards layer by layer:
//! each neuron gets an error signal dE/dA, the signal reaching a hidden neuron
//! is the weight-weighted sum of the signals of all neurons it feeds, and a
//! weight's gradient entry is its neuron's signal times the input that weight
//! multiplies.

use crate::activation::ActivationKind;
use crate::error::{Error, Result};
use crate::network::{ForwardTrace, Network};

/// Per-layer matrices of dE/dw entries, congruent in shape to the weight
/// matrices of the network they were computed for.
#[derive(Debug, Clone, PartialEq)]
pub struct Gradient {
    layers: Vec<Vec<Vec<f64>>>,
}

impl Gradient {
    /// An all-zero gradient shaped like `net`'s weights.
    pub fn zeros_like(net: &Network) -> Gradient {
        Gradient {
            layers: net
                .layers()
                .iter()
                .map(|l| l.weights().iter().map(|row| vec![0.0; row.len()]).collect())
                .collect(),
        }
    }

    pub fn layers(&self) -> &[Vec<Vec<f64>>] {
        &self.layers
    }

    pub(crate) fn from_layers(layers: Vec<Vec<Vec<f64>>>) -> Gradient {
        Gradient { layers }
    }

    /// True when this gradient's shape matches `net`'s weight matrices.
    pub fn is_congruent_with(&self, net: &Network) -> bool {
        self.layers.len() == net.layers().len()
            && self.layers.iter().zip(net.layers()).all(|(g, l)| {
                g.len() == l.n_neurons()
                    && g.iter()
                        .zip(l.weights())
                        .all(|(gr, wr)| gr.len() == wr.len())
            })
    }

    /// Entrywise accumulation, used for full-batch updates.
    pub fn add_assign(&mut self, other: &Gradient) -> Result<()> {
        if self.layers.len() != other.layers.len() {
            return Err(Error::Dimension("gradient layer counts differ".into()));
        }
        for (a, b) in self.layers.iter_mut().zip(&other.layers) {
            if a.len() != b.len() {
                return Err(Error::Dimension("gradient row counts differ".into()));
            }
            for (ar, br) in a.iter_mut().zip(b) {
                if ar.len() != br.len() {
                    return Err(Error::Dimension("gradient row lengths differ".into()));
                }
                for (av, bv) in ar.iter_mut().zip(br) {
                    *av += bv;
                }
            }
        }
        Ok(())
    }
}

/// Squared error of a single neuron: `(o - d)^2`.
pub fn neuron_error(o: f64, d: f64) -> f64 {
    let diff = o - d;
    diff * diff
}

/// Network error: sum of the squared errors of all output neurons.
pub fn network_error(outputs: &[f64], targets: &[f64]) -> Result<f64> {
    if outputs.len() != targets.len() {
        return Err(Error::Dimension(format!(
            "network_error got {} outputs but {} targets",
            outputs.len(),
            targets.len()
        )));
    }
    Ok(outputs
        .iter()
        .zip(targets)
        .map(|(&o, &d)| neuron_error(o, d))
        .sum())
}

/// Error signal dE/dA of an output neuron, written through the output value:
/// `2(o - d)` times dO/dA (`o(1 - o)` for sigmoid, 1 for identity).
pub fn output_delta(o: f64, d: f64, kind: ActivationKind) -> Result<f64> {
    let deriv = kind
        .derivative_from_output(o)
        .ok_or(Error::NonDifferentiable)?;
    Ok(2.0 * (o - d) * deriv)
}

/// Computes dE/dw for every weight in `net` from a forward trace and the
/// desired outputs.
pub fn backprop_gradient(net: &Network, trace: &ForwardTrace, target: &[f64]) -> Result<Gradient> {
    if !net.is_differentiable() {
        return Err(Error::NonDifferentiable);
    }
    let layers = net.layers();
    if trace.outputs().len() != layers.len()
        || trace.input().len() != net.input_dim()
        || trace
            .outputs()
            .iter()
            .zip(layers)
            .any(|(o, l)| o.len() != l.n_neurons())
    {
        return Err(Error::Dimension(
            "forward trace does not match the network's shape".into(),
        ));
    }
    if target.len() != net.output_dim() {
        return Err(Error::Dimension(format!(
            "network has {} outputs but target has {} entries",
            net.output_dim(),
            target.len()
        )));
    }

    // Error signals dE/dA, from the output layer backwards.
    let last = layers.len() - 1;
    let mut deltas: Vec<Vec<f64>> = vec![Vec::new(); layers.len()];
    deltas[last] = trace.outputs()[last]
        .iter()
        .zip(target)
        .map(|(&o, &d)| output_delta(o, d, layers[last].activation()))
        .collect::<Result<_>>()?;
    for l in (0..last).rev() {
        let downstream = &layers[l + 1];
        let next_deltas = &deltas[l + 1];
        deltas[l] = trace.outputs()[l]
            .iter()
            .enumerate()
            .map(|(i, &o)| {
                // Sum the error signals of every downstream neuron this one
                // feeds, weighted by the connecting weight.
                let signal: f64 = downstream
                    .weights()
                    .iter()
                    .zip(next_deltas)
                    .map(|(row, delta)| delta * row[i])
                    .sum();
                let deriv = layers[l]
                    .activation()
                    .derivative_from_output(o)
                    .expect("differentiability checked above");
                signal * deriv
            })
            .collect();
    }

    // dE/dw_ji = delta_j * x_i, with x the layer input (1.0 for the bias slot).
    let mut grad = Vec::with_capacity(layers.len());
    for (l, layer) in layers.iter().enumerate() {
        let mut input = trace.layer_input(l).to_vec();
        if layer.has_bias() {
            input.push(1.0);
        }
        grad.push(
            deltas[l]
                .iter()
                .map(|delta| input.iter().map(|x| delta * x).collect())
                .collect(),
        );
    }
    Ok(Gradient::from_layers(grad))
}

/// Gradient-descent step: returns a network whose every weight moved by
/// `-eta * dE/dw`. The input network is left untouched.
pub fn apply_update(net: &Network, grad: &Gradient, eta: f64) -> Result<Network> {
    if !grad.is_congruent_with(net) {
        return Err(Error::Dimension(
            "gradient shape does not match the network".into(),
        ));
    }
    let mut updated = net.clone();
    for (layer, g) in updated.layers_mut().iter_mut().zip(grad.layers()) {
        for (row, grow) in layer.weights_mut().iter_mut().zip(g) {
            for (w, dw) in row.iter_mut().zip(grow) {
                *w -= eta * dw;
            }
        }
    }
    Ok(updated)
}
