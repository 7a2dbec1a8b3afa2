//! Ready-made networks and tasks: the four-neuron summing network family
//! (hand-set weights, optional per-neuron thresholds, AND/OR gates) and the
//! 3-2-3 single-sample training task.

use crate::activation::ActivationKind;
use crate::data::Sample;
use crate::error::Result;
use crate::network::{Layer, Network};
use crate::shape::{LayerShape, NetShape};
use crate::train::{train, TrainConfig, TrainReport};

/// Weights for the four-neuron summing network: two input neurons and two
/// output neurons, with a scalar weight on every arrow.
///
/// Signal flow for input `(x1, x2)`:
/// each input neuron `i` receives `input_weights[i] * x_i`; each output
/// neuron `j` sums the input neurons' outputs scaled by `cross_weights[j]`
/// and its result leaves through `output_weights[j]`. With `thresholds`
/// set, every neuron applies a hard step (strictly greater than its theta)
/// to its sum before passing the signal on; order is input neuron 1, input
/// neuron 2, output neuron 1, output neuron 2.
#[derive(Debug, Clone, PartialEq)]
pub struct SummingWeights {
    pub input_weights: [f64; 2],
    /// `cross_weights[j][i]` connects input neuron `i` to output neuron `j`.
    pub cross_weights: [[f64; 2]; 2],
    pub output_weights: [f64; 2],
    pub thresholds: Option<[f64; 4]>,
}

impl SummingWeights {
    /// Every weight set to one: each output is just the sum of both inputs.
    pub fn all_ones() -> Self {
        SummingWeights {
            input_weights: [1.0, 1.0],
            cross_weights: [[1.0, 1.0], [1.0, 1.0]],
            output_weights: [1.0, 1.0],
            thresholds: None,
        }
    }

    /// Routes each input to the opposite output: `(x1, x2) -> (x2, x1)`.
    pub fn swap() -> Self {
        SummingWeights {
            input_weights: [1.0, 1.0],
            cross_weights: [[0.0, 1.0], [1.0, 0.0]],
            output_weights: [1.0, 1.0],
            thresholds: None,
        }
    }

    /// Passes each input straight through and doubles it on the way out.
    pub fn doubling() -> Self {
        SummingWeights {
            input_weights: [1.0, 1.0],
            cross_weights: [[1.0, 0.0], [0.0, 1.0]],
            output_weights: [2.0, 2.0],
            thresholds: None,
        }
    }

    /// For inputs restricted to {0, 1}: the first output computes AND, the
    /// second OR. Input-neuron thresholds of 0.5 pass 0/1 signals through
    /// unchanged; the output thresholds carry the logic (1.5 fires only on
    /// both inputs, 0.5 on at least one).
    pub fn and_or() -> Self {
        SummingWeights {
            input_weights: [1.0, 1.0],
            cross_weights: [[1.0, 1.0], [1.0, 1.0]],
            output_weights: [1.0, 1.0],
            thresholds: Some([0.5, 0.5, 1.5, 0.5]),
        }
    }

    /// A second, distinct AND/OR solution; more than one set of thresholds
    /// realizes the gates.
    pub fn and_or_alt() -> Self {
        SummingWeights {
            input_weights: [1.0, 1.0],
            cross_weights: [[1.0, 1.0], [1.0, 1.0]],
            output_weights: [1.0, 1.0],
            thresholds: Some([0.5, 0.5, 1.9, 0.1]),
        }
    }
}

/// Builds the four-neuron summing network for the given weights.
///
/// Without thresholds this is a stack of identity layers: a diagonal layer
/// for the input weights, the 2x2 cross layer, and a diagonal layer for the
/// output weights. With thresholds, each neuron's step function is realized
/// by a `Threshold(0)` layer whose bias column carries `-theta`, so neuron
/// `j` fires exactly when its weighted sum exceeds its own theta.
pub fn summing_network(weights: &SummingWeights) -> Network {
    let [a1, a2] = weights.input_weights;
    let [b1, b2] = weights.output_weights;
    let cross = &weights.cross_weights;
    let identity = ActivationKind::Identity;

    let mut layers = vec![
        Layer::new(vec![vec![a1, 0.0], vec![0.0, a2]], identity, false)
            .expect("diagonal input layer is valid"),
    ];
    match weights.thresholds {
        None => {
            layers.push(
                Layer::new(
                    vec![
                        vec![cross[0][0], cross[0][1]],
                        vec![cross[1][0], cross[1][1]],
                    ],
                    identity,
                    false,
                )
                .expect("cross layer is valid"),
            );
        }
        Some([t1, t2, t3, t4]) => {
            let step = ActivationKind::Threshold(0.0);
            layers.push(
                Layer::new(vec![vec![1.0, 0.0, -t1], vec![0.0, 1.0, -t2]], step, true)
                    .expect("input threshold layer is valid"),
            );
            layers.push(
                Layer::new(
                    vec![
                        vec![cross[0][0], cross[0][1], -t3],
                        vec![cross[1][0], cross[1][1], -t4],
                    ],
                    step,
                    true,
                )
                .expect("output threshold layer is valid"),
            );
        }
    }
    layers.push(
        Layer::new(vec![vec![b1, 0.0], vec![0.0, b2]], identity, false)
            .expect("diagonal output layer is valid"),
    );
    Network::new(2, layers).expect("summing network layers chain")
}

/// The fixed 3-2-3 training task: a sigmoid hidden layer and an identity
/// output layer (both with bias), trained on the single sample
/// `(1, 0.25, -0.5) -> (1, -1, 0)`.
///
/// The output layer is linear because a sigmoid cannot reach the target
/// value -1.
pub fn three_two_three_shape() -> NetShape {
    NetShape::new(
        3,
        vec![
            LayerShape {
                neurons: 2,
                activation: ActivationKind::Sigmoid,
                has_bias: true,
            },
            LayerShape {
                neurons: 3,
                activation: ActivationKind::Identity,
                has_bias: true,
            },
        ],
    )
    .expect("3-2-3 shape is valid")
}

/// The single training sample of the 3-2-3 task.
pub fn three_two_three_sample() -> Sample {
    Sample::new(vec![1.0, 0.25, -0.5], vec![1.0, -1.0, 0.0])
}

/// Trains the 3-2-3 task with the given config and returns the trained
/// network and its report.
pub fn train_three_two_three(config: &TrainConfig) -> Result<(Network, TrainReport)> {
    train(
        &three_two_three_shape(),
        &[three_two_three_sample()],
        config,
    )
}
