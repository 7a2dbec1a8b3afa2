//! Seeded weight initialization and the gradient-descent training loop.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::backprop::{apply_update, backprop_gradient, network_error, Gradient};
use crate::data::Sample;
use crate::error::{Error, Result};
use crate::network::{Layer, Network};
use crate::shape::NetShape;

/// When weights are updated: after every sample, or once per epoch with the
/// summed gradient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpdateScheme {
    PerSample,
    FullBatch,
}

/// Training hyperparameters. `Default` gives `eta = 0.5`, weights drawn from
/// `[-0.5, 0.5]`, at most 10_000 epochs, and a target error of 1e-4.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainConfig {
    /// Learning rate.
    pub eta: f64,
    pub max_epochs: usize,
    /// Training stops once the total dataset error drops to this value.
    pub target_error: f64,
    pub seed: u64,
    pub init_low: f64,
    pub init_high: f64,
    pub scheme: UpdateScheme,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            eta: 0.5,
            max_epochs: 10_000,
            target_error: 1e-4,
            seed: 0,
            init_low: -0.5,
            init_high: 0.5,
            scheme: UpdateScheme::PerSample,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        // eta = 0 is degenerate but well-defined (the loop runs, nothing moves),
        // so only negative or non-finite rates are rejected.
        if !self.eta.is_finite() || self.eta < 0.0 {
            return Err(Error::Invalid(format!(
                "eta must be >= 0, got {}",
                self.eta
            )));
        }
        if self.max_epochs == 0 {
            return Err(Error::Invalid("max_epochs must be >= 1".into()));
        }
        if !self.target_error.is_finite() || self.target_error < 0.0 {
            return Err(Error::Invalid(format!(
                "target_error must be >= 0, got {}",
                self.target_error
            )));
        }
        if !(self.init_low.is_finite() && self.init_high.is_finite())
            || self.init_low >= self.init_high
        {
            return Err(Error::Invalid(format!(
                "init range [{}, {}] is not a valid interval",
                self.init_low, self.init_high
            )));
        }
        Ok(())
    }
}

/// What a training run did: the error after every epoch and whether the
/// target error was reached.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainReport {
    pub epochs_run: usize,
    pub error_trace: Vec<f64>,
    pub converged: bool,
}

impl TrainReport {
    pub fn final_error(&self) -> f64 {
        *self.error_trace.last().expect("at least one epoch ran")
    }
}

/// Builds a network of the given shape with every weight drawn independently
/// and uniformly from `[init_low, init_high]`, using a generator seeded by
/// `config.seed`. The same seed always produces the same network.
pub fn init_random(shape: &NetShape, config: &TrainConfig) -> Result<Network> {
    shape.validate()?;
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut layers = Vec::with_capacity(shape.layers.len());
    let mut prev = shape.input_dim;
    for spec in &shape.layers {
        let row_len = prev + usize::from(spec.has_bias);
        let rows = (0..spec.neurons)
            .map(|_| {
                (0..row_len)
                    .map(|_| rng.random_range(config.init_low..=config.init_high))
                    .collect()
            })
            .collect();
        layers.push(Layer::new(rows, spec.activation, spec.has_bias)?);
        prev = spec.neurons;
    }
    Network::new(shape.input_dim, layers)
}

/// Total dataset error: the network error summed over all samples.
pub fn dataset_error(net: &Network, data: &[Sample]) -> Result<f64> {
    let mut total = 0.0;
    for sample in data {
        let out = net.output(&sample.input)?;
        total += network_error(&out, &sample.target)?;
    }
    Ok(total)
}

/// Trains a freshly initialized network of the given shape by repeated
/// {forward, gradient, update} passes over `data`.
///
/// The error after each epoch is recorded in the report's `error_trace`;
/// training stops as soon as it reaches `config.target_error` (converged)
/// or after `config.max_epochs` epochs (not converged).
pub fn train(
    shape: &NetShape,
    data: &[Sample],
    config: &TrainConfig,
) -> Result<(Network, TrainReport)> {
    let net = init_random(shape, config)?;
    train_network(net, data, config)
}

/// Same loop as [`train`], starting from an existing network instead of a
/// random one. The seed and init range of `config` are ignored.
pub fn train_network(
    net: Network,
    data: &[Sample],
    config: &TrainConfig,
) -> Result<(Network, TrainReport)> {
    config.validate()?;
    if data.is_empty() {
        return Err(Error::Invalid("training needs a non-empty dataset".into()));
    }
    let mut net = net;
    if !net.is_differentiable() {
        return Err(Error::NonDifferentiable);
    }
    for sample in data {
        if sample.input.len() != net.input_dim() || sample.target.len() != net.output_dim() {
            return Err(Error::Dimension(format!(
                "sample with {} inputs / {} targets does not fit a {}-in / {}-out network",
                sample.input.len(),
                sample.target.len(),
                net.input_dim(),
                net.output_dim()
            )));
        }
    }

    let mut error_trace = Vec::new();
    let mut converged = false;
    for _ in 0..config.max_epochs {
        match config.scheme {
            UpdateScheme::PerSample => {
                for sample in data {
                    let trace = net.forward(&sample.input)?;
                    let grad = backprop_gradient(&net, &trace, &sample.target)?;
                    net = apply_update(&net, &grad, config.eta)?;
                }
            }
            UpdateScheme::FullBatch => {
                let mut acc = Gradient::zeros_like(&net);
                for sample in data {
                    let trace = net.forward(&sample.input)?;
                    let grad = backprop_gradient(&net, &trace, &sample.target)?;
                    acc.add_assign(&grad)?;
                }
                net = apply_update(&net, &acc, config.eta)?;
            }
        }
        let err = dataset_error(&net, data)?;
        error_trace.push(err);
        if err <= config.target_error {
            converged = true;
            break;
        }
    }
    let report = TrainReport {
        epochs_run: error_trace.len(),
        error_trace,
        converged,
    };
    Ok((net, report))
}
