//! A small, from-scratch feed-forward neural network library.
//!
//! The crate models layered networks of artificial neurons: each neuron takes
//! the weighted sum of its inputs (optionally plus a bias) and passes it
//! through an output function (identity, sigmoid, or a hard threshold). On
//! top of that it provides:
//!
//! - forward evaluation that keeps a full [`ForwardTrace`] of per-layer
//!   activations and outputs ([`network`]),
//! - squared-error backpropagation gradients and plain gradient-descent
//!   training with per-sample or full-batch updates ([`backprop`], [`train`]),
//! - an independent central-difference gradient oracle for checking the
//!   analytic gradients ([`gradcheck`]),
//! - hand-weighted demonstration networks (signal routing, doubling, AND/OR
//!   gates built from threshold neurons) and a ready-made 3-2-3 training
//!   task ([`presets`]),
//! - JSON model files, CSV datasets and error traces, and a command-line
//!   interface over all of it ([`io`], [`cli`]).
//!
//! Everything is `f64`, deterministic under a fixed seed, and free of
//! internal mutability; networks are plain values that are cheap to clone at
//! the sizes this crate targets.
//!
//! ```
//! use ffnet::{backprop, gradcheck, ActivationKind, Layer, Network, Sample};
//!
//! # fn main() -> Result<(), ffnet::Error> {
//! let net = Network::new(
//!     2,
//!     vec![
//!         Layer::new(vec![vec![0.3, -0.6, 0.1], vec![0.8, 0.2, -0.4]], ActivationKind::Sigmoid, true)?,
//!         Layer::new(vec![vec![1.0, -1.0, 0.0]], ActivationKind::Identity, true)?,
//!     ],
//! )?;
//! let sample = Sample::new(vec![0.5, -1.0], vec![0.25]);
//!
//! let trace = net.forward(&sample.input)?;
//! let analytic = backprop::backprop_gradient(&net, &trace, &sample.target)?;
//! let numeric = gradcheck::finite_diff_gradient(&net, &sample, &Default::default())?;
//! let report = gradcheck::compare_gradients(
//!     &analytic,
//!     &numeric,
//!     gradcheck::ABS_TOLERANCE,
//!     gradcheck::REL_TOLERANCE,
//! )?;
//! assert!(report.within_tolerance);
//! # Ok(())
//! # }
//! ```

pub mod activation;
pub mod backprop;
pub mod cli;
pub mod data;
pub mod error;
pub mod gradcheck;
pub mod io;
pub mod network;
pub mod presets;
pub mod shape;
pub mod train;

pub use activation::ActivationKind;
pub use backprop::Gradient;
pub use data::Sample;
pub use error::{Error, Result};
pub use gradcheck::FiniteDiffConfig;
pub use network::{weighted_sum, ForwardTrace, Layer, Network};
pub use shape::{LayerShape, NetShape};
pub use train::{TrainConfig, TrainReport, UpdateScheme};
