//! Network shape descriptions and the compact text grammar for them.
//!
//! A shape string is dash-separated: the first segment is the input width,
//! every following segment is a layer width with an activation suffix
//! (`s` sigmoid, `i` identity), and an optional trailing `b` turns the bias
//! unit on for all layers. `3-2s-3ib` is a 3-input network with a 2-neuron
//! sigmoid layer and a 3-neuron identity layer, both with bias.

use std::fmt;
use std::str::FromStr;

use crate::activation::ActivationKind;
use crate::error::{Error, Result};

/// Shape of one layer: how many neurons, which output function, bias or not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayerShape {
    pub neurons: usize,
    pub activation: ActivationKind,
    pub has_bias: bool,
}

/// Shape of a whole network; the layer widths chain implicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct NetShape {
    pub input_dim: usize,
    pub layers: Vec<LayerShape>,
}

impl NetShape {
    pub fn new(input_dim: usize, layers: Vec<LayerShape>) -> Result<Self> {
        let shape = NetShape { input_dim, layers };
        shape.validate()?;
        Ok(shape)
    }

    pub fn validate(&self) -> Result<()> {
        if self.input_dim == 0 {
            return Err(Error::Invalid("input dimension must be >= 1".into()));
        }
        if self.layers.is_empty() {
            return Err(Error::Invalid("a shape needs at least one layer".into()));
        }
        for layer in &self.layers {
            if layer.neurons == 0 {
                return Err(Error::Invalid("layer widths must be >= 1".into()));
            }
            if !layer.activation.is_valid() {
                return Err(Error::Invalid("threshold theta must be finite".into()));
            }
        }
        Ok(())
    }

    /// Width of the final layer.
    pub fn output_dim(&self) -> usize {
        self.layers.last().map(|l| l.neurons).unwrap_or(0)
    }
}

impl FromStr for NetShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut text = s.trim();
        let mut bias = false;
        if let Some(stripped) = text.strip_suffix('b') {
            bias = true;
            text = stripped;
        }
        let mut segments = text.split('-');
        let input_dim = segments
            .next()
            .filter(|seg| !seg.is_empty())
            .and_then(|seg| seg.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad shape spec {s:?}: missing input width")))?;
        let mut layers = Vec::new();
        for seg in segments {
            let (digits, suffix) = seg.split_at(seg.len().saturating_sub(1));
            let neurons = digits.parse::<usize>().map_err(|_| {
                Error::Parse(format!(
                    "bad shape spec {s:?}: segment {seg:?} has no width"
                ))
            })?;
            let activation = match suffix {
                "s" => ActivationKind::Sigmoid,
                "i" => ActivationKind::Identity,
                _ => {
                    return Err(Error::Parse(format!(
                        "bad shape spec {s:?}: segment {seg:?} must end in 's' or 'i'"
                    )))
                }
            };
            layers.push(LayerShape {
                neurons,
                activation,
                has_bias: bias,
            });
        }
        if layers.is_empty() {
            return Err(Error::Parse(format!("bad shape spec {s:?}: no layers")));
        }
        let shape = NetShape { input_dim, layers };
        shape.validate().map_err(|e| match e {
            Error::Invalid(msg) => Error::Parse(format!("bad shape spec {s:?}: {msg}")),
            other => other,
        })?;
        Ok(shape)
    }
}

impl fmt::Display for NetShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.input_dim)?;
        for layer in &self.layers {
            let suffix = match layer.activation {
                ActivationKind::Sigmoid => "s",
                ActivationKind::Identity => "i",
                ActivationKind::Threshold(_) => "t",
            };
            write!(f, "-{}{}", layer.neurons, suffix)?;
        }
        if self.layers.iter().all(|l| l.has_bias) {
            write!(f, "b")?;
        }
        Ok(())
    }
}
