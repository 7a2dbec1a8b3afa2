//! File formats: JSON model documents, CSV datasets, and CSV error traces.
//!
//! Model files are versioned JSON with the full weight matrices spelled out,
//! so weights can be read and hand-edited; numbers round-trip `f64` values
//! exactly. Datasets are comma-separated text with a `x1,...,xn,d1,...,dm`
//! header and one sample per line.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::activation::ActivationKind;
use crate::data::Sample;
use crate::error::{Error, Result};
use crate::network::{Layer, Network};

/// Version written into and accepted from model files.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct NetworkDoc {
    format_version: u32,
    input_dim: usize,
    layers: Vec<LayerDoc>,
}

#[derive(Serialize, Deserialize)]
struct LayerDoc {
    activation: ActivationKind,
    has_bias: bool,
    weights: Vec<Vec<f64>>,
}

/// Serializes a network to the JSON model format.
pub fn network_to_json(net: &Network) -> String {
    let doc = NetworkDoc {
        format_version: FORMAT_VERSION,
        input_dim: net.input_dim(),
        layers: net
            .layers()
            .iter()
            .map(|l| LayerDoc {
                activation: l.activation(),
                has_bias: l.has_bias(),
                weights: l.weights().to_vec(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("network document serializes");
    text.push('\n');
    text
}

/// Parses a JSON model document, re-validating every network invariant.
pub fn network_from_json(text: &str) -> Result<Network> {
    let doc: NetworkDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("model document: {e}")))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Version(doc.format_version));
    }
    let layers = doc
        .layers
        .into_iter()
        .map(|l| Layer::new(l.weights, l.activation, l.has_bias))
        .collect::<Result<Vec<_>>>()?;
    Network::new(doc.input_dim, layers)
}

pub fn save_network(net: &Network, path: &Path) -> Result<()> {
    fs::write(path, network_to_json(net))?;
    Ok(())
}

pub fn load_network(path: &Path) -> Result<Network> {
    network_from_json(&fs::read_to_string(path)?)
}

/// Parses CSV dataset text with an `x1,...,xn,d1,...,dm` header into samples,
/// in file order.
pub fn parse_dataset(text: &str, n_inputs: usize, n_outputs: usize) -> Result<Vec<Sample>> {
    let expected_header: String = (1..=n_inputs)
        .map(|i| format!("x{i}"))
        .chain((1..=n_outputs).map(|i| format!("d{i}")))
        .collect::<Vec<_>>()
        .join(",");
    let mut lines = text.lines().map(|l| l.trim_end_matches('\r'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("dataset is empty; expected a header row".into()))?;
    if header != expected_header {
        return Err(Error::Parse(format!(
            "dataset header {header:?} does not match expected {expected_header:?}"
        )));
    }
    let mut samples = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != n_inputs + n_outputs {
            return Err(Error::Parse(format!(
                "dataset row {} has {} fields, expected {}",
                idx + 2,
                fields.len(),
                n_inputs + n_outputs
            )));
        }
        let mut values = Vec::with_capacity(fields.len());
        for field in fields {
            let v: f64 = field.trim().parse().map_err(|_| {
                Error::Parse(format!(
                    "dataset row {}: non-numeric field {field:?}",
                    idx + 2
                ))
            })?;
            if !v.is_finite() {
                return Err(Error::Parse(format!(
                    "dataset row {}: non-finite value {field:?}",
                    idx + 2
                )));
            }
            values.push(v);
        }
        let target = values.split_off(n_inputs);
        samples.push(Sample::new(values, target));
    }
    Ok(samples)
}

pub fn load_dataset(path: &Path, n_inputs: usize, n_outputs: usize) -> Result<Vec<Sample>> {
    parse_dataset(&fs::read_to_string(path)?, n_inputs, n_outputs)
}

/// Renders a per-epoch error trace as CSV text, one `epoch,error` row per
/// epoch (1-based, no header).
pub fn error_trace_to_csv(trace: &[f64]) -> String {
    let mut out = String::new();
    for (i, err) in trace.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, err));
    }
    out
}

pub fn write_error_trace(trace: &[f64], path: &Path) -> Result<()> {
    fs::write(path, error_trace_to_csv(trace))?;
    Ok(())
}
