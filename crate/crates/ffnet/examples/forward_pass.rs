//! Build a small network by hand and walk through a forward pass,
//! printing every layer's activations and outputs.
//!
//! Run with: cargo run --example forward_pass

use ffnet::{ActivationKind, Layer, Network};

fn main() -> ffnet::Result<()> {
    // 2 inputs -> 3 sigmoid neurons (with bias) -> 1 linear output (with bias).
    let net = Network::new(
        2,
        vec![
            Layer::new(
                vec![
                    vec![0.8, -0.4, 0.1],
                    vec![-0.2, 0.9, -0.3],
                    vec![0.5, 0.5, 0.0],
                ],
                ActivationKind::Sigmoid,
                true,
            )?,
            Layer::new(
                vec![vec![1.0, -1.5, 0.75, 0.2]],
                ActivationKind::Identity,
                true,
            )?,
        ],
    )?;

    let input = [0.3, -0.7];
    let trace = net.forward(&input)?;

    println!("input: {:?}", trace.input());
    for (l, (acts, outs)) in trace.activations().iter().zip(trace.outputs()).enumerate() {
        println!("layer {l}:");
        println!("  activations (weighted sums): {acts:?}");
        println!("  outputs:                     {outs:?}");
    }
    println!("network output: {:?}", trace.output());

    // A threshold layer turns the same sums into hard 0/1 decisions.
    let gate = Network::new(
        2,
        vec![Layer::new(
            vec![vec![1.0, 1.0]],
            ActivationKind::Threshold(0.5),
            false,
        )?],
    )?;
    for input in [[0.2, 0.2], [0.4, 0.4]] {
        println!("threshold neuron on {input:?}: {:?}", gate.output(&input)?);
    }
    Ok(())
}
