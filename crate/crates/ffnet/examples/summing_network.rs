//! The four-neuron summing network: two input neurons, two output neurons,
//! and a hand-set weight on every arrow. Shows the all-ones table, what
//! zero and negative weights do, and the swap / doubling weight presets.
//!
//! Run with: cargo run --example summing_network

use ffnet::presets::{summing_network, SummingWeights};

fn main() -> ffnet::Result<()> {
    let inputs = [
        [1.0, 1.0],
        [1.0, 0.0],
        [0.0, 1.0],
        [0.0, 0.0],
        [-1.0, 1.0],
        [-1.0, -1.0],
    ];

    println!("all weights = 1 (outputs are plain input sums):");
    let all_ones = summing_network(&SummingWeights::all_ones());
    for input in inputs {
        println!(
            "  {:>12} -> {:?}",
            format!("{input:?}"),
            all_ones.output(&input)?
        );
    }

    println!("\nzero weight on input 1 (that signal is annihilated):");
    let mut weights = SummingWeights::all_ones();
    weights.input_weights[0] = 0.0;
    let zeroed = summing_network(&weights);
    for input in [[1.0, 1.0], [-7.0, 1.0]] {
        println!(
            "  {:>12} -> {:?}",
            format!("{input:?}"),
            zeroed.output(&input)?
        );
    }

    println!("\nnegative weight on input 1 (that contribution flips sign):");
    weights.input_weights[0] = -1.0;
    let inhibited = summing_network(&weights);
    for input in [[1.0, 1.0], [1.0, 0.0]] {
        println!(
            "  {:>12} -> {:?}",
            format!("{input:?}"),
            inhibited.output(&input)?
        );
    }

    println!("\nswap preset (outputs are the inputs in reverse order):");
    let swap = summing_network(&SummingWeights::swap());
    println!("  [0.3, 0.7] -> {:?}", swap.output(&[0.3, 0.7])?);

    println!("\ndoubling preset (outputs are the doubled inputs):");
    let double = summing_network(&SummingWeights::doubling());
    println!("  [1.0, 0.0] -> {:?}", double.output(&[1.0, 0.0])?);
    println!("  [-1.0, 1.0] -> {:?}", double.output(&[-1.0, 1.0])?);
    Ok(())
}
