//! AND and OR gates built from threshold neurons in the four-neuron summing
//! network. Two different threshold assignments realize the same gates,
//! showing the solution is not unique.
//!
//! Run with: cargo run --example logic_gates

use ffnet::presets::{summing_network, SummingWeights};

fn main() {
    for (name, weights) in [
        ("thresholds 1.5 / 0.5", SummingWeights::and_or()),
        ("thresholds 1.9 / 0.1", SummingWeights::and_or_alt()),
    ] {
        let net = summing_network(&weights);
        println!("{name}:");
        println!("  x1 x2 | AND OR");
        for x1 in [0.0, 1.0] {
            for x2 in [0.0, 1.0] {
                let out = net.output(&[x1, x2]).expect("gate inputs fit");
                println!("   {x1}  {x2} |  {}   {}", out[0], out[1]);
            }
        }
        println!();
    }
}
