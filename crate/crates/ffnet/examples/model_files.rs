//! Save a trained network to JSON, load it back, and run it from a CSV
//! dataset; also writes the per-epoch error trace as CSV.
//!
//! Run with: cargo run --example model_files

use std::fs;

use ffnet::io::{load_dataset, load_network, network_to_json, save_network, write_error_trace};
use ffnet::train::train;
use ffnet::{NetShape, TrainConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("ffnet_model_files_example");
    fs::create_dir_all(&dir)?;

    // A small dataset: two samples mapping 2 inputs to 1 target.
    let dataset_path = dir.join("xor_ish.csv");
    fs::write(&dataset_path, "x1,x2,d1\n0,1,1\n1,0,1\n")?;
    let shape: NetShape = "2-2s-1ib".parse()?;
    let samples = load_dataset(&dataset_path, shape.input_dim, shape.output_dim())?;
    println!(
        "loaded {} samples from {}",
        samples.len(),
        dataset_path.display()
    );

    let config = TrainConfig {
        seed: 1,
        target_error: 1e-6,
        ..TrainConfig::default()
    };
    let (net, report) = train(&shape, &samples, &config)?;
    println!(
        "trained for {} epochs, final error {:e}",
        report.epochs_run,
        report.final_error()
    );

    let model_path = dir.join("model.json");
    save_network(&net, &model_path)?;
    let trace_path = dir.join("trace.csv");
    write_error_trace(&report.error_trace, &trace_path)?;
    println!(
        "wrote {} and {}",
        model_path.display(),
        trace_path.display()
    );

    let reloaded = load_network(&model_path)?;
    assert_eq!(net, reloaded);
    for sample in &samples {
        println!(
            "input {:?}: original {:?}, reloaded {:?}",
            sample.input,
            net.output(&sample.input)?,
            reloaded.output(&sample.input)?
        );
    }

    println!("\nmodel document:\n{}", network_to_json(&net));
    Ok(())
}
