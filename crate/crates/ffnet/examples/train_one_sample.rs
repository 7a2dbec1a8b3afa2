//! Train the 3-2-3 network (sigmoid hidden layer, linear outputs) on its
//! single sample and watch the error fall epoch by epoch.
//!
//! Run with: cargo run --example train_one_sample

use ffnet::presets::{three_two_three_sample, train_three_two_three};
use ffnet::TrainConfig;

fn main() -> ffnet::Result<()> {
    let config = TrainConfig {
        seed: 42,
        ..TrainConfig::default()
    };
    let (net, report) = train_three_two_three(&config)?;

    println!("error after each epoch:");
    for (epoch, error) in report.error_trace.iter().enumerate() {
        println!("  {:>3}  {error}", epoch + 1);
    }
    println!(
        "converged: {} (target error {})",
        report.converged, config.target_error
    );

    let sample = three_two_three_sample();
    let out = net.output(&sample.input)?;
    println!("\ninput   {:?}", sample.input);
    println!("target  {:?}", sample.target);
    println!("output  {out:?}");

    // A slower learning rate takes more epochs but still descends.
    let slow = TrainConfig {
        eta: 0.05,
        seed: 42,
        ..TrainConfig::default()
    };
    let (_, slow_report) = train_three_two_three(&slow)?;
    println!(
        "\neta=0.05: {} epochs to error {}",
        slow_report.epochs_run,
        slow_report.final_error()
    );
    Ok(())
}
