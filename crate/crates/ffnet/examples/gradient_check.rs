//! Check analytic backpropagation gradients against the central
//! finite-difference oracle on a randomly initialized network.
//!
//! Run with: cargo run --example gradient_check

use ffnet::backprop::backprop_gradient;
use ffnet::gradcheck::{
    compare_gradients, finite_diff_gradient, FiniteDiffConfig, ABS_TOLERANCE, REL_TOLERANCE,
};
use ffnet::train::init_random;
use ffnet::{NetShape, Sample, TrainConfig};

fn main() -> ffnet::Result<()> {
    let shape: NetShape = "4-5s-3s-2ib".parse()?;
    let net = init_random(
        &shape,
        &TrainConfig {
            seed: 7,
            ..TrainConfig::default()
        },
    )?;
    let sample = Sample::new(vec![0.9, -1.3, 0.2, 0.5], vec![0.8, -0.4]);

    let trace = net.forward(&sample.input)?;
    let analytic = backprop_gradient(&net, &trace, &sample.target)?;
    let numeric = finite_diff_gradient(&net, &sample, &FiniteDiffConfig::default())?;

    let report = compare_gradients(&analytic, &numeric, ABS_TOLERANCE, REL_TOLERANCE)?;
    println!("network shape: {shape}");
    println!("max absolute deviation: {:e}", report.max_abs);
    println!("max relative deviation: {:e}", report.max_rel);
    println!(
        "within tolerance (abs {ABS_TOLERANCE:e} / rel {REL_TOLERANCE:e}): {}",
        report.within_tolerance
    );

    // A coarser step degrades the numeric estimate but should still agree.
    let coarse = finite_diff_gradient(&net, &sample, &FiniteDiffConfig::new(1e-4)?)?;
    let coarse_report = compare_gradients(&analytic, &coarse, ABS_TOLERANCE, REL_TOLERANCE)?;
    println!(
        "with eps = 1e-4: max abs {:e}, max rel {:e}",
        coarse_report.max_abs, coarse_report.max_rel
    );
    Ok(())
}
