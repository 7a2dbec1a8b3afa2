//! Acceptance suite: every release gate for this crate in one place.
//!
//! Each test prints one `PASS: ...` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them all.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ffnet::backprop::backprop_gradient;
use ffnet::gradcheck::{
    compare_gradients, finite_diff_gradient, FiniteDiffConfig, ABS_TOLERANCE, REL_TOLERANCE,
};
use ffnet::io::{network_from_json, network_to_json};
use ffnet::presets::{summing_network, train_three_two_three, SummingWeights};
use ffnet::train::{init_random, train_network};
use ffnet::{ActivationKind, Layer, LayerShape, NetShape, Network, Sample, TrainConfig};

/// Random differentiable shape: 1-3 layers, widths <= 5, sigmoid/identity
/// mix, bias on or off per layer.
fn random_shape(rng: &mut ChaCha8Rng) -> NetShape {
    let input_dim = rng.random_range(1..=5usize);
    let n_layers = rng.random_range(1..=3usize);
    let layers = (0..n_layers)
        .map(|_| LayerShape {
            neurons: rng.random_range(1..=5usize),
            activation: if rng.random_bool(0.5) {
                ActivationKind::Sigmoid
            } else {
                ActivationKind::Identity
            },
            has_bias: rng.random_bool(0.5),
        })
        .collect();
    NetShape::new(input_dim, layers).expect("generated shape is valid")
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(lo..hi)).collect()
}

#[test]
fn gradient_oracle_agreement() {
    // 50 seeded networks x 5 samples each: analytic and finite-difference
    // gradients must agree entrywise within max(1e-6 abs, 1e-4 rel).
    let mut worst_abs = 0.0f64;
    let mut worst_rel = 0.0f64;
    for net_seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1_000 + net_seed);
        let shape = random_shape(&mut rng);
        let cfg = TrainConfig {
            seed: net_seed,
            init_low: -1.0,
            init_high: 1.0,
            ..TrainConfig::default()
        };
        let net = init_random(&shape, &cfg).expect("net builds");
        for _ in 0..5 {
            let sample = Sample::new(
                random_vector(&mut rng, net.input_dim(), -2.0, 2.0),
                random_vector(&mut rng, net.output_dim(), -1.5, 1.5),
            );
            let trace = net.forward(&sample.input).expect("forward");
            let analytic = backprop_gradient(&net, &trace, &sample.target).expect("backprop");
            let numeric = finite_diff_gradient(&net, &sample, &FiniteDiffConfig::default())
                .expect("finite differences");
            let report = compare_gradients(&analytic, &numeric, ABS_TOLERANCE, REL_TOLERANCE)
                .expect("congruent gradients");
            assert!(
                report.within_tolerance,
                "seed {net_seed}: gradients disagree beyond tolerance: {report:?}"
            );
            worst_abs = worst_abs.max(report.max_abs);
            worst_rel = worst_rel.max(report.max_rel);
        }
    }
    println!(
        "PASS: gradient oracle agreement on 50 nets x 5 samples \
         (worst abs {worst_abs:.2e}, worst rel {worst_rel:.2e})"
    );
}

#[test]
fn summing_table_is_exact() {
    let net = summing_network(&SummingWeights::all_ones());
    let table = [
        ([1.0, 1.0], [2.0, 2.0]),
        ([1.0, 0.0], [1.0, 1.0]),
        ([0.0, 1.0], [1.0, 1.0]),
        ([0.0, 0.0], [0.0, 0.0]),
        ([-1.0, 1.0], [0.0, 0.0]),
        ([-1.0, -1.0], [-2.0, -2.0]),
    ];
    for (input, expected) in table {
        assert_eq!(
            net.output(&input).expect("forward"),
            expected.to_vec(),
            "input {input:?}"
        );
    }
    println!("PASS: all-ones summing network reproduces its six-row table exactly");
}

#[test]
fn swap_mapping_is_exact() {
    let net = summing_network(&SummingWeights::swap());
    assert_eq!(net.output(&[0.3, 0.7]).expect("forward"), vec![0.7, 0.3]);
    println!("PASS: swap network maps (0.3, 0.7) to (0.7, 0.3) exactly");
}

#[test]
fn and_or_truth_tables_for_two_solutions() {
    let solutions = [SummingWeights::and_or(), SummingWeights::and_or_alt()];
    assert_ne!(solutions[0], solutions[1], "the two solutions must differ");
    for weights in &solutions {
        let net = summing_network(weights);
        for x1 in [0.0, 1.0] {
            for x2 in [0.0, 1.0] {
                let expected_and = f64::from(u8::from(x1 == 1.0 && x2 == 1.0));
                let expected_or = f64::from(u8::from(x1 == 1.0 || x2 == 1.0));
                assert_eq!(
                    net.output(&[x1, x2]).expect("forward"),
                    vec![expected_and, expected_or],
                    "({x1}, {x2}) with thresholds {:?}",
                    weights.thresholds
                );
            }
        }
    }
    println!("PASS: AND/OR truth tables hold exhaustively for two distinct weight solutions");
}

#[test]
fn single_sample_convergence_across_seeds() {
    // Default config on the 3-2-3 task must reach E <= 1e-3 within 10,000
    // epochs for at least 8 of the seeds 0..=9, with every output component
    // within 0.05 of its target.
    let mut converged = 0;
    for seed in 0..10u64 {
        let cfg = TrainConfig {
            seed,
            target_error: 1e-3,
            ..TrainConfig::default()
        };
        let (net, report) = train_three_two_three(&cfg).expect("training runs");
        if report.converged {
            converged += 1;
            let out = net.output(&[1.0, 0.25, -0.5]).expect("forward");
            for (o, d) in out.iter().zip([1.0, -1.0, 0.0]) {
                assert!(
                    (o - d).abs() <= 0.05,
                    "seed {seed}: output {o} more than 0.05 from target {d}"
                );
            }
        }
    }
    assert!(converged >= 8, "only {converged}/10 seeds converged");
    println!(
        "PASS: single-sample task converged for {converged}/10 seeds with outputs within 0.05"
    );
}

#[test]
fn error_descends_at_small_eta() {
    let cfg = TrainConfig {
        eta: 0.01,
        max_epochs: 100,
        target_error: 0.0,
        seed: 0,
        ..TrainConfig::default()
    };
    let (_, report) = train_three_two_three(&cfg).expect("training runs");
    assert_eq!(report.epochs_run, 100);
    for (i, pair) in report.error_trace.windows(2).enumerate() {
        assert!(
            pair[1] <= pair[0] + 1e-12,
            "error rose at epoch {}: {} -> {}",
            i + 2,
            pair[0],
            pair[1]
        );
    }
    println!("PASS: error trace is non-increasing over 100 epochs at eta = 0.01");
}

#[test]
fn sigmoid_analytic_checks() {
    assert_eq!(ActivationKind::Sigmoid.apply(0.0), 0.5);

    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..1_000 {
        let a = rng.random_range(-30.0..30.0);
        let sum = ActivationKind::Sigmoid.apply(a) + ActivationKind::Sigmoid.apply(-a);
        assert!((sum - 1.0).abs() < 1e-12, "symmetry broke at a = {a}");
    }

    for _ in 0..1_000 {
        let mut pair = [rng.random_range(-30.0..30.0), rng.random_range(-30.0..30.0)];
        pair.sort_by(f64::total_cmp);
        let [lo, hi] = pair;
        if lo == hi {
            continue;
        }
        assert!(
            ActivationKind::Sigmoid.apply(lo) < ActivationKind::Sigmoid.apply(hi),
            "monotonicity broke on ({lo}, {hi})"
        );
    }
    println!("PASS: sigmoid value at 0, symmetry (1e-12), and monotonicity checks");
}

#[test]
fn model_round_trip_preserves_outputs() {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut rng = ChaCha8Rng::seed_from_u64(4_242);
    for net_seed in 0..100u64 {
        let shape = random_shape(&mut rng);
        let cfg = TrainConfig {
            seed: net_seed,
            init_low: -1.0,
            init_high: 1.0,
            ..TrainConfig::default()
        };
        let net = init_random(&shape, &cfg).expect("net builds");
        let loaded = if net_seed % 10 == 0 {
            // Every tenth network goes through an actual file on disk.
            let path = dir.path().join(format!("net_{net_seed}.json"));
            ffnet::io::save_network(&net, &path).expect("save");
            ffnet::io::load_network(&path).expect("load")
        } else {
            network_from_json(&network_to_json(&net)).expect("round trip")
        };
        assert_eq!(
            net, loaded,
            "seed {net_seed}: weights changed in the round trip"
        );
        for _ in 0..3 {
            let input = random_vector(&mut rng, net.input_dim(), -5.0, 5.0);
            let a = net.output(&input).expect("forward");
            let b = loaded.output(&input).expect("forward");
            for (x, y) in a.iter().zip(&b) {
                assert_eq!(
                    x.to_bits(),
                    y.to_bits(),
                    "seed {net_seed}: outputs differ bitwise on {input:?}"
                );
            }
        }
    }
    println!("PASS: 100 seeded networks survive the JSON round trip with bit-identical outputs");
}

#[test]
fn hand_iterated_scalar_training() {
    // One identity neuron, w0 = 0, x = 1, d = 2, eta = 0.25: the update
    // w <- w - 0.25 * 2(w - 2) gives exactly 1 after one epoch, 1.5 after two.
    let zero_net = Network::new(
        1,
        vec![Layer::new(vec![vec![0.0]], ActivationKind::Identity, false).expect("layer")],
    )
    .expect("network");
    let data = [Sample::new(vec![1.0], vec![2.0])];
    let base = TrainConfig {
        eta: 0.25,
        target_error: 0.0,
        ..TrainConfig::default()
    };

    let (after_one, _) = train_network(
        zero_net.clone(),
        &data,
        &TrainConfig {
            max_epochs: 1,
            ..base.clone()
        },
    )
    .expect("one epoch");
    assert_eq!(after_one.layers()[0].weights()[0][0], 1.0);

    let (after_two, report) = train_network(
        zero_net,
        &data,
        &TrainConfig {
            max_epochs: 2,
            ..base
        },
    )
    .expect("two epochs");
    assert_eq!(after_two.layers()[0].weights()[0][0], 1.5);
    assert_eq!(report.error_trace, vec![1.0, 0.25]);
    println!("PASS: hand-iterated scalar case hits w = 1 and w = 1.5 exactly");
}
