//! End-to-end tests of the command-line binary: subcommand behavior, file
//! outputs, determinism, and the exit-code table (0 ok, 1 usage, 2 I/O or
//! parse, 3 validation or dimension, 4 gradcheck tolerance failure).

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ffnet::io::save_network;
use ffnet::presets::{summing_network, SummingWeights};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn write_single_sample_dataset(path: &Path) {
    fs::write(path, "x1,x2,x3,d1,d2,d3\n1,0.25,-0.5,1,-1,0\n").expect("dataset written");
}

#[test]
fn eval_prints_the_output_vector() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("swap.json");
    save_network(&summing_network(&SummingWeights::swap()), &model).unwrap();

    let out = run(&[
        "eval",
        "--net",
        model.to_str().unwrap(),
        "--input",
        "0.3,0.7",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0.7,0.3\n");
}

#[test]
fn eval_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("swap.json");
    save_network(&summing_network(&SummingWeights::swap()), &model).unwrap();
    let model = model.to_str().unwrap();

    // Wrong input arity: dimension error.
    assert_eq!(code(&run(&["eval", "--net", model, "--input", "1,2,3"])), 3);
    // Unparseable vector: usage error.
    assert_eq!(code(&run(&["eval", "--net", model, "--input", "a,b"])), 1);
    // Missing file: I/O error.
    let missing = dir.path().join("missing.json");
    assert_eq!(
        code(&run(&[
            "eval",
            "--net",
            missing.to_str().unwrap(),
            "--input",
            "1,1"
        ])),
        2
    );
    // Malformed document: parse error.
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "not a model").unwrap();
    assert_eq!(
        code(&run(&[
            "eval",
            "--net",
            garbage.to_str().unwrap(),
            "--input",
            "1,1"
        ])),
        2
    );
    // Wrong format version: also a document-level failure.
    let versioned = dir.path().join("versioned.json");
    fs::write(
        &versioned,
        "{\"format_version\": 9, \"input_dim\": 1, \"layers\": []}",
    )
    .unwrap();
    assert_eq!(
        code(&run(&[
            "eval",
            "--net",
            versioned.to_str().unwrap(),
            "--input",
            "1"
        ])),
        2
    );
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(code(&run(&["bogus"])), 1);
    assert_eq!(code(&run(&["eval"])), 1);
    assert_eq!(code(&run(&["train", "--net-shape", "3-2s-3ib"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn train_writes_model_and_trace_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("task.csv");
    write_single_sample_dataset(&data);
    let model = dir.path().join("model.json");
    let trace = dir.path().join("trace.csv");

    let args = [
        "train",
        "--net-shape",
        "3-2s-3ib",
        "--data",
        data.to_str().unwrap(),
        "--seed",
        "42",
        "--out",
        model.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ];
    let out = run(&args);
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("converged=true"), "stdout: {text}");

    // The trace has exactly one row per epoch and its last row carries the
    // same error string the summary printed.
    let epochs: usize = text
        .lines()
        .find_map(|l| l.strip_prefix("epochs="))
        .expect("epochs line")
        .parse()
        .unwrap();
    let final_error = text
        .lines()
        .find_map(|l| l.strip_prefix("final_error="))
        .expect("final_error line");
    let trace_text = fs::read_to_string(&trace).unwrap();
    let rows: Vec<&str> = trace_text.lines().collect();
    assert_eq!(rows.len(), epochs);
    assert_eq!(*rows.last().unwrap(), format!("{epochs},{final_error}"));

    // Identical arguments give byte-identical files.
    let model_bytes = fs::read(&model).unwrap();
    let trace_bytes = fs::read(&trace).unwrap();
    let rerun = run(&args);
    assert_eq!(code(&rerun), 0);
    assert_eq!(stdout(&rerun), text);
    assert_eq!(fs::read(&model).unwrap(), model_bytes);
    assert_eq!(fs::read(&trace).unwrap(), trace_bytes);

    // The written model evaluates like the training summary promised.
    let eval = run(&[
        "eval",
        "--net",
        model.to_str().unwrap(),
        "--input",
        "1,0.25,-0.5",
    ]);
    assert_eq!(code(&eval), 0);
    let outputs: Vec<f64> = stdout(&eval)
        .trim()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    for (o, d) in outputs.iter().zip([1.0, -1.0, 0.0]) {
        assert!((o - d).abs() < 0.05);
    }
}

#[test]
fn train_error_paths() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("task.csv");
    write_single_sample_dataset(&data);
    let data = data.to_str().unwrap();

    // Malformed shape spec: usage.
    assert_eq!(
        code(&run(&["train", "--net-shape", "3-2q", "--data", data])),
        1
    );
    // Malformed init range: usage.
    assert_eq!(
        code(&run(&[
            "train",
            "--net-shape",
            "3-2s-3ib",
            "--data",
            data,
            "--init-range",
            "1"
        ])),
        1
    );
    // Negative learning rate: validation.
    assert_eq!(
        code(&run(&[
            "train",
            "--net-shape",
            "3-2s-3ib",
            "--data",
            data,
            "--eta",
            "-0.5"
        ])),
        3
    );
    // Ragged dataset row: parse error.
    let ragged = dir.path().join("ragged.csv");
    fs::write(&ragged, "x1,x2,x3,d1,d2,d3\n1,0.25,-0.5,1,-1\n").unwrap();
    assert_eq!(
        code(&run(&[
            "train",
            "--net-shape",
            "3-2s-3ib",
            "--data",
            ragged.to_str().unwrap()
        ])),
        2
    );
    // Dataset header that does not match the shape: parse error.
    let wrong_header = dir.path().join("wrong_header.csv");
    fs::write(&wrong_header, "x1,x2,d1\n1,2,3\n").unwrap();
    assert_eq!(
        code(&run(&[
            "train",
            "--net-shape",
            "3-2s-3ib",
            "--data",
            wrong_header.to_str().unwrap()
        ])),
        2
    );
    // Empty data section: the dataset loads but training rejects it.
    let empty = dir.path().join("empty.csv");
    fs::write(&empty, "x1,x2,x3,d1,d2,d3\n").unwrap();
    assert_eq!(
        code(&run(&[
            "train",
            "--net-shape",
            "3-2s-3ib",
            "--data",
            empty.to_str().unwrap()
        ])),
        3
    );
}

#[test]
fn gradcheck_passes_and_fails_by_tolerance() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("task.csv");
    write_single_sample_dataset(&data);
    let model = dir.path().join("model.json");
    let train_out = run(&[
        "train",
        "--net-shape",
        "3-2s-3ib",
        "--data",
        data.to_str().unwrap(),
        "--seed",
        "0",
        "--out",
        model.to_str().unwrap(),
    ]);
    assert_eq!(code(&train_out), 0);

    let ok = run(&[
        "gradcheck",
        "--net",
        model.to_str().unwrap(),
        "--data",
        data.to_str().unwrap(),
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("gradcheck: PASS"));
    assert!(stdout(&ok).contains("max_abs_deviation="));
    assert!(stdout(&ok).contains("max_rel_deviation="));

    // An absurd step length wrecks the finite-difference estimate.
    let bad = run(&[
        "gradcheck",
        "--net",
        model.to_str().unwrap(),
        "--data",
        data.to_str().unwrap(),
        "--epsilon",
        "1.0",
    ]);
    assert_eq!(code(&bad), 4);
    assert!(stdout(&bad).contains("gradcheck: FAIL"));

    // Threshold networks cannot be gradient-checked.
    let gate = dir.path().join("gate.json");
    save_network(&summing_network(&SummingWeights::and_or()), &gate).unwrap();
    let gate_data = dir.path().join("gate.csv");
    fs::write(&gate_data, "x1,x2,d1,d2\n1,1,1,1\n").unwrap();
    let thresh = run(&[
        "gradcheck",
        "--net",
        gate.to_str().unwrap(),
        "--data",
        gate_data.to_str().unwrap(),
    ]);
    assert_eq!(code(&thresh), 3);
}

#[test]
fn exercise_variants_print_expected_outputs() {
    let cases = [
        (
            [
                "exercise",
                "ex31",
                "--variant",
                "swap",
                "--input",
                "0.3,0.7",
            ],
            "0.7,0.3\n",
        ),
        (
            [
                "exercise",
                "ex31",
                "--variant",
                "all-ones",
                "--input",
                "1,1",
            ],
            "2,2\n",
        ),
        (
            ["exercise", "ex31", "--variant", "double", "--input", "1,0"],
            "2,0\n",
        ),
        (
            ["exercise", "ex31", "--variant", "and-or", "--input", "1,0"],
            "0,1\n",
        ),
        (
            ["exercise", "ex31", "--variant", "and-or", "--input", "1,1"],
            "1,1\n",
        ),
        // Leading minus signs must survive argument parsing.
        (
            [
                "exercise",
                "ex31",
                "--variant",
                "all-ones",
                "--input",
                "-1,-1",
            ],
            "-2,-2\n",
        ),
    ];
    for (args, expected) in cases {
        let out = run(&args);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), expected, "args: {args:?}");
    }
}

#[test]
fn exercise_training_run_converges() {
    let out = run(&["exercise", "ex41", "--seed", "42"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("converged=true"), "stdout: {text}");
    assert!(text.contains("output="), "stdout: {text}");
    // Deterministic: the same seed prints the same report.
    assert_eq!(stdout(&run(&["exercise", "ex41", "--seed", "42"])), text);
}
