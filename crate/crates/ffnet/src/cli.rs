//! Command-line interface: `eval`, `train`, `gradcheck`, and the built-in
//! `exercise` networks.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 validation
//! or dimension error, 4 gradient-check tolerance failure.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::backprop::backprop_gradient;
use crate::error::Error;
use crate::gradcheck::{
    compare_gradients, finite_diff_gradient, FiniteDiffConfig, ABS_TOLERANCE, REL_TOLERANCE,
};
use crate::io::{load_dataset, load_network, save_network, write_error_trace};
use crate::presets::{
    summing_network, three_two_three_sample, train_three_two_three, SummingWeights,
};
use crate::shape::NetShape;
use crate::train::{train, TrainConfig, UpdateScheme};

#[derive(Parser)]
#[command(
    name = "ffnet",
    version,
    about = "Feed-forward neural networks: evaluate, train, gradient-check"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a saved network on an input vector.
    Eval {
        /// Model file (JSON).
        #[arg(long)]
        net: PathBuf,
        /// Comma-separated input vector, e.g. "0.3,0.7".
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Train a freshly initialized network on a CSV dataset.
    Train {
        /// Network shape, e.g. "3-2s-3ib" (s sigmoid, i identity, trailing b = bias).
        #[arg(long)]
        net_shape: String,
        /// Dataset file (CSV with x1,...,xn,d1,...,dm header).
        #[arg(long)]
        data: PathBuf,
        /// Learning rate.
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        eta: f64,
        /// Maximum number of epochs.
        #[arg(long, default_value_t = 10_000)]
        epochs: usize,
        /// Stop once the total dataset error reaches this value.
        #[arg(long, default_value_t = 1e-4, allow_negative_numbers = true)]
        target_error: f64,
        /// Seed for the initial weights.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Uniform init range as "LO,HI".
        #[arg(long, default_value = "-0.5,0.5", allow_hyphen_values = true)]
        init_range: String,
        /// Weight update scheme.
        #[arg(long, value_enum, default_value_t = SchemeArg::PerSample)]
        scheme: SchemeArg,
        /// Where to write the trained model (JSON).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the per-epoch error trace (CSV: epoch,error).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Compare analytic gradients against central finite differences.
    Gradcheck {
        /// Model file (JSON).
        #[arg(long)]
        net: PathBuf,
        /// Dataset file (CSV) providing the samples to check on.
        #[arg(long)]
        data: PathBuf,
        /// Finite-difference step.
        #[arg(long, allow_negative_numbers = true)]
        epsilon: Option<f64>,
    },
    /// Run one of the built-in exercise networks.
    Exercise {
        #[command(subcommand)]
        exercise: Exercise,
    },
}

#[derive(Subcommand)]
enum Exercise {
    /// Four-neuron summing network with hand-set weights.
    Ex31 {
        /// Which weight preset to use.
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Comma-separated pair of inputs, e.g. "0.3,0.7".
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Train the 3-2-3 network on its single sample.
    Ex41 {
        /// Seed for the initial weights.
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// All weights one: outputs are the sums of the inputs.
    AllOnes,
    /// Outputs are the inputs in reverse order.
    Swap,
    /// Outputs are the doubled inputs.
    Double,
    /// Threshold neurons computing AND and OR over {0,1} inputs.
    AndOr,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum SchemeArg {
    PerSample,
    FullBatch,
}

impl From<SchemeArg> for UpdateScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::PerSample => UpdateScheme::PerSample,
            SchemeArg::FullBatch => UpdateScheme::FullBatch,
        }
    }
}

#[derive(Debug)]
enum Failure {
    /// Bad argument values; exits 1 like other usage errors.
    Usage(String),
    /// Errors from the library; exit code depends on the kind.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn domain_exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Parse(_) | Error::Version(_) => 2,
        Error::Dimension(_) | Error::Invalid(_) | Error::NonDifferentiable => 3,
    }
}

/// Parses arguments, runs the selected command, and returns the process exit
/// code. The binary is a thin wrapper around this.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version arrive here; they are not usage errors.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            domain_exit_code(&e)
        }
    }
}

fn execute(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Eval { net, input } => {
            let net = load_network(&net)?;
            let input = parse_vector(&input)?;
            let out = net.output(&input)?;
            println!("{}", join(&out));
            Ok(0)
        }
        Command::Train {
            net_shape,
            data,
            eta,
            epochs,
            target_error,
            seed,
            init_range,
            scheme,
            out,
            trace,
        } => {
            let shape: NetShape = net_shape
                .parse()
                .map_err(|e| Failure::Usage(format!("--net-shape: {e}")))?;
            let (init_low, init_high) = parse_range(&init_range)?;
            let config = TrainConfig {
                eta,
                max_epochs: epochs,
                target_error,
                seed,
                init_low,
                init_high,
                scheme: scheme.into(),
            };
            let samples = load_dataset(&data, shape.input_dim, shape.output_dim())?;
            let (net, report) = train(&shape, &samples, &config)?;
            if let Some(path) = out {
                save_network(&net, &path)?;
            }
            if let Some(path) = trace {
                write_error_trace(&report.error_trace, &path)?;
            }
            println!("epochs={}", report.epochs_run);
            println!("final_error={}", report.final_error());
            println!("converged={}", report.converged);
            Ok(0)
        }
        Command::Gradcheck { net, data, epsilon } => {
            let net = load_network(&net)?;
            let samples = load_dataset(&data, net.input_dim(), net.output_dim())?;
            if samples.is_empty() {
                return Err(Error::Invalid("gradcheck needs at least one sample".into()).into());
            }
            let cfg = match epsilon {
                Some(eps) => FiniteDiffConfig::new(eps)?,
                None => FiniteDiffConfig::default(),
            };
            let mut max_abs = 0.0f64;
            let mut max_rel = 0.0f64;
            let mut ok = true;
            for sample in &samples {
                let trace = net.forward(&sample.input)?;
                let analytic = backprop_gradient(&net, &trace, &sample.target)?;
                let numeric = finite_diff_gradient(&net, sample, &cfg)?;
                let report = compare_gradients(&analytic, &numeric, ABS_TOLERANCE, REL_TOLERANCE)?;
                max_abs = max_abs.max(report.max_abs);
                max_rel = max_rel.max(report.max_rel);
                ok &= report.within_tolerance;
            }
            println!("max_abs_deviation={max_abs}");
            println!("max_rel_deviation={max_rel}");
            println!("gradcheck: {}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { 0 } else { 4 })
        }
        Command::Exercise { exercise } => match exercise {
            Exercise::Ex31 { variant, input } => {
                let weights = match variant {
                    VariantArg::AllOnes => SummingWeights::all_ones(),
                    VariantArg::Swap => SummingWeights::swap(),
                    VariantArg::Double => SummingWeights::doubling(),
                    VariantArg::AndOr => SummingWeights::and_or(),
                };
                let net = summing_network(&weights);
                let input = parse_vector(&input)?;
                let out = net.output(&input)?;
                println!("{}", join(&out));
                Ok(0)
            }
            Exercise::Ex41 { seed } => {
                let config = TrainConfig {
                    seed,
                    ..TrainConfig::default()
                };
                let (net, report) = train_three_two_three(&config)?;
                let out = net.output(&three_two_three_sample().input)?;
                println!("epochs={}", report.epochs_run);
                println!("final_error={}", report.final_error());
                println!("converged={}", report.converged);
                println!("output={}", join(&out));
                Ok(0)
            }
        },
    }
}

fn parse_vector(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|field| {
            field
                .trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("bad number {field:?} in vector {text:?}")))
        })
        .collect()
}

fn parse_range(text: &str) -> Result<(f64, f64), Failure> {
    let values = parse_vector(text)?;
    match values[..] {
        [low, high] => Ok((low, high)),
        _ => Err(Failure::Usage(format!(
            "--init-range expects \"LO,HI\", got {text:?}"
        ))),
    }
}

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
