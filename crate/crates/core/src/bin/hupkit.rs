//! Command-line front end: decide instances, verify certificates, run the
//! cone criteria, the wave demo and the hyperbola cross-validation.
//!
//! Exit codes: 0 uniqueness / verification pass, 1 counterexample /
//! verification failure, 2 undecided, 64 malformed input, 65 certificate and
//! instance mismatch, 66 light-like direction, 70 internal error.

use clap::{Args, Parser, Subcommand};
use hupkit::certificate::{verify_vanishing, FourierPair};
use hupkit::cone::{cross_validate_hyperbola, decide_cone, ConeInstance};
use hupkit::decide::{decide, DecideConfig};
use hupkit::error::Error;
use hupkit::jsonio::{cone_document, decision_document, to_canonical_string};
use hupkit::wave::{wave_demo, WaveGrid};
use hupkit::{CrossInstance, SCHEMA_VERSION};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_BAD_INPUT: u8 = 64;
const EXIT_MISMATCH: u8 = 65;
const EXIT_LIGHT_LIKE: u8 = 66;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "hupkit", version, about = "Heisenberg uniqueness pair decision toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a cross instance and emit the decision with its certificate
    Decide {
        /// instance JSON file
        input: PathBuf,
        /// exponent budget for the wandering check
        #[arg(long, default_value_t = 64)]
        depth: u32,
        /// dynamics tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// samples per verification equation
        #[arg(long, default_value_t = 10_000)]
        samples: u32,
        /// acceptance threshold for certificate verification
        #[arg(long, default_value_t = 1e-8)]
        verify_tol: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Replay a certificate against an instance
    Verify {
        /// certificate JSON file
        certificate: PathBuf,
        /// instance JSON file
        instance: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        samples: u32,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide a light-cone / two-hyperplane instance
    Cone {
        /// instance JSON file
        input: PathBuf,
        /// denominator bound for the rationality search
        #[arg(long, default_value_t = 10_000)]
        q_max: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Demonstrations
    Demo {
        #[command(subcommand)]
        what: DemoCommand,
    },
    /// Cross-validation suites
    Xval {
        #[command(subcommand)]
        what: XvalCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Sample the traveling-wave witness that vanishes on two lines
    Wave(WaveArgs),
}

#[derive(Args)]
struct WaveArgs {
    /// slope of the first line (the second is its reciprocal)
    #[arg(long)]
    k1: f64,
    #[arg(long, default_value_t = 512)]
    n: usize,
    #[arg(long = "h", default_value_t = 1.0 / 64.0)]
    spacing: f64,
}

#[derive(Subcommand)]
enum XvalCommand {
    /// Compare the two hyperbolic-slice criteria on random instances
    Hyperbola {
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError { code, message }) => {
            eprintln!("hupkit: {message}");
            ExitCode::from(code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn bad_input(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_BAD_INPUT, message: message.into() }
}

fn internal(e: &Error) -> CliError {
    let code = match e {
        Error::LightLikeDirection => EXIT_LIGHT_LIKE,
        _ => EXIT_INTERNAL,
    };
    CliError { code, message: e.to_string() }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| bad_input(format!("cannot read {what} {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| bad_input(format!("malformed {what} {}: {e}", path.display())))
}

fn emit(doc: &serde_json::Value, output: Option<&Path>) -> Result<(), CliError> {
    let text = to_canonical_string(doc);
    println!("{text}");
    if let Some(path) = output {
        std::fs::write(path, text.as_bytes())
            .map_err(|e| CliError { code: EXIT_INTERNAL, message: format!("cannot write output: {e}") })?;
    }
    Ok(())
}

fn seed_from_env() -> u64 {
    std::env::var("HUPKIT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Decide { input, depth, tol, samples, verify_tol, output } => {
            let inst: CrossInstance = read_json(&input, "instance")?;
            let cfg = DecideConfig { depth, tol, samples, verify_tol };
            let decision = decide(&inst, &cfg).map_err(|e| internal(&e))?;
            emit(&decision_document(&decision), output.as_deref())?;
            Ok(decision.verdict.exit_code() as u8)
        }
        Command::Verify { certificate, instance, samples, tol, output } => {
            let pair: FourierPair = read_json(&certificate, "certificate")?;
            let inst: CrossInstance = read_json(&instance, "instance")?;
            if pair.for_kind != inst.kind_str() {
                return Err(CliError {
                    code: EXIT_MISMATCH,
                    message: format!(
                        "certificate targets kind {:?} but the instance is {:?}",
                        pair.for_kind,
                        inst.kind_str()
                    ),
                });
            }
            let report = verify_vanishing(&pair, &inst, samples, tol).map_err(|e| internal(&e))?;
            let mut doc = serde_json::to_value(&report).expect("report");
            if let serde_json::Value::Object(map) = &mut doc {
                map.insert("schema_version".into(), json!(SCHEMA_VERSION));
            }
            emit(&doc, output.as_deref())?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Cone { input, q_max, tol, output } => {
            let inst: ConeInstance = read_json(&input, "instance")?;
            let bound = inst.q_max.unwrap_or(q_max);
            let decision = decide_cone(&inst, bound, tol).map_err(|e| internal(&e))?;
            emit(&cone_document(&decision), output.as_deref())?;
            Ok(decision.verdict.exit_code() as u8)
        }
        Command::Demo { what: DemoCommand::Wave(args) } => {
            let grid = WaveGrid { n: args.n, h: args.spacing };
            let report = wave_demo(args.k1, &grid).map_err(|e| internal(&e))?;
            let mut doc = serde_json::to_value(&report).expect("report");
            if let serde_json::Value::Object(map) = &mut doc {
                map.insert("schema_version".into(), json!(SCHEMA_VERSION));
            }
            emit(&doc, None)?;
            Ok(0)
        }
        Command::Xval { what: XvalCommand::Hyperbola { trials, dim, tol } } => {
            let seed = seed_from_env();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let report =
                cross_validate_hyperbola(dim, trials, tol, &mut rng).map_err(|e| internal(&e))?;
            let ok = report.disagreements.is_empty();
            let mut doc = serde_json::to_value(&report).expect("report");
            if let serde_json::Value::Object(map) = &mut doc {
                map.insert("schema_version".into(), json!(SCHEMA_VERSION));
                map.insert("seed".into(), json!(seed));
                map.insert("dim".into(), json!(dim));
            }
            emit(&doc, None)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}
