//! `ntangle` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain or parity error.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ntangle::bench::{self, BenchConfig};
use ntangle::measures::{self, wong_tangle_capped, Measure, MeasureReport, DEFAULT_ORACLE_CAP};
use ntangle::state::qsv;
use ntangle::verify::{run_suite, SuiteConfig, SuiteName};
use ntangle::{Error, ProductExpression, StateVector, Strategy};
use serde::Serialize;

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "ntangle", version)]
#[command(about = "Polynomial entanglement measures for pure n-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a measure on a state
    Compute(ComputeArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Time the quadratic even measure against the quartic oracle
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true))]
struct ComputeArgs {
    /// State file in qsv format
    #[arg(long, group = "source")]
    file: Option<PathBuf>,

    /// Product expression, e.g. "ghz:3@1,2,3 x bell@4,5"
    #[arg(long, group = "source")]
    expr: Option<String>,

    /// tau, tau-even, tau-odd, residual:<i>, r, concurrence, wong, three-tangle
    #[arg(long, default_value = "tau")]
    measure: Measure,

    /// Evaluate on the raw amplitudes instead of the normalized state
    #[arg(long)]
    no_normalize: bool,

    /// Largest n the quartic oracle will evaluate
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: SuiteName,

    /// Largest qubit count exercised (suite default if omitted)
    #[arg(long)]
    n_max: Option<usize>,

    /// Random trials per check (suite default if omitted)
    #[arg(long)]
    trials: Option<usize>,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Override every check's tolerance
    #[arg(long)]
    tol: Option<f64>,

    /// Run trials on one thread
    #[arg(long)]
    sequential: bool,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 2)]
    n_min: usize,

    #[arg(long, default_value_t = 20)]
    n_max: usize,

    /// Timed repetitions per row
    #[arg(long, default_value_t = 5)]
    reps: usize,

    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// A failure plus the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Io(_) | Error::Csv(_) => 2,
            Error::Domain(_)
            | Error::Parity { .. }
            | Error::Capacity { .. }
            | Error::IndexOutOfRange { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    passed: Option<bool>,
    report: T,
}

fn print_json<T: Serialize>(command: &str, passed: Option<bool>, report: T) -> Result<(), Failure> {
    let envelope = Envelope {
        schema: SCHEMA,
        command,
        passed,
        report,
    };
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &envelope)?;
    writeln!(out)?;
    Ok(())
}

/// Fifteen significant digits with trailing zeros dropped.
fn fmt15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        let fixed = format!("{:.*}", (14 - exp) as usize, x);
        trim_zeros(&fixed).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn load_state(args: &ComputeArgs) -> Result<(StateVector, String), Failure> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let psi = qsv::parse(&text).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", path.display()),
        })?;
        return Ok((psi, format!("file:{}", path.display())));
    }
    let text = args.expr.as_deref().expect("clap enforces a source");
    let expr = ProductExpression::parse(text).map_err(|e| Failure {
        code: 2,
        message: format!("expression: {e}"),
    })?;
    Ok((expr.build()?, format!("expr:{text}")))
}

fn compute(args: ComputeArgs) -> Result<u8, Failure> {
    if args.format == Format::Csv {
        return Err(Failure::usage("compute supports --format text or json"));
    }
    let (raw, source) = load_state(&args)?;
    let input_norm = raw.norm();
    let psi = if args.no_normalize {
        raw
    } else {
        raw.normalized()?
    };
    let mut report: MeasureReport = match args.measure {
        Measure::Wong => wong_tangle_capped(&psi, args.oracle_cap)?,
        m => measures::evaluate(&psi, m)?,
    };
    report.input_norm = input_norm;
    let report = report.with_source(source);

    match args.format {
        Format::Json => print_json("compute", None, &report)?,
        _ => {
            let mut out = io::stdout().lock();
            writeln!(out, "{} = {}", report.measure, fmt15(report.value))?;
            writeln!(out, "n = {}", report.n)?;
            if let Some(res) = &report.residuals {
                let joined: Vec<String> = res.iter().map(|v| fmt15(*v)).collect();
                writeln!(out, "residuals = {}", joined.join(" "))?;
            }
            writeln!(out, "input_norm = {}", fmt15(report.input_norm))?;
            writeln!(out, "normalized = {}", !args.no_normalize)?;
            writeln!(out, "source = {}", report.source.as_deref().unwrap_or(""))?;
        }
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    if args.format == Format::Csv {
        return Err(Failure::usage("verify supports --format text or json"));
    }
    let mut config = SuiteConfig::new(args.suite);
    if let Some(n) = args.n_max {
        config.n_max = n;
    }
    if let Some(t) = args.trials {
        config.trials = t;
    }
    config.seed = args.seed;
    config.tol = args.tol;
    if args.sequential {
        config.strategy = Strategy::Sequential;
    }
    config
        .validate()
        .map_err(|e| Failure::usage(e.to_string()))?;

    let report = run_suite(&config)?;
    let passed = report.passed();
    match args.format {
        Format::Json => print_json("verify", Some(passed), &report)?,
        _ => print!("{}", report.to_text()),
    }
    Ok(if passed { 0 } else { 1 })
}

fn run_bench(args: BenchArgs) -> Result<u8, Failure> {
    let config = BenchConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        reps: args.reps,
        oracle_cap: args.oracle_cap,
        seed: args.seed,
    };
    // any bad range is a usage error here
    let records = bench::run_bench(&config).map_err(|e| Failure::usage(e.to_string()))?;
    match args.format {
        Format::Csv => bench::write_csv(&records, io::stdout().lock())?,
        Format::Json => print_json("bench", None, &records)?,
        Format::Text => print!("{}", bench::to_text(&records)),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => run_bench(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
