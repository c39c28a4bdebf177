//! Command-line driver: polynomial computation, the coefficient
//! approximation pipeline, the certification suite, and the lambda table.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use linkpoly::algebra::DEFAULT_PRECISION_BITS;
use linkpoly::corpus;
use linkpoly::diagram::LinkDiagram;
use linkpoly::error::Error;
use linkpoly::verify::SuiteConfig;

#[derive(Parser)]
#[command(
    name = "linkpoly",
    version,
    about = "Exact HOMFLYPT / Dubrovnik / Kauffman polynomials of small links \
             and their approximation by finite-type invariants"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute link polynomials of one input link.
    Poly(PolyArgs),
    /// Run the coefficient-approximation pipeline on a link or a table.
    Approx(ApproxArgs),
    /// Run the certification suite over the bundled corpus.
    Verify(VerifyArgs),
    /// Tabulate lambda_{m,n} by recurrence, closed form and quadrature.
    Lambda(LambdaArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Homflypt,
    Dubrovnik,
    Kauffman,
}

#[derive(Args)]
struct InputArgs {
    /// PD input: a bundled corpus name, a file path, or inline `PD[...]` text
    #[arg(long)]
    pd: Option<String>,
    /// Braid input: `n: w1 w2 ...` (or a file/corpus name holding one)
    #[arg(long)]
    braid: Option<String>,
}

impl InputArgs {
    fn resolve(&self) -> Result<(String, LinkDiagram), Error> {
        let arg = match (&self.pd, &self.braid) {
            (Some(p), None) => p,
            (None, Some(b)) => b,
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "exactly one of --pd or --braid is required".into(),
                })
            }
        };
        if let Some(d) = corpus::diagram(arg) {
            return Ok((arg.clone(), d));
        }
        if let Ok(text) = std::fs::read_to_string(arg) {
            return Ok((arg.clone(), corpus::load(&text)?));
        }
        Ok((arg.clone(), corpus::load(arg)?))
    }
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Restrict the output to one polynomial family (default: all)
    #[arg(long, value_enum)]
    which: Option<Which>,
    /// Crossing cap for the skein recursion
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ApproxArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Coefficient table as JSON, bypassing the skein engine
    #[arg(long)]
    table: Option<PathBuf>,
    /// Upper bound on q for the reported w-values (default 4)
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    qmax: i64,
    /// Number of partial sums in the lambda route
    #[arg(long = "Nmax", default_value_t = 200)]
    big_n_max: u32,
    #[arg(long, default_value_t = DEFAULT_PRECISION_BITS)]
    precision: usize,
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single named check
    #[arg(long)]
    only: Option<String>,
    /// Inject this many coefficient faults into one side of the two-path
    /// comparisons; the suite is then expected to fail
    #[arg(long, default_value_t = 0)]
    mutate: usize,
    /// Selects the fault target deterministically
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Partial-sum bound for the convergence check
    #[arg(long = "Nmax", default_value_t = 200)]
    big_n_max: u32,
    #[arg(long, default_value_t = DEFAULT_PRECISION_BITS)]
    precision: usize,
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct LambdaArgs {
    /// Largest m
    #[arg(long = "Nmax", default_value_t = 12)]
    m_max: u32,
    /// Largest |n|
    #[arg(long, default_value_t = 6)]
    nmax: i64,
    #[arg(long, default_value_t = DEFAULT_PRECISION_BITS)]
    precision: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::CrossingCap { .. } => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Poly(a) => report::cmd_poly(&a.input, a.which, a.cap, a.format),
        Cmd::Approx(a) => report::cmd_approx(&a),
        Cmd::Verify(a) => {
            let cfg = SuiteConfig {
                precision_bits: a.precision,
                crossing_cap: a.cap,
                n_max: a.big_n_max,
                mutate: a.mutate,
                seed: a.seed,
                only: a.only.clone(),
            };
            return report::cmd_verify(&cfg, a.format);
        }
        Cmd::Lambda(a) => report::cmd_lambda(a.m_max, a.nmax, a.precision, a.format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
