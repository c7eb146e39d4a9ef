mod commands;
mod naming;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{CliError, Output};

/// Antipodes of incidence Hopf algebras of finite intervals.
#[derive(Parser)]
#[command(name = "hopf", version)]
struct Cli {
    /// Print a human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Antipode by the chain formula, the forest formula, or both.
    Antipode(AntipodeArgs),
    /// Möbius function as the signed chain count.
    Mobius(InputArgs),
    /// List the forests of an interval.
    Forests(ForestArgs),
    /// Center and prime center.
    Center(InputArgs),
    /// Factorization into indecomposable lower intervals of the prime center.
    Factor(InputArgs),
    #[command(subcommand)]
    Check(CheckCommand),
    /// Emit a builtin interval as JSON.
    #[command(subcommand)]
    Family(FamilyCommand),
}

#[derive(Args)]
pub struct InputArgs {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Chains,
    Forests,
    Both,
}

#[derive(Args)]
pub struct AntipodeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Engine::Both)]
    pub engine: Engine,
    /// Enumerate forests with explicit J maps even on lattices.
    #[arg(long)]
    pub poset: bool,
    /// Include the individual chain or forest terms.
    #[arg(long)]
    pub trace: bool,
    /// Write the class certificates of this run to a file.
    #[arg(long)]
    pub registry: Option<PathBuf>,
}

#[derive(Args)]
pub struct ForestArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub poset: bool,
}

#[derive(Subcommand)]
pub enum CheckCommand {
    /// Super-upper-indecomposability of an indecomposable interval.
    Sui(InputArgs),
    /// Group forests by Θ and list canceling pairs.
    Cancellation {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Upper-indecomposability over the subinterval closure of the inputs.
    Family {
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    Any,
    Lattice,
    NonLattice,
}

#[derive(Subcommand)]
pub enum FamilyCommand {
    Partition {
        #[arg(long)]
        n: usize,
    },
    /// Colored partitions truncated to one top block.
    Colored {
        #[arg(long, value_delimiter = ',', required = true)]
        counts: Vec<usize>,
        #[arg(long)]
        top_color: u32,
    },
    Figure {
        #[arg(long)]
        which: u8,
    },
    /// Lattice of order ideals of a poset.
    Ideals(InputArgs),
    Boolean {
        #[arg(long)]
        n: usize,
    },
    Chain {
        #[arg(long)]
        n: usize,
    },
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = RandomKind::Any)]
        kind: RandomKind,
    },
}

fn configure_threads() {
    if let Some(n) = std::env::var("HOPF_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let outcome = commands::run(cli.command, &echo);
    let elapsed = start.elapsed();
    match outcome {
        Ok(Output::Report(report)) => {
            if cli.text {
                println!("{}", report.text);
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                );
            }
            eprintln!("elapsed {:.3} ms", elapsed.as_secs_f64() * 1e3);
            ExitCode::SUCCESS
        }
        Ok(Output::Interval(text)) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (code, kind, message) = match &e {
                CliError::Input { kind, message } => (3, kind.clone(), message.clone()),
                CliError::Invariant(message) => {
                    (4, "invariant_violation".to_string(), message.clone())
                }
            };
            eprintln!("{}", json!({"error": {"kind": kind, "message": message}}));
            ExitCode::from(code)
        }
    }
}
