use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

const FORMATS: &str = "\
Formats:
  DFA text     `alphabet: a b`, `states: p q`, `start: p`, `accept: q`,
               one `trans: p a q` per transition; `#` starts a comment.
  graph        one edge `u v` per line; a single token is an isolated vertex.
  colouring    one `vertex colour` line per vertex, colour 1, 2 or 3.
  sizes        CSV with header `k,size`.
  reports      JSON; error counts are decimal strings.

Exit codes: 0 success, 1 I/O error or failed verification, 2 parse error,
3 infinite symmetric difference, 4 violated constraint.";

#[derive(Parser)]
#[command(name = "dfamin", version, about = "Exact and lossy DFA minimisation", after_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum ModeArg {
    #[default]
    Partial,
    Total,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum DfaFormat {
    #[default]
    Text,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Hyper,
    Kmin,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NamedGraph {
    K3,
    C5,
    Petersen,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Built-in graph.
    #[arg(long, value_enum)]
    named: Option<NamedGraph>,
}

#[derive(Args, Debug)]
struct Params {
    /// Chain length `s` (k-min family).
    #[arg(long)]
    s: Option<usize>,
    /// Horizon `k` (k-min family).
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimise; prints `states_before states_after`.
    Minimise {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        /// Remove dead states before minimising.
        #[arg(long)]
        drop_dead: bool,
        #[arg(long, value_enum, default_value_t)]
        format: DfaFormat,
    },
    /// k-minimise; prints the state counts, the error count and the
    /// similarity bound.
    Kmin {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: DfaFormat,
    },
    /// Hyper-minimise; prints like `kmin`.
    Hypermin {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: DfaFormat,
    },
    /// Size of a k-minimal automaton for every k in [0, 2n], as CSV.
    Sizes {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Walk every k with one automaton; prints `k,size,moves` rows.
    Sweep {
        input: PathBuf,
        /// Write `k<k>.dfa` whenever the size changes.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Distance forest of the minimal automaton.
    Forest {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: DfaFormat,
    },
    /// Count the symmetric difference of two automata; prints JSON.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Count only words up to this length (the difference may be infinite).
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Write a hardness instance, and with a colouring its small automaton
    /// and a verification report.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        /// Where the colouring's automaton goes (required with --coloring).
        #[arg(long)]
        colored_out: Option<PathBuf>,
        /// Report file; standard output otherwise.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a candidate automaton against a hardness instance; prints the
    /// JSON report and fails when a check fails.
    Verify {
        #[arg(value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        colored: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("dfamin: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
