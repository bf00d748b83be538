mod commands;
mod failure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercenter::{Algo, HalfInt};

#[derive(Parser, Debug)]
#[command(
    name = "hypercenter",
    version,
    about = "Approximate p-centers on graphs with small hyperbolicity"
)]
struct Cli {
    /// Raise log verbosity (-v info, -vv debug). RUST_LOG overrides.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute p-centers with a packing lower bound, for one p or a range.
    Solve(SolveArgs),
    /// Estimate or compute the four-point hyperbolicity.
    Hyperbolicity(HyperbolicityArgs),
    /// Build the layering-partition tree and report its distance error.
    TreeApprox(TreeApproxArgs),
    /// Evaluate the domination radius of a given center set.
    Certify(CertifyArgs),
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// Edge list, one `u v` pair per line; `#` starts a comment line.
    pub graph: PathBuf,

    /// Keep only the largest connected component instead of rejecting the input.
    #[arg(long)]
    pub largest_component: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Auto,
    General,
    Tree,
    Chepoi1,
    Brute,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Algo {
        match a {
            AlgoArg::Auto => Algo::Auto,
            AlgoArg::General => Algo::General,
            AlgoArg::Tree => Algo::Tree,
            AlgoArg::Chepoi1 => Algo::Chepoi1,
            AlgoArg::Brute => Algo::Brute,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: GraphArgs,

    /// Number of centers, or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_p_range)]
    pub p: (usize, usize),

    #[arg(long, value_enum, default_value_t = AlgoArg::Auto)]
    pub algo: AlgoArg,

    /// Hyperbolicity to use for the round cap (multiple of 0.5). Computed when absent.
    #[arg(long, value_parser = parse_half)]
    pub delta: Option<HalfInt>,

    /// Seed for sampled hyperbolicity.
    #[arg(long, env = "HYPERCENTER_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Quadruples sampled when the graph is too large for the exact scan.
    /// The estimate only sizes the round cap, so a modest default suffices.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Root label of the layering partition (defaults to internal vertex 0).
    #[arg(long)]
    pub root: Option<String>,

    /// Start label of the diametrical pair search (defaults to internal vertex 0).
    #[arg(long)]
    pub start: Option<String>,

    /// Write the `id,label` translation table here.
    #[arg(long)]
    pub labels_out: Option<PathBuf>,

    /// Write center labels, one per line (single p only).
    #[arg(long)]
    pub centers_out: Option<PathBuf>,

    /// Report 0 in the CSV `millis` column.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args, Debug)]
pub struct HyperbolicityArgs {
    #[command(flatten)]
    pub input: GraphArgs,

    /// Scan every quadruple; fails when the graph exceeds --max-n.
    #[arg(long, conflicts_with = "samples")]
    pub exact: bool,

    /// Sample this many quadruples instead of the exact scan.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: Option<u64>,

    #[arg(long, env = "HYPERCENTER_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Largest graph for the exact scan.
    #[arg(long, default_value_t = hypercenter::hyperbolicity::DEFAULT_EXACT_CAP)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
pub struct TreeApproxArgs {
    #[command(flatten)]
    pub input: GraphArgs,

    /// Root label (defaults to internal vertex 0).
    #[arg(long)]
    pub root: Option<String>,

    /// Write the cluster tree as CSV here.
    #[arg(long)]
    pub parents: Option<PathBuf>,

    /// Measure the error from this many evenly spaced sources instead of all vertices.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub sources: Option<u64>,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub input: GraphArgs,

    /// Center labels, one per line.
    pub centers: PathBuf,

    /// Also solve with this many centers and report both radii.
    #[arg(long)]
    pub compare_p: Option<usize>,
}

fn parse_half(s: &str) -> Result<HalfInt, String> {
    s.parse::<HalfInt>().map_err(|e| e.to_string())
}

fn parse_p_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid p {t:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let a = num(s)?;
            (a, a)
        }
    };
    if a == 0 || a > b {
        return Err(format!("p range {s:?} must satisfy 1 <= a <= b"));
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let result = match &cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Hyperbolicity(a) => commands::hyperbolicity(a),
        Command::TreeApprox(a) => commands::tree_approx(a),
        Command::Certify(a) => commands::certify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
