//! `semnet` — spreading, attention games, baselines and comparison runs
//! over weighted concept networks.
//!
//! Every command writes `summary.json` (and, where it applies, a CSV) into
//! the `--out` directory. Exit status: 0 on success, 2 for bad input, 3 when
//! a run itself fails.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(name = "semnet", version, about = "Semantic-network spreading and attention games")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every command.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Network JSON file
    #[arg(long, global = true)]
    pub network: Option<PathBuf>,
    /// Attenuation factor in [0, 1]
    #[arg(long, global = true, default_value_t = semnet::spreading::DEFAULT_DELTA)]
    pub delta: f64,
    /// Convergence threshold on a round's distribution change [default: 1e-3 * budget]
    #[arg(long, global = true)]
    pub epsilon: Option<f64>,
    /// Total activation energy
    #[arg(long, global = true, default_value_t = semnet::spreading::DEFAULT_BUDGET)]
    pub budget: f64,
    /// Uniform participation threshold; per-node thresholds apply when unset
    #[arg(long, global = true)]
    pub screen_threshold: Option<f64>,
    /// Minimum held energy for a node to fire [default: 1e-6 * budget]
    #[arg(long, global = true)]
    pub fire_threshold: Option<f64>,
    #[arg(long, global = true, default_value_t = semnet::spreading::DEFAULT_MAX_STEPS)]
    pub max_steps: usize,
    #[arg(long, global = true, default_value_t = semnet::game::DEFAULT_MAX_ROUNDS)]
    pub max_rounds: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Also write trace.csv
    #[arg(long, global = true)]
    pub trace: bool,
    /// Score relatedness from spreading alone
    #[arg(long, global = true)]
    pub no_game: bool,
    /// Output directory
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,
}

/// Where spreading starts.
#[derive(Args, Debug, Clone)]
pub struct Sources {
    /// Source node as LABEL or LABEL=ENERGY; repeatable. Unspecified
    /// energies split what the named ones leave of the budget.
    #[arg(long = "source", value_name = "LABEL[=ENERGY]")]
    pub sources: Vec<String>,
    /// Seed from node histories at this time instead of --source
    #[arg(long)]
    pub now: Option<f64>,
    #[arg(long, default_value_t = semnet::spreading::DEFAULT_DECAY)]
    pub decay: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Spread activation from the given sources
    Spread(Sources),
    /// Spread, then play the attention game on the result
    Game(Sources),
    /// Relatedness of two labelled nodes
    Relatedness {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Correlate model relatedness with human judgments
    Evaluate {
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "unit")]
        scale: ScaleArg,
    },
    /// Cobweb allocation from seeded starting values
    Cobweb(CobwebArgs),
    /// Game against a baseline over many seeds
    Compare(CompareArgs),
    /// Write a seeded synthetic network
    Generate {
        #[arg(long, default_value_t = 30)]
        nodes: usize,
        #[arg(long, default_value_t = 0.1)]
        edge_prob: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ScaleArg {
    Unit,
    FivePoint,
}

#[derive(Args, Debug, Clone)]
pub struct CobwebArgs {
    #[arg(long, default_value_t = 6)]
    pub nodes: u32,
    /// Demand of every node
    #[arg(long, default_value_t = 20.0)]
    pub demand: f64,
    #[arg(long, default_value_t = 0.5)]
    pub r: f64,
    #[arg(long, default_value_t = 1.0)]
    pub demand_slope: f64,
    #[arg(long, default_value_t = 1.0)]
    pub supply_slope: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Experiment {
    LoadBalance,
    Utilization,
    Convergence,
}

#[derive(Args, Debug, Clone)]
pub struct CompareArgs {
    #[arg(long, value_enum)]
    pub experiment: Experiment,
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    /// Network size; defaults to 50 for load-balance and 6 otherwise
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long, default_value_t = 0.1)]
    pub edge_prob: f64,
    /// Per-node demand in the allocation experiments
    #[arg(long, default_value_t = 20.0)]
    pub demand: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let result = match cli.command {
        Command::Spread(s) => commands::spread(c, &s),
        Command::Game(s) => commands::game(c, &s),
        Command::Relatedness { a, b } => commands::relatedness(c, &a, &b),
        Command::Evaluate { pairs, scale } => commands::evaluate(c, pairs.as_deref(), scale),
        Command::Cobweb(args) => commands::cobweb(c, &args),
        Command::Compare(args) => commands::compare(c, &args),
        Command::Generate { nodes, edge_prob } => commands::generate(c, nodes, edge_prob),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
