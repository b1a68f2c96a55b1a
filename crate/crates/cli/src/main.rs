//! `symtc` - motion planning, map verification, and bound reporting on
//! spheres, projective and lens spaces.
//!
//! Exit codes: 0 success / all checks pass; 1 verification failure;
//! 2 usage error; 3 numerical-singularity error (diagonal pair, vanishing
//! map, degenerate input).

mod output;
mod run;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "symtc", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Plan a motion between two points of a space.
    Plan(PlanArgs),
    /// Run a verification suite against a map or planner.
    Verify(VerifyArgs),
    /// Report the known bounds for a space, with provenance per fact.
    Bounds(BoundsArgs),
    /// Emit one of the embedded comparison tables.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Master seed for all sampling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Residual tolerance for verification checks.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output format (text is human-oriented and unstable; json is the
    /// compatibility contract).
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct PlanArgs {
    /// Space descriptor: rp:<r> | lens:<n>,<m> | cp:<n> | sphere:<r>.
    #[arg(long)]
    pub space: String,
    /// Start point, comma-separated ambient coordinates (normalized).
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    /// End point, comma-separated ambient coordinates (normalized).
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    /// Driving bilinear map for the rotation planner:
    /// complex | quaternion | octonion | poly:<r>.
    #[arg(long)]
    pub map: Option<String>,
    /// Planner selection; inferred from the space and map when omitted.
    #[arg(long, value_enum)]
    pub planner: Option<PlannerChoice>,
    /// Number of path segments (the path carries n+1 samples).
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlannerChoice {
    Rotation,
    Lift,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// What to verify: all | psi | h | hopf | rotation | lift, or a map
    /// name (complex | quaternion | octonion | poly:<r> | lensbieq:<n>,<m>).
    #[arg(long)]
    pub target: String,
    /// Sphere dimension for the pair-map suites (psi, h).
    #[arg(long)]
    pub r: Option<usize>,
    /// Space for the planner suites (rotation, lift).
    #[arg(long)]
    pub space: Option<String>,
    /// Map for the hopf and rotation suites.
    #[arg(long)]
    pub map: Option<String>,
    /// Check one specific relation set (SYM | AXIAL2 | BIEQ_E | TCE | EMB)
    /// instead of the target's declared profile.
    #[arg(long)]
    pub relation: Option<String>,
    /// Sample count for pointwise checks.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Pair count for planner section checks.
    #[arg(long, default_value_t = 1_000)]
    pub pairs: usize,
    /// Path segments for planner section checks.
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Clone)]
pub struct BoundsArgs {
    /// Space descriptor: rp:<r> | lens:<n>,<m> | cp:<n> | sphere:<r>.
    #[arg(long)]
    pub space: String,
    /// Known-results data file (defaults to the SYMTC_DATA environment
    /// variable, then to the compiled-in records).
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    /// Which table to emit (1 or 2).
    pub which: u8,
    /// Family parameter range for table 2, e.g. `1..4` (inclusive) or `5`.
    #[arg(long, default_value = "1..4")]
    pub rho: String,
    /// Known-results data file for the external rows.
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run::dispatch(cli));
}
