use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(name = "trifree", version, about = "Exact t(G) and b(G) on random graphs, cut structure, clique homology and sweeps")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
pub struct Global {
    /// Output file (JSON, CSV or edge list by subcommand); stdout if absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to TRIFREE_THREADS, then the available parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// JSON file with the constants epsilon, eta, alpha, c, k, zeta.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub epsilon: Option<f64>,
    #[arg(long, global = true)]
    pub eta: Option<f64>,
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    /// Threshold constant C.
    #[arg(long = "c", global = true)]
    pub c: Option<f64>,
    /// Large-deviation constant K.
    #[arg(long = "k-const", global = true)]
    pub k_const: Option<f64>,
    #[arg(long, global = true)]
    pub zeta: Option<f64>,
    /// Bounding-work budget per transversal search.
    #[arg(long, global = true)]
    pub work_budget: Option<u64>,
    /// Search-node budget per transversal search.
    #[arg(long, global = true)]
    pub node_budget: Option<u64>,
    /// Cap on optima enumerated by the all-optima decision.
    #[arg(long, global = true)]
    pub optima_cap: Option<u64>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Sample G(n, p) and write it as an edge list.
    Sample(SampleArgs),
    /// Exact t(G), b(G) and the all-optima verdict.
    Solve(SolveArgs),
    /// Low-degree sets, pair sets and inequality checks for a cut.
    AnalyzeCut(AnalyzeCutArgs),
    /// Betti numbers over GF(2), or a sweep of Pr(H_k = 0) with --n.
    Homology(HomologyArgs),
    /// Estimate Pr(t = b) over a grid of densities.
    Sweep(SweepArgs),
    /// Locate where the t = b rate climbs through a level.
    Threshold(ThresholdArgs),
    /// Find an odd cycle of edges lying in no triangle.
    Obstruct(ObstructArgs),
    /// Re-run the command recorded in a manifest.
    Rerun(RerunArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sample(_) => "sample",
            Command::Solve(_) => "solve",
            Command::AnalyzeCut(_) => "analyze-cut",
            Command::Homology(_) => "homology",
            Command::Sweep(_) => "sweep",
            Command::Threshold(_) => "threshold",
            Command::Obstruct(_) => "obstruct",
            Command::Rerun(_) => "rerun",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    T,
    B,
    Verdict,
    Tr,
    Br,
}

#[derive(Debug, Args, Serialize)]
pub struct SolveArgs {
    /// Edge-list file.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "t,b")]
    pub what: Vec<Quantity>,
    /// Clique size for tr and br.
    #[arg(long, default_value_t = 4)]
    pub r: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct AnalyzeCutArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Density used in the thresholds.
    #[arg(long)]
    pub p: f64,
    /// Side A of the cut as comma-separated vertices; a maximum cut if absent.
    #[arg(long, value_delimiter = ',')]
    pub side_a: Option<Vec<usize>>,
    /// Also run the chain t ≤ |Π| + 2|F₁ ∩ Q| ≤ b with its lemma reports.
    #[arg(long)]
    pub chain: bool,
    /// Also run the degree and density diagnostics, seeded by --seed.
    #[arg(long)]
    pub diagnostics: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct HomologyArgs {
    /// Edge-list file for a single graph.
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    pub graph: Option<PathBuf>,
    /// Dimension k.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Vertex count for a sweep over G(n, p).
    #[arg(long)]
    pub n: Option<usize>,
    /// Sweep densities: comma-separated values or geom:LO:HI:POINTS.
    #[arg(long, requires = "n")]
    pub grid: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Weak,
    Strong,
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: usize,
    /// `auto`, comma-separated values, or geom:LO:HI:POINTS.
    #[arg(long, default_value = "auto")]
    pub grid: String,
    /// Geometric points of the auto grid before the anchors are added.
    #[arg(long, default_value_t = 10)]
    pub points: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Weak)]
    pub mode: ModeArg,
}

#[derive(Debug, Args, Serialize)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub level: f64,
    #[arg(long, default_value_t = 8)]
    pub coarse_points: usize,
    #[arg(long, default_value_t = 6)]
    pub bisection_steps: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct ObstructArgs {
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct RerunArgs {
    /// A JSON output or a `.manifest.json` file.
    pub manifest: PathBuf,
}
