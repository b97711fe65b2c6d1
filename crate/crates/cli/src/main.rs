//! `hyperpa`: generate preferential-attachment hypergraphs and analyse their
//! degree distributions.
//!
//! Exit codes: 0 on success, 2 on usage or validation errors, 1 on I/O and
//! other runtime failures. Every path flag accepts `-` for stdin/stdout.

mod commands;
mod error;
mod paths;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperpa::analysis::{Estimator, KMin};
use hyperpa::EdgeSizeDistribution;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "hyperpa", version, about = "Preferential-attachment hypergraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grow a hypergraph and write it as one hyperedge per line.
    Generate(GenerateArgs),
    /// Print the predicted exponent, the M_k table, or an exponent-vs-p sweep.
    Analytic(AnalyticArgs),
    /// Occurrence-degree histogram of a hypergraph or graph file.
    Degrees(DegreesArgs),
    /// Clique-expand a hypergraph into its observed graph.
    Project(ProjectArgs),
    /// Fit a discrete power law to a histogram CSV.
    Fit(FitArgs),
    /// Histogram of hyperedge cardinalities.
    EdgeSizes(EdgeSizesArgs),
    /// Complementary cumulative distribution of a histogram CSV.
    Ccdf(CcdfArgs),
    /// Build a hypergraph from delimiter-separated label records.
    Ingest(IngestArgs),
    /// Projected uniform hypergraph against the baseline graph process.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Number of time steps.
    #[arg(long)]
    steps: u64,
    /// Probability of a vertex-arrival event, in (0, 1].
    #[arg(long, value_parser = parse_probability)]
    p: f64,
    /// Cardinality of the initial hyperedge.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    y0: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Clamp Y_t into [2, max(2, floor(t^cap_exponent))] (default).
    #[arg(long, overrides_with = "no_cap")]
    cap: bool,
    /// Draw Y_t without clamping.
    #[arg(long = "no-cap")]
    no_cap: bool,
    #[arg(long, default_value_t = hyperpa::generator::DEFAULT_CAP_EXPONENT)]
    cap_exponent: f64,
}

#[derive(Debug, Args)]
struct TrialArgs {
    /// Independent runs, one RNG stream each.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Worker threads for --trials.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// const:<d> | uniform:<lo>:<hi> | zipf:<exponent>:<lo>:<hi>
    #[arg(long, value_parser = parse_size)]
    size: EdgeSizeDistribution,
    /// With --trials N > 1, run i is written to <stem>.<i>.<ext>.
    #[arg(long)]
    out: String,
    #[command(flatten)]
    trials: TrialArgs,
}

#[derive(Debug, Args)]
struct AnalyticArgs {
    #[arg(long, value_parser = parse_probability)]
    p: Option<f64>,
    /// Expected hyperedge cardinality.
    #[arg(long)]
    mu: f64,
    /// Also print M_1..M_kmax as CSV.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    kmax: Option<u64>,
    /// Print N rows p,beta_graph,beta_hypergraph for p = 1/N..1.
    #[arg(long = "sweep-p", value_parser = clap::value_parser!(u64).range(1..))]
    sweep_p: Option<u64>,
}

#[derive(Debug, Args)]
struct DegreesArgs {
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Debug, Args)]
struct ProjectArgs {
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value = "-")]
    out: String,
    /// Drop self loops and parallel edges.
    #[arg(long)]
    simple: bool,
}

#[derive(Debug, Args)]
struct FitArgs {
    /// Histogram CSV with header degree,count.
    #[arg(long, default_value = "-")]
    input: String,
    /// Tail cutoff, or `auto` to minimise the KS distance.
    #[arg(long, default_value = "5", value_parser = parse_kmin)]
    kmin: KMin,
    /// mle (exact discrete likelihood) or approx (continuity-corrected closed form).
    #[arg(long, default_value = "mle", value_parser = parse_estimator)]
    estimator: Estimator,
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Debug, Args)]
struct EdgeSizesArgs {
    #[arg(long, default_value = "-")]
    input: String,
    /// Ignore hyperedges smaller than this.
    #[arg(long, default_value_t = 3)]
    min_size: u64,
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Debug, Args)]
struct CcdfArgs {
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Debug, Args)]
struct IngestArgs {
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value_t = ';')]
    delimiter: char,
    #[arg(long, default_value = "-")]
    out: String,
    /// Write the label of vertex i on line i+1.
    #[arg(long)]
    labels: Option<String>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Uniform hyperedge cardinality, at least 2.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    d: u64,
    /// Edges added per step by the baseline graph process.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    edges_per_step: u64,
    /// Tail cutoff for both fits, or `auto`.
    #[arg(long, default_value = "20", value_parser = parse_kmin)]
    kmin: KMin,
    /// Prefix of the CCDF and fit files.
    #[arg(long)]
    out_prefix: String,
    #[command(flatten)]
    trials: TrialArgs,
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if p > 0.0 && p <= 1.0 {
        Ok(p)
    } else {
        Err(format!("p must lie in (0, 1], got {p}"))
    }
}

fn parse_size(s: &str) -> Result<EdgeSizeDistribution, String> {
    s.parse().map_err(|e: hyperpa::sizes::SizeDistError| e.to_string())
}

fn parse_kmin(s: &str) -> Result<KMin, String> {
    if s == "auto" {
        return Ok(KMin::Auto);
    }
    match s.parse::<u64>() {
        Ok(k) if k >= 1 => Ok(KMin::Fixed(k)),
        _ => Err(format!("expected a positive integer or `auto`, got {s:?}")),
    }
}

fn parse_estimator(s: &str) -> Result<Estimator, String> {
    match s {
        "mle" => Ok(Estimator::DiscreteMle),
        "approx" => Ok(Estimator::ContinuityCorrected),
        _ => Err(format!("expected `mle` or `approx`, got {s:?}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(), CliError> = match cli.command {
        Command::Generate(args) => commands::generate(args),
        Command::Analytic(args) => commands::analytic(args),
        Command::Degrees(args) => commands::degrees(args),
        Command::Project(args) => commands::project(args),
        Command::Fit(args) => commands::fit(args),
        Command::EdgeSizes(args) => commands::edge_sizes(args),
        Command::Ccdf(args) => commands::ccdf(args),
        Command::Ingest(args) => commands::ingest(args),
        Command::Compare(args) => commands::compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
