use hyperpa::analysis::{
    analytic_beta, analytic_mk, ccdf as ccdf_points, fit_power_law_with, project as clique_expand, Estimator,
    FitReport, KMin, ObservedGraph,
};
use hyperpa::generator::{evolve, evolve_graph_baseline, BaselineConfig, GeneratorConfig};
use hyperpa::io::{
    ingest_labeled, read_histogram_csv, read_hypergraph, significant, write_ccdf_csv, write_fit_report, write_graph,
    write_histogram_csv, write_hypergraph, write_labels,
};
use hyperpa::{EdgeSizeDistribution, Hypergraph};
use rayon::prelude::*;

use crate::error::CliError;
use crate::paths::{indexed_path, input_error, open_input, with_output};
use crate::{
    AnalyticArgs, CcdfArgs, CompareArgs, DegreesArgs, EdgeSizesArgs, FitArgs, GenerateArgs, IngestArgs, ModelArgs,
    ProjectArgs, TrialArgs,
};

fn config_from(model: &ModelArgs, size: EdgeSizeDistribution) -> GeneratorConfig {
    GeneratorConfig::new(model.p, model.steps, size)
        .seed(model.seed)
        .y0(model.y0 as usize)
        .cap(!model.no_cap)
        .cap_exponent(model.cap_exponent)
}

/// Runs `job` for every trial index on `trials.jobs` threads, keeping order.
fn run_trials<T, F>(trials: &TrialArgs, job: F) -> Result<Vec<T>, CliError>
where
    T: Send,
    F: Fn(u64) -> Result<T, CliError> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(trials.jobs as usize)
        .build()
        .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    pool.install(|| (0..trials.trials).into_par_iter().map(&job).collect())
}

fn read_hypergraph_file(path: &str) -> Result<Hypergraph, CliError> {
    read_hypergraph(open_input(path)?).map_err(input_error(path))
}

pub fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let config = config_from(&args.model, args.size.clone());
    config.validate()?;
    let many = args.trials.trials > 1;
    if many && args.out == "-" {
        return Err(CliError::Usage(
            "--out - cannot hold more than one trial; pass a file path".into(),
        ));
    }
    let summaries = run_trials(&args.trials, |trial| {
        let h = evolve(&config.clone().stream(trial))?;
        let path = if many {
            indexed_path(&args.out, trial)
        } else {
            args.out.clone()
        };
        with_output(&path, |out| write_hypergraph(&h, out))?;
        Ok(format!(
            "{path}: vertices={} edges={} total_degree={}",
            h.num_vertices(),
            h.num_edges(),
            h.total_degree()
        ))
    })?;
    for line in summaries {
        eprintln!("{line}");
    }
    Ok(())
}

pub fn analytic(args: AnalyticArgs) -> Result<(), CliError> {
    if args.p.is_none() && args.sweep_p.is_none() {
        return Err(CliError::Usage("pass --p, --sweep-p, or both".into()));
    }
    if args.kmax.is_some() && args.p.is_none() {
        return Err(CliError::Usage("--kmax needs --p".into()));
    }
    let mut lines = Vec::new();
    if let Some(p) = args.p {
        lines.push(format!("beta={}", analytic_beta(p, args.mu)?));
        if let Some(k_max) = args.kmax {
            lines.push("k,M_k".to_string());
            for (i, m) in analytic_mk(p, args.mu, k_max as usize)?.iter().enumerate() {
                lines.push(format!("{},{m}", i + 1));
            }
        }
    }
    if let Some(n) = args.sweep_p {
        lines.push("p,beta_graph,beta_hypergraph".to_string());
        for i in 1..=n {
            let p = i as f64 / n as f64;
            let graph = analytic_beta(p, 2.0)?;
            let hyper = analytic_beta(p, args.mu)?;
            lines.push(format!("{p},{graph},{hyper}"));
        }
    }
    with_output("-", |out| lines.iter().try_for_each(|l| writeln!(out, "{l}")))
}

pub fn degrees(args: DegreesArgs) -> Result<(), CliError> {
    let h = read_hypergraph_file(&args.input)?;
    let hist = h.degree_histogram();
    with_output(&args.out, |out| write_histogram_csv(&hist, out))
}

pub fn project(args: ProjectArgs) -> Result<(), CliError> {
    let h = read_hypergraph_file(&args.input)?;
    let g = clique_expand(&h, args.simple);
    with_output(&args.out, |out| write_graph(&g, out))?;
    eprintln!(
        "vertices={} edges={} average_degree={}",
        g.num_vertices(),
        g.edges().len(),
        significant(g.average_degree(), 6)
    );
    Ok(())
}

pub fn fit(args: FitArgs) -> Result<(), CliError> {
    let hist = read_histogram_csv(open_input(&args.input)?).map_err(input_error(&args.input))?;
    let report = fit_power_law_with(&hist, args.kmin, args.estimator)?;
    with_output(&args.out, |out| write_fit_report(&report, out))
}

pub fn edge_sizes(args: EdgeSizesArgs) -> Result<(), CliError> {
    let h = read_hypergraph_file(&args.input)?;
    let hist = h.edge_size_histogram().at_least(args.min_size);
    with_output(&args.out, |out| write_histogram_csv(&hist, out))
}

pub fn ccdf(args: CcdfArgs) -> Result<(), CliError> {
    let hist = read_histogram_csv(open_input(&args.input)?).map_err(input_error(&args.input))?;
    let points = ccdf_points(&hist)?;
    with_output(&args.out, |out| write_ccdf_csv(&points, out))
}

pub fn ingest(args: IngestArgs) -> Result<(), CliError> {
    let (h, labels) = ingest_labeled(open_input(&args.input)?, args.delimiter).map_err(input_error(&args.input))?;
    with_output(&args.out, |out| write_hypergraph(&h, out))?;
    if let Some(path) = &args.labels {
        with_output(path, |out| write_labels(&labels, out))?;
    }
    eprintln!(
        "vertices={} edges={} rank={}",
        h.num_vertices(),
        h.num_edges(),
        h.rank()
    );
    Ok(())
}

struct Side {
    report: FitReport,
    average_degree: f64,
}

fn analyse(g: &ObservedGraph, k_min: KMin, prefix: &str) -> Result<Side, CliError> {
    let hist = g.degree_histogram();
    let report = fit_power_law_with(&hist, k_min, Estimator::DiscreteMle)?;
    let points = ccdf_points(&hist)?;
    with_output(&format!("{prefix}_ccdf.csv"), |out| write_ccdf_csv(&points, out))?;
    with_output(&format!("{prefix}_fit.txt"), |out| write_fit_report(&report, out))?;
    Ok(Side {
        report,
        average_degree: g.average_degree(),
    })
}

pub fn compare(args: CompareArgs) -> Result<(), CliError> {
    let p = args.model.p;
    let config = config_from(&args.model, EdgeSizeDistribution::Constant(args.d as usize));
    config.validate()?;
    let baseline = BaselineConfig::new(p, args.edges_per_step as usize, args.model.steps, args.model.seed);
    let many = args.trials.trials > 1;

    let results = run_trials(&args.trials, |trial| {
        let prefix = if many {
            format!("{}t{trial}_", args.out_prefix)
        } else {
            args.out_prefix.clone()
        };
        let h = evolve(&config.clone().stream(trial))?;
        let hyper = analyse(&clique_expand(&h, false), args.kmin, &format!("{prefix}hypergraph"))?;
        let g = evolve_graph_baseline(&baseline.clone().stream(trial))?;
        let base = analyse(&g, args.kmin, &format!("{prefix}baseline"))?;
        Ok((hyper, base))
    })?;

    let mut lines = Vec::new();
    for (trial, (hyper, base)) in results.iter().enumerate() {
        let tag = if many { format!("trial={trial} ") } else { String::new() };
        lines.push(format!(
            "{tag}beta_hat_hypergraph={} beta_hat_baseline={} k_min_hypergraph={} k_min_baseline={} avg_degree_hypergraph={} avg_degree_baseline={}",
            significant(hyper.report.beta_hat, 6),
            significant(base.report.beta_hat, 6),
            hyper.report.k_min,
            base.report.k_min,
            significant(hyper.average_degree, 6),
            significant(base.average_degree, 6),
        ));
    }
    lines.push(format!(
        "beta_analytic_hypergraph={}",
        significant(analytic_beta(p, args.d as f64)?, 6)
    ));
    lines.push(format!(
        "beta_analytic_graph={}",
        significant(analytic_beta(p, 2.0)?, 6)
    ));
    with_output("-", |out| lines.iter().try_for_each(|l| writeln!(out, "{l}")))
}
