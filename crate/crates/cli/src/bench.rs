//! Repeated timing of several solvers over a set of instances.
//!
//! Every (dataset, algorithm, repeat) cell owns its own solver state, so
//! cells may run on a thread pool; results are gathered and reported in
//! dataset-then-algorithm order regardless of completion order.

use std::path::PathBuf;
use std::time::Duration;

use clap::Args;
use minecc::hypergraph::DEFAULT_PAIR_CAP;
use minecc::report::{Fraction, RatioReport};
use minecc::{solve, Algorithm, ColoredHypergraph, Error, SolveOptions, SolveResult};
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::{load, parse_algorithm, CliError, CliResult};
use crate::{write_output, Format};

#[derive(Args)]
pub struct BenchArgs {
    /// Glob pattern of instance files.
    #[arg(long)]
    pub inputs: String,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm, default_value = "colorpair,localratio")]
    pub algs: Vec<Algorithm>,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    /// Per-run limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
    #[arg(long, default_value_t = DEFAULT_PAIR_CAP)]
    pub pair_cap: usize,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub dataset: String,
    pub algorithm: String,
    /// `ok`, `timed out`, `guard` or `error`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub repeats: usize,
    pub runtime_mean_s: Option<f64>,
    pub runtime_std_s: Option<f64>,
    pub objective: Option<u64>,
    pub lower_bound: Option<Fraction>,
    pub ratio: Option<RatioReport>,
    pub peak_mem_estimate_bytes: Option<usize>,
}

type Cell = Result<SolveResult, Error>;

fn run_cell(h: &ColoredHypergraph, alg: Algorithm, args: &BenchArgs, limit: Option<Duration>) -> Cell {
    let mut opts = SolveOptions {
        pair_cap: args.pair_cap,
        deadline: None,
    };
    if let Some(l) = limit {
        opts = opts.with_time_limit(l);
    }
    let r = solve(h, alg, &opts)?;
    // Solvers without internal deadline checks are judged after the fact.
    match limit {
        Some(l) if r.runtime > l => Err(Error::TimedOut),
        _ => Ok(r),
    }
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn summarize(dataset: &str, alg: Algorithm, runs: Vec<Cell>) -> BenchRow {
    let mut row = BenchRow {
        dataset: dataset.to_string(),
        algorithm: alg.name().to_string(),
        status: "ok".into(),
        message: None,
        repeats: runs.len(),
        runtime_mean_s: None,
        runtime_std_s: None,
        objective: None,
        lower_bound: None,
        ratio: None,
        peak_mem_estimate_bytes: None,
    };
    if let Some(err) = runs.iter().find_map(|r| r.as_ref().err()) {
        row.status = match err {
            Error::TimedOut => "timed out",
            e if e.is_guard() => "guard",
            _ => "error",
        }
        .into();
        row.message = Some(err.to_string());
        return row;
    }
    let runs: Vec<SolveResult> = runs.into_iter().map(Result::unwrap).collect();
    let first = &runs[0];
    if runs.iter().any(|r| r.objective != first.objective) {
        row.status = "error".into();
        row.message = Some("objective differs between repeats".into());
        return row;
    }
    let times: Vec<f64> = runs.iter().map(|r| r.runtime.as_secs_f64()).collect();
    let (mean, std) = mean_std(&times);
    row.runtime_mean_s = Some(mean);
    row.runtime_std_s = Some(std);
    row.objective = Some(first.objective);
    row.lower_bound = first.lower_bound.map(Fraction::from);
    row.ratio = first.ratio().map(RatioReport::from);
    row.peak_mem_estimate_bytes = runs.iter().map(|r| r.peak_mem_estimate).max();
    row
}

pub fn bench_rows(args: &BenchArgs) -> Result<Vec<BenchRow>, CliError> {
    if args.repeats == 0 {
        return Err(CliError::input("--repeats must be at least 1"));
    }
    let limit = args
        .time_limit
        .map(|s| {
            Duration::try_from_secs_f64(s).map_err(|_| CliError::input(format!("invalid time limit {s}")))
        })
        .transpose()?;
    let mut paths: Vec<PathBuf> = glob::glob(&args.inputs)
        .map_err(|e| CliError::input(format!("bad pattern: {e}")))?
        .filter_map(Result::ok)
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::input(format!("no inputs match {}", args.inputs)));
    }
    let datasets: Vec<(String, ColoredHypergraph)> = paths
        .iter()
        .map(|p| {
            let name = p
                .file_stem()
                .map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned());
            load(p).map(|h| (name, h))
        })
        .collect::<Result<_, _>>()?;

    let cells: Vec<(usize, usize, usize)> = (0..datasets.len())
        .flat_map(|d| (0..args.algs.len()).flat_map(move |a| (0..args.repeats).map(move |r| (d, a, r))))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.parallel.max(1))
        .build()
        .map_err(|e| CliError::failure(e.to_string()))?;
    let mut results: Vec<Cell> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(d, a, _)| run_cell(&datasets[d].1, args.algs[a], args, limit))
            .collect()
    });

    let mut rows = Vec::new();
    for (name, _) in &datasets {
        for &alg in &args.algs {
            let runs: Vec<Cell> = results.drain(..args.repeats).collect();
            rows.push(summarize(name, alg, runs));
        }
    }
    Ok(rows)
}

fn tsv(rows: &[BenchRow]) -> String {
    let mut out = String::from(
        "dataset\talgorithm\tstatus\truntime_s\tobjective\tlower_bound\tratio\tpeak_mem_estimate\n",
    );
    for r in rows {
        let runtime = match (r.runtime_mean_s, r.runtime_std_s) {
            (Some(m), Some(s)) => format!("{m:.3}±{s:.3}"),
            _ => match (r.status.as_str(), &r.message) {
                ("guard", Some(m)) => format!("guard: {m}"),
                _ => r.status.clone(),
            },
        };
        let dash = || "-".to_string();
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.dataset,
            r.algorithm,
            r.status,
            runtime,
            r.objective.map_or_else(dash, |v| v.to_string()),
            r.lower_bound
                .map_or_else(dash, |f| format!("{}/{}", f.numerator, f.denominator)),
            r.ratio.as_ref().map_or_else(dash, |x| x.decimal.clone()),
            r.peak_mem_estimate_bytes
                .map_or_else(dash, |b| format!("{b} (estimate)")),
        ));
    }
    out
}

pub fn run(args: BenchArgs) -> CliResult {
    let rows = bench_rows(&args)?;
    let text = match args.format {
        Format::Tsv => tsv(&rows),
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
    };
    write_output(args.output.as_ref(), &text)
}
