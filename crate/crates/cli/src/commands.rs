use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::Args;
use minecc::hypergraph::DEFAULT_PAIR_CAP;
use minecc::report::{verify_report, SolveReport};
use minecc::{exact, generate_random, parse_hypergraph, solve as run_solver, Algorithm, ColoredHypergraph};
use minecc::{GeneratorParams, SolveOptions};

use crate::{exit, write_output, Format};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: exit::INPUT,
            message: message.into(),
        }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        CliError {
            code: exit::FAILURE,
            message: message.into(),
        }
    }
}

impl From<minecc::Error> for CliError {
    fn from(e: minecc::Error) -> Self {
        let code = match &e {
            e if e.is_guard() => exit::GUARD,
            minecc::Error::Parse { .. }
            | minecc::Error::Invalid(_)
            | minecc::Error::WeightOverflow => exit::INPUT,
            _ => exit::FAILURE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

pub type CliResult = Result<(), CliError>;

pub fn load(path: &Path) -> Result<ColoredHypergraph, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::input(format!("cannot open {}: {e}", path.display())))?;
    parse_hypergraph(BufReader::new(file))
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: minecc::Error| e.to_string())
}

#[derive(Args)]
pub struct SolveArgs {
    /// colorpair, vcflow, localratio or exact.
    #[arg(long, value_parser = parse_algorithm)]
    pub alg: Algorithm,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Accepted for harness compatibility; every solver is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Maximum number of stored bad pairs for vcflow.
    #[arg(long, default_value_t = DEFAULT_PAIR_CAP)]
    pub pair_cap: usize,
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Also compute the exact optimum and the empirical ratio against it.
    #[arg(long)]
    pub with_exact: bool,
}

pub fn solve(args: SolveArgs) -> CliResult {
    let h = load(&args.input)?;
    let mut opts = SolveOptions {
        pair_cap: args.pair_cap,
        deadline: None,
    };
    if let Some(secs) = args.time_limit {
        let limit = Duration::try_from_secs_f64(secs)
            .map_err(|_| CliError::input(format!("invalid time limit {secs}")))?;
        opts = opts.with_time_limit(limit);
    }
    let result = run_solver(&h, args.alg, &opts)?;
    let exact_value = if args.with_exact {
        Some(exact::brute_force_minecc(&h)?.value)
    } else {
        None
    };
    let report = SolveReport::new(&h, &result, exact_value);
    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Tsv => format!("{}\n{}\n", SolveReport::tsv_header(), report.to_tsv_row()),
    };
    write_output(args.output.as_ref(), &text)
}

#[derive(Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Count bad edge pairs (superlinear).
    #[arg(long)]
    pub bad_pairs: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

pub fn stats(args: StatsArgs) -> CliResult {
    let h = load(&args.input)?;
    let s = h.compute_stats(args.bad_pairs);
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&s).expect("stats serialize") + "\n",
        Format::Tsv => {
            let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            format!(
                "n\tm\tk\tr\tmu\tbad_pairs\tapprox_factor\tlp_ecc\tlp_vc\tlp_cp\n\
                 {}\t{}\t{}\t{}\t{}\t{}\t{:.3}\t{}\t{}\t{}\n",
                s.n,
                s.m,
                s.k,
                s.r,
                s.mu,
                opt(s.bad_pairs),
                s.approx_factor,
                s.lp_ecc_constraints,
                opt(s.lp_vc_constraints),
                s.lp_cp_constraints
            )
        }
    };
    print!("{text}");
    Ok(())
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// JSON report written by `solve`.
    #[arg(long)]
    pub solution: PathBuf,
}

pub fn verify(args: VerifyArgs) -> CliResult {
    let h = load(&args.input)?;
    let text = std::fs::read_to_string(&args.solution).map_err(|e| {
        CliError::input(format!("cannot read {}: {e}", args.solution.display()))
    })?;
    let report = SolveReport::from_json(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", args.solution.display())))?;
    let v = verify_report(&h, &report);
    for c in &v.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        println!("{tag}  {}: {}", c.name, c.detail);
    }
    if v.passed() {
        Ok(())
    } else {
        let names: Vec<_> = v.failures().map(|c| c.name).collect();
        Err(CliError::failure(format!("verification failed: {}", names.join(", "))))
    }
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long)]
    pub nodes: usize,
    #[arg(long)]
    pub edges: usize,
    #[arg(long)]
    pub colors: u32,
    #[arg(long)]
    pub max_size: usize,
    #[arg(long, default_value_t = 1)]
    pub max_weight: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub fn generate(args: GenArgs) -> CliResult {
    let h = generate_random(GeneratorParams {
        nodes: args.nodes,
        edges: args.edges,
        colors: args.colors,
        max_size: args.max_size,
        max_weight: args.max_weight,
        seed: args.seed,
    })?;
    write_output(args.output.as_ref(), &h.to_canonical_string())
}
