mod bench;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pareto_sum::generators::{generate, DEFAULT_PERTURB_FRACTION};
use pareto_sum::io::{format_points, read_instance, read_result, write_instance, write_result};
use pareto_sum::minplus::{CdxzConfig, DEFAULT_BASE_THRESHOLD};
use pareto_sum::pareto::points_of;
use pareto_sum::{
    approximate_pareto_sum, evaluate_quality, pareto_sum, weak_approximate_pareto_sum, Algorithm,
    GenKind, GenSpec, ParetoSet,
};

/// Misuse of the command line detected after parsing; exits with status 2.
#[derive(Debug)]
pub(crate) struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser)]
#[command(
    name = "pareto-sum",
    version,
    about = "Exact and approximate Pareto sums of 2-D point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a benchmark instance.
    Gen(GenArgs),
    /// Compute the exact Pareto sum.
    Exact(ExactArgs),
    /// Compute an additive 2t-approximation.
    Approx(ApproxArgs),
    /// Compare an approximate result with the exact one.
    Eval(EvalArgs),
    /// Run a benchmark sweep and append CSV rows.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum KindArg {
    Range,
    NearLinear,
    NearCurved,
}

impl From<KindArg> for GenKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Range => GenKind::Range,
            KindArg::NearLinear => GenKind::NearLinear,
            KindArg::NearCurved => GenKind::NearCurved,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    n: usize,
    /// W = range_factor * n.
    #[arg(long, default_value_t = 2, conflicts_with = "w")]
    range_factor: u64,
    /// Explicit coordinate range W.
    #[arg(long)]
    w: Option<u64>,
    /// c in f(x) = c / x for near-curved instances.
    #[arg(long)]
    curve_constant: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_PERTURB_FRACTION)]
    perturb_fraction: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

/// Options shared by every command that runs an algorithm.
#[derive(Args, Clone, Debug)]
pub(crate) struct AlgoOpts {
    /// Convex-pruning base case: rectangles with both sides at most this long are solved directly.
    #[arg(long, default_value_t = DEFAULT_BASE_THRESHOLD)]
    pub cp_base: usize,
    #[arg(long, default_value_t = 25)]
    pub cdxz_scale: u64,
    #[arg(long, default_value_t = 2)]
    pub cdxz_prime: u64,
    /// Use scale ceil(n^0.2) and a random prime in [n^0.4, 2 n^0.4] instead.
    #[arg(long)]
    pub cdxz_theoretical: bool,
    /// Seed for the random prime of --cdxz-theoretical.
    #[arg(long, default_value_t = 0)]
    pub cdxz_seed: u64,
}

impl AlgoOpts {
    pub fn build(&self, name: &str, n: usize) -> Result<Algorithm> {
        let base: Algorithm = name.parse().map_err(|e| UsageError(format!("{e}")))?;
        Ok(match base {
            Algorithm::ConvCp { .. } => Algorithm::ConvCp {
                base_threshold: self.cp_base.max(1),
            },
            Algorithm::ConvCdxz(_) => {
                let cfg = if self.cdxz_theoretical {
                    CdxzConfig::theoretical(n, self.cdxz_seed)
                } else {
                    CdxzConfig::new(self.cdxz_scale, self.cdxz_prime)
                        .map_err(|e| UsageError(format!("{e}")))?
                };
                Algorithm::ConvCdxz(cfg)
            }
            other => other,
        })
    }
}

fn algo_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(Algorithm::NAMES)
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_parser = algo_names())]
    algo: String,
    /// Result file; printed to stdout after the summary when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    opts: AlgoOpts,
}

#[derive(Args)]
struct ApproxArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_parser = algo_names())]
    algo: String,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    t: i64,
    /// Weak approximation (rounds up, works with every algorithm).
    #[arg(long)]
    weak: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    opts: AlgoOpts,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    exact: PathBuf,
    #[arg(long)]
    approx: PathBuf,
}

fn load(path: &PathBuf) -> Result<(ParetoSet, ParetoSet)> {
    read_instance(path).with_context(|| format!("reading instance {}", path.display()))
}

fn emit(points: &[pareto_sum::Point], out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            write_result(path, points).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{}", format_points(points));
            Ok(())
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    let spec = GenSpec {
        kind: args.kind.into(),
        n: args.n,
        w: args.w.unwrap_or(args.range_factor * args.n as u64),
        curve_constant: args.curve_constant,
        perturb_fraction: args.perturb_fraction,
        seed: args.seed,
    };
    if !(0.0..=1.0).contains(&spec.perturb_fraction) {
        return Err(UsageError("--perturb-fraction must lie in [0, 1]".into()).into());
    }
    let (p, q) = generate(&spec)?;
    write_instance(&args.out, &p, &q).with_context(|| format!("writing {}", args.out.display()))?;
    println!("n={} m={} W={}", p.len(), q.len(), p.bound().max(q.bound()));
    Ok(())
}

fn cmd_exact(args: ExactArgs) -> Result<()> {
    let (p, q) = load(&args.input)?;
    let algo = args.opts.build(&args.algo, p.len().max(q.len()))?;
    let start = Instant::now();
    let out = pareto_sum(&p, &q, &algo)?;
    let elapsed = start.elapsed().as_nanos();
    let mut summary = format!("k={} time_ns={elapsed}", out.points.len());
    if let Some(f) = out.pruned_fraction {
        summary.push_str(&format!(" pruned_fraction={f:.6}"));
    }
    println!("{summary}");
    emit(&points_of(&out.points), &args.out)
}

fn cmd_approx(args: ApproxArgs) -> Result<()> {
    let (p, q) = load(&args.input)?;
    let algo = args.opts.build(&args.algo, p.len().max(q.len()))?;
    if !args.weak && !algo.reports_witnesses() {
        return Err(UsageError(format!(
            "strong approximation needs witnesses, which {} does not report; add --weak",
            algo.name()
        ))
        .into());
    }
    let start = Instant::now();
    let result = if args.weak {
        weak_approximate_pareto_sum(&p, &q, args.t, &algo)?
    } else {
        approximate_pareto_sum(&p, &q, args.t, &algo)?
    };
    let elapsed = start.elapsed().as_nanos();
    println!(
        "k={} t={} guarantee={} mode={} time_ns={elapsed}",
        result.points.len(),
        result.t,
        result.guarantee,
        result.mode
    );
    emit(result.points.points(), &args.out)
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let exact =
        read_result(&args.exact).with_context(|| format!("reading {}", args.exact.display()))?;
    let approx =
        read_result(&args.approx).with_context(|| format!("reading {}", args.approx.display()))?;
    let report = evaluate_quality(&exact, &approx)?;
    println!(
        "delta={} size_ratio={}",
        report.delta_measured, report.size_ratio
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Approx(a) => cmd_approx(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Bench(a) => bench::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
