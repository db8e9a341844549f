//! Benchmark sweeps: generated instances × algorithms × scaling factors.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Arc};
use std::thread;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::Args;
use pareto_sum::exact::{bucketsort_compare, sort_compare};
use pareto_sum::generators::generate;
use pareto_sum::pareto::points_of;
use pareto_sum::{
    approximate_pareto_sum, evaluate_quality, pareto_sum, weak_approximate_pareto_sum, Algorithm,
    GenKind, GenSpec, ParetoSet,
};

use crate::{AlgoOpts, KindArg, UsageError};

pub const CSV_HEADER: [&str; 14] = [
    "instance_id",
    "kind",
    "n_p",
    "n_q",
    "W",
    "algo",
    "mode",
    "t",
    "output_size",
    "delta_measured",
    "pruned_fraction",
    "time_nanos",
    "repeats",
    "seed",
];

pub const THREADS_ENV: &str = "PARETO_SUM_THREADS";

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    suite: KindArg,
    /// Comma-separated instance sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',', required = true)]
    algos: Vec<String>,
    /// Comma-separated scaling factors; 0 runs the exact algorithm.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    t_values: Vec<i64>,
    /// Use the weak approximation for t > 0.
    #[arg(long)]
    weak: bool,
    /// Instances per size, seeded seed, seed + 1, ...
    #[arg(long, default_value_t = 1)]
    instances: u64,
    #[arg(long, default_value_t = 2)]
    range_factor: u64,
    #[arg(long, default_value_t = 10)]
    repeats: u32,
    #[arg(long, default_value_t = 3600)]
    timeout_secs: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    csv: PathBuf,
    #[command(flatten)]
    opts: AlgoOpts,
}

struct Instance {
    id: String,
    kind: GenKind,
    seed: u64,
    p: ParetoSet,
    q: ParetoSet,
    /// Exact sum for quality evaluation, when any t > 0 is requested.
    exact: Option<ParetoSet>,
}

struct Cell {
    instance: Arc<Instance>,
    algo: Algorithm,
    t: i64,
}

struct RunOutput {
    points: ParetoSet,
    pruned_fraction: Option<f64>,
}

enum Outcome {
    Done { mean_nanos: u128, out: RunOutput },
    TimedOut,
    Failed(String),
}

fn mode_name(t: i64, weak: bool) -> &'static str {
    match (t, weak) {
        (0, _) => "exact",
        (_, false) => "strong",
        (_, true) => "weak",
    }
}

fn compute(inst: &Instance, algo: &Algorithm, t: i64, weak: bool) -> pareto_sum::Result<RunOutput> {
    if t == 0 {
        let out = pareto_sum(&inst.p, &inst.q, algo)?;
        return Ok(RunOutput {
            points: ParetoSet::new(points_of(&out.points))?,
            pruned_fraction: out.pruned_fraction,
        });
    }
    let r = if weak {
        weak_approximate_pareto_sum(&inst.p, &inst.q, t, algo)?
    } else {
        approximate_pareto_sum(&inst.p, &inst.q, t, algo)?
    };
    Ok(RunOutput {
        points: r.points,
        pruned_fraction: None,
    })
}

/// Runs one cell `repeats` times, each on its own thread so a run that
/// exceeds the timeout can be abandoned.
fn run_cell(cell: &Cell, weak: bool, repeats: u32, timeout: Duration) -> Outcome {
    let mut total = 0u128;
    let mut last = None;
    for _ in 0..repeats.max(1) {
        let (tx, rx) = mpsc::channel();
        let inst = Arc::clone(&cell.instance);
        let algo = cell.algo.clone();
        let t = cell.t;
        thread::spawn(move || {
            let start = Instant::now();
            let out = compute(&inst, &algo, t, weak);
            let _ = tx.send((start.elapsed().as_nanos(), out));
        });
        match rx.recv_timeout(timeout) {
            Ok((nanos, Ok(out))) => {
                total += nanos;
                last = Some(out);
            }
            Ok((_, Err(e))) => return Outcome::Failed(e.to_string()),
            Err(_) => return Outcome::TimedOut,
        }
    }
    Outcome::Done {
        mean_nanos: total / repeats.max(1) as u128,
        out: last.expect("at least one run"),
    }
}

fn row(cell: &Cell, outcome: &Outcome, weak: bool, repeats: u32) -> Vec<String> {
    let inst = &cell.instance;
    let (size, delta, pruned, time) = match outcome {
        Outcome::Done { mean_nanos, out } => {
            let delta = if cell.t == 0 {
                "0".to_string()
            } else {
                inst.exact
                    .as_ref()
                    .and_then(|e| evaluate_quality(e, &out.points).ok())
                    .map(|r| r.delta_measured.to_string())
                    .unwrap_or_default()
            };
            (
                out.points.len().to_string(),
                delta,
                out.pruned_fraction
                    .map(|f| format!("{f:.6}"))
                    .unwrap_or_default(),
                mean_nanos.to_string(),
            )
        }
        Outcome::TimedOut | Outcome::Failed(_) => (
            String::new(),
            String::new(),
            String::new(),
            "-1".to_string(),
        ),
    };
    vec![
        inst.id.clone(),
        inst.kind.name().to_string(),
        inst.p.len().to_string(),
        inst.q.len().to_string(),
        inst.p.bound().max(inst.q.bound()).to_string(),
        cell.algo.name().to_string(),
        mode_name(cell.t, weak).to_string(),
        if cell.t == 0 {
            String::new()
        } else {
            cell.t.to_string()
        },
        size,
        delta,
        pruned,
        time,
        repeats.to_string(),
        inst.seed.to_string(),
    ]
}

fn exact_reference(p: &ParetoSet, q: &ParetoSet) -> Option<ParetoSet> {
    let pts = match bucketsort_compare(p, q) {
        Ok(out) => out,
        Err(_) => sort_compare(p, q),
    };
    ParetoSet::new(points_of(&pts)).ok()
}

fn worker_count(cells: usize) -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(1)
        .clamp(1, cells.max(1))
}

/// Opens the CSV for appending, writing the header only to a new or empty
/// file and refusing files with a different header.
fn open_csv(path: &PathBuf) -> Result<csv::Writer<fs::File>> {
    let existing = fs::metadata(path).map(|m| m.len() > 0).unwrap_or(false);
    if existing {
        let mut first = String::new();
        BufReader::new(fs::File::open(path)?).read_line(&mut first)?;
        if first.trim_end() != CSV_HEADER.join(",") {
            bail!(
                "{} has a different header; refusing to append",
                path.display()
            );
        }
    }
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(file);
    if !existing {
        w.write_record(CSV_HEADER)?;
        w.flush()?;
    }
    Ok(w)
}

pub fn run(args: BenchArgs) -> Result<()> {
    if args.t_values.iter().any(|&t| t < 0) {
        return Err(UsageError("--t-values must be non-negative".into()).into());
    }
    let max_n = args.sizes.iter().copied().max().unwrap_or(1);
    let algos = args
        .algos
        .iter()
        .map(|name| args.opts.build(name, max_n))
        .collect::<Result<Vec<_>>>()?;
    let approx_requested = args.t_values.iter().any(|&t| t > 0);
    if approx_requested && !args.weak {
        if let Some(a) = algos.iter().find(|a| !a.reports_witnesses()) {
            return Err(UsageError(format!(
                "strong approximation needs witnesses, which {} does not report; add --weak",
                a.name()
            ))
            .into());
        }
    }
    let mut writer = open_csv(&args.csv)?;

    let mut cells = Vec::new();
    for &n in &args.sizes {
        for idx in 0..args.instances {
            let seed = args.seed.wrapping_add(idx);
            let spec = GenSpec::with_range_factor(args.suite.into(), n, args.range_factor, seed);
            let (p, q) =
                generate(&spec).with_context(|| format!("generating n={n} seed={seed}"))?;
            let exact = if approx_requested {
                exact_reference(&p, &q)
            } else {
                None
            };
            let instance = Arc::new(Instance {
                id: format!("{}-n{}-s{}", spec.kind.name(), n, seed),
                kind: spec.kind,
                seed,
                p,
                q,
                exact,
            });
            for algo in &algos {
                for &t in &args.t_values {
                    cells.push(Cell {
                        instance: Arc::clone(&instance),
                        algo: algo.clone(),
                        t,
                    });
                }
            }
        }
    }

    let timeout = Duration::from_secs(args.timeout_secs);
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Vec<String>)>();
    let workers = worker_count(cells.len());
    thread::scope(|s| -> Result<()> {
        for _ in 0..workers {
            let tx = tx.clone();
            let (cells, next) = (&cells, &next);
            let (weak, repeats) = (args.weak, args.repeats);
            s.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(cell) = cells.get(i) else { break };
                let outcome = run_cell(cell, weak, repeats, timeout);
                match &outcome {
                    Outcome::TimedOut => eprintln!(
                        "timeout: {} {} t={}",
                        cell.instance.id,
                        cell.algo.name(),
                        cell.t
                    ),
                    Outcome::Failed(msg) => eprintln!(
                        "failed: {} {} t={}: {msg}",
                        cell.instance.id,
                        cell.algo.name(),
                        cell.t
                    ),
                    Outcome::Done { .. } => {}
                }
                if tx.send((i, row(cell, &outcome, weak, repeats))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        // Rows are written in cell order regardless of completion order.
        let mut pending = BTreeMap::new();
        let mut expected = 0usize;
        for (i, record) in rx {
            pending.insert(i, record);
            while let Some(record) = pending.remove(&expected) {
                writer.write_record(&record)?;
                writer.flush()?;
                expected += 1;
            }
        }
        Ok(())
    })?;
    println!("rows={} csv={}", cells.len(), args.csv.display());
    Ok(())
}
