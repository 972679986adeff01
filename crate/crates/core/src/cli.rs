//! The `stickcut` command line.
//!
//! Exit codes: 0 on success, 1 on invalid input or parameters, 2 when
//! `verify` finds strategies that disagree.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::candidates::Bounds;
use crate::counting::{piece_curve, Instance};
use crate::error::{Error, Result};
use crate::instances;
use crate::rational::Rational;
use crate::solver::{
    self, oracle_rank, oracle_scan, Algorithm, PlanEntry, Solution, SolveOptions, Strategy,
    DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "stickcut", version, about = "Fewest cuts for k equal pieces from a set of sticks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance file and print a JSON report.
    Solve(SolveArgs),
    /// Run every strategy and both oracles and compare the results.
    Verify(VerifyArgs),
    /// Write an instance file from one of the built-in families.
    Gen(GenArgs),
    /// Time strategies over a sweep of instance sizes; CSV on stdout.
    Bench(BenchArgs),
    /// Piece and cut counts at every jump point; CSV on stdout.
    Curve(CurveArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Search,
    Select,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Search => Algorithm::Search,
            AlgorithmArg::Select => Algorithm::Select,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoundsArg {
    Quadratic,
    Linearithmic,
    Sandwich,
}

impl From<BoundsArg> for Bounds {
    fn from(b: BoundsArg) -> Self {
        match b {
            BoundsArg::Quadratic => Bounds::Quadratic,
            BoundsArg::Linearithmic => Bounds::Linearithmic,
            BoundsArg::Sandwich => Bounds::Sandwich,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Example,
    Primes,
    Random,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "select")]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "sandwich")]
    bounds: BoundsArg,
    /// Include per-stick piece and cut counts.
    #[arg(long)]
    plan: bool,
    #[arg(long, env = "STICKCUT_SEED")]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, env = "STICKCUT_SEED")]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Example family: size parameter (positive multiple of 4).
    #[arg(long)]
    m: Option<u64>,
    /// Example family: optimum to plant, a rational of at least m/2.
    #[arg(long)]
    x: Option<Rational>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    max_num: u64,
    #[arg(long, default_value_t = 100)]
    max_den: u64,
    #[arg(long, env = "STICKCUT_SEED")]
    seed: Option<u64>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "random")]
    family: Family,
    /// Comma-separated sizes: n for random and primes, m for example.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<u64>,
    /// Target count; defaults to the instance size n.
    #[arg(long)]
    k: Option<u64>,
    /// Example family optimum; defaults to m/2 + 1.
    #[arg(long)]
    x: Option<Rational>,
    #[arg(long, default_value_t = 10_000)]
    max_num: u64,
    #[arg(long, default_value_t = 100)]
    max_den: u64,
    #[arg(long, default_value_t = 3)]
    repeat: usize,
    /// Comma-separated strategies such as select+sandwich; all six by default.
    #[arg(long, value_delimiter = ',')]
    strategies: Vec<Strategy>,
    #[arg(long, env = "STICKCUT_SEED")]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[arg(long)]
    input: PathBuf,
    /// Smallest cut length to report; defaults to the k-th longest stick (or
    /// the shortest candidate when k exceeds the number of sticks).
    #[arg(long)]
    from: Option<Rational>,
}

/// The JSON document printed by `solve`.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub l_star: Rational,
    pub cuts: u64,
    pub pieces: u64,
    pub strategy: String,
    pub candidates: u64,
    pub early_answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plan: Option<Vec<PlanEntry>>,
}

impl From<&Solution> for SolveReport {
    fn from(s: &Solution) -> Self {
        SolveReport {
            l_star: s.l_star.clone(),
            cuts: s.cuts,
            pieces: s.pieces,
            strategy: s.meta.strategy.to_string(),
            candidates: s.meta.candidates,
            early_answer: s.meta.early_answer,
            plan: s.plan.clone(),
        }
    }
}

impl SolveReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
        Command::Curve(a) => cmd_curve(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn load(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|e| Error::Field {
        field: path.display().to_string(),
        message: e.to_string(),
    })?;
    instances::parse(&text)
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = load(&args.input)?;
    let strategy = Strategy::new(args.algorithm.into(), args.bounds.into());
    let options = SolveOptions {
        want_plan: args.plan,
        seed: args.seed.unwrap_or(DEFAULT_SEED),
    };
    let solution = solver::solve(&inst, strategy, &options)?;
    writeln!(out, "{}", SolveReport::from(&solution).to_json())?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let inst = load(&args.input)?;
    let options = SolveOptions {
        want_plan: false,
        seed: args.seed.unwrap_or(DEFAULT_SEED),
    };
    let reference = oracle_scan(&inst)?;
    let mut rows: Vec<(String, Rational, String)> = Vec::new();
    for strategy in Strategy::all() {
        let s = solver::solve(&inst, strategy, &options)?;
        rows.push((strategy.to_string(), s.l_star, s.meta.candidates.to_string()));
    }
    rows.push(("oracle-scan".into(), reference.clone(), "-".into()));
    rows.push(("oracle-rank".into(), oracle_rank(&inst)?, "-".into()));

    writeln!(out, "{:<20} {:>12} {:>10}", "strategy", "l_star", "candidates")?;
    for (name, l_star, candidates) in &rows {
        writeln!(out, "{name:<20} {:>12} {candidates:>10}", l_star.to_string())?;
    }
    let disagreeing: Vec<_> = rows.iter().filter(|(_, l, _)| *l != reference).collect();
    if disagreeing.is_empty() {
        return Ok(EXIT_OK);
    }
    for (name, l_star, _) in disagreeing {
        writeln!(err, "mismatch: {name} returned {l_star}, oracle-scan returned {reference}")?;
    }
    Ok(EXIT_DISAGREEMENT)
}

fn required<T: Clone>(value: &Option<T>, flag: &str, family: &str) -> Result<T> {
    value
        .clone()
        .ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for the {family} family")))
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    let inst = match args.family {
        Family::Example => instances::gen_example(
            required(&args.m, "m", "example")?,
            &required(&args.x, "x", "example")?,
        )?,
        Family::Primes => instances::gen_primes(
            required(&args.n, "n", "primes")?,
            required(&args.k, "k", "primes")?,
        )?,
        Family::Random => instances::gen_random(
            required(&args.n, "n", "random")?,
            required(&args.k, "k", "random")?,
            args.max_num,
            args.max_den,
            seed,
        )?,
    };
    let text = instances::serialize(&inst);
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn bench_instance(args: &BenchArgs, size: u64, seed: u64) -> Result<Instance> {
    match args.family {
        Family::Random => instances::gen_random(
            size as usize,
            args.k.unwrap_or(size),
            args.max_num,
            args.max_den,
            seed,
        ),
        Family::Primes => instances::gen_primes(size as usize, args.k.unwrap_or(size)),
        Family::Example => {
            let x = match &args.x {
                Some(x) => x.clone(),
                None => Rational::from(size / 2 + 1),
            };
            let inst = instances::gen_example(size, &x)?;
            match args.k {
                Some(k) => inst.with_k(k),
                None => Ok(inst),
            }
        }
    }
}

fn median(mut samples: Vec<u128>) -> u128 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if args.repeat == 0 {
        return Err(Error::InvalidParameter("--repeat must be at least 1".into()));
    }
    if args.sizes.contains(&0) {
        return Err(Error::InvalidParameter("sizes must be positive".into()));
    }
    let strategies: Vec<Strategy> = if args.strategies.is_empty() {
        Strategy::all().collect()
    } else {
        args.strategies.clone()
    };
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    writeln!(out, "strategy,n,k,candidates,nanos_median")?;
    for &size in &args.sizes {
        let inst = bench_instance(args, size, seed)?;
        let options = SolveOptions {
            want_plan: false,
            seed,
        };
        for &strategy in &strategies {
            let mut samples = Vec::with_capacity(args.repeat);
            let mut candidates = 0;
            for _ in 0..args.repeat {
                let start = Instant::now();
                let solution = solver::solve(&inst, strategy, &options)?;
                samples.push(start.elapsed().as_nanos());
                candidates = solution.meta.candidates;
            }
            writeln!(
                out,
                "{strategy},{},{},{candidates},{}",
                inst.len(),
                inst.k(),
                median(samples)
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_curve(args: &CurveArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = load(&args.input)?;
    let from = match &args.from {
        Some(from) => from.clone(),
        None => crate::candidates::compute_cutoff(&inst, DEFAULT_SEED)?.length,
    };
    writeln!(out, "l,l_approx,pieces,cuts")?;
    for point in piece_curve(&inst, &from)? {
        writeln!(
            out,
            "{},{},{},{}",
            point.length,
            point.length.approx_f64(),
            point.pieces,
            point.cuts
        )?;
    }
    Ok(EXIT_OK)
}
