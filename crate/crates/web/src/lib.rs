//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns JSON text so the page needs no glue
//! beyond `JSON.parse`. The `*_json` functions hold the logic and are
//! usable (and tested) natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use stickcut::candidates::{self, compute_cutoff, materialize, restriction, sandwich_interval};
use stickcut::cli::SolveReport;
use stickcut::counting::piece_curve;
use stickcut::instances;
use stickcut::solver::{self, SolveOptions, Strategy, DEFAULT_SEED};
use stickcut::{Bounds, Instance, Rational};

/// Candidate lists longer than this are truncated in the output.
const SHOWN_CANDIDATES: usize = 200;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Solves `instance` with a strategy such as `select+sandwich`; the plan is
/// always included.
pub fn solve_json(instance: &str, strategy: &str) -> Result<String, String> {
    let inst = instances::parse(instance).map_err(err)?;
    let strategy: Strategy = strategy.parse().map_err(err)?;
    let options = SolveOptions {
        want_plan: true,
        seed: DEFAULT_SEED,
    };
    let solution = solver::solve(&inst, strategy, &options).map_err(err)?;
    Ok(SolveReport::from(&solution).to_json())
}

#[derive(Serialize)]
struct Point {
    l: Rational,
    x: f64,
    pieces: u64,
    cuts: u64,
}

/// The piece and cut step functions from `from` (or the smallest candidate
/// when empty) upwards.
pub fn curve_json(instance: &str, from: &str) -> Result<String, String> {
    let inst = instances::parse(instance).map_err(err)?;
    let from = if from.trim().is_empty() {
        inst.sticks().iter().min().cloned().expect("instances are non-empty").div_int(inst.k())
    } else {
        from.trim().parse().map_err(err)?
    };
    let points: Vec<Point> = piece_curve(&inst, &from)
        .map_err(err)?
        .into_iter()
        .map(|p| Point {
            x: p.length.approx_f64(),
            l: p.length,
            pieces: p.pieces,
            cuts: p.cuts,
        })
        .collect();
    serde_json::to_string(&points).map_err(err)
}

#[derive(Serialize)]
struct CandidateReport {
    bounds: &'static str,
    cutoff: Rational,
    cutoff_indices: Vec<usize>,
    early_answer: Option<Rational>,
    interval: Option<(Rational, Rational)>,
    size: u64,
    distinct: usize,
    k_prime: Option<u64>,
    shown: Vec<Rational>,
}

fn candidate_report(inst: &Instance, bounds: Bounds) -> stickcut::Result<CandidateReport> {
    let cutoff = compute_cutoff(inst, DEFAULT_SEED)?;
    let mut report = CandidateReport {
        bounds: bounds.name(),
        cutoff: cutoff.length.clone(),
        cutoff_indices: cutoff.indices.as_slice().to_vec(),
        early_answer: cutoff.early_answer.clone(),
        interval: None,
        size: 0,
        distinct: 0,
        k_prime: None,
        shown: Vec::new(),
    };
    if cutoff.early_answer.is_some() {
        return Ok(report);
    }
    if bounds == Bounds::Sandwich {
        report.interval = Some(sandwich_interval(inst, &cutoff)?);
    }
    let r = restriction(inst, &cutoff, bounds)?;
    report.k_prime = candidates::k_prime(&r, inst.k()).ok();
    let multiset = materialize(inst, &r)?;
    report.size = multiset.len() as u64;
    report.distinct = multiset.distinct_count();
    let mut values = multiset.into_values();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.truncate(SHOWN_CANDIDATES);
    report.shown = values;
    Ok(report)
}

/// The restricted candidate set that `bounds` produces for `instance`.
pub fn candidates_json(instance: &str, bounds: &str) -> Result<String, String> {
    let inst = instances::parse(instance).map_err(err)?;
    let bounds: Bounds = bounds.parse().map_err(err)?;
    let report = candidate_report(&inst, bounds).map_err(err)?;
    serde_json::to_string(&report).map_err(err)
}

/// An instance document from a built-in family: `example` takes `(m, x)`,
/// `primes` takes `(n, k)`.
pub fn generate_json(family: &str, first: &str, second: &str) -> Result<String, String> {
    let inst = match family {
        "example" => {
            let m: u64 = first.trim().parse().map_err(err)?;
            let x: Rational = second.trim().parse().map_err(err)?;
            instances::gen_example(m, &x)
        }
        "primes" => {
            let n: usize = first.trim().parse().map_err(err)?;
            let k: u64 = second.trim().parse().map_err(err)?;
            instances::gen_primes(n, k)
        }
        other => return Err(format!("unknown family {other:?}")),
    }
    .map_err(err)?;
    Ok(instances::serialize(&inst))
}

#[wasm_bindgen]
pub fn solve(instance: &str, strategy: &str) -> Result<String, JsValue> {
    solve_json(instance, strategy).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn curve(instance: &str, from: &str) -> Result<String, JsValue> {
    curve_json(instance, from).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn candidate_set(instance: &str, bounds: &str) -> Result<String, JsValue> {
    candidates_json(instance, bounds).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate(family: &str, first: &str, second: &str) -> Result<String, JsValue> {
    generate_json(family, first, second).map_err(|e| JsValue::from_str(&e))
}
