//! End-to-end solvers for the optimal cut length `l*`.
//!
//! Both algorithms start the same way: find the cut-off length `L_co` (the
//! `k`-th longest stick), return it right away if it is already optimal, and
//! otherwise build a restricted candidate multiset over the longer sticks.
//!
//! * [`Algorithm::Search`] sorts the deduplicated candidates and binary
//!   searches for the largest feasible one.
//! * [`Algorithm::Select`] keeps duplicates and selects the `k'`-th largest
//!   candidate directly, where `k'` discounts the candidates removed above
//!   each stick's lower denominator bound.

mod oracle;
mod select;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use oracle::{oracle_rank, oracle_scan};
pub use select::select_kth_largest;

use crate::candidates::{self, compute_cutoff, k_prime, materialize, Bounds, Cutoff};
use crate::counting::{c_single, m_single, Instance};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5717_c4c7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Search,
    Select,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Search, Algorithm::Select];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Search => "search",
            Algorithm::Select => "select",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An algorithm paired with a bounding family; written `select+sandwich`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Strategy {
    pub algorithm: Algorithm,
    pub bounds: Bounds,
}

impl Strategy {
    pub const fn new(algorithm: Algorithm, bounds: Bounds) -> Self {
        Strategy { algorithm, bounds }
    }

    /// All six combinations, search strategies first.
    pub fn all() -> impl Iterator<Item = Strategy> {
        Algorithm::ALL
            .into_iter()
            .flat_map(|a| Bounds::ALL.into_iter().map(move |b| Strategy::new(a, b)))
    }
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::new(Algorithm::Select, Bounds::Sandwich)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.algorithm, self.bounds)
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('+')
            .ok_or_else(|| Error::InvalidParameter(format!("strategy {s:?} is not ALGORITHM+BOUNDS")))?;
        Ok(Strategy::new(a.parse()?, b.parse()?))
    }
}

/// Per-stick outcome of cutting with `l*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlanEntry {
    /// Position of the stick in the instance (0-based).
    pub index: usize,
    /// Maximal pieces cut from the stick.
    #[serde(rename = "m")]
    pub pieces: u64,
    /// Cuts performed on the stick.
    #[serde(rename = "c")]
    pub cuts: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveMeta {
    pub strategy: Strategy,
    /// Size of the candidate multiset (0 when the cut-off length was optimal).
    pub candidates: u64,
    pub early_answer: bool,
    /// Selection rank used by [`Algorithm::Select`].
    pub k_prime: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub l_star: Rational,
    pub cuts: u64,
    pub pieces: u64,
    pub plan: Option<Vec<PlanEntry>>,
    pub meta: SolveMeta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub want_plan: bool,
    pub seed: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            want_plan: false,
            seed: DEFAULT_SEED,
        }
    }
}

fn finish(inst: &Instance, l_star: Rational, meta: SolveMeta) -> Result<Solution> {
    Ok(Solution {
        cuts: inst.cuts(&l_star)?,
        pieces: inst.lpieces(&l_star)?,
        l_star,
        plan: None,
        meta,
    })
}

fn early(inst: &Instance, cutoff: &Cutoff, strategy: Strategy) -> Result<Option<Solution>> {
    match &cutoff.early_answer {
        Some(l_star) => finish(
            inst,
            l_star.clone(),
            SolveMeta {
                strategy,
                candidates: 0,
                early_answer: true,
                k_prime: None,
            },
        )
        .map(Some),
        None => Ok(None),
    }
}

/// Binary search over the sorted, deduplicated candidates.
///
/// Values at or below `L_co` are known to be feasible; above it only the
/// sticks in `I_co` can contribute pieces.
pub fn search_lstar(inst: &Instance, bounds: Bounds, seed: u64) -> Result<Solution> {
    let strategy = Strategy::new(Algorithm::Search, bounds);
    let cutoff = compute_cutoff(inst, seed)?;
    if let Some(solution) = early(inst, &cutoff, strategy)? {
        return Ok(solution);
    }
    let restriction = candidates::restriction(inst, &cutoff, bounds)?;
    let multiset = materialize(inst, &restriction)?;
    let size = multiset.len() as u64;
    let mut values = multiset.into_values();
    values.sort_unstable();
    values.dedup();

    let feasible = |l: &Rational| -> Result<bool> {
        if cutoff.length.is_positive() && *l <= cutoff.length {
            Ok(true)
        } else {
            inst.feasible_restricted(&cutoff.indices, l)
        }
    };
    // Ascending order: feasible prefix, infeasible suffix.
    let (mut lo, mut hi) = (0, values.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible(&values[mid])? {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if lo == 0 {
        return Err(Error::Inadmissible {
            k_prime: 0,
            size: size as usize,
        });
    }
    let l_star = values.swap_remove(lo - 1);
    finish(
        inst,
        l_star,
        SolveMeta {
            strategy,
            candidates: size,
            early_answer: false,
            k_prime: None,
        },
    )
}

/// Rank selection of the `k'`-th largest candidate.
pub fn select_lstar(inst: &Instance, bounds: Bounds, seed: u64) -> Result<Solution> {
    let strategy = Strategy::new(Algorithm::Select, bounds);
    let cutoff = compute_cutoff(inst, seed)?;
    if let Some(solution) = early(inst, &cutoff, strategy)? {
        return Ok(solution);
    }
    let restriction = candidates::restriction(inst, &cutoff, bounds)?;
    let rank = k_prime(&restriction, inst.k())?;
    let mut values = materialize(inst, &restriction)?.into_values();
    let size = values.len() as u64;
    let l_star = select_kth_largest(&mut values, rank, seed.wrapping_add(1))?;
    finish(
        inst,
        l_star,
        SolveMeta {
            strategy,
            candidates: size,
            early_answer: false,
            k_prime: Some(rank),
        },
    )
}

/// Runs `strategy` and attaches the per-stick plan if requested.
pub fn solve(inst: &Instance, strategy: Strategy, options: &SolveOptions) -> Result<Solution> {
    let mut solution = match strategy.algorithm {
        Algorithm::Search => search_lstar(inst, strategy.bounds, options.seed)?,
        Algorithm::Select => select_lstar(inst, strategy.bounds, options.seed)?,
    };
    if options.want_plan {
        solution.plan = Some(plan(inst, &solution.l_star)?);
    }
    Ok(solution)
}

/// Maximal pieces and cuts for every stick at cut length `l`.
pub fn plan(inst: &Instance, l: &Rational) -> Result<Vec<PlanEntry>> {
    inst.sticks()
        .iter()
        .enumerate()
        .map(|(index, stick)| {
            Ok(PlanEntry {
                index,
                pieces: m_single(stick, l)?,
                cuts: c_single(stick, l)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_example, gen_primes};
    use crate::rational::rat;

    fn l_ex() -> Instance {
        gen_example(4, &rat(2, 1)).unwrap()
    }

    fn ints(values: &[i64], k: u64) -> Instance {
        Instance::new(values.iter().map(|&v| Rational::from(v)).collect(), k).unwrap()
    }

    #[test]
    fn search_on_running_example() {
        let s = search_lstar(&l_ex(), Bounds::Sandwich, DEFAULT_SEED).unwrap();
        assert_eq!((s.l_star, s.cuts, s.pieces), (rat(2, 1), 8, 10));
        assert_eq!(s.meta.candidates, 6);
        let s = search_lstar(&l_ex(), Bounds::Quadratic, DEFAULT_SEED).unwrap();
        assert_eq!(s.meta.candidates, 27);
        assert_eq!(s.l_star, rat(2, 1));
    }

    #[test]
    fn select_on_running_example() {
        let expected_k_prime = [(Bounds::Sandwich, 2, 6), (Bounds::Quadratic, 9, 27), (Bounds::Linearithmic, 9, 17)];
        for (bounds, kp, size) in expected_k_prime {
            let s = select_lstar(&l_ex(), bounds, DEFAULT_SEED).unwrap();
            assert_eq!(s.l_star, rat(2, 1), "{bounds}");
            assert_eq!(s.meta.k_prime, Some(kp), "{bounds}");
            assert_eq!(s.meta.candidates, size, "{bounds}");
        }
    }

    #[test]
    fn early_answer_and_tiny_instances() {
        for strategy in Strategy::all() {
            let s = solve(&ints(&[4, 2, 2, 2], 4), strategy, &SolveOptions::default()).unwrap();
            assert_eq!(s.l_star, rat(2, 1));
            assert!(s.meta.early_answer);
            assert_eq!(s.meta.candidates, 0);

            let s = solve(&ints(&[5], 3), strategy, &SolveOptions::default()).unwrap();
            assert_eq!(s.l_star, rat(5, 3));
            assert!(!s.meta.early_answer);

            let s = solve(&ints(&[5], 1), strategy, &SolveOptions::default()).unwrap();
            assert_eq!((s.l_star, s.cuts), (rat(5, 1), 0));
        }
    }

    #[test]
    fn plan_of_running_example() {
        let opts = SolveOptions {
            want_plan: true,
            ..SolveOptions::default()
        };
        let s = solve(&l_ex(), Strategy::default(), &opts).unwrap();
        let plan = s.plan.unwrap();
        let head: Vec<_> = plan[..3].iter().map(|e| (e.pieces, e.cuts)).collect();
        assert_eq!(head, vec![(4, 3), (3, 3), (3, 2)]);
        assert!(plan[3..].iter().all(|e| e.pieces == 0 && e.cuts == 0));
        assert_eq!(plan.iter().map(|e| e.cuts).sum::<u64>(), s.cuts);
        assert_eq!(plan.iter().map(|e| e.pieces).sum::<u64>(), s.pieces);
    }

    #[test]
    fn primes_agree_across_strategies() {
        let inst = gen_primes(6, 5).unwrap();
        let expected = oracle_scan(&inst).unwrap();
        for strategy in Strategy::all() {
            let s = solve(&inst, strategy, &SolveOptions::default()).unwrap();
            assert_eq!(s.l_star, expected, "{strategy}");
        }
    }

    #[test]
    fn strategy_names() {
        let names: Vec<_> = Strategy::all().map(|s| s.to_string()).collect();
        assert_eq!(
            names,
            [
                "search+quadratic",
                "search+linearithmic",
                "search+sandwich",
                "select+quadratic",
                "select+linearithmic",
                "select+sandwich"
            ]
        );
        for s in Strategy::all() {
            assert_eq!(s.to_string().parse::<Strategy>().unwrap(), s);
        }
        assert!("select".parse::<Strategy>().is_err());
        assert!("bogo+sandwich".parse::<Strategy>().is_err());
    }
}
