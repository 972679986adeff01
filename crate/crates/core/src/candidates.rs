//! Finite candidate multisets for the optimal cut length.
//!
//! The optimum is always one of the jump points `L_i / j` of the piece
//! count. A [`Restriction`] picks, for each stick in an index set, a range
//! `lower..=upper` of denominators `j`; materializing it yields a
//! [`CandidateMultiset`]. Three admissible families are provided:
//!
//! * [`Bounds::Quadratic`]: `j ∈ [1, k]` on every stick of the cut-off set.
//! * [`Bounds::Linearithmic`]: the `r`-th longest stick only needs
//!   `j ≤ ⌈k / r⌉`, since all `r` longer sticks contribute as many pieces.
//! * [`Bounds::Sandwich`]: `j` ranges over `[p(L_i, l̄), p(L_i, l̲)]`, where
//!   `l̲ ≤ l* ≤ l̄` come from bounding the piece count by the total length.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::counting::{p_single, IndexSet, Instance};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::solver::{oracle_scan, select_kth_largest};

/// Upper limit on materialized candidates; beyond this the quadratic family
/// is simply not practical.
pub const MAX_CANDIDATES: u64 = 1 << 27;

/// Denominator range for one stick.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenominatorRange {
    pub index: usize,
    pub lower: u64,
    pub upper: u64,
}

impl DenominatorRange {
    /// Number of denominators in the range.
    pub fn count(&self) -> u64 {
        self.upper - self.lower + 1
    }
}

/// An index set with per-index denominator bounds `(I, f_l, f_u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    ranges: Vec<DenominatorRange>,
}

impl Restriction {
    pub fn new(ranges: Vec<DenominatorRange>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(ranges.len());
        for r in &ranges {
            if r.lower == 0 || r.upper < r.lower {
                return Err(Error::InvalidParameter(format!(
                    "stick {}: denominator range [{}, {}] is empty or starts at 0",
                    r.index, r.lower, r.upper
                )));
            }
            if !seen.insert(r.index) {
                return Err(Error::InvalidParameter(format!(
                    "stick {} appears twice in the restriction",
                    r.index
                )));
            }
        }
        Ok(Restriction { ranges })
    }

    /// Same lower and upper bound on every index.
    pub fn uniform(indices: &IndexSet, lower: u64, upper: u64) -> Result<Self> {
        Restriction::new(
            indices
                .iter()
                .map(|index| DenominatorRange { index, lower, upper })
                .collect(),
        )
    }

    pub fn ranges(&self) -> &[DenominatorRange] {
        &self.ranges
    }

    pub fn indices(&self) -> IndexSet {
        IndexSet::from_indices(self.ranges.iter().map(|r| r.index).collect())
    }

    /// `Σ (upper − lower + 1)`, the size of the materialized multiset.
    pub fn size(&self) -> u64 {
        self.ranges.iter().map(DenominatorRange::count).sum()
    }

    /// Candidates strictly above the lower bounds that were cut away,
    /// `Σ (lower − 1)`.
    pub fn skipped_above(&self) -> u64 {
        self.ranges.iter().map(|r| r.lower - 1).sum()
    }

    fn check_index_range(&self, inst: &Instance) -> Result<()> {
        match self.ranges.iter().find(|r| r.index >= inst.len()) {
            Some(r) => Err(Error::InvalidParameter(format!(
                "restriction refers to stick {} but the instance has {} sticks",
                r.index,
                inst.len()
            ))),
            None => Ok(()),
        }
    }
}

/// One candidate `L_index / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub value: Rational,
    pub index: usize,
    pub denominator: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CandidateMultiset {
    entries: Vec<Candidate>,
}

impl CandidateMultiset {
    pub fn entries(&self) -> &[Candidate] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter().map(|c| &c.value)
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.entries.into_iter().map(|c| c.value).collect()
    }

    /// Number of distinct candidate values.
    pub fn distinct_count(&self) -> usize {
        self.values().collect::<HashSet<_>>().len()
    }

    /// Occurrences of `value`.
    pub fn multiplicity(&self, value: &Rational) -> usize {
        self.values().filter(|v| *v == value).count()
    }
}

/// The bounding-function family used to restrict candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bounds {
    Quadratic,
    Linearithmic,
    Sandwich,
}

impl Bounds {
    pub const ALL: [Bounds; 3] = [Bounds::Quadratic, Bounds::Linearithmic, Bounds::Sandwich];

    pub fn name(self) -> &'static str {
        match self {
            Bounds::Quadratic => "quadratic",
            Bounds::Linearithmic => "linearithmic",
            Bounds::Sandwich => "sandwich",
        }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bounds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bounds::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown bounds family {s:?}")))
    }
}

/// Cut-off length `L_co`, the index set `I_co` of strictly longer sticks,
/// and the optimum if `L_co` already is optimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cutoff {
    pub length: Rational,
    pub indices: IndexSet,
    pub early_answer: Option<Rational>,
}

/// `L_co` is the `k`-th longest stick (counting duplicates) when `k ≤ n`,
/// otherwise `0`. `indices` is always `indices_above(L_co)`; it is only
/// meaningful for the algorithms when there is no early answer.
pub fn compute_cutoff(inst: &Instance, seed: u64) -> Result<Cutoff> {
    let k = inst.k();
    if k > inst.len() as u64 {
        return Ok(Cutoff {
            length: Rational::zero(),
            indices: IndexSet::full(inst.len()),
            early_answer: None,
        });
    }
    let mut scratch = inst.sticks().to_vec();
    let length = select_kth_largest(&mut scratch, k, seed)?;
    let early_answer = if is_optimal_cutoff(inst, &length)? {
        Some(length.clone())
    } else {
        None
    };
    let indices = inst.indices_above(&length);
    Ok(Cutoff {
        length,
        indices,
        early_answer,
    })
}

/// `L_co` is optimal iff it is feasible and the pieces lost just above it
/// (one per stick that `L_co` divides exactly) drop the count below `k`.
pub fn is_optimal_cutoff(inst: &Instance, cutoff: &Rational) -> Result<bool> {
    let pieces = inst.lpieces(cutoff)?;
    if pieces < inst.k() {
        return Ok(false);
    }
    let mut integral = 0u64;
    for stick in inst.sticks() {
        if stick.checked_div(cutoff)?.is_integer() {
            integral += 1;
        }
    }
    Ok(pieces - integral < inst.k())
}

/// `(I_co, 1, k)`.
pub fn restriction_quadratic(inst: &Instance, cutoff_indices: &IndexSet) -> Result<Restriction> {
    Restriction::uniform(cutoff_indices, 1, inst.k())
}

/// `(I_co, 1, ⌈k/r⌉)` where `r` is the 1-based rank of the stick in `I_co`
/// sorted by decreasing length (ties by ascending index).
pub fn restriction_linearithmic(inst: &Instance, cutoff_indices: &IndexSet) -> Result<Restriction> {
    let sticks = inst.sticks();
    let mut order: Vec<usize> = cutoff_indices.iter().collect();
    order.sort_by(|&a, &b| sticks[b].cmp(&sticks[a]).then(a.cmp(&b)));
    let k = inst.k();
    Restriction::new(
        order
            .into_iter()
            .enumerate()
            .map(|(rank, index)| DenominatorRange {
                index,
                lower: 1,
                upper: k.div_ceil(rank as u64 + 1),
            })
            .collect(),
    )
}

/// `(l̲, l̄)` with `l̲ = max(L_co, Σ_I/(k + |I|))` and `l̄ = Σ_I/k` over
/// `I = I_co`. `l̲` is feasible and every length above `l̄` is infeasible.
pub fn sandwich_interval(inst: &Instance, cutoff: &Cutoff) -> Result<(Rational, Rational)> {
    if cutoff.indices.is_empty() {
        return Err(Error::InvalidParameter(
            "sandwich bounds need a non-empty cut-off index set".into(),
        ));
    }
    let total = inst.total_length(&cutoff.indices);
    let k = inst.k();
    let spread = total.div_int(k + cutoff.indices.len() as u64);
    let lower = if cutoff.length > spread {
        cutoff.length.clone()
    } else {
        spread
    };
    let upper = total.div_int(k);
    Ok((lower, upper))
}

/// `(I_co, p(L_i, l̄), p(L_i, l̲))`.
pub fn restriction_sandwich(inst: &Instance, cutoff: &Cutoff) -> Result<Restriction> {
    let (lower_len, upper_len) = sandwich_interval(inst, cutoff)?;
    let sticks = inst.sticks();
    let mut ranges = Vec::with_capacity(cutoff.indices.len());
    for index in cutoff.indices.iter() {
        ranges.push(DenominatorRange {
            index,
            lower: p_single(&sticks[index], &upper_len)?,
            upper: p_single(&sticks[index], &lower_len)?,
        });
    }
    Restriction::new(ranges)
}

/// Builds the restriction of `bounds` for an instance whose cut-off carries
/// no early answer.
pub fn restriction(inst: &Instance, cutoff: &Cutoff, bounds: Bounds) -> Result<Restriction> {
    match bounds {
        Bounds::Quadratic => restriction_quadratic(inst, &cutoff.indices),
        Bounds::Linearithmic => restriction_linearithmic(inst, &cutoff.indices),
        Bounds::Sandwich => restriction_sandwich(inst, cutoff),
    }
}

/// Every `L_i / j` with `lower(i) ≤ j ≤ upper(i)`, duplicates kept.
pub fn materialize(inst: &Instance, restriction: &Restriction) -> Result<CandidateMultiset> {
    restriction.check_index_range(inst)?;
    let size = restriction.size();
    if size > MAX_CANDIDATES {
        return Err(Error::InvalidParameter(format!(
            "restriction has {size} candidates, more than the supported {MAX_CANDIDATES}"
        )));
    }
    let sticks = inst.sticks();
    let mut entries = Vec::with_capacity(size as usize);
    for r in restriction.ranges() {
        let stick = &sticks[r.index];
        entries.extend((r.lower..=r.upper).map(|j| Candidate {
            value: stick.div_int(j),
            index: r.index,
            denominator: j,
        }));
    }
    Ok(CandidateMultiset { entries })
}

/// Selection rank `k' = k − Σ (lower(i) − 1)` of the optimum within the
/// materialized multiset. Out of `[1, size]` means the restriction is not
/// admissible.
pub fn k_prime(restriction: &Restriction, k: u64) -> Result<u64> {
    let value = k as i128 - restriction.skipped_above() as i128;
    let size = restriction.size();
    if value < 1 || value > size as i128 {
        return Err(Error::Inadmissible {
            k_prime: value,
            size: size as usize,
        });
    }
    Ok(value as u64)
}

/// Checks the three admissibility conditions against the true optimum
/// (computed by the scanning oracle, so this is a test utility):
///
/// 1. `lower(i) = 1` or `L_i / (lower(i) − 1)` is infeasible,
/// 2. `L_i / upper(i)` is feasible,
/// 3. every stick outside the index set is feasible but not optimal.
pub fn check_admissible(inst: &Instance, restriction: &Restriction) -> Result<bool> {
    restriction.check_index_range(inst)?;
    let sticks = inst.sticks();
    for r in restriction.ranges() {
        let stick = &sticks[r.index];
        if r.lower > 1 && inst.feasible(&stick.div_int(r.lower - 1))? {
            return Ok(false);
        }
        if !inst.feasible(&stick.div_int(r.upper))? {
            return Ok(false);
        }
    }
    let optimum = oracle_scan(inst)?;
    let included = restriction.indices();
    for (index, stick) in sticks.iter().enumerate() {
        if included.contains(index) {
            continue;
        }
        if !inst.feasible(stick)? || *stick == optimum {
            return Ok(false);
        }
    }
    Ok(true)
}
