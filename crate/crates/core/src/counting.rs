//! Piece and cut counting for a fixed cut length.
//!
//! For a stick `L` and cut length `l`, cutting off `l`-sized pieces until
//! every remainder is at most `l` yields `m(L, l) = ⌊L/l⌋` maximal pieces,
//! `p(L, l) = ⌈L/l⌉` pieces in total and `c(L, l) = ⌈L/l⌉ − 1` cuts.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Maximal pieces of length `l` obtainable from a stick of length `stick`.
pub fn m_single(stick: &Rational, l: &Rational) -> Result<u64> {
    Ok(stick.floor_quot(l)?)
}

/// Total pieces (maximal plus at most one shorter remainder).
pub fn p_single(stick: &Rational, l: &Rational) -> Result<u64> {
    Ok(stick.ceil_quot(l)?)
}

/// Cuts performed on one stick.
pub fn c_single(stick: &Rational, l: &Rational) -> Result<u64> {
    Ok(p_single(stick, l)?.saturating_sub(1))
}

/// A multiset of sticks (kept in storage order, duplicates allowed) together
/// with the number `k` of equal pieces that has to be produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    sticks: Vec<Rational>,
    k: u64,
}

/// Positions into [`Instance::sticks`], ascending and without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    /// Sorts and deduplicates `indices`.
    pub fn from_indices(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        IndexSet(indices)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

/// Outcome of cutting with a fixed length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cutting {
    /// The length is feasible; this many cuts are needed.
    Cuts(u64),
    /// Fewer than `k` maximal pieces can be produced.
    Infeasible,
}

impl Instance {
    pub fn new(sticks: Vec<Rational>, k: u64) -> Result<Self> {
        if sticks.is_empty() {
            return Err(Error::NoSticks);
        }
        if k == 0 {
            return Err(Error::ZeroTarget);
        }
        if let Some((index, length)) = sticks.iter().enumerate().find(|(_, s)| !s.is_positive()) {
            return Err(Error::NonPositiveLength {
                index,
                length: length.clone(),
            });
        }
        Ok(Instance { sticks, k })
    }

    pub fn sticks(&self) -> &[Rational] {
        &self.sticks
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Number of sticks `n`.
    pub fn len(&self) -> usize {
        self.sticks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sticks.is_empty()
    }

    pub fn with_k(&self, k: u64) -> Result<Self> {
        Instance::new(self.sticks.clone(), k)
    }

    pub fn max_stick(&self) -> &Rational {
        self.sticks.iter().max().expect("instances are non-empty")
    }

    /// `m(𝐋, l)`, the number of maximal pieces over all sticks.
    pub fn lpieces(&self, l: &Rational) -> Result<u64> {
        sum_over(self.sticks.iter(), l, m_single)
    }

    /// `c(𝐋, l)`, the number of cuts over all sticks.
    pub fn cuts(&self, l: &Rational) -> Result<u64> {
        sum_over(self.sticks.iter(), l, c_single)
    }

    /// Whether `l` yields at least `k` maximal pieces. Stops summing as soon
    /// as `k` is reached.
    pub fn feasible(&self, l: &Rational) -> Result<bool> {
        reaches(self.sticks.iter(), l, self.k)
    }

    pub fn canonical_cutting(&self, l: &Rational) -> Result<Cutting> {
        if self.feasible(l)? {
            Ok(Cutting::Cuts(self.cuts(l)?))
        } else {
            Ok(Cutting::Infeasible)
        }
    }

    /// Indices of all sticks strictly longer than `bound`.
    pub fn indices_above(&self, bound: &Rational) -> IndexSet {
        IndexSet(
            self.sticks
                .iter()
                .enumerate()
                .filter(|(_, s)| *s > bound)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// `m(𝐋, l)` summed over `indices` only.
    ///
    /// Equals [`Instance::lpieces`] when `indices = indices_above(bound)` and
    /// `l > bound`; the caller owns that precondition.
    pub fn lpieces_restricted(&self, indices: &IndexSet, l: &Rational) -> Result<u64> {
        sum_over(indices.iter().map(|i| &self.sticks[i]), l, m_single)
    }

    /// Feasibility test over `indices` only; same precondition as
    /// [`Instance::lpieces_restricted`].
    pub fn feasible_restricted(&self, indices: &IndexSet, l: &Rational) -> Result<bool> {
        reaches(indices.iter().map(|i| &self.sticks[i]), l, self.k)
    }

    /// `Σ_I`, the total length of the sticks in `indices`.
    pub fn total_length(&self, indices: &IndexSet) -> Rational {
        indices.iter().map(|i| &self.sticks[i]).sum()
    }
}

/// Value of the piece and cut counts at one jump point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    pub length: Rational,
    pub pieces: u64,
    pub cuts: u64,
}

/// The step functions `m(𝐋, l)` and `c(𝐋, l)` evaluated at every distinct
/// jump point `L_i / j` with `j ≤ k` and `L_i / j ≥ from`, in increasing
/// order of `l`.
pub fn piece_curve(inst: &Instance, from: &Rational) -> Result<Vec<CurvePoint>> {
    let k = inst.k();
    let mut lengths = Vec::new();
    for stick in inst.sticks() {
        for j in 1..=k {
            let l = stick.div_int(j);
            if l < *from {
                break;
            }
            lengths.push(l);
        }
    }
    lengths.sort_unstable();
    lengths.dedup();
    lengths
        .into_iter()
        .map(|length| {
            Ok(CurvePoint {
                pieces: inst.lpieces(&length)?,
                cuts: inst.cuts(&length)?,
                length,
            })
        })
        .collect()
}

fn sum_over<'a>(
    sticks: impl Iterator<Item = &'a Rational>,
    l: &Rational,
    per_stick: fn(&Rational, &Rational) -> Result<u64>,
) -> Result<u64> {
    let mut total = 0u64;
    for stick in sticks {
        total = total.saturating_add(per_stick(stick, l)?);
    }
    Ok(total)
}

fn reaches<'a>(sticks: impl Iterator<Item = &'a Rational>, l: &Rational, k: u64) -> Result<bool> {
    let mut total = 0u64;
    for stick in sticks {
        total = total.saturating_add(m_single(stick, l)?);
        if total >= k {
            return Ok(true);
        }
    }
    Ok(false)
}
