//! Brute-force reference solvers. Both look at the full truncated candidate
//! set `{L_i / j : i ∈ [1..n], j ∈ [1..k]}` and share no code with the
//! restricted algorithms beyond the counting functions.

use crate::counting::Instance;
use crate::error::Result;
use crate::rational::Rational;

fn full_candidates(inst: &Instance) -> Vec<Rational> {
    let k = inst.k();
    inst.sticks()
        .iter()
        .flat_map(|stick| (1..=k).map(move |j| stick.div_int(j)))
        .collect()
}

/// Largest feasible value among the distinct full candidates, found by a
/// descending scan with a complete piece count per probe.
pub fn oracle_scan(inst: &Instance) -> Result<Rational> {
    let mut values = full_candidates(inst);
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    for value in values {
        if inst.lpieces(&value)? >= inst.k() {
            return Ok(value);
        }
    }
    // L_i / k always yields at least k pieces from stick i alone.
    unreachable!("the smallest full candidate is always feasible")
}

/// The `k`-th largest entry (with multiplicity) of the full truncated
/// candidate multiset, by sorting.
pub fn oracle_rank(inst: &Instance) -> Result<Rational> {
    let mut values = full_candidates(inst);
    values.sort_unstable_by(|a, b| b.cmp(a));
    Ok(values.swap_remove(inst.k() as usize - 1))
}
