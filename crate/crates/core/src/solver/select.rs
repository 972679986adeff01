use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Returns the `rank`-th largest element of `values` (1-based, counting
/// multiplicity), reordering `values` in the process.
///
/// Randomized quickselect with a three-way partition, so long runs of equal
/// values are settled in one pass. The pivot is drawn uniformly from the
/// active range by a ChaCha8 generator seeded with `seed`; the same input and
/// seed always take the same path. Expected linear time.
pub fn select_kth_largest<T: Ord + Clone>(values: &mut [T], rank: u64, seed: u64) -> Result<T> {
    if rank == 0 || rank > values.len() as u64 {
        return Err(Error::RankOutOfRange {
            rank,
            len: values.len(),
        });
    }
    let target = (rank - 1) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut lo, mut hi) = (0, values.len());
    loop {
        if hi - lo == 1 {
            return Ok(values[lo].clone());
        }
        let pivot = values[rng.gen_range(lo..hi)].clone();
        // [lo, greater) > pivot, [greater, i) == pivot, [less, hi) < pivot
        let (mut greater, mut i, mut less) = (lo, lo, hi);
        while i < less {
            match values[i].cmp(&pivot) {
                Ordering::Greater => {
                    values.swap(greater, i);
                    greater += 1;
                    i += 1;
                }
                Ordering::Equal => i += 1,
                Ordering::Less => {
                    less -= 1;
                    values.swap(i, less);
                }
            }
        }
        if target < greater {
            hi = greater;
        } else if target < less {
            return Ok(pivot);
        } else {
            lo = less;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn order_statistics_with_duplicates() {
        let mut v = vec![10, 10, 8, 8, 8, 5];
        let expected = [10, 10, 8, 8, 8, 5];
        for (rank, want) in expected.iter().enumerate() {
            assert_eq!(select_kth_largest(&mut v, rank as u64 + 1, 3).unwrap(), *want);
        }
    }

    #[test]
    fn sandwich_multiset_second_largest() {
        let mut v = vec![rat(7, 3), rat(2, 1), rat(2, 1), rat(7, 4), rat(8, 5), rat(3, 2)];
        assert_eq!(select_kth_largest(&mut v, 2, 0).unwrap(), rat(2, 1));
    }

    #[test]
    fn singleton_and_bad_ranks() {
        assert_eq!(select_kth_largest(&mut [rat(5, 3)], 1, 9).unwrap(), rat(5, 3));
        assert!(matches!(
            select_kth_largest(&mut [1, 2], 0, 0),
            Err(Error::RankOutOfRange { rank: 0, len: 2 })
        ));
        assert!(matches!(
            select_kth_largest(&mut [1, 2], 3, 0),
            Err(Error::RankOutOfRange { rank: 3, len: 2 })
        ));
        assert!(select_kth_largest::<i32>(&mut [], 1, 0).is_err());
    }

    #[test]
    fn all_equal() {
        let mut v = vec![4; 1000];
        assert_eq!(select_kth_largest(&mut v, 517, 1).unwrap(), 4);
    }
}
