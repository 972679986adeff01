mod common;

use common::instance;
use proptest::prelude::*;
use stickcut::solver::{self, oracle_rank, oracle_scan, select_kth_largest};
use stickcut::{SolveOptions, Strategy};

proptest! {
    #[test]
    fn all_strategies_match_the_oracles(inst in instance(15, 40), seed in any::<u64>()) {
        let expected = oracle_scan(&inst).unwrap();
        prop_assert_eq!(&oracle_rank(&inst).unwrap(), &expected);
        let options = SolveOptions { want_plan: true, seed };
        for strategy in Strategy::all() {
            let s = solver::solve(&inst, strategy, &options).unwrap();
            prop_assert_eq!(&s.l_star, &expected, "{}", strategy);
            prop_assert_eq!(s.pieces, inst.lpieces(&expected).unwrap());
            prop_assert_eq!(s.cuts, inst.cuts(&expected).unwrap());
            let plan = s.plan.unwrap();
            prop_assert_eq!(plan.iter().map(|e| e.pieces).sum::<u64>(), s.pieces);
            prop_assert_eq!(plan.iter().map(|e| e.cuts).sum::<u64>(), s.cuts);
        }
    }

    #[test]
    fn select_matches_sort(mut values in prop::collection::vec(0u32..20, 1..60), seed in any::<u64>(), r in any::<prop::sample::Index>()) {
        let rank = r.index(values.len()) as u64 + 1;
        let mut sorted = values.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let got = select_kth_largest(&mut values, rank, seed).unwrap();
        prop_assert_eq!(got, sorted[rank as usize - 1]);
    }

    #[test]
    fn k_one_takes_the_longest_stick(inst in instance(15, 1)) {
        let s = solver::solve(&inst, Strategy::default(), &SolveOptions::default()).unwrap();
        prop_assert_eq!(&s.l_star, inst.max_stick());
    }

    #[test]
    fn result_does_not_depend_on_the_seed(inst in instance(15, 40), a in any::<u64>(), b in any::<u64>()) {
        let run = |seed| {
            solver::solve(&inst, Strategy::default(), &SolveOptions { want_plan: false, seed })
                .unwrap()
                .l_star
        };
        prop_assert_eq!(run(a), run(b));
    }
}

#[test]
fn select_rejects_bad_ranks() {
    let mut v = vec![3, 1, 2];
    assert!(select_kth_largest(&mut v, 0, 1).is_err());
    assert!(select_kth_largest(&mut v, 4, 1).is_err());
    assert!(select_kth_largest::<u8>(&mut [], 1, 1).is_err());
}
