#![allow(dead_code)]

use proptest::prelude::*;
use stickcut::{Instance, Rational};

pub fn rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_num, 1..=max_den).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

pub fn signed_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=50).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

/// Small instances; duplicates are likely because the value range is narrow.
pub fn instance(max_n: usize, max_k: u64) -> impl Strategy<Value = Instance> {
    (
        prop::collection::vec(rational(60, 6), 1..=max_n),
        1..=max_k,
    )
        .prop_map(|(sticks, k)| Instance::new(sticks, k).unwrap())
}
