//! Instance generators and the instance file format.
//!
//! An instance file is a single JSON object with exactly two fields:
//!
//! ```json
//! {"k":9,"sticks":["8","7","6","1","1"]}
//! ```
//!
//! `k` is a positive integer and every stick is a rational string `a` or
//! `a/b`. Unknown fields, a byte-order mark, non-positive lengths and zero
//! denominators are rejected. [`serialize`] writes the compact form above
//! with canonical rationals and a trailing newline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::counting::Instance;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// The family `{mx, (m−1)x + 1, …, (m/2)x + m/2, x−1, x−1, …}` of `m²` sticks
/// with `k = 3m²/8 + 3m/4`, whose optimum is `x` itself.
///
/// Requires `m` to be a positive multiple of 4 and `x ≥ m/2`. The boundary
/// `x = m/2` is allowed because `m = 4, x = 2` is the classic small case.
pub fn gen_example(m: u64, x: &Rational) -> Result<Instance> {
    if m == 0 || !m.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!(
            "m must be a positive multiple of 4 (got {m})"
        )));
    }
    if *x < Rational::from(m).div_int(2) {
        return Err(Error::InvalidParameter(format!("x must be at least m/2 = {} (got {x})", m / 2)));
    }
    let n = m.checked_mul(m).ok_or_else(|| Error::InvalidParameter("m is too large".into()))?;
    let mut sticks = Vec::with_capacity(n as usize);
    for j in 0..=m / 2 {
        sticks.push(x.mul_int(m - j) + Rational::from(j));
    }
    let filler = x - Rational::one();
    sticks.resize(n as usize, filler);
    let k = 3 * m * m / 8 + 3 * m / 4;
    Instance::new(sticks, k)
}

/// The first `n` primes, longest first.
pub fn gen_primes(n: usize, k: u64) -> Result<Instance> {
    let mut primes = first_primes(n);
    primes.reverse();
    Instance::new(primes.into_iter().map(Rational::from).collect(), k)
}

/// The first `n` primes in increasing order. Sieves up to a bound that
/// doubles until enough primes are found.
pub fn first_primes(n: usize) -> Vec<u64> {
    let mut bound = 16usize;
    loop {
        let primes = sieve(bound);
        if primes.len() >= n {
            return primes.into_iter().take(n).collect();
        }
        bound *= 2;
    }
}

fn sieve(bound: usize) -> Vec<u64> {
    let mut composite = vec![false; bound + 1];
    let mut primes = Vec::new();
    for i in 2..=bound {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut multiple = i * i;
        while multiple <= bound {
            composite[multiple] = true;
            multiple += i;
        }
    }
    primes
}

/// `n` sticks drawn uniformly from `{a/b : 1 ≤ a ≤ max_num, 1 ≤ b ≤ max_den}`
/// (canonicalized, duplicates allowed). Deterministic in `seed`.
pub fn gen_random(n: usize, k: u64, max_num: u64, max_den: u64, seed: u64) -> Result<Instance> {
    if n == 0 || max_num == 0 || max_den == 0 {
        return Err(Error::InvalidParameter(
            "n, max-num and max-den must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sticks = (0..n)
        .map(|_| {
            let a = rng.gen_range(1..=max_num);
            let b = rng.gen_range(1..=max_den);
            Rational::new(a, b).expect("denominator is at least 1")
        })
        .collect();
    Instance::new(sticks, k)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    k: u64,
    sticks: Vec<String>,
}

/// Parses an instance document.
pub fn parse(text: &str) -> Result<Instance> {
    if text.starts_with('\u{feff}') {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "byte-order mark is not allowed".into(),
        });
    }
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        let position = format!(" at line {} column {}", e.line(), e.column());
        Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: message.strip_suffix(&position).unwrap_or(&message).to_owned(),
        }
    })?;
    if file.k == 0 {
        return Err(Error::Field {
            field: "k".into(),
            message: "must be a positive integer".into(),
        });
    }
    if file.sticks.is_empty() {
        return Err(Error::Field {
            field: "sticks".into(),
            message: "at least one stick is required".into(),
        });
    }
    let mut sticks = Vec::with_capacity(file.sticks.len());
    for (i, raw) in file.sticks.iter().enumerate() {
        let field = || format!("sticks[{i}]");
        let length: Rational = raw.parse().map_err(|e: crate::rational::RationalError| Error::Field {
            field: field(),
            message: e.to_string(),
        })?;
        if !length.is_positive() {
            return Err(Error::Field {
                field: field(),
                message: format!("non-positive length {length}"),
            });
        }
        sticks.push(length);
    }
    Instance::new(sticks, file.k)
}

/// Writes the canonical instance document (compact JSON plus newline).
pub fn serialize(inst: &Instance) -> String {
    let file = InstanceFile {
        k: inst.k(),
        sticks: inst.sticks().iter().map(Rational::to_string).collect(),
    };
    let mut text = serde_json::to_string(&file).expect("instance files always serialize");
    text.push('\n');
    text
}
