//! Exact rational numbers over arbitrary-precision integers.
//!
//! Every [`Rational`] is kept in canonical form: the denominator is positive
//! and shares no factor with the numerator. Equality and hashing are therefore
//! structural, which the candidate code relies on when it counts duplicates.
//!
//! Most lengths seen in practice fit into machine words, so the hot operations
//! (comparison, floor/ceil quotients, division by a small integer) try a
//! 128-bit path first and only fall back to big-integer arithmetic on overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cut length must be positive (got {0})")]
    NonPositiveLength(Rational),
    #[error("quotient {0} does not fit into 64 bits")]
    QuotientOverflow(BigInt),
    #[error("malformed rational {text:?}: {reason}")]
    Parse { text: String, reason: &'static str },
}

/// An exact fraction `num / den` with `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds `num / den` in canonical form.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, RationalError> {
        let den = den.into();
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Self::canonical(num.into(), den))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational {
            num: value.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    // den must be non-zero.
    fn canonical(mut num: BigInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if let (Some(n), Some(d)) = (num.to_i64(), den.to_u64()) {
            let g = n.unsigned_abs().gcd(&d);
            if g > 1 {
                return Rational {
                    num: BigInt::from(n as i128 / g as i128),
                    den: BigInt::from(d / g),
                };
            }
            return Rational { num, den };
        }
        let g = num.gcd(&den);
        if !g.is_one() && !g.is_zero() {
            num /= &g;
            den /= &g;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, RationalError> {
        if rhs.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// `self / divisor` for a positive integer divisor; this is how every
    /// candidate `L_i / j` is formed.
    pub fn div_int(&self, divisor: u64) -> Rational {
        assert!(divisor > 0, "division by zero");
        if let (Some(n), Some(d)) = (self.num.to_i64(), self.den.to_u64()) {
            if let Some(den) = d.checked_mul(divisor) {
                let g = n.unsigned_abs().gcd(&den);
                return Rational {
                    num: BigInt::from(n as i128 / g as i128),
                    den: BigInt::from(den / g),
                };
            }
        }
        Self::canonical(self.num.clone(), &self.den * divisor)
    }

    pub fn mul_int(&self, factor: u64) -> Rational {
        Self::canonical(&self.num * factor, self.den.clone())
    }

    /// `⌊self / l⌋`, computed as `⌊(a·d) / (b·c)⌋` for `self = a/b`, `l = c/d`.
    pub fn floor_quot(&self, l: &Rational) -> Result<u64, RationalError> {
        let (top, bottom) = self.quotient_parts(l)?;
        match (top, bottom) {
            (Parts::Small(t), Parts::Small(b)) => fit_u64(t / b),
            (t, b) => {
                let (t, b) = (t.into_big(), b.into_big());
                big_to_u64(t.div_floor(&b))
            }
        }
    }

    /// `⌈self / l⌉`.
    pub fn ceil_quot(&self, l: &Rational) -> Result<u64, RationalError> {
        let (top, bottom) = self.quotient_parts(l)?;
        match (top, bottom) {
            (Parts::Small(t), Parts::Small(b)) => fit_u64(t.div_ceil(b)),
            (t, b) => {
                let (t, b) = (t.into_big(), b.into_big());
                big_to_u64(Integer::div_ceil(&t, &b))
            }
        }
    }

    fn quotient_parts(&self, l: &Rational) -> Result<(Parts, Parts), RationalError> {
        if !l.is_positive() {
            return Err(RationalError::NonPositiveLength(l.clone()));
        }
        if self.num.is_negative() {
            return Err(RationalError::NonPositiveLength(self.clone()));
        }
        if let (Some(a), Some(b), Some(c), Some(d)) = (
            self.num.to_u64(),
            self.den.to_u64(),
            l.num.to_u64(),
            l.den.to_u64(),
        ) {
            return Ok((
                Parts::Small(a as u128 * d as u128),
                Parts::Small(b as u128 * c as u128),
            ));
        }
        Ok((
            Parts::Big(&self.num * &l.den),
            Parts::Big(&self.den * &l.num),
        ))
    }

    /// Lossy conversion for display and plotting only.
    pub fn approx_f64(&self) -> f64 {
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
            _ => {
                let shift = self.num.bits().max(self.den.bits()).saturating_sub(60);
                let n = (&self.num >> shift).to_f64().unwrap_or(0.0);
                let d = (&self.den >> shift).to_f64().unwrap_or(1.0);
                n / d
            }
        }
    }
}

enum Parts {
    Small(u128),
    Big(BigInt),
}

impl Parts {
    fn into_big(self) -> BigInt {
        match self {
            Parts::Small(v) => BigInt::from(v),
            Parts::Big(v) => v,
        }
    }
}

fn fit_u64(v: u128) -> Result<u64, RationalError> {
    u64::try_from(v).map_err(|_| RationalError::QuotientOverflow(BigInt::from(v)))
}

fn big_to_u64(v: BigInt) -> Result<u64, RationalError> {
    v.to_u64().ok_or(RationalError::QuotientOverflow(v))
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        if let (Some(a), Some(b), Some(c), Some(d)) = (
            self.num.to_i64(),
            self.den.to_i64(),
            other.num.to_i64(),
            other.den.to_i64(),
        ) {
            return (a as i128 * d as i128).cmp(&(c as i128 * b as i128));
        }
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| {
    if a.den == b.den {
        Rational::canonical(&a.num + &b.num, a.den.clone())
    } else {
        Rational::canonical(&a.num * &b.den + &b.num * &a.den, &a.den * &b.den)
    }
});
forward_binop!(Sub, sub, |a, b| {
    if a.den == b.den {
        Rational::canonical(&a.num - &b.num, a.den.clone())
    } else {
        Rational::canonical(&a.num * &b.den - &b.num * &a.den, &a.den * &b.den)
    }
});
forward_binop!(Mul, mul, |a, b| Rational::canonical(
    &a.num * &b.num,
    &a.den * &b.den
));
// Panics on a zero divisor like the integer operators; use `checked_div` to
// get an error instead.
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `a` or `a/b` in base 10: an optional `-` on `a`, ASCII digits
/// only, no whitespace, `b > 0`.
impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let fail = |reason| RationalError::Parse {
            text: text.to_string(),
            reason,
        };
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let (negative, digits) = match num_text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, num_text),
        };
        let num = parse_digits(digits).ok_or_else(|| fail("numerator is not a base-10 integer"))?;
        let num = if negative { -num } else { num };
        let den = match den_text {
            None => BigInt::one(),
            Some(d) => {
                let den =
                    parse_digits(d).ok_or_else(|| fail("denominator is not a base-10 integer"))?;
                if den.is_zero() {
                    return Err(fail("zero denominator"));
                }
                den
            }
        };
        Ok(Rational::canonical(num, den))
    }
}

fn parse_digits(text: &str) -> Option<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(text.as_bytes(), 10).map(|v| v.abs())
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used heavily in tests: `rat(a, b)` panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("non-zero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn construction_is_canonical() {
        assert_eq!(rat(6, 4).to_string(), "3/2");
        assert_eq!(rat(8, 1).to_string(), "8");
        assert_eq!(rat(-3, -6).to_string(), "1/2");
        assert_eq!(rat(3, -6).to_string(), "-1/2");
        assert_eq!(rat(0, -5), Rational::zero());
        assert_eq!(Rational::new(0, 7).unwrap().denom(), &BigInt::one());
        assert_eq!(Rational::new(1, 0), Err(RationalError::ZeroDenominator));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(rat(3, 2) * rat(2, 3), Rational::one());
        assert_eq!(rat(1, 2) - rat(3, 4), rat(-1, 4));
        assert_eq!(rat(1, 2) / rat(1, 4), rat(2, 1));
        assert_eq!(
            rat(1, 2).checked_div(&Rational::zero()),
            Err(RationalError::DivisionByZero)
        );
        assert_eq!(rat(7, 3).div_int(7), rat(1, 3));
        assert_eq!(rat(2, 3).mul_int(3), rat(2, 1));
    }

    #[test]
    fn compare_by_cross_multiplication() {
        // 7·4 = 28 > 24 = 8·3; 7/3 = 2.333.. and 8/4 = 2.
        assert_eq!(rat(7, 3).cmp(&rat(8, 4)), Ordering::Greater);
        assert_eq!(rat(8, 4), rat(6, 3));
        assert!(rat(-1, 2) < rat(1, 3));
    }

    #[test]
    fn floor_and_ceil_quotients() {
        assert_eq!(r("8").floor_quot(&r("3")).unwrap(), 2);
        assert_eq!(r("7/2").floor_quot(&r("1")).unwrap(), 3);
        // 18/7 = 2.571..
        assert_eq!(r("6").floor_quot(&r("7/3")).unwrap(), 2);
        // 32/7 = 4.571..
        assert_eq!(r("8").ceil_quot(&r("7/4")).unwrap(), 5);
        assert_eq!(r("8").ceil_quot(&r("2")).unwrap(), 4);
        assert_eq!(r("6").ceil_quot(&r("7/4")).unwrap(), 4);
        assert_eq!(r("0").ceil_quot(&r("7/4")).unwrap(), 0);
        assert!(matches!(
            r("6").floor_quot(&r("0")),
            Err(RationalError::NonPositiveLength(_))
        ));
        assert!(matches!(
            r("6").ceil_quot(&r("-1/2")),
            Err(RationalError::NonPositiveLength(_))
        ));
    }

    #[test]
    fn quotients_with_big_operands() {
        let huge = r("123456789012345678901234567890/7");
        let l = r("123456789012345678901234567890/70");
        assert_eq!(huge.floor_quot(&l).unwrap(), 10);
        assert_eq!(huge.ceil_quot(&l).unwrap(), 10);
        let l = r("123456789012345678901234567890/71");
        assert_eq!(huge.floor_quot(&l).unwrap(), 10);
        assert_eq!(huge.ceil_quot(&l).unwrap(), 11);
        assert!(matches!(
            huge.floor_quot(&r("1/100000000000000000000")),
            Err(RationalError::QuotientOverflow(_))
        ));
    }

    #[test]
    fn parsing_is_strict() {
        assert_eq!(r("-3/6"), rat(-1, 2));
        assert_eq!(r("007"), rat(7, 1));
        for bad in ["", " 1", "1 ", "1/ 2", "1/0", "1/-2", "+1", "1/2/3", "a", "1.5", "-", "/2"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn approx_f64() {
        assert_eq!(rat(7, 4).approx_f64(), 1.75);
        let x = Rational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400) * 7).unwrap();
        assert_eq!(x, rat(3, 7));
        let y = Rational::from_integer(BigInt::from(10).pow(400) + 1).div_int(1) / Rational::from_integer(BigInt::from(10).pow(399));
        assert!((y.approx_f64() - 10.0).abs() < 1e-9);
    }
}
