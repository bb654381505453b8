//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator (zero is `0/1`). This module adds the small
//! amount of glue the rest of the crate needs: construction shorthands, the
//! `p/q` text form and exact integer helpers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p"`, `"-p"`, `"p/q"` (optional surrounding whitespace, optional
/// leading `+`). Finite decimals such as `"0.25"` are accepted and converted
/// exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).ok()?;
        let q = BigInt::from_str(q.trim()).ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches('-');
        if !whole_digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return None;
        }
        let digits = format!("{whole_digits}{frac}");
        let mut n = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
        if neg {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Some(Rational::new(n, d));
    }
    BigInt::from_str(s).ok().map(Rational::from_integer)
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Nearest double. Handles numerators and denominators far outside the
/// `f64` range by scaling both to 64 significant bits first.
pub fn to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let Some(v) = q.to_f64() {
        if v.is_finite() && v != 0.0 {
            return v;
        }
    }
    let (mant_n, exp_n) = top_bits(q.numer());
    let (mant_d, exp_d) = top_bits(q.denom());
    let m = mant_n / mant_d;
    let e = exp_n - exp_d;
    let e = e.clamp(i32::MIN as i64, i32::MAX as i64) as i32;
    m * 2f64.powi(e.clamp(-1100, 1100))
}

// (mantissa, exponent) with |n| = mantissa * 2^exponent, mantissa in [2^63, 2^64).
fn top_bits(n: &BigInt) -> (f64, i64) {
    let bits = n.bits() as i64;
    let shift = (bits - 64).max(0);
    let top: BigInt = n >> (shift as usize);
    (top.to_f64().unwrap_or(0.0), shift)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integer_fraction_and_decimal() {
        assert_eq!(parse_rational("5"), Some(int(5)));
        assert_eq!(parse_rational(" -3/6 "), Some(rat(-1, 2)));
        assert_eq!(parse_rational("+2/4"), Some(rat(1, 2)));
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("-1.5"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn zero_is_unique() {
        let z = rat(0, -7);
        assert!(z.numer().is_zero());
        assert!(z.denom().is_one());
        assert_eq!(format_rational(&z), "0");
    }

    #[test]
    fn format_round_trips() {
        for q in [rat(-9, 8), int(12), rat(1, 3)] {
            assert_eq!(parse_rational(&format_rational(&q)), Some(q));
        }
    }

    #[test]
    fn to_f64_handles_huge_components() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let q = Rational::new(&big * BigInt::from(3), &big * BigInt::from(7));
        assert!((to_f64(&q) - 3.0 / 7.0).abs() < 1e-16);
        let q = Rational::new(BigInt::from(1), big.clone());
        assert_eq!(to_f64(&q), 0.0);
        let q = Rational::new(big.clone() * BigInt::from(5), num_traits::pow(BigInt::from(10), 399));
        assert!((to_f64(&q) - 50.0).abs() < 1e-13);
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::from(0));
    }
}
