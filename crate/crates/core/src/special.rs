//! Numeric kernels: logarithms of exact rationals and the dilogarithm on
//! `(−∞, 1/2]`.
//!
//! `Li₂` is evaluated by its defining power series on `[−1, 1/2]` and by
//! Euler's inversion `Li₂(x) = −π²/6 − ½ln²(−x) − Li₂(1/x)` for `x < −1`.
//! On the negative axis the series alternates; the partial sum is corrected
//! by half the first omitted term, which keeps the truncation error below
//! double precision even at the `x → −1` end of the range.

use std::f64::consts::PI;

use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::exact::rational::{to_f64, Rational};

pub const PI_SQUARED: f64 = PI * PI;

/// Terms beyond this are never summed.
pub const SERIES_TERM_CAP: usize = 100_000;

const SERIES_REL_STOP: f64 = 1e-17;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{what} is outside the domain: {detail}")]
pub struct DomainError {
    pub what: &'static str,
    pub detail: String,
}

impl DomainError {
    fn new(what: &'static str, detail: impl Into<String>) -> Self {
        Self {
            what,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilogResult {
    pub value: f64,
    /// Absolute error bound.
    pub est_error: f64,
}

/// `Li₂(x)` for `x ≤ 1/2`.
pub fn dilog(x: f64) -> Result<DilogResult, DomainError> {
    if x.is_nan() || x > 0.5 {
        return Err(DomainError::new("Li2 argument", format!("{x} > 1/2")));
    }
    if x == 0.0 {
        return Ok(DilogResult {
            value: 0.0,
            est_error: 0.0,
        });
    }
    if x == -1.0 {
        let v = -PI_SQUARED / 12.0;
        return Ok(DilogResult {
            value: v,
            est_error: f64::EPSILON * v.abs(),
        });
    }
    if x >= -1.0 {
        return Ok(dilog_series(x));
    }
    if x.is_infinite() {
        return Err(DomainError::new("Li2 argument", "infinite"));
    }
    let inner = dilog_series(1.0 / x);
    let l = (-x).ln();
    let value = -PI_SQUARED / 6.0 - 0.5 * l * l - inner.value;
    let rounding = 4.0 * f64::EPSILON * (PI_SQUARED / 6.0 + 0.5 * l * l + inner.value.abs());
    Ok(DilogResult {
        value,
        est_error: inner.est_error + rounding,
    })
}

/// The power series `Σ xᵏ/k²`, valid for `|x| ≤ 1`.
///
/// Stops once the next term drops below `1e−17·|partial sum|` or after
/// [`SERIES_TERM_CAP`] terms. Panics outside `[−1, 1]`.
pub fn dilog_series(x: f64) -> DilogResult {
    assert!((-1.0..=1.0).contains(&x), "series diverges at {x}");
    if x == 0.0 {
        return DilogResult {
            value: 0.0,
            est_error: 0.0,
        };
    }
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut pow = 1.0;
    let mut k = 1usize;
    let next_term = loop {
        pow *= x;
        let term = pow / (k * k) as f64;
        if k > SERIES_TERM_CAP || (k > 1 && term.abs() < SERIES_REL_STOP * sum.abs()) {
            break term;
        }
        // Neumaier compensated summation.
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        k += 1;
    };
    // next_term is the k-th term, not yet included.
    let kf = k as f64;
    let after = next_term * x * (kf / (kf + 1.0)).powi(2);
    let rounding = 2.0 * f64::EPSILON * sum.abs();
    if x < 0.0 {
        let value = sum + comp + 0.5 * next_term;
        DilogResult {
            value,
            est_error: 0.5 * (next_term.abs() - after.abs()) + rounding,
        }
    } else {
        DilogResult {
            value: sum + comp,
            est_error: next_term / (1.0 - x) + rounding,
        }
    }
}

/// `Li₂(−z) + Li₂(−1/z) + π²/6 + ½ln²z`, which vanishes for every `z > 0`.
pub fn euler_identity_residual(z: f64) -> Result<f64, DomainError> {
    if z.is_nan() || z <= 0.0 || z.is_infinite() {
        return Err(DomainError::new("Euler identity argument", format!("{z} <= 0")));
    }
    let a = dilog(-z)?.value;
    let b = dilog(-1.0 / z)?.value;
    let l = z.ln();
    Ok(a + b + PI_SQUARED / 6.0 + 0.5 * l * l)
}

/// `Li₂(x)` for `x ∈ [−1, 0]` through Landen's identity
/// `Li₂(x) = −Li₂(x/(x−1)) − ½ln²(1−x)`, which maps the argument into
/// `[0, 1/2]`. Not used by [`dilog`]; it is an independent route for checking
/// the alternating series on the negative axis. Panics outside `[−1, 0]`.
pub fn dilog_landen(x: f64) -> DilogResult {
    assert!((-1.0..=0.0).contains(&x), "Landen route needs x in [-1, 0], got {x}");
    let inner = dilog_series(x / (x - 1.0));
    let l = (-x).ln_1p();
    let value = -inner.value - 0.5 * l * l;
    DilogResult {
        value,
        est_error: inner.est_error + 4.0 * f64::EPSILON * (inner.value.abs() + 0.5 * l * l),
    }
}

/// Natural logarithm of a positive rational, accurate to a few ulps even for
/// arguments close to 1 or with components beyond the `f64` range.
pub fn ln_rational(q: &Rational) -> Result<f64, DomainError> {
    if !q.is_positive() {
        return Err(DomainError::new("log argument", format!("{q} <= 0")));
    }
    let one = Rational::one();
    let delta = q - &one;
    if delta.abs() * Rational::from_integer(2.into()) < one {
        return Ok(to_f64(&delta).ln_1p());
    }
    let v = to_f64(q);
    if v.is_finite() && v > f64::MIN_POSITIVE {
        return Ok(v.ln());
    }
    Ok(ln_bigint(q.numer()) - ln_bigint(q.denom()))
}

fn ln_bigint(n: &num_bigint::BigInt) -> f64 {
    let bits = n.bits() as i64;
    let shift = (bits - 64).max(0);
    let top: num_bigint::BigInt = n >> (shift as usize);
    top.to_f64().unwrap_or(f64::NAN).ln() + (shift as f64) * std::f64::consts::LN_2
}
