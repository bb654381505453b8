//! The integer polynomial families `Tₙ(b)` and `Sₙ(b) = Tₙ(b − 1)` carried by
//! the rational part of the multiple-pole closed form, and the coefficient
//! shape checks used to certify them.
//!
//! `Tₙ = −(n−1)!·Zₙ/(b(1+b))` satisfies
//! `Tₙ = (n−2)(1+b)Tₙ₋₁ + (n−3)!·((1+b)ⁿ⁻² − 1)/b` with `T₂ = 0`, and
//! `Sₙ = (n−2)·b·Sₙ₋₁ + (n−3)!·(1 + b + … + bⁿ⁻³)`. `Sₙ` has positive
//! nondecreasing coefficients, and shifting such a polynomial by one gives a
//! unimodal one.

use num_traits::{One, Signed};
use serde::Serialize;

use crate::exact::rational::{factorial, format_rational, int, Rational};
use crate::exact::Polynomial;

/// Builds `Tₙ` by its recurrence. Panics if `n < 2`.
pub fn t_poly(n: u32) -> Polynomial {
    assert!(n >= 2, "T_n is defined for n >= 2");
    let one_b = Polynomial::from_ints(&[1, 1]);
    let mut t = Polynomial::zero();
    let mut pow = one_b.clone(); // (1+b)^{k−2}
    for k in 3..=n {
        let forcing = (&pow - &Polynomial::one())
            .div_by_x()
            .expect("(1+b)^j − 1 vanishes at b = 0");
        let fact = Rational::from_integer(factorial(k - 3));
        t = &(&one_b * &t).scale(&int(i64::from(k) - 2)) + &forcing.scale(&fact);
        pow = &pow * &one_b;
    }
    t
}

/// Builds `Sₙ` by its own recurrence. Panics if `n < 3`.
pub fn s_poly(n: u32) -> Polynomial {
    assert!(n >= 3, "S_n is defined for n >= 3");
    let mut s = Polynomial::zero();
    for k in 3..=n {
        let geometric = Polynomial::new(vec![Rational::one(); (k - 2) as usize]);
        let fact = Rational::from_integer(factorial(k - 3));
        let shifted = Polynomial::monomial(int(i64::from(k) - 2), 1);
        s = &(&shifted * &s) + &geometric.scale(&fact);
    }
    s
}

/// `Tₙ` recovered from the integrator's `Zₙ`, as `−(n−1)!·Zₙ/(b(1+b))`.
/// Returns `None` if the division is not exact.
pub fn t_poly_from_z(z: &Polynomial, n: u32) -> Option<Polynomial> {
    let scaled = z.scale(&-Rational::from_integer(factorial(n - 1)));
    let (q, r) = scaled.div_rem(&Polynomial::from_ints(&[0, 1, 1]));
    r.is_zero().then_some(q)
}

/// Whether coefficients never decrease with the degree; on failure, the index
/// `k + 1` of the first drop `c_k > c_{k+1}`.
pub fn check_nondecreasing(p: &Polynomial) -> (bool, Option<usize>) {
    let c = p.coeffs();
    match c.windows(2).position(|w| w[0] > w[1]) {
        Some(k) => (false, Some(k + 1)),
        None => (true, None),
    }
}

/// Whether the coefficient sequence rises to a single peak and then falls,
/// i.e. there is `n*` with `c_k ≤ c_{k+1}` for `k < n*` and `c_k ≥ c_{k+1}` for
/// `k ≥ n*`. Returns the smallest such `n*`; the zero polynomial is vacuously
/// unimodal with no peak.
pub fn check_unimodal(p: &Polynomial) -> (bool, Option<usize>) {
    let c = p.coeffs();
    if c.is_empty() {
        return (true, None);
    }
    // Longest nondecreasing prefix ends at `rise`.
    let rise = c
        .windows(2)
        .position(|w| w[0] > w[1])
        .unwrap_or(c.len() - 1);
    // Nonincreasing from `fall` onwards.
    let fall = c
        .windows(2)
        .rposition(|w| w[0] < w[1])
        .map_or(0, |k| k + 1);
    if fall <= rise {
        (true, Some(fall))
    } else {
        (false, None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffReport {
    pub family: String,
    pub n: u32,
    /// Ascending by degree, as exact decimal strings.
    pub coeffs: Vec<String>,
    pub degree: Option<usize>,
    pub positive_integer: bool,
    pub unimodal: bool,
    pub peak: Option<usize>,
    pub nondecreasing: bool,
}

impl CoeffReport {
    pub fn for_polynomial(family: &str, n: u32, p: &Polynomial) -> Self {
        let (unimodal, peak) = check_unimodal(p);
        let (nondecreasing, _) = check_nondecreasing(p);
        Self {
            family: family.to_string(),
            n,
            coeffs: p.coeffs().iter().map(format_rational).collect(),
            degree: p.degree(),
            positive_integer: !p.is_zero()
                && p.coeffs().iter().all(|c| c.is_integer() && c.is_positive()),
            unimodal,
            peak,
            nondecreasing,
        }
    }

    pub fn t(n: u32) -> Self {
        Self::for_polynomial("T", n, &t_poly(n))
    }

    pub fn s(n: u32) -> Self {
        Self::for_polynomial("S", n, &s_poly(n))
    }
}
