//! Seeded generators shared by the integration suites.

#![allow(dead_code)]

use logint_core::exact::{rat, Factorization, Polynomial, Rational};
use logint_core::{Denominator, IntegralSpec};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ num_max`, `1 ≤ q ≤ den_max`.
pub fn rational<R: Rng>(rng: &mut R, num_max: i64, den_max: i64) -> Rational {
    rat(rng.gen_range(-num_max..=num_max), rng.gen_range(1..=den_max))
}

/// Rational in `(lo, hi]` on a grid of denominator `den`.
pub fn rational_in<R: Rng>(rng: &mut R, lo: i64, hi: i64, den: i64) -> Rational {
    rat(rng.gen_range(lo * den + 1..=hi * den), den)
}

pub fn polynomial<R: Rng>(rng: &mut R, max_degree: usize, coeff_max: i64) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-coeff_max..=coeff_max)).collect();
    Polynomial::from_ints(&c)
}

/// Pole shift from `{1/2, 1, 3/2, …, 5}`.
pub fn pole_shift<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(1..=10), 2)
}

/// Up to three distinct poles on the negative axis with multiplicities up
/// to `max_mult`.
pub fn negative_poles<R: Rng>(rng: &mut R, max_mult: u32) -> Vec<(Rational, u32)> {
    let count = rng.gen_range(1..=3);
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    while roots.len() < count {
        let r = -pole_shift(rng);
        if roots.iter().all(|(s, _)| *s != r) {
            roots.push((r, rng.gen_range(1..=max_mult)));
        }
    }
    roots
}

/// A random `∫ₐᵇ P/Q · ln x` with `deg P ≤ 4`, up to three poles in
/// `[−5, −1/2]` of multiplicity ≤ 4, and `0 ≤ a < b ≤ 10`. About a quarter of
/// the specs start at `a = 0`; half give the denominator in expanded form.
pub fn integral_spec<R: Rng>(rng: &mut R) -> IntegralSpec {
    let numerator = loop {
        let p = polynomial(rng, 4, 9);
        if !p.is_zero() {
            break p;
        }
    };
    let lead = rat(rng.gen_range(1..=5), rng.gen_range(1..=3));
    let fac = Factorization::from_roots(lead, negative_poles(rng, 4));
    let denominator = if rng.gen_bool(0.5) {
        Denominator::Expanded(fac.expand())
    } else {
        Denominator::Factored(fac)
    };
    let (lower, upper) = bounds(rng);
    IntegralSpec::new(numerator, denominator, lower, upper, 1)
}

/// `0 ≤ a < b ≤ 10` on a grid of eighths, with `a = 0` a quarter of the time.
pub fn bounds<R: Rng>(rng: &mut R) -> (Rational, Rational) {
    let top = rng.gen_range(1..=80);
    let bottom = if top == 1 || rng.gen_bool(0.25) {
        0
    } else {
        rng.gen_range(1..top)
    };
    (rat(bottom, 8), rat(top, 8))
}
