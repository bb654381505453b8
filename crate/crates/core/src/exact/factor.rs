//! Rational-root factorization of denominators.
//!
//! Candidates come from the rational root theorem applied to the primitive
//! integer form of the polynomial; each hit is deflated exactly until it no
//! longer divides.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::Rational;

/// `Q = remainder · Π (x − root)^multiplicity`, exactly. The remainder has no
/// rational roots and carries the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub roots: Vec<(Rational, u32)>,
    pub remainder: Polynomial,
}

impl Factorization {
    /// Builds the factorization directly from known roots and a constant
    /// leading factor, e.g. from the `(x+1)(x+2)^2` text form.
    pub fn from_roots(lead: Rational, roots: Vec<(Rational, u32)>) -> Self {
        let mut merged: Vec<(Rational, u32)> = Vec::new();
        for (r, m) in roots {
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(s, _)| *s == r) {
                Some(entry) => entry.1 += m,
                None => merged.push((r, m)),
            }
        }
        Self {
            roots: merged,
            remainder: Polynomial::constant(lead),
        }
    }

    /// Multiplies the factors back out.
    pub fn expand(&self) -> Polynomial {
        self.roots.iter().fold(self.remainder.clone(), |acc, (r, m)| {
            &acc * &Polynomial::linear(-r).pow(*m)
        })
    }

    pub fn degree(&self) -> usize {
        self.remainder.degree().unwrap_or(0) + self.roots.iter().map(|(_, m)| *m as usize).sum::<usize>()
    }
}

/// Finds every rational root of `q` with its multiplicity.
///
/// Panics if `q` is the zero polynomial.
pub fn rational_roots_factorize(q: &Polynomial) -> Factorization {
    assert!(!q.is_zero(), "cannot factor the zero polynomial");
    let mut rest = q.clone();
    let mut roots: Vec<(Rational, u32)> = Vec::new();

    let mut zero_mult = 0;
    while !rest.is_constant() && rest.coeff(0).is_zero() {
        rest = rest.div_by_x().expect("constant term is zero");
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }

    if !rest.is_constant() {
        let ints = rest.primitive_integer_coeffs();
        let trailing = ints.first().unwrap().abs();
        let leading = ints.last().unwrap().abs();
        let numerators = divisors(&trailing);
        let denominators = divisors(&leading);
        let mut candidates: Vec<Rational> = Vec::new();
        for p in &numerators {
            for d in &denominators {
                if p.gcd(d).is_one() {
                    let c = Rational::new(p.clone(), d.clone());
                    candidates.push(-c.clone());
                    candidates.push(c);
                }
            }
        }
        candidates.sort();
        for c in candidates {
            if rest.is_constant() {
                break;
            }
            let lin = Polynomial::linear(-&c);
            let mut mult = 0;
            loop {
                if rest.is_constant() || !rest.eval(&c).is_zero() {
                    break;
                }
                let (quot, rem) = rest.div_rem(&lin);
                debug_assert!(rem.is_zero());
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
    }
    Factorization {
        roots,
        remainder: rest,
    }
}

// Positive divisors of n > 0. Trial division; a cofactor with no factor below
// the search limit is treated as prime.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.clone();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let limit: u64 = if n.bits() <= 48 { u64::MAX } else { 2_000_000 };
    let mut p: u64 = 2;
    while p <= limit {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut e = 0;
        while (&n % &pb).is_zero() {
            n /= &pb;
            e += 1;
        }
        if e > 0 {
            primes.push((pb, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (prime, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &prime;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Whether `q` vanishes somewhere in `[a, b]`. Rational roots are checked
/// exactly; the irrational part is scanned for sign changes on a grid, so an
/// even-multiplicity irrational root can slip through.
pub fn has_root_in(q: &Polynomial, a: f64, b: f64) -> bool {
    if q.is_constant() {
        return false;
    }
    let f = rational_roots_factorize(q);
    if f.roots.iter().any(|(r, _)| {
        let r = super::rational::to_f64(r);
        r >= a && r <= b
    }) {
        return true;
    }
    let rem = &f.remainder;
    if rem.is_constant() {
        return false;
    }
    let coeffs = rem.to_f64_coeffs();
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
    let steps = 4096usize;
    let mut prev = eval(a);
    if prev == 0.0 {
        return true;
    }
    for i in 1..=steps {
        let x = a + (b - a) * (i as f64) / (steps as f64);
        let v = eval(x);
        if v == 0.0 || v.signum() != prev.signum() {
            return true;
        }
        prev = v;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn constructed_factorization() {
        // (x+1)(x+2)^2 = x^3 + 5x^2 + 8x + 4
        let q = Polynomial::from_ints(&[4, 8, 5, 1]);
        let f = rational_roots_factorize(&q);
        let mut roots = f.roots.clone();
        roots.sort();
        assert_eq!(roots, vec![(int(-2), 2), (int(-1), 1)]);
        assert_eq!(f.remainder, Polynomial::one());
        assert_eq!(f.expand(), q);
    }

    #[test]
    fn no_rational_roots() {
        let q = Polynomial::from_ints(&[1, 0, 1]);
        let f = rational_roots_factorize(&q);
        assert!(f.roots.is_empty());
        assert_eq!(f.remainder, q);
    }

    #[test]
    fn non_monic_quadratic() {
        let q = Polynomial::from_ints(&[1, 5, 6]);
        let f = rational_roots_factorize(&q);
        let mut roots = f.roots.clone();
        roots.sort();
        assert_eq!(roots, vec![(rat(-1, 2), 1), (rat(-1, 3), 1)]);
        assert_eq!(f.remainder, Polynomial::constant(int(6)));
        assert_eq!(f.expand(), q);
    }

    #[test]
    fn zero_root_and_mixed_remainder() {
        // x^2 (x - 3/2) (x^2 + 2)
        let q = &(&Polynomial::from_ints(&[0, 0, 1]) * &Polynomial::linear(rat(-3, 2)))
            * &Polynomial::from_ints(&[2, 0, 1]);
        let f = rational_roots_factorize(&q);
        assert!(f.roots.contains(&(int(0), 2)));
        assert!(f.roots.contains(&(rat(3, 2), 1)));
        assert_eq!(f.remainder, Polynomial::from_ints(&[2, 0, 1]));
        assert_eq!(f.expand(), q);
    }

    #[test]
    fn constant_has_no_roots() {
        let f = rational_roots_factorize(&Polynomial::constant(rat(3, 4)));
        assert!(f.roots.is_empty());
        assert_eq!(f.degree(), 0);
    }

    #[test]
    fn divisor_enumeration() {
        use num_traits::ToPrimitive;
        let d: Vec<i64> = divisors(&BigInt::from(12))
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigInt::from(1)), vec![BigInt::one()]);
    }

    #[test]
    fn interior_root_detection() {
        let q = Polynomial::from_ints(&[-2, 0, 1]); // roots ±sqrt(2)
        assert!(has_root_in(&q, 0.0, 2.0));
        assert!(!has_root_in(&q, 0.0, 1.0));
        let q = Polynomial::from_ints(&[1, 1]);
        assert!(!has_root_in(&q, 0.0, 5.0));
        assert!(has_root_in(&Polynomial::from_ints(&[-1, 1]), 0.0, 2.0));
    }
}
