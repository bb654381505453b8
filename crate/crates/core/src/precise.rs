//! Multiprecision evaluation of closed forms.
//!
//! Partial fractions with nearby high-order poles produce closed forms whose
//! terms are many orders of magnitude larger than their sum, so the `f64`
//! kernels lose most digits. Here every atom is evaluated with `bits` of
//! working precision and the sum is rounded to `f64` once at the end.
//!
//! `Li₂` uses the power series on `[−1/2, 1/2]`, Landen's identity on
//! `[−1, −1/2)` and Euler's inversion below `−1`.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::{One, Signed, Zero};

use crate::closed_form::{Atom, ClosedForm};
use crate::exact::rational::{rat, Rational};
use crate::special::DomainError;

/// Working precision used by [`ClosedForm::eval_precise`].
pub const DEFAULT_BITS: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 64;

struct Ctx {
    p: usize,
    cc: Consts,
}

impl Ctx {
    fn new(bits: usize) -> Self {
        Self {
            p: bits + GUARD_BITS,
            cc: Consts::new().expect("astro-float constants cache"),
        }
    }

    fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.p)
    }

    fn rational(&mut self, q: &Rational) -> BigFloat {
        let n = BigFloat::parse(&q.numer().to_string(), Radix::Dec, self.p, RM, &mut self.cc);
        let d = BigFloat::parse(&q.denom().to_string(), Radix::Dec, self.p, RM, &mut self.cc);
        n.div(&d, self.p, RM)
    }

    fn ln(&mut self, q: &Rational) -> Result<BigFloat, DomainError> {
        if !q.is_positive() {
            return Err(DomainError {
                what: "log argument",
                detail: format!("{q} <= 0"),
            });
        }
        if q.is_one() {
            return Ok(self.int(0));
        }
        // ln(1 + δ) loses nothing: q is rounded relative to itself and the
        // guard bits cover the conditioning 1/|ln q| near 1.
        let x = self.rational(q);
        Ok(x.ln(self.p, RM, &mut self.cc))
    }

    fn pi_squared(&mut self) -> BigFloat {
        let pi = self.cc.pi(self.p, RM);
        pi.mul(&pi, self.p, RM)
    }

    // Σ xᵏ/k² for |x| ≤ 1/2; 2⁻ᵏ decay bounds the number of terms.
    fn dilog_series(&mut self, x: &Rational) -> BigFloat {
        let xf = self.rational(x);
        let mut pow = self.int(1);
        let mut sum = self.int(0);
        for k in 1..=(self.p as i64 + 8) {
            pow = pow.mul(&xf, self.p, RM);
            let term = pow.div(&self.int(k * k), self.p, RM);
            sum = sum.add(&term, self.p, RM);
        }
        sum
    }

    fn dilog(&mut self, x: &Rational) -> Result<BigFloat, DomainError> {
        let half = rat(1, 2);
        if *x > half {
            return Err(DomainError {
                what: "Li2 argument",
                detail: format!("{x} > 1/2"),
            });
        }
        if x.is_zero() {
            return Ok(self.int(0));
        }
        if *x >= -half.clone() {
            return Ok(self.dilog_series(x));
        }
        let one = Rational::one();
        let half_f = BigFloat::from_f64(0.5, self.p);
        if *x >= -one.clone() {
            // Li₂(x) = −Li₂(x/(x−1)) − ½ln²(1−x), with x/(x−1) ∈ (1/3, 1/2].
            let inner = self.dilog_series(&(x / (x - &one)));
            let l = self.ln(&(&one - x))?;
            let l2 = l.mul(&l, self.p, RM).mul(&half_f, self.p, RM);
            return Ok(inner.neg().sub(&l2, self.p, RM));
        }
        // Li₂(x) = −π²/6 − ½ln²(−x) − Li₂(1/x), with 1/x ∈ (−1, 0).
        let inner = self.dilog(&(&one / x))?;
        let l = self.ln(&-x)?;
        let l2 = l.mul(&l, self.p, RM).mul(&half_f, self.p, RM);
        let pi2_6 = self.pi_squared().div(&self.int(6), self.p, RM);
        Ok(pi2_6.neg().sub(&l2, self.p, RM).sub(&inner, self.p, RM))
    }

    fn atom(&mut self, a: &Atom) -> Result<BigFloat, DomainError> {
        match a {
            Atom::Unit => Ok(self.int(1)),
            Atom::PiSquared => Ok(self.pi_squared()),
            Atom::Log(q) => self.ln(q),
            Atom::LogProd(a, b) => {
                let (la, lb) = (self.ln(a)?, self.ln(b)?);
                Ok(la.mul(&lb, self.p, RM))
            }
            Atom::LogPow(q, k) => {
                let l = self.ln(q)?;
                Ok((0..*k).fold(self.int(1), |acc, _| acc.mul(&l, self.p, RM)))
            }
            Atom::Dilog(q) => self.dilog(q),
        }
    }

    fn to_f64(&mut self, x: &BigFloat) -> f64 {
        let s = x
            .format(Radix::Dec, RM, &mut self.cc)
            .expect("finite value formats");
        s.parse().unwrap_or(f64::NAN)
    }
}

/// Value of `form` computed with `bits` of working precision and rounded to
/// `f64` once.
pub fn eval_precise(form: &ClosedForm, bits: usize) -> Result<f64, DomainError> {
    let mut ctx = Ctx::new(bits);
    let mut sum = ctx.int(0);
    for (atom, c) in form.terms() {
        let v = ctx.atom(atom)?;
        let cf = ctx.rational(c);
        sum = sum.add(&v.mul(&cf, ctx.p, RM), ctx.p, RM);
    }
    Ok(ctx.to_f64(&sum))
}

/// `Li₂(x)` at a rational argument `x ≤ 1/2`, rounded to `f64`.
pub fn dilog_precise(x: &Rational, bits: usize) -> Result<f64, DomainError> {
    let mut ctx = Ctx::new(bits);
    let v = ctx.dilog(x)?;
    Ok(ctx.to_f64(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::special::{dilog, PI_SQUARED};

    #[test]
    fn dilog_matches_reference_values() {
        // Same frozen references as the f64 kernel tests.
        for (x, want) in [
            (rat(-1, 3), -0.309_033_126_487_808_47),
            (int(-3), -1.939_375_420_766_708_95),
            (rat(-1, 2), -0.448_414_206_923_646_20),
            (rat(1, 2), 0.582_240_526_465_012_5),
            (int(-10), -4.198_277_886_858_103_86),
            (rat(-9, 10), -0.752_163_179_217_261_62),
        ] {
            let v = dilog_precise(&x, DEFAULT_BITS).unwrap();
            assert!((v - want).abs() <= 1e-16 * want.abs().max(1.0), "Li2({x}) = {v}");
        }
        assert_eq!(dilog_precise(&int(-1), 128).unwrap(), -PI_SQUARED / 12.0);
        assert!(dilog_precise(&rat(3, 4), 128).is_err());
    }

    #[test]
    fn agrees_with_f64_kernel_on_a_grid() {
        for i in 1..=60 {
            let x = rat(-i * i, 16);
            let fast = dilog(crate::exact::rational::to_f64(&x)).unwrap().value;
            let slow = dilog_precise(&x, 128).unwrap();
            assert!((fast - slow).abs() <= 4e-15 * slow.abs().max(1.0), "x = {x}");
        }
    }

    #[test]
    fn cancellation_is_resolved() {
        // Li₂(−1/2) − Li₂(−1/2 − 10⁻³⁰): exact cancellation at f64, but the
        // derivative −ln(3/2)/(−1/2) · 10⁻³⁰ at high precision.
        let x = rat(-1, 2);
        let dx = Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 30));
        let mut f = ClosedForm::from_atom(Atom::Dilog(x.clone()), int(1));
        f.add_term(Atom::Dilog(&x - &dx), int(-1));
        assert_eq!(f.eval_numeric().unwrap(), 0.0);
        let v = eval_precise(&f, DEFAULT_BITS).unwrap();
        let want = 2.0 * 1.5f64.ln() * 1e-30; // −ln(1−x)/x · dx
        assert!((v - want).abs() <= 1e-12 * want, "{v} vs {want}");
    }

    #[test]
    fn matches_f64_on_well_conditioned_forms() {
        let mut f = ClosedForm::from_atom(Atom::log_prod(int(2), rat(9, 8)), rat(1, 2));
        f.add_term(Atom::PiSquared, rat(-1, 12));
        f.add_term(Atom::LogPow(int(3), 3), int(2));
        f.add_term(Atom::Unit, rat(3, 4));
        let a = eval_precise(&f, DEFAULT_BITS).unwrap();
        let b = f.eval_numeric().unwrap();
        assert!((a - b).abs() <= 1e-15 * a.abs());
    }
}
