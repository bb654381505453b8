use num_traits::{Signed, Zero};

use crate::closed_form::{Atom, ClosedForm};
use crate::exact::rational::{binomial, factorial, int, Rational};
use crate::exact::Polynomial;

fn pow_u(q: &Rational, e: usize) -> Rational {
    num_traits::pow(q.clone(), e)
}

/// `∫₀ᵇ xʲ lnᵏx dx`. Panics unless `b > 0`.
pub fn integrate_monomial_log(j: u32, k: u32, b: &Rational) -> ClosedForm {
    assert!(b.is_positive(), "upper limit must be positive");
    let j1 = int(i64::from(j) + 1);
    let scale = pow_u(b, j as usize + 1);
    let mut out = ClosedForm::zero();
    let mut denom = j1.clone();
    for i in 0..=k {
        // C(k,i) (−1)^i i! / (j+1)^{i+1}
        let mut c = Rational::from_integer(binomial(k, i) * factorial(i)) / &denom;
        if i % 2 == 1 {
            c = -c;
        }
        out.add_term(Atom::LogPow(b.clone(), k - i), c * &scale);
        denom *= &j1;
    }
    out
}

/// `∫₀ᵇ P(x) lnᵐx dx`, summed by powers of `ln b`:
/// `Σₖ (−1)ᵏ k! C(m,k) lnᵐ⁻ᵏb Σⱼ aⱼ bʲ⁺¹/(j+1)ᵏ⁺¹`. Panics unless `b > 0`.
pub fn integrate_poly_log(p: &Polynomial, b: &Rational, m: u32) -> ClosedForm {
    assert!(b.is_positive(), "upper limit must be positive");
    let mut out = ClosedForm::zero();
    if p.is_zero() {
        return out;
    }
    for k in 0..=m {
        let mut inner = Rational::zero();
        let mut bpow = b.clone();
        for (j, a) in p.coeffs().iter().enumerate() {
            if !a.is_zero() {
                inner += a * &bpow / pow_u(&int(j as i64 + 1), k as usize + 1);
            }
            bpow *= b;
        }
        let mut c = Rational::from_integer(factorial(k) * binomial(m, k)) * inner;
        if k % 2 == 1 {
            c = -c;
        }
        out.add_term(Atom::LogPow(b.clone(), m - k), c);
    }
    out
}
