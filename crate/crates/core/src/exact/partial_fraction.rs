//! Partial fraction decomposition over the rationals.
//!
//! For `P/Q` with `Q = c · Π (x + s_i)^{m_i}` the result is
//! `quotient + Σ_i Σ_{j=1..m_i} c_{i,j} / (x + s_i)^j`. Residues at each pole
//! are the Taylor coefficients of `(x + s_i)^{m_i} · P/Q` around `x = −s_i`,
//! obtained by exact power-series division.

use num_traits::{One, Zero};
use thiserror::Error;

use super::factor::{rational_roots_factorize, Factorization};
use super::poly::Polynomial;
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("denominator has a factor without rational roots: {0}")]
    NonRationalPole(Polynomial),
}

/// One pole of a decomposed rational function: the factor `(x + shift)` with
/// `residues[j-1]` the coefficient of `1/(x + shift)^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pole {
    pub shift: Rational,
    pub residues: Vec<Rational>,
}

impl Pole {
    pub fn multiplicity(&self) -> u32 {
        self.residues.len() as u32
    }

    /// Location of the pole on the real line, `−shift`.
    pub fn location(&self) -> Rational {
        -&self.shift
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRationalFunction {
    pub quotient: Polynomial,
    pub poles: Vec<Pole>,
}

impl FactoredRationalFunction {
    /// Common denominator `Π (x + s_i)^{m_i}` and the matching numerator.
    pub fn recompose(&self) -> (Polynomial, Polynomial) {
        let den = self.poles.iter().fold(Polynomial::one(), |acc, p| {
            &acc * &Polynomial::linear(p.shift.clone()).pow(p.multiplicity())
        });
        let mut num = &self.quotient * &den;
        for (i, pole) in self.poles.iter().enumerate() {
            let others = self
                .poles
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .fold(Polynomial::one(), |acc, (_, p)| {
                    &acc * &Polynomial::linear(p.shift.clone()).pow(p.multiplicity())
                });
            let m = pole.multiplicity();
            for (j, c) in pole.residues.iter().enumerate() {
                let j = j as u32 + 1;
                let cofactor = &others * &Polynomial::linear(pole.shift.clone()).pow(m - j);
                num = &num + &cofactor.scale(c);
            }
        }
        (num, den)
    }

    /// Numeric value at `x`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut v = self.quotient.eval_f64(x);
        for pole in &self.poles {
            let t = x + super::rational::to_f64(&pole.shift);
            let mut tp = 1.0;
            for c in &pole.residues {
                tp *= t;
                v += super::rational::to_f64(c) / tp;
            }
        }
        v
    }
}

/// Decomposes `p / q` where `q` is given in factored form.
pub fn partial_fractions(
    p: &Polynomial,
    q: &Factorization,
) -> Result<FactoredRationalFunction, ExactError> {
    if q.remainder.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    if !q.remainder.is_constant() {
        return Err(ExactError::NonRationalPole(q.remainder.clone()));
    }
    let lead = q.remainder.leading();
    let den = q.expand();
    let (quotient, rem) = p.div_rem(&den);

    let mut poles = Vec::with_capacity(q.roots.len());
    for (i, (root, mult)) in q.roots.iter().enumerate() {
        let m = *mult as usize;
        // Expand around y = x − root: numerator rem(y + root), cofactor
        // lead · Π_{k≠i} (y + root − root_k)^{m_k}.
        let num = rem.shift(root);
        let cof = q
            .roots
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .fold(Polynomial::constant(lead.clone()), |acc, (_, (rk, mk))| {
                &acc * &Polynomial::linear(root - rk).pow(*mk)
            });
        let series = series_divide(&num, &cof, m);
        // Coefficient of y^{m−j} belongs to 1/(x − root)^j.
        let residues = (1..=m).map(|j| series[m - j].clone()).collect();
        poles.push(Pole {
            shift: -root,
            residues,
        });
    }
    Ok(FactoredRationalFunction { quotient, poles })
}

/// Factors the expanded denominator first, then decomposes.
pub fn partial_fractions_expanded(
    p: &Polynomial,
    q: &Polynomial,
) -> Result<FactoredRationalFunction, ExactError> {
    if q.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    partial_fractions(p, &rational_roots_factorize(q))
}

// First `terms` coefficients of num/den as a power series; den(0) ≠ 0.
fn series_divide(num: &Polynomial, den: &Polynomial, terms: usize) -> Vec<Rational> {
    let d0 = den.coeff(0);
    assert!(!d0.is_zero(), "cofactor vanishes at the pole");
    let inv0 = Rational::one() / &d0;
    let mut out: Vec<Rational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = num.coeff(k);
        for (i, o) in out.iter().enumerate() {
            let d = den.coeff(k - i);
            if !d.is_zero() {
                acc -= o * d;
            }
        }
        out.push(acc * &inv0);
    }
    out
}
