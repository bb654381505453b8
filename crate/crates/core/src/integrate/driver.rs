use num_traits::{Signed, Zero};

use super::multiple_pole::integrate_multiple_pole;
use super::polynomial::integrate_poly_log;
use super::simple_pole::integrate_simple_pole;
use super::IntegrateError;
use crate::closed_form::ClosedForm;
use crate::exact::{
    partial_fractions, rational_roots_factorize, Factorization, FactoredRationalFunction,
    Polynomial, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Denominator {
    Expanded(Polynomial),
    Factored(Factorization),
}

impl Denominator {
    pub fn factorization(&self) -> Result<Factorization, IntegrateError> {
        match self {
            Denominator::Expanded(q) if q.is_zero() => Err(IntegrateError::ZeroDenominator),
            Denominator::Expanded(q) => Ok(rational_roots_factorize(q)),
            Denominator::Factored(f) if f.remainder.is_zero() => {
                Err(IntegrateError::ZeroDenominator)
            }
            Denominator::Factored(f) => Ok(f.clone()),
        }
    }

    pub fn expanded(&self) -> Polynomial {
        match self {
            Denominator::Expanded(q) => q.clone(),
            Denominator::Factored(f) => f.expand(),
        }
    }
}

/// `∫_lower^upper numerator/denominator · ln^{log_power} x dx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpec {
    pub numerator: Polynomial,
    pub denominator: Denominator,
    pub lower: Rational,
    pub upper: Rational,
    pub log_power: u32,
}

impl IntegralSpec {
    pub fn new(
        numerator: Polynomial,
        denominator: Denominator,
        lower: Rational,
        upper: Rational,
        log_power: u32,
    ) -> Self {
        Self {
            numerator,
            denominator,
            lower,
            upper,
            log_power,
        }
    }
}

/// Validates the spec and decomposes its integrand into partial fractions.
///
/// Poles are checked against the closed interval before anything else, so a
/// divergent integral is always reported as [`IntegrateError::PoleInInterval`].
pub fn decompose(spec: &IntegralSpec) -> Result<FactoredRationalFunction, IntegrateError> {
    if spec.lower.is_negative() || spec.lower >= spec.upper {
        return Err(IntegrateError::InvalidInterval {
            lower: spec.lower.clone(),
            upper: spec.upper.clone(),
        });
    }
    let fac = spec.denominator.factorization()?;
    let mut roots: Vec<&Rational> = fac.roots.iter().map(|(r, _)| r).collect();
    roots.sort();
    if let Some(pole) = roots
        .iter()
        .find(|r| ***r >= spec.lower && ***r <= spec.upper)
    {
        return Err(IntegrateError::PoleInInterval {
            pole: (*pole).clone(),
            lower: spec.lower.clone(),
            upper: spec.upper.clone(),
        });
    }
    if !fac.remainder.is_constant() {
        return Err(IntegrateError::NonRationalPole(fac.remainder.clone()));
    }
    if let Some(pole) = roots.iter().find(|r| !r.is_negative()) {
        return Err(IntegrateError::UnsupportedPole {
            pole: (*pole).clone(),
        });
    }
    if !fac.roots.is_empty() && spec.log_power != 1 {
        return Err(IntegrateError::UnsupportedLogPower(spec.log_power));
    }
    Ok(partial_fractions(&spec.numerator, &fac)?)
}

// ∫₀ᵗ R(x) lnᵐx dx, t > 0.
fn antiderivative_from_zero(r: &FactoredRationalFunction, t: &Rational, m: u32) -> ClosedForm {
    let mut out = integrate_poly_log(&r.quotient, t, m);
    for pole in &r.poles {
        for (j, c) in pole.residues.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let piece = match j + 1 {
                1 => integrate_simple_pole(t, &pole.shift),
                n => integrate_multiple_pole(n as u32, t, &pole.shift),
            };
            out = &out + &piece.scale(c);
        }
    }
    out
}

/// Closed form of `∫ₐᵇ R(x) lnᵐx dx` as `F(b) − F(a)`, `F(t) = ∫₀ᵗ`.
pub fn integrate_rational_log(spec: &IntegralSpec) -> Result<ClosedForm, IntegrateError> {
    let r = decompose(spec)?;
    let upper = antiderivative_from_zero(&r, &spec.upper, spec.log_power);
    if spec.lower.is_zero() {
        return Ok(upper);
    }
    let lower = antiderivative_from_zero(&r, &spec.lower, spec.log_power);
    Ok(&upper - &lower)
}
