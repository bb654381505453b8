use num_traits::{One, Signed, Zero};

use super::IntegrateError;
use crate::closed_form::{Atom, ClosedForm};
use crate::exact::rational::{int, Rational};

/// `∫₀ᵇ ln x/(x + r) dx = ln b·ln((b+r)/r) + Li₂(−b/r)` for `b, r > 0`.
///
/// Panics unless both arguments are positive.
pub fn integrate_simple_pole(b: &Rational, r: &Rational) -> ClosedForm {
    assert!(b.is_positive() && r.is_positive(), "need b, r > 0");
    let mut out = ClosedForm::zero();
    out.add_term(Atom::log_prod(b.clone(), (b + r) / r), Rational::one());
    out.add_term(Atom::Dilog(-(b / r)), Rational::one());
    out
}

/// `∫ₐᵇ ln x/((x + r₁)(x + r₂)) dx` for distinct `r₁, r₂ > 0`.
///
/// For `a > 0` this is the four-product, four-dilog expression
/// `(1/(r₂−r₁))·[ln b·ln(r₂(b+r₁)/(r₁(b+r₂))) + ln a·ln(r₁(a+r₂)/(r₂(a+r₁)))
/// + Li₂(−b/r₁) − Li₂(−a/r₁) − Li₂(−b/r₂) + Li₂(−a/r₂)]`.
/// At `a = 0` the `ln a` terms are not formed; the value is the difference of
/// the two `[0, b]` simple-pole integrals.
pub fn integrate_two_simple_poles(
    a: &Rational,
    b: &Rational,
    r1: &Rational,
    r2: &Rational,
) -> Result<ClosedForm, IntegrateError> {
    if a.is_negative() || a >= b {
        return Err(IntegrateError::InvalidInterval {
            lower: a.clone(),
            upper: b.clone(),
        });
    }
    assert!(r1.is_positive() && r2.is_positive(), "need r1, r2 > 0");
    if r1 == r2 {
        return Err(IntegrateError::PoleCollision(r1.clone()));
    }
    let inv = Rational::one() / (r2 - r1);
    if a.is_zero() {
        let diff = &integrate_simple_pole(b, r1) - &integrate_simple_pole(b, r2);
        return Ok(diff.scale(&inv));
    }
    let one = Rational::one();
    let mut out = ClosedForm::zero();
    out.add_term(
        Atom::log_prod(b.clone(), r2 * (b + r1) / (r1 * (b + r2))),
        one.clone(),
    );
    out.add_term(
        Atom::log_prod(a.clone(), r1 * (a + r2) / (r2 * (a + r1))),
        one.clone(),
    );
    out.add_term(Atom::Dilog(-(b / r1)), one.clone());
    out.add_term(Atom::Dilog(-(a / r1)), -&one);
    out.add_term(Atom::Dilog(-(b / r2)), -&one);
    out.add_term(Atom::Dilog(-(a / r2)), one);
    Ok(out.scale(&inv))
}

fn check_symmetric(a: &Rational, b: &Rational) -> Result<(), IntegrateError> {
    if a == b {
        return Err(IntegrateError::DegenerateInterval(a.clone()));
    }
    if !a.is_positive() || a > b {
        return Err(IntegrateError::InvalidInterval {
            lower: a.clone(),
            upper: b.clone(),
        });
    }
    Ok(())
}

/// `∫ₐᵇ ln x/((x+a)(x+b)) dx = ln(ab)/(2(b−a)) · ln((a+b)²/(4ab))`, the
/// dilogarithm-free evaluation, for `0 < a < b`.
pub fn symmetric_two_pole_elementary(
    a: &Rational,
    b: &Rational,
) -> Result<ClosedForm, IntegrateError> {
    check_symmetric(a, b)?;
    let ab = a * b;
    let s = a + b;
    let arg = &s * &s / (int(4) * &ab);
    Ok(ClosedForm::from_atom(
        Atom::log_prod(ab, arg),
        Rational::one() / (int(2) * (b - a)),
    ))
}

/// The same integral as [`symmetric_two_pole_elementary`] in dilogarithm
/// form: `(1/(b−a))·[ln(ab)ln(a+b) − ln 2·ln(ab) − 2 ln a·ln b − 2Li₂(−1)
/// + Li₂(−b/a) + Li₂(−a/b)]`.
pub fn symmetric_two_pole_dilog(a: &Rational, b: &Rational) -> Result<ClosedForm, IntegrateError> {
    check_symmetric(a, b)?;
    let ab = a * b;
    let mut out = ClosedForm::zero();
    out.add_term(Atom::log_prod(ab.clone(), a + b), int(1));
    out.add_term(Atom::log_prod(int(2), ab), int(-1));
    out.add_term(Atom::log_prod(a.clone(), b.clone()), int(-2));
    out.add_term(Atom::Dilog(int(-1)), int(-2));
    out.add_term(Atom::Dilog(-(b / a)), int(1));
    out.add_term(Atom::Dilog(-(a / b)), int(1));
    Ok(out.scale(&(Rational::one() / (b - a))))
}
