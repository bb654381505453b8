use num_traits::{One, Signed};

use crate::closed_form::{Atom, ClosedForm};
use crate::exact::rational::{int, Rational};
use crate::exact::Polynomial;

fn pow_u(q: &Rational, e: u32) -> Rational {
    num_traits::pow(q.clone(), e as usize)
}

/// `hₙ(b) = ∫₀ᵇ ln t/(1+t)ⁿ dt` for `n ≥ 2`, by the recurrence
/// `hₙ = (n−2)/(n−1)·hₙ₋₁ + b ln b/((n−1)(1+b)ⁿ⁻¹) + (1 − (1+b)ⁿ⁻²)/((n−1)(n−2)(1+b)ⁿ⁻²)`.
///
/// Panics if `n < 2` or `b ≤ 0`.
pub fn h_n(n: u32, b: &Rational) -> ClosedForm {
    assert!(n >= 2, "h_n needs n >= 2");
    assert!(b.is_positive(), "h_n needs b > 0");
    let c = b + Rational::one();
    let mut h = ClosedForm::from_atom(Atom::Log(b.clone()), b / &c);
    h.add_term(Atom::Log(c.clone()), -Rational::one());
    for k in 3..=n {
        let k1 = int(i64::from(k) - 1);
        let k2 = int(i64::from(k) - 2);
        let cp = pow_u(&c, k - 2);
        let mut next = h.scale(&(&k2 / &k1));
        next.add_term(Atom::Log(b.clone()), b / (&k1 * &cp * &c));
        next.add_term(
            Atom::Unit,
            (Rational::one() - &cp) / (&k1 * &k2 * &cp),
        );
        h = next;
    }
    h
}

/// `fₙ(b, r) = ∫₀ᵇ ln x/(x+r)ⁿ dx` for `n ≥ 2`:
/// `ln r/((n−1)rⁿ⁻¹)·(1 − (r/(b+r))ⁿ⁻¹) + hₙ(b/r)/rⁿ⁻¹`.
pub fn integrate_multiple_pole(n: u32, b: &Rational, r: &Rational) -> ClosedForm {
    assert!(n >= 2, "multiple pole needs n >= 2");
    assert!(b.is_positive() && r.is_positive(), "need b, r > 0");
    let rp = pow_u(r, n - 1);
    let frac = Rational::one() - pow_u(&(r / (b + r)), n - 1);
    let mut out = h_n(n, &(b / r)).scale(&(Rational::one() / &rp));
    out.add_term(
        Atom::Log(r.clone()),
        frac / (int(i64::from(n) - 1) * &rp),
    );
    out
}

/// `∫₀ᵇ ln x/(x+r)² dx = −ln(b+r)/r + ln r/r + b ln b/(r(r+b))`, obtained by
/// differentiating the simple-pole result in `r`. Independent of
/// [`integrate_multiple_pole`].
pub fn double_pole_by_differentiation(b: &Rational, r: &Rational) -> ClosedForm {
    assert!(b.is_positive() && r.is_positive(), "need b, r > 0");
    let inv_r = Rational::one() / r;
    let mut out = ClosedForm::from_atom(Atom::Log(b + r), -&inv_r);
    out.add_term(Atom::Log(r.clone()), inv_r);
    out.add_term(Atom::Log(b.clone()), b / (r * (r + b)));
    out
}

/// `qₙ(b) = (1+b)ⁿ⁻¹hₙ(b) = Xₙ(b)·ln b + Yₙ(b)·ln(1+b) + Zₙ(b)` with
/// rational polynomials `Xₙ, Yₙ, Zₙ` in `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDecomposition {
    pub n: u32,
    pub x: Polynomial,
    pub y: Polynomial,
    pub z: Polynomial,
}

impl QDecomposition {
    /// `Xₙ(b) ln b + Yₙ(b) ln(1+b) + Zₙ(b)` at a rational point.
    pub fn at(&self, b: &Rational) -> ClosedForm {
        let mut out = ClosedForm::from_atom(Atom::Log(b.clone()), self.x.eval(b));
        out.add_term(Atom::Log(b + Rational::one()), self.y.eval(b));
        out.add_term(Atom::Unit, self.z.eval(b));
        out
    }
}

/// `((1+b)ⁿ⁻¹ − 1)/(n−1)`.
pub fn x_closed_form(n: u32) -> Polynomial {
    assert!(n >= 2);
    let p = &Polynomial::from_ints(&[1, 1]).pow(n - 1) - &Polynomial::one();
    p.scale(&(Rational::one() / int(i64::from(n) - 1)))
}

/// `−(1+b)ⁿ⁻¹/(n−1)`.
pub fn y_closed_form(n: u32) -> Polynomial {
    assert!(n >= 2);
    Polynomial::from_ints(&[1, 1])
        .pow(n - 1)
        .scale(&(-Rational::one() / int(i64::from(n) - 1)))
}

/// Builds `Xₙ, Yₙ, Zₙ` from their recurrences
///
/// * `Xₙ = (n−2)/(n−1)(1+b)Xₙ₋₁ + b/(n−1)`, `X₂ = b`
/// * `Yₙ = (n−2)/(n−1)(1+b)Yₙ₋₁`, `Y₂ = −(1+b)`
/// * `Zₙ = (n−2)/(n−1)(1+b)Zₙ₋₁ − (1+b)((1+b)ⁿ⁻² − 1)/((n−2)(n−1))`, `Z₂ = 0`
///
/// and checks `Xₙ`, `Yₙ` against their closed forms.
pub fn q_decomposition(n: u32) -> QDecomposition {
    assert!(n >= 2, "q decomposition needs n >= 2");
    let one_b = Polynomial::from_ints(&[1, 1]);
    let b = Polynomial::from_ints(&[0, 1]);
    let mut x = b.clone();
    let mut y = -&one_b;
    let mut z = Polynomial::zero();
    for k in 3..=n {
        let k1 = int(i64::from(k) - 1);
        let k2 = int(i64::from(k) - 2);
        let ratio = &k2 / &k1;
        x = &(&one_b * &x).scale(&ratio) + &b.scale(&(Rational::one() / &k1));
        y = (&one_b * &y).scale(&ratio);
        let forcing = (&one_b * &(&one_b.pow(k - 2) - &Polynomial::one()))
            .scale(&(Rational::one() / (&k2 * &k1)));
        z = &(&one_b * &z).scale(&ratio) - &forcing;
    }
    assert_eq!(x, x_closed_form(n), "X_{n} recurrence disagrees with closed form");
    assert_eq!(y, y_closed_form(n), "Y_{n} recurrence disagrees with closed form");
    QDecomposition { n, x, y, z }
}
