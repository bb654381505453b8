//! Closed-form evaluation of `∫ₐᵇ R(x)·lnᵐx dx`.
//!
//! Every integral is reduced to `F(b) − F(a)` with `F(t) = ∫₀ᵗ`. The
//! building blocks are:
//!
//! * polynomial part: `∫₀ᵇ xʲ lnᵏx dx = bʲ⁺¹ Σᵢ C(k,i) lnᵏ⁻ⁱb (−1)ⁱ i!/(j+1)ⁱ⁺¹`;
//! * simple pole: `∫₀ᵇ ln x/(x+r) dx = ln b·ln((b+r)/r) + Li₂(−b/r)`;
//! * pole of order `n ≥ 2`: `x = rt` reduces to `hₙ(b/r) = ∫₀^{b/r} ln t/(1+t)ⁿ dt`,
//!   which follows a first-order recurrence in `n` starting from
//!   `h₂(b) = b ln b/(1+b) − ln(1+b)`.

mod driver;
mod multiple_pole;
mod polynomial;
mod simple_pole;

use thiserror::Error;

use crate::exact::{format_rational, ExactError, Polynomial, Rational};

pub use driver::{decompose, integrate_rational_log, Denominator, IntegralSpec};
pub use multiple_pole::{
    double_pole_by_differentiation, h_n, integrate_multiple_pole, q_decomposition,
    x_closed_form, y_closed_form, QDecomposition,
};
pub use polynomial::{integrate_monomial_log, integrate_poly_log};
pub use simple_pole::{
    integrate_simple_pole, integrate_two_simple_poles, symmetric_two_pole_dilog,
    symmetric_two_pole_elementary,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegrateError {
    #[error("pole at x = {} lies inside [{}, {}]", format_rational(.pole), format_rational(.lower), format_rational(.upper))]
    PoleInInterval {
        pole: Rational,
        lower: Rational,
        upper: Rational,
    },
    #[error("pole at x = {} is not on the negative real axis; only poles x = -r with r > 0 have closed forms here", format_rational(.pole))]
    UnsupportedPole { pole: Rational },
    #[error("denominator factor {0} has no rational roots")]
    NonRationalPole(Polynomial),
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("ln^{0}(x) against a non-constant denominator is not supported; only m = 1 has closed forms here")]
    UnsupportedLogPower(u32),
    #[error("coincident poles r1 = r2 = {}; use the multiple-pole evaluation", format_rational(.0))]
    PoleCollision(Rational),
    #[error("invalid interval [{}, {}]: need 0 <= lower < upper", format_rational(.lower), format_rational(.upper))]
    InvalidInterval { lower: Rational, upper: Rational },
    #[error("degenerate interval: a = b = {}", format_rational(.0))]
    DegenerateInterval(Rational),
}

impl From<ExactError> for IntegrateError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::ZeroDenominator => IntegrateError::ZeroDenominator,
            ExactError::NonRationalPole(p) => IntegrateError::NonRationalPole(p),
        }
    }
}
