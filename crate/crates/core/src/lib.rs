//! Exact closed forms for elementary logarithmic integrals
//! `∫ₐᵇ R(x)·lnᵐx dx` with rational `R` and rational bounds `0 ≤ a < b`.
//!
//! Results are [`ClosedForm`] values over rational multiples of `1`, `π²`,
//! logarithms and products of logarithms of rationals, and `Li₂` at rational
//! arguments. [`quad`] provides an independent numeric integrator to check
//! them against, and [`unimodal`] the `Tₙ`/`Sₙ` polynomial families.
//!
//! ```
//! use logint_core::{integrate_rational_log, parse_denominator, parse_polynomial, IntegralSpec};
//! use logint_core::exact::int;
//!
//! let spec = IntegralSpec::new(
//!     parse_polynomial("1").unwrap(),
//!     parse_denominator("(x+1)").unwrap(),
//!     int(0),
//!     int(1),
//!     1,
//! );
//! let f = integrate_rational_log(&spec).unwrap();
//! assert_eq!(f.to_string(), "-(1/12)*pi^2");
//! ```

pub mod closed_form;
pub mod exact;
pub mod integrate;
pub mod precise;
pub mod quad;
pub mod special;
pub mod text;
pub mod unimodal;

pub use closed_form::{Atom, ClosedForm};
pub use integrate::{integrate_rational_log, Denominator, IntegralSpec, IntegrateError};
pub use quad::{quad_log, quad_log_factored, QuadError, QuadOptions, QuadResult};
pub use special::{dilog, DilogResult, DomainError};
pub use text::{parse_bound, parse_denominator, parse_polynomial, ParseError};
