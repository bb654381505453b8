//! Exact arithmetic: rationals, dense polynomials, rational-root
//! factorization and partial fractions.

pub mod factor;
pub mod partial_fraction;
pub mod poly;
pub mod rational;

pub use factor::{rational_roots_factorize, Factorization};
pub use partial_fraction::{
    partial_fractions, partial_fractions_expanded, ExactError, FactoredRationalFunction, Pole,
};
pub use poly::Polynomial;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
