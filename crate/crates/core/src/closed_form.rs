//! Exact symbolic values: rational linear combinations of the atoms
//! `1`, `π²`, `ln q`, `ln q₁·ln q₂`, `lnᵏ q` and `Li₂(q)` with rational `q`.
//!
//! A [`ClosedForm`] built through [`ClosedForm::add_term`] or the arithmetic
//! operators is always canonical:
//!
//! * `ln 1` and any product or power containing it vanish;
//! * `Li₂(0)` vanishes and `Li₂(−1)` becomes `−π²/12`;
//! * `ln q₁·ln q₂` keeps its arguments sorted, and `ln² q` is stored as the
//!   product `ln q·ln q`;
//! * `ln¹ q` is `ln q` and `ln⁰ q` is `1`.
//!
//! Log arguments are never split into prime factors, so two canonical forms
//! can be numerically equal without being structurally equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::rational::{format_rational, parse_rational, rat, to_f64, Rational};
use crate::special::{dilog, ln_rational, DomainError, PI_SQUARED};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Unit,
    PiSquared,
    /// `ln q`, `q > 0`.
    Log(Rational),
    /// `ln q₁ · ln q₂`.
    LogProd(Rational, Rational),
    /// `lnᵏ q`.
    LogPow(Rational, u32),
    /// `Li₂(q)`; the numeric kernel accepts `q ≤ 1/2`.
    Dilog(Rational),
}

impl Atom {
    pub fn log_prod(a: Rational, b: Rational) -> Self {
        if a <= b {
            Atom::LogProd(a, b)
        } else {
            Atom::LogProd(b, a)
        }
    }

    /// Rewrites into canonical shape. `None` means the atom is zero; otherwise
    /// the returned factor multiplies the coefficient.
    fn canonical(&self) -> Option<(Atom, Rational)> {
        let one = Rational::one();
        let unit = |a: Atom| Some((a, Rational::one()));
        match self {
            Atom::Unit | Atom::PiSquared => unit(self.clone()),
            Atom::Log(q) if q.is_one() => None,
            Atom::Log(_) => unit(self.clone()),
            Atom::LogProd(a, b) if a.is_one() || b.is_one() => None,
            Atom::LogProd(a, b) => unit(Atom::log_prod(a.clone(), b.clone())),
            Atom::LogPow(_, 0) => unit(Atom::Unit),
            Atom::LogPow(q, _) if *q == one => None,
            Atom::LogPow(q, 1) => unit(Atom::Log(q.clone())),
            Atom::LogPow(q, 2) => unit(Atom::LogProd(q.clone(), q.clone())),
            Atom::LogPow(_, _) => unit(self.clone()),
            Atom::Dilog(q) if q.is_zero() => None,
            Atom::Dilog(q) if *q == -one => Some((Atom::PiSquared, rat(-1, 12))),
            Atom::Dilog(_) => unit(self.clone()),
        }
    }

    pub fn eval(&self) -> Result<f64, DomainError> {
        Ok(match self {
            Atom::Unit => 1.0,
            Atom::PiSquared => PI_SQUARED,
            Atom::Log(q) => ln_rational(q)?,
            Atom::LogProd(a, b) => ln_rational(a)? * ln_rational(b)?,
            Atom::LogPow(q, k) => ln_rational(q)?.powi(*k as i32),
            Atom::Dilog(q) => {
                if *q > rat(1, 2) {
                    return Err(DomainError {
                        what: "Li2 atom argument",
                        detail: format!("{} > 1/2", format_rational(q)),
                    });
                }
                dilog(to_f64(q))?.value
            }
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Unit => write!(f, "1"),
            Atom::PiSquared => write!(f, "pi^2"),
            Atom::Log(q) => write!(f, "ln({})", format_rational(q)),
            Atom::LogProd(a, b) if a == b => write!(f, "ln({})^2", format_rational(a)),
            Atom::LogProd(a, b) => {
                write!(f, "ln({})*ln({})", format_rational(a), format_rational(b))
            }
            Atom::LogPow(q, k) => write!(f, "ln({})^{k}", format_rational(q)),
            Atom::Dilog(q) => write!(f, "Li2({})", format_rational(q)),
        }
    }
}

/// Map from atom to nonzero rational coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "JsonForm", try_from = "JsonForm")]
pub struct ClosedForm {
    terms: BTreeMap<Atom, Rational>,
}

impl ClosedForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · 1`.
    pub fn rational(c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(Atom::Unit, c);
        out
    }

    pub fn from_atom(atom: Atom, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(atom, c);
        out
    }

    /// Collects terms without applying any rewrite rule beyond merging equal
    /// atoms and dropping zero coefficients.
    pub fn from_raw_terms(terms: impl IntoIterator<Item = (Atom, Rational)>) -> Self {
        let mut out = Self::zero();
        for (a, c) in terms {
            out.add_raw(a, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Atom, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, atom: &Atom) -> Rational {
        self.terms.get(atom).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c · atom` after canonicalizing the atom.
    pub fn add_term(&mut self, atom: Atom, c: Rational) {
        if let Some((a, factor)) = atom.canonical() {
            self.add_raw(a, c * factor);
        }
    }

    fn add_raw(&mut self, atom: Atom, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(atom) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn canonicalize(&self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(a, k)| (a.clone(), k * c)).collect(),
        }
    }

    /// Numeric value, summed with compensation.
    pub fn eval_numeric(&self) -> Result<f64, DomainError> {
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (atom, c) in &self.terms {
            let term = to_f64(c) * atom.eval()?;
            let t = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - t) + term;
            } else {
                comp += (term - t) + sum;
            }
            sum = t;
        }
        Ok(sum + comp)
    }

    /// Value at [`crate::precise::DEFAULT_BITS`] bits of working precision,
    /// rounded to `f64` once. Accurate even when the terms cancel heavily.
    pub fn eval_precise(&self) -> Result<f64, DomainError> {
        crate::precise::eval_precise(self, crate::precise::DEFAULT_BITS)
    }

    /// Largest `|coefficient · atom|`, the scale that bounds the rounding
    /// error of [`ClosedForm::eval_numeric`].
    pub fn magnitude(&self) -> Result<f64, DomainError> {
        self.terms.iter().try_fold(0.0f64, |m, (a, c)| {
            Ok(m.max((to_f64(c) * a.eval()?).abs()))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("closed form serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl Add for &ClosedForm {
    type Output = ClosedForm;
    fn add(self, rhs: &ClosedForm) -> ClosedForm {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_raw(a.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ClosedForm {
    type Output = ClosedForm;
    fn sub(self, rhs: &ClosedForm) -> ClosedForm {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_raw(a.clone(), -c);
        }
        out
    }
}

impl Neg for &ClosedForm {
    type Output = ClosedForm;
    fn neg(self) -> ClosedForm {
        self.scale(&-Rational::one())
    }
}

impl Add for ClosedForm {
    type Output = ClosedForm;
    fn add(self, rhs: ClosedForm) -> ClosedForm {
        &self + &rhs
    }
}

impl Sub for ClosedForm {
    type Output = ClosedForm;
    fn sub(self, rhs: ClosedForm) -> ClosedForm {
        &self - &rhs
    }
}

impl fmt::Display for ClosedForm {
    /// `(1/2)*ln(9/8)*ln(2) - (1/12)*pi^2 + 3/4`; the empty form prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Transcendental terms first, rational part last.
        let mut ordered: Vec<(&Atom, &Rational)> =
            self.terms.iter().filter(|(a, _)| **a != Atom::Unit).collect();
        if let Some(c) = self.terms.get(&Atom::Unit) {
            ordered.push((&Atom::Unit, c));
        }
        for (i, (atom, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *atom == Atom::Unit {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{atom}")?;
            } else if a.is_integer() {
                write!(f, "{}*{atom}", format_rational(&a))?;
            } else {
                write!(f, "({})*{atom}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

// JSON schema: {"terms":[{"atom":{"kind":"dilog","arg":"-1/2"},"coeff":"1"}]}.

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonForm {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    atom: JsonAtom,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum JsonAtom {
    Unit,
    PiSquared,
    Log { arg: String },
    LogProd { args: [String; 2] },
    LogPow { arg: String, power: u32 },
    Dilog { arg: String },
}

#[derive(Debug, Error)]
pub enum ClosedFormJsonError {
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("log argument must be positive: {0}")]
    NonPositiveLog(String),
}

fn parse_field(s: &str) -> Result<Rational, ClosedFormJsonError> {
    parse_rational(s).ok_or_else(|| ClosedFormJsonError::BadRational(s.to_string()))
}

fn positive_field(s: &str) -> Result<Rational, ClosedFormJsonError> {
    let q = parse_field(s)?;
    if q.is_positive() {
        Ok(q)
    } else {
        Err(ClosedFormJsonError::NonPositiveLog(s.to_string()))
    }
}

impl From<ClosedForm> for JsonForm {
    fn from(cf: ClosedForm) -> Self {
        let terms = cf
            .terms
            .into_iter()
            .map(|(atom, c)| JsonTerm {
                atom: match atom {
                    Atom::Unit => JsonAtom::Unit,
                    Atom::PiSquared => JsonAtom::PiSquared,
                    Atom::Log(q) => JsonAtom::Log {
                        arg: format_rational(&q),
                    },
                    Atom::LogProd(a, b) => JsonAtom::LogProd {
                        args: [format_rational(&a), format_rational(&b)],
                    },
                    Atom::LogPow(q, k) => JsonAtom::LogPow {
                        arg: format_rational(&q),
                        power: k,
                    },
                    Atom::Dilog(q) => JsonAtom::Dilog {
                        arg: format_rational(&q),
                    },
                },
                coeff: format_rational(&c),
            })
            .collect();
        JsonForm { terms }
    }
}

impl TryFrom<JsonForm> for ClosedForm {
    type Error = ClosedFormJsonError;
    fn try_from(j: JsonForm) -> Result<Self, Self::Error> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let atom = match t.atom {
                JsonAtom::Unit => Atom::Unit,
                JsonAtom::PiSquared => Atom::PiSquared,
                JsonAtom::Log { arg } => Atom::Log(positive_field(&arg)?),
                JsonAtom::LogProd { args: [a, b] } => {
                    Atom::log_prod(positive_field(&a)?, positive_field(&b)?)
                }
                JsonAtom::LogPow { arg, power } => Atom::LogPow(positive_field(&arg)?, power),
                JsonAtom::Dilog { arg } => Atom::Dilog(parse_field(&arg)?),
            };
            terms.push((atom, parse_field(&t.coeff)?));
        }
        Ok(ClosedForm::from_raw_terms(terms))
    }
}
