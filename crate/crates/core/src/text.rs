//! Text forms of polynomials and denominators.
//!
//! ```text
//! poly     := sign? term (sign term)*
//! term     := coeff '*'? 'x' ('^' uint)? ('/' uint)?  |  'x' ('^' uint)? ('/' uint)?  |  coeff
//! coeff    := number ('/' number)?  |  '(' sign? number ('/' number)? ')'
//! number   := digits ('.' digits)?
//! factored := coeff? '*'? factor+
//! factor   := '(' poly ')' ('^' uint)?  |  'x' ('^' uint)?
//! ```
//!
//! Each parenthesized factor must be linear. Whitespace is ignored between
//! tokens. Examples: `"3x^2 - x/2 + 1"`, `"(1/2)x + 2"`, `"(x+1)(x+2)^2"`,
//! `"3(2x+1)^2"`.

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::rational::{parse_rational, Rational};
use crate::exact::{Factorization, Polynomial};
use crate::integrate::Denominator;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    /// Character offset of the offending token.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parse error: {}", self.message)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(self.position))
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            input,
            chars: input.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            input: self.input.to_string(),
            position: at,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected '{c}'")))
        }
    }

    fn unexpected(&mut self, what: &str) -> ParseError {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.chars.get(at) {
            Some(c) => self.error(at, format!("{what}, found '{c}'")),
            None => self.error(at, format!("{what}, found end of input")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit() || *c == '.')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        parse_rational(&text).ok_or_else(|| self.error(start, format!("malformed number '{text}'")))
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("expected a nonnegative integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match text.parse::<u32>() {
            Ok(n) if n <= MAX_EXPONENT => Ok(n),
            _ => Err(self.error(start, format!("exponent {text} exceeds {MAX_EXPONENT}"))),
        }
    }

    // number ('/' number)?
    fn fraction(&mut self) -> Result<Rational, ParseError> {
        let p = self.number()?;
        if self.peek() == Some('/') {
            let slash = self.pos;
            self.pos += 1;
            let q = self.number()?;
            if q.is_zero() {
                return Err(self.error(slash, "division by zero"));
            }
            return Ok(p / q);
        }
        Ok(p)
    }

    // '(' sign? fraction ')', only when the group holds no 'x'.
    fn paren_coeff(&mut self) -> Result<Option<Rational>, ParseError> {
        if self.peek() != Some('(') {
            return Ok(None);
        }
        let close = self.chars[self.pos..].iter().position(|&c| c == ')');
        let group_has_x = match close {
            Some(k) => self.chars[self.pos..self.pos + k].contains(&'x'),
            None => true,
        };
        if group_has_x {
            return Ok(None);
        }
        self.pos += 1;
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.fraction()?;
        self.expect(')')?;
        Ok(Some(if neg { -v } else { v }))
    }

    fn power(&mut self) -> Result<u32, ParseError> {
        if self.eat('^') {
            self.uint()
        } else {
            Ok(1)
        }
    }

    // A term without its sign.
    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let coeff = match self.paren_coeff()? {
            Some(c) => Some(c),
            None if self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') => {
                Some(self.fraction()?)
            }
            None => None,
        };
        let has_star = coeff.is_some() && self.eat('*');
        if self.eat('x') {
            let k = self.power()?;
            let mut c = coeff.unwrap_or_else(Rational::one);
            if self.peek() == Some('/') {
                let slash = self.pos;
                self.pos += 1;
                let d = self.fraction()?;
                if d.is_zero() {
                    return Err(self.error(slash, "division by zero"));
                }
                c /= d;
            }
            return Ok(Polynomial::monomial(c, k as usize));
        }
        if has_star {
            return Err(self.unexpected("expected 'x' after '*'"));
        }
        match coeff {
            Some(c) => Ok(Polynomial::constant(c)),
            None => Err(self.unexpected("expected a term")),
        }
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') {
                false
            } else if first {
                false
            } else {
                break;
            };
            let t = self.term()?;
            out = if neg { &out - &t } else { &out + &t };
            first = false;
        }
        Ok(out)
    }

    fn factored(&mut self) -> Result<Factorization, ParseError> {
        let mut lead = Rational::one();
        let mut roots = Vec::new();
        if let Some(c) = self.paren_coeff()? {
            lead = c;
        } else if self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
            lead = self.fraction()?;
        } else if self.peek() == Some('-') {
            self.pos += 1;
            lead = if self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
                -self.fraction()?
            } else {
                -Rational::one()
            };
        }
        self.eat('*');
        if lead.is_zero() {
            return Err(self.error(0, "zero leading coefficient"));
        }
        let mut any = false;
        loop {
            self.eat('*');
            if self.eat('x') {
                roots.push((Rational::zero(), self.power()?));
            } else if self.peek() == Some('(') {
                let open = self.pos;
                self.pos += 1;
                let lin = self.poly()?;
                self.expect(')')?;
                if lin.degree() != Some(1) {
                    return Err(self.error(open, "each factor must be linear in x"));
                }
                let k = self.power()?;
                let a = lin.coeff(1);
                let root = -lin.coeff(0) / &a;
                lead *= num_traits::pow(a, k as usize);
                roots.push((root, k));
            } else {
                break;
            }
            any = true;
        }
        if !any {
            return Err(self.unexpected("expected a factor such as '(x+1)'"));
        }
        Ok(Factorization::from_roots(lead, roots))
    }
}

fn finish<T>(mut c: Cursor<'_>, v: T) -> Result<T, ParseError> {
    if c.at_end() {
        Ok(v)
    } else {
        Err(c.unexpected("unexpected trailing input"))
    }
}

/// Parses an expanded polynomial such as `"3x^2 - x/2 + 1"`.
pub fn parse_polynomial(s: &str) -> Result<Polynomial, ParseError> {
    let mut c = Cursor::new(s);
    if c.at_end() {
        return Err(c.error(0, "empty polynomial"));
    }
    let p = c.poly()?;
    finish(c, p)
}

/// Parses a product of linear factors such as `"(x+1)(x+2)^2"`, with an
/// optional constant in front.
pub fn parse_factored(s: &str) -> Result<Factorization, ParseError> {
    let mut c = Cursor::new(s);
    let f = c.factored()?;
    finish(c, f)
}

/// Whether `s` is written as a product of factors: some parenthesized group
/// contains `x`.
pub fn looks_factored(s: &str) -> bool {
    let mut rest = s;
    while let Some(open) = rest.find('(') {
        let tail = &rest[open + 1..];
        let close = tail.find(')').unwrap_or(tail.len());
        if tail[..close].contains('x') {
            return true;
        }
        rest = &tail[close.min(tail.len())..];
    }
    false
}

/// Denominator in either text form, chosen by [`looks_factored`].
pub fn parse_denominator(s: &str) -> Result<Denominator, ParseError> {
    if looks_factored(s) {
        Ok(Denominator::Factored(parse_factored(s)?))
    } else {
        Ok(Denominator::Expanded(parse_polynomial(s)?))
    }
}

/// Exact bound such as `"0"`, `"3/2"` or `"0.25"`.
pub fn parse_bound(s: &str) -> Result<Rational, ParseError> {
    parse_rational(s).ok_or_else(|| ParseError {
        input: s.to_string(),
        position: 0,
        message: "expected a rational number such as 3, -1/2 or 0.25".to_string(),
    })
}
