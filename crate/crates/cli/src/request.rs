//! One integration request: parse, integrate, optionally verify.

use logint_core::exact::rational::to_f64;
use logint_core::quad::{quad_log, QuadError, QuadOptions};
use logint_core::{
    integrate_rational_log, parse_bound, parse_denominator, parse_polynomial, ClosedForm,
    IntegralSpec, ParseError,
};
use serde::{Deserialize, Serialize};

use crate::numfmt::{sci, sig15};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const DEFAULT_TOL: f64 = 1e-9;

/// Text fields exactly as given on the command line or in a batch line.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub num: String,
    pub den: String,
    pub lower: String,
    pub upper: String,
    #[serde(default = "default_power")]
    pub power: u32,
    #[serde(default)]
    pub tol: Option<f64>,
    #[serde(default = "default_verify")]
    pub verify: bool,
    #[serde(default)]
    pub numeric_only: bool,
}

fn default_power() -> u32 {
    1
}

fn default_verify() -> bool {
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedForm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_difference: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Outcome {
    fn failure(status: &'static str, exit_code: i32, error: String) -> Self {
        Self {
            status,
            closed_form: None,
            text: None,
            value: None,
            oracle: None,
            abs_difference: None,
            tolerance: None,
            error: Some(error),
            exit_code,
        }
    }

    fn parse_error(field: &str, e: ParseError) -> Self {
        Self::failure("parse_error", EXIT_PARSE, format!("--{field}: {e}"))
    }

    /// Human-readable report; errors go to stderr separately.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(t) = &self.text {
            out += &format!("closed form: {t}\n");
        }
        if let Some(v) = self.value {
            out += &format!("value:       {}\n", sig15(v));
        }
        if let Some(o) = &self.oracle {
            out += &format!(
                "oracle:      {}  (error estimate {}, {} evaluations)\n",
                sig15(o.value),
                sci(o.abs_error_estimate),
                o.evaluations
            );
        }
        if let (Some(d), Some(t)) = (self.abs_difference, self.tolerance) {
            out += &format!("difference:  {}  (tolerance {} * (1 + |oracle|))\n", sci(d), sci(t));
        }
        out += &format!("status:      {}\n", self.status);
        out
    }
}

fn oracle_options(tol: f64) -> QuadOptions {
    QuadOptions::with_abs_tol((tol * 0.01).min(logint_core::quad::DEFAULT_ABS_TOL))
}

fn run_oracle(
    p: &logint_core::exact::Polynomial,
    q: &logint_core::exact::Polynomial,
    a: f64,
    b: f64,
    m: u32,
    tol: f64,
) -> Result<OracleReport, Outcome> {
    match quad_log(p, q, a, b, m, &oracle_options(tol)) {
        Ok(r) => Ok(OracleReport {
            value: r.value,
            abs_error_estimate: r.abs_error_estimate,
            evaluations: r.evaluations,
        }),
        Err(e @ (QuadError::SingularInterior { .. } | QuadError::InvalidInterval { .. })) => {
            Err(Outcome::failure("domain_error", EXIT_DOMAIN, e.to_string()))
        }
        Err(e @ QuadError::NoConvergence(_)) => {
            Err(Outcome::failure("oracle_failed", EXIT_MISMATCH, e.to_string()))
        }
    }
}

fn numeric_bound(field: &str, s: &str) -> Result<f64, Outcome> {
    if let Ok(q) = parse_bound(s) {
        return Ok(to_f64(&q));
    }
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| {
            Outcome::failure(
                "parse_error",
                EXIT_PARSE,
                format!("--{field}: expected a number, found '{s}'"),
            )
        })
}

/// Runs one request to completion; never panics on bad input.
pub fn evaluate(req: &Request, default_tol: f64) -> Outcome {
    let tol = req.tol.unwrap_or(default_tol);
    let p = match parse_polynomial(&req.num) {
        Ok(p) => p,
        Err(e) => return Outcome::parse_error("num", e),
    };
    let den = match parse_denominator(&req.den) {
        Ok(d) => d,
        Err(e) => return Outcome::parse_error("den", e),
    };
    if req.numeric_only {
        let (a, b) = match (numeric_bound("lower", &req.lower), numeric_bound("upper", &req.upper)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        return match run_oracle(&p, &den.expanded(), a, b, req.power, tol) {
            Ok(o) => Outcome {
                status: "ok",
                closed_form: None,
                text: None,
                value: Some(o.value),
                oracle: Some(o),
                abs_difference: None,
                tolerance: None,
                error: None,
                exit_code: EXIT_OK,
            },
            Err(e) => e,
        };
    }
    let lower = match parse_bound(&req.lower) {
        Ok(v) => v,
        Err(e) => return Outcome::parse_error("lower", e),
    };
    let upper = match parse_bound(&req.upper) {
        Ok(v) => v,
        Err(e) => return Outcome::parse_error("upper", e),
    };
    let spec = IntegralSpec::new(p, den, lower, upper, req.power);
    let form = match integrate_rational_log(&spec) {
        Ok(f) => f,
        Err(e) => return Outcome::failure("domain_error", EXIT_DOMAIN, e.to_string()),
    };
    let value = match form.eval_precise() {
        Ok(v) => v,
        Err(e) => return Outcome::failure("domain_error", EXIT_DOMAIN, e.to_string()),
    };
    let mut out = Outcome {
        status: "ok",
        text: Some(form.to_string()),
        closed_form: Some(form),
        value: Some(value),
        oracle: None,
        abs_difference: None,
        tolerance: None,
        error: None,
        exit_code: EXIT_OK,
    };
    if req.verify {
        let o = match run_oracle(
            &spec.numerator,
            &spec.denominator.expanded(),
            to_f64(&spec.lower),
            to_f64(&spec.upper),
            spec.log_power,
            tol,
        ) {
            Ok(o) => o,
            Err(mut e) => {
                e.closed_form = out.closed_form;
                e.text = out.text;
                e.value = out.value;
                return e;
            }
        };
        let d = (value - o.value).abs();
        if d > tol * (1.0 + o.value.abs()) {
            out.status = "mismatch";
            out.exit_code = EXIT_MISMATCH;
        }
        out.abs_difference = Some(d);
        out.tolerance = Some(tol);
        out.oracle = Some(o);
    }
    out
}
