//! `logint`: exact closed forms for `∫ₐᵇ R(x)·lnᵐx dx`.
//!
//! Exit status: 0 success, 1 parse or usage error, 2 domain error (pole in
//! the interval, non-rational or positive pole, unsupported log power),
//! 3 oracle disagreement or oracle failure.

mod numfmt;
mod request;

use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use logint_core::exact::rational::to_f64;
use logint_core::special::dilog;
use logint_core::unimodal::CoeffReport;
use logint_core::parse_bound;
use rayon::prelude::*;
use serde_json::json;

use numfmt::{sci, sig15};
use request::{evaluate, Request, DEFAULT_TOL, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE};

const TOL_ENV: &str = "LOGINT_TOL";

#[derive(Parser, Debug)]
#[command(name = "logint", version, about = "Exact closed forms for integrals of R(x)·ln^m(x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    S,
    T,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed form of ∫ num/den · ln^power(x) dx over [lower, upper].
    Integrate {
        /// Numerator, e.g. "3x^2 - x/2 + 1".
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        /// Denominator, expanded ("x^2+3x+2") or factored ("(x+1)(x+2)^2").
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        /// Lower bound, a rational such as 0, 1/2 or 0.25.
        #[arg(long, allow_hyphen_values = true)]
        lower: String,
        /// Upper bound.
        #[arg(long, allow_hyphen_values = true)]
        upper: String,
        /// Power m of ln x.
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Compare against the quadrature oracle.
        #[arg(long)]
        verify: bool,
        /// Skip the symbolic engine and report only the oracle value; bounds
        /// may then be any finite decimals.
        #[arg(long)]
        numeric_only: bool,
        /// Verification tolerance, relative to 1 + |oracle| [env: LOGINT_TOL].
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Numeric Li2(x) for x <= 1/2.
    Dilog {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficient report for S_n (default) or T_n, as JSON.
    Unimodal {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Family::S)]
        family: Family,
    },
    /// Reads newline-delimited JSON requests and writes one JSON result per line.
    VerifyBatch {
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Default tolerance for lines without their own "tol" [env: LOGINT_TOL].
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn default_tol(flag: Option<f64>) -> Result<f64, String> {
    let positive = |t: &f64| *t > 0.0 && t.is_finite();
    if let Some(t) = flag {
        return Some(t).filter(positive).ok_or_else(|| format!("--tol {t} is not a positive number"));
    }
    match std::env::var(TOL_ENV) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(positive)
            .ok_or_else(|| format!("{TOL_ENV}={s} is not a positive number")),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> io::Result<i32> {
    match cli.command {
        Command::Integrate {
            num,
            den,
            lower,
            upper,
            power,
            verify,
            numeric_only,
            tol,
            format,
        } => {
            let tol = match default_tol(tol) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_PARSE);
                }
            };
            let req = Request {
                num,
                den,
                lower,
                upper,
                power,
                tol: Some(tol),
                verify,
                numeric_only,
            };
            let outcome = evaluate(&req, tol);
            match format {
                Format::Text => write!(out, "{}", outcome.to_text())?,
                Format::Json => writeln!(out, "{}", serde_json::to_string(&outcome)?)?,
            }
            if let Some(e) = &outcome.error {
                eprintln!("error: {e}");
            }
            Ok(outcome.exit_code)
        }
        Command::Dilog { x, format } => {
            let xv = match parse_bound(&x) {
                Ok(q) => to_f64(&q),
                Err(e) => {
                    eprintln!("error: --x: {e}");
                    return Ok(EXIT_PARSE);
                }
            };
            match dilog(xv) {
                Ok(r) => {
                    match format {
                        Format::Text => writeln!(
                            out,
                            "Li2({x}) = {}  (error bound {})",
                            sig15(r.value),
                            sci(r.est_error)
                        )?,
                        Format::Json => writeln!(
                            out,
                            "{}",
                            json!({"x": xv, "value": r.value, "est_error": r.est_error})
                        )?,
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(EXIT_DOMAIN)
                }
            }
        }
        Command::Unimodal { n, family } => {
            let report = match family {
                Family::S if n >= 3 => CoeffReport::s(n),
                Family::T if n >= 2 => CoeffReport::t(n),
                _ => {
                    eprintln!("error: --n {n} is too small (S_n needs n >= 3, T_n needs n >= 2)");
                    return Ok(EXIT_DOMAIN);
                }
            };
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
            Ok(EXIT_OK)
        }
        Command::VerifyBatch { input, tol } => {
            let tol = match default_tol(tol) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_PARSE);
                }
            };
            let reader: Box<dyn Read> = match &input {
                Some(path) => match std::fs::File::open(path) {
                    Ok(f) => Box::new(f),
                    Err(e) => {
                        eprintln!("error: {}: {e}", path.display());
                        return Ok(EXIT_PARSE);
                    }
                },
                None => Box::new(io::stdin()),
            };
            let lines: Vec<(usize, String)> = BufReader::new(reader)
                .lines()
                .enumerate()
                .map(|(i, l)| l.map(|l| (i + 1, l)))
                .collect::<io::Result<_>>()?;
            let results: Vec<(i32, serde_json::Value)> = lines
                .par_iter()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(line, text)| batch_item(*line, text, tol))
                .collect();
            let mut code = EXIT_OK;
            for (c, v) in &results {
                code = code.max(*c);
                writeln!(out, "{v}")?;
            }
            Ok(code)
        }
    }
}

fn batch_item(line: usize, text: &str, tol: f64) -> (i32, serde_json::Value) {
    let req: Request = match serde_json::from_str(text) {
        Ok(r) => r,
        Err(e) => {
            return (
                EXIT_PARSE,
                json!({"line": line, "status": "parse_error", "error": e.to_string()}),
            )
        }
    };
    let outcome = evaluate(&req, tol);
    let mut v = serde_json::to_value(&outcome).expect("outcome serializes");
    v["line"] = json!(line);
    (outcome.exit_code, v)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE as u8 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_PARSE as u8)
        }
    }
}
