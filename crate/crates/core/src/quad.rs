//! Adaptive quadrature for `∫ₐᵇ R(x)·lnᵐx dx`, used as independent ground
//! truth for the closed forms.
//!
//! Away from the origin the integral is computed by globally adaptive
//! 15-point Gauss–Kronrod bisection. When `a = 0` the piece over `(0, c]`,
//! `c = min(b, 1)`, is mapped by `x = e^{−s}` to the smooth, exponentially
//! decaying `∫ R(e^{−s})(−s)ᵐe^{−s} ds` on `[ln(1/c), S]`, with `S` chosen so
//! the neglected tail is below a tenth of the tolerance. Nothing here touches
//! the symbolic engine.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::exact::factor::has_root_in;
use crate::exact::{FactoredRationalFunction, Polynomial};

pub const DEFAULT_ABS_TOL: f64 = 1e-11;
pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_EVALS: usize = 1_000_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: DEFAULT_ABS_TOL,
            rel_tol: DEFAULT_REL_TOL,
            max_evals: DEFAULT_MAX_EVALS,
        }
    }
}

impl QuadOptions {
    pub fn with_abs_tol(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    /// The accuracy target for an integral of size `value`.
    pub fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    /// Set when `abs_error_estimate ≤ max(abs_tol, rel_tol·|value|)`.
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("integrand is singular inside [{a}, {b}]")]
    SingularInterior { a: f64, b: f64 },
    #[error("no convergence within {} evaluations (estimate {:e} ± {:e})", .0.evaluations, .0.value, .0.abs_error_estimate)]
    NoConvergence(QuadResult),
    #[error("invalid interval [{a}, {b}]: need 0 <= a < b")]
    InvalidInterval { a: f64, b: f64 },
}

struct Segment {
    piece: usize,
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

// One 15-point Kronrod panel with the QUADPACK error heuristic.
fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

const PANEL_EVALS: usize = 15;

/// Globally adaptive bisection on `[a, b]` until the summed error estimate
/// meets `opts.target` or the evaluation budget runs out.
pub fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, opts: &QuadOptions) -> QuadResult {
    adaptive_pieces(&[(f as &dyn Fn(f64) -> f64, a, b)], 0.0, opts)
}

// Resynchronize the running sums with a full re-summation this often.
const RESUM_EVERY: usize = 64;

fn resum(heap: &BinaryHeap<Segment>) -> (f64, f64) {
    let mut segs: Vec<&Segment> = heap.iter().collect();
    segs.sort_by(|x, y| (x.piece, x.a).partial_cmp(&(y.piece, y.a)).unwrap_or(Ordering::Equal));
    let values: Vec<f64> = segs.iter().map(|s| s.value).collect();
    let errors: Vec<f64> = segs.iter().map(|s| s.error).collect();
    (pairwise_sum(&values), pairwise_sum(&errors))
}

/// One adaptive loop over several integrands on their own intervals, sharing
/// a single error budget: the worst panel anywhere is bisected next.
/// `extra_err` is added to the estimate unchanged (e.g. a truncated tail).
fn adaptive_pieces(
    pieces: &[(&dyn Fn(f64) -> f64, f64, f64)],
    extra_err: f64,
    opts: &QuadOptions,
) -> QuadResult {
    let mut heap = BinaryHeap::new();
    let mut evals = 0;
    for (piece, &(f, a, b)) in pieces.iter().enumerate() {
        let (value, error) = gauss_kronrod(&f, a, b);
        evals += PANEL_EVALS;
        heap.push(Segment {
            piece,
            a,
            b,
            value,
            error,
        });
    }
    let (mut total, mut total_err) = resum(&heap);
    let mut steps = 0;
    loop {
        if !total.is_finite() || !total_err.is_finite() {
            break;
        }
        if total_err + extra_err <= opts.target(total) {
            (total, total_err) = resum(&heap);
            if total_err + extra_err <= opts.target(total) {
                break;
            }
        }
        if evals + 2 * PANEL_EVALS > opts.max_evals {
            break;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            break;
        }
        let f = pieces[worst.piece].0;
        let (v1, e1) = gauss_kronrod(&f, worst.a, mid);
        let (v2, e2) = gauss_kronrod(&f, mid, worst.b);
        evals += 2 * PANEL_EVALS;
        total += (v1 + v2) - worst.value;
        total_err += (e1 + e2) - worst.error;
        heap.push(Segment {
            piece: worst.piece,
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Segment {
            piece: worst.piece,
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
        steps += 1;
        if steps % RESUM_EVERY == 0 {
            (total, total_err) = resum(&heap);
        }
    }
    let (total, total_err) = resum(&heap);
    let err = total_err + extra_err;
    QuadResult {
        value: total,
        abs_error_estimate: err,
        evaluations: evals,
        converged: total.is_finite() && err <= opts.target(total),
    }
}

fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 8 {
        return v.iter().sum();
    }
    let (l, r) = v.split_at(v.len() / 2);
    pairwise_sum(l) + pairwise_sum(r)
}

// ∫_S^∞ s^m e^{−s} ds = m! e^{−S} Σ_{i≤m} S^i/i!
fn upper_incomplete_gamma_int(m: u32, s: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for i in 1..=m {
        term *= s / f64::from(i);
        sum += term;
    }
    let fact: f64 = (1..=m).map(f64::from).product();
    fact * (-s).exp() * sum
}

/// `∫ₐᵇ f(x)·lnᵐx dx` for an `f` that is finite on `[a, b]` (including at
/// `x = 0` when `a = 0`).
pub fn quad_log_fn<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    m: u32,
    opts: &QuadOptions,
) -> Result<QuadResult, QuadError> {
    if !(a >= 0.0 && b > a && b.is_finite()) {
        return Err(QuadError::InvalidInterval { a, b });
    }
    let mi = m as i32;
    let with_log = |x: f64| {
        if m == 0 {
            f(x)
        } else {
            f(x) * x.ln().powi(mi)
        }
    };
    let split = if a == 0.0 { b.min(1.0) } else { a };
    let sign = if m % 2 == 1 { -1.0 } else { 1.0 };
    let g = |s: f64| {
        let x = (-s).exp();
        sign * f(x) * s.powi(mi) * x
    };
    let mut pieces: Vec<(&dyn Fn(f64) -> f64, f64, f64)> = Vec::new();
    let mut tail = 0.0;
    if a == 0.0 {
        let s_lo = (1.0 / split).ln();
        // Bound |f| near the origin and pick the cutoff for the tail.
        let mut s_hi = s_lo.max(1.0);
        loop {
            let x = (-s_hi).exp();
            let bound = 2.0 * f(0.0).abs().max(f(x).abs()).max(f(0.5 * x).abs()) + f64::MIN_POSITIVE;
            tail = bound * upper_incomplete_gamma_int(m, s_hi);
            // Fixed far below any working tolerance so the panel layout, and
            // hence the refinement sequence, does not depend on `abs_tol`.
            if tail < (opts.abs_tol * 0.1).min(1e-20 * bound) || s_hi > 700.0 {
                break;
            }
            s_hi += 1.0;
        }
        pieces.push((&g, s_lo, s_hi));
    }
    if b > split {
        pieces.push((&with_log, split, b));
    }

    let result = adaptive_pieces(&pieces, tail, opts);
    if !result.value.is_finite() {
        return Err(QuadError::SingularInterior { a, b });
    }
    if result.converged {
        Ok(result)
    } else {
        Err(QuadError::NoConvergence(result))
    }
}

/// `∫ₐᵇ P(x)/Q(x)·lnᵐx dx` from the raw numerator and denominator.
pub fn quad_log(
    p: &Polynomial,
    q: &Polynomial,
    a: f64,
    b: f64,
    m: u32,
    opts: &QuadOptions,
) -> Result<QuadResult, QuadError> {
    if q.is_zero() || has_root_in(q, a, b) {
        return Err(QuadError::SingularInterior { a, b });
    }
    let pc = p.to_f64_coeffs();
    let qc = q.to_f64_coeffs();
    let horner = |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, &k| acc * x + k);
    quad_log_fn(move |x| horner(&pc, x) / horner(&qc, x), a, b, m, opts)
}

/// Same as [`quad_log`] for an integrand already in partial-fraction form.
pub fn quad_log_factored(
    r: &FactoredRationalFunction,
    a: f64,
    b: f64,
    m: u32,
    opts: &QuadOptions,
) -> Result<QuadResult, QuadError> {
    let singular = r.poles.iter().any(|p| {
        let x = crate::exact::rational::to_f64(&p.location());
        x >= a && x <= b
    });
    if singular {
        return Err(QuadError::SingularInterior { a, b });
    }
    quad_log_fn(|x| r.eval_f64(x), a, b, m, opts)
}
