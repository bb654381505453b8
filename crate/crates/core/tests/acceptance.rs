//! Acceptance suite: eight criteria, one PASS/FAIL line each, exit status 1
//! if any fails. Each criterion also has a wall-clock budget.

mod common;

use std::f64::consts::LN_2;
use std::time::{Duration, Instant};

use logint_core::closed_form::{Atom, ClosedForm};
use logint_core::exact::rational::to_f64;
use logint_core::exact::{
    int, partial_fractions_expanded, rat, rational_roots_factorize, Factorization, Polynomial,
    Rational,
};
use logint_core::integrate::{
    h_n, integrate_multiple_pole, q_decomposition, symmetric_two_pole_dilog,
    symmetric_two_pole_elementary, x_closed_form, y_closed_form,
};
use logint_core::quad::{quad_log, QuadOptions};
use logint_core::special::{dilog_landen, dilog_series, euler_identity_residual, PI_SQUARED};
use logint_core::unimodal::{check_nondecreasing, check_unimodal, s_poly, t_poly};
use logint_core::{integrate_rational_log, parse_denominator, parse_polynomial, IntegralSpec};
use num_traits::{Signed, Zero};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn num(f: &ClosedForm) -> f64 {
    f.eval_numeric().expect("closed form evaluates")
}

fn spec_from_text(num: &str, den: &str, a: Rational, b: Rational) -> IntegralSpec {
    IntegralSpec::new(
        parse_polynomial(num).unwrap(),
        parse_denominator(den).unwrap(),
        a,
        b,
        1,
    )
}

fn oracle(spec: &IntegralSpec) -> Result<f64, String> {
    quad_log(
        &spec.numerator,
        &spec.denominator.expanded(),
        to_f64(&spec.lower),
        to_f64(&spec.upper),
        spec.log_power,
        &QuadOptions::default(),
    )
    .map(|r| r.value)
    .map_err(|e| e.to_string())
}

fn ac1_golden_values() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut check = |spec: IntegralSpec, want_form: ClosedForm, want: f64, label: &str| {
        let got = integrate_rational_log(&spec).map_err(|e| format!("{label}: {e}"))?;
        ensure(got == want_form, || format!("{label}: got {got}, want {want_form}"))?;
        let d = (num(&got) - want).abs();
        worst = worst.max(d);
        ensure(d <= 1e-12, || format!("{label}: |Δ| = {d:e}"))
    };
    check(
        spec_from_text("1", "(x+1)", int(0), int(1)),
        ClosedForm::from_atom(Atom::PiSquared, rat(-1, 12)),
        -PI_SQUARED / 12.0,
        "ln t/(1+t) on [0,1]",
    )?;
    check(
        spec_from_text("1", "(x+1)^2", int(0), int(1)),
        ClosedForm::from_atom(Atom::Log(int(2)), int(-1)),
        -LN_2,
        "ln x/(1+x)^2 on [0,1]",
    )?;
    for b in [rat(1, 2), int(2), int(10)] {
        let mut want = ClosedForm::from_atom(Atom::log_prod(int(2), b.clone()), int(1));
        want.add_term(Atom::PiSquared, rat(-1, 12));
        let spec = IntegralSpec::new(
            Polynomial::one(),
            logint_core::Denominator::Expanded(Polynomial::linear(b.clone())),
            int(0),
            b.clone(),
            1,
        );
        let value = LN_2 * to_f64(&b).ln() - PI_SQUARED / 12.0;
        check(spec, want, value, &format!("ln x/(x+b) on [0,b], b={b}"))?;
    }
    Ok(format!("5 integrals symbolic-exact, max |Δ| = {worst:.1e}"))
}

fn ac2_asymptotic_recovery() -> Outcome {
    let b = int(1_000_000);
    let bound = 2.0 * 1e6f64.ln() / 1e6;
    let mut worst: f64 = 0.0;
    for r in [rat(1, 2), int(1), int(3)] {
        let rf = to_f64(&r);
        let limit = rf.ln() / rf;
        let direct = num(&integrate_multiple_pole(2, &b, &r));
        let spec = IntegralSpec::new(
            Polynomial::one(),
            logint_core::Denominator::Factored(Factorization::from_roots(
                int(1),
                vec![(-r.clone(), 2)],
            )),
            int(0),
            b.clone(),
            1,
        );
        let driven = num(&integrate_rational_log(&spec).map_err(|e| e.to_string())?);
        for v in [direct, driven] {
            let d = (v - limit).abs();
            worst = worst.max(d);
            ensure(d <= bound, || format!("r={r}: |f2 - ln r/r| = {d:e} > {bound:e}"))?;
        }
    }
    Ok(format!("max deviation {worst:.2e} <= 2 ln(b)/b = {bound:.2e}"))
}

fn ac3_euler_identity() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let z = 10f64.powf(-6.0 + 12.0 * f64::from(i) / 199.0);
        let r = euler_identity_residual(z).map_err(|e| e.to_string())?.abs();
        worst = worst.max(r);
        ensure(r <= 1e-12, || format!("z = {z:e}: residual {r:e}"))?;
    }
    Ok(format!("200 points, max residual {worst:.1e}"))
}

fn ac4_dual_forms() -> Outcome {
    let mut rng = common::rng(4);
    let (mut worst_forms, mut worst_oracle): (f64, f64) = (0.0, 0.0);
    for _ in 0..50 {
        let (a, b) = loop {
            let a = common::rational_in(&mut rng, 0, 20, 16);
            let b = common::rational_in(&mut rng, 0, 20, 16);
            if a < b {
                break (a, b);
            }
        };
        let elem = num(&symmetric_two_pole_elementary(&a, &b).map_err(|e| e.to_string())?);
        let dil = num(&symmetric_two_pole_dilog(&a, &b).map_err(|e| e.to_string())?);
        let den = &Polynomial::linear(a.clone()) * &Polynomial::linear(b.clone());
        let o = quad_log(
            &Polynomial::one(),
            &den,
            to_f64(&a),
            to_f64(&b),
            1,
            &QuadOptions::default(),
        )
        .map_err(|e| format!("a={a} b={b}: {e}"))?
        .value;
        let d = (elem - dil).abs();
        worst_forms = worst_forms.max(d);
        ensure(d <= 1e-12, || format!("a={a} b={b}: forms differ by {d:e}"))?;
        for v in [elem, dil] {
            let d = (v - o).abs();
            worst_oracle = worst_oracle.max(d);
            ensure(d <= 1e-10, || format!("a={a} b={b}: oracle differs by {d:e}"))?;
        }
    }
    Ok(format!(
        "50 pairs, forms agree to {worst_forms:.1e}, oracle to {worst_oracle:.1e}"
    ))
}

fn ac5_oracle_agreement() -> Outcome {
    let mut rng = common::rng(5);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let spec = common::integral_spec(&mut rng);
        let f = integrate_rational_log(&spec).map_err(|e| format!("spec {i}: {e}"))?;
        let v = num(&f);
        let o = oracle(&spec).map_err(|e| format!("spec {i}: oracle {e}"))?;
        let scaled = (v - o).abs() / (1.0 + o.abs());
        worst = worst.max(scaled);
        ensure(scaled <= 1e-9, || {
            format!(
                "spec {i} ({}) / ({}) on [{}, {}]: symbolic {v}, oracle {o}",
                spec.numerator,
                spec.denominator.expanded(),
                spec.lower,
                spec.upper
            )
        })?;
    }
    Ok(format!("200 specs, max |Δ|/(1+|v|) = {worst:.1e}"))
}

fn ac6_recurrences() -> Outcome {
    for n in 2..=30 {
        let q = q_decomposition(n);
        ensure(q.x == x_closed_form(n), || format!("X_{n} mismatch"))?;
        ensure(q.y == y_closed_form(n), || format!("Y_{n} mismatch"))?;
    }
    let mut worst: f64 = 0.0;
    for n in 2..=20 {
        let q = q_decomposition(n);
        for b in [rat(1, 4), int(1), rat(7, 2)] {
            let bf = to_f64(&b);
            let lhs = (1.0 + bf).powi(n as i32 - 1) * num(&h_n(n, &b));
            let rhs = q.x.eval_f64(bf) * bf.ln() + q.y.eval_f64(bf) * bf.ln_1p() + q.z.eval_f64(bf);
            let d = (lhs - rhs).abs() / lhs.abs().max(1.0);
            worst = worst.max(d);
            ensure(d <= 1e-10, || format!("n={n} b={b}: residual {d:e}"))?;
            let exact = h_n(n, &b).scale(&num_traits::pow(&b + int(1), n as usize - 1));
            ensure(exact == q.at(&b), || format!("n={n} b={b}: not exact"))?;
        }
    }
    Ok(format!(
        "X,Y exact for n<=30; q-identity exact, numeric residual {worst:.1e}"
    ))
}

fn ac7_unimodal() -> Outcome {
    let mut s_prev: Option<Polynomial> = None;
    for n in 3..=50u32 {
        let t = t_poly(n);
        ensure(t.degree() == Some(n as usize - 3), || format!("deg T_{n}"))?;
        ensure(
            t.coeffs().iter().all(|c| c.is_integer() && c.is_positive()),
            || format!("T_{n} has a non-positive or non-integer coefficient"),
        )?;
        ensure(check_unimodal(&t).0, || format!("T_{n} not unimodal"))?;
        let s = s_poly(n);
        ensure(check_nondecreasing(&s).0, || format!("S_{n} decreases"))?;
        let fact: num_bigint::BigInt = (1..=i64::from(n) - 3).product();
        ensure(s.coeff(0) == Rational::from_integer(fact), || {
            format!("S_{n}: c0 != (n-3)!")
        })?;
        ensure(s == t.shift(&int(-1)), || format!("S_{n} != T_{n}(b-1)"))?;
        if let (Some(prev), true) = (&s_prev, n <= 30) {
            let nn = int(i64::from(n) - 2);
            for k in 1..(n as usize).saturating_sub(3) {
                let lhs = s.coeff(k + 1) - s.coeff(k);
                let rhs = &nn * (prev.coeff(k) - prev.coeff(k - 1));
                ensure(lhs == rhs, || format!("difference identity fails at n={n} k={k}"))?;
            }
        }
        s_prev = Some(s);
    }
    Ok("n = 3..50 structure and unimodality; difference identity n <= 30".into())
}

const PROPERTY_CASES: usize = 500;

fn ac8_properties() -> Outcome {
    let mut rng = common::rng(8);

    // Partial-fraction recomposition.
    for i in 0..PROPERTY_CASES {
        let p = common::polynomial(&mut rng, 8, 20);
        let deg = rng.gen_range(1..=8);
        let roots: Vec<(Rational, u32)> = (0..deg)
            .map(|_| (common::rational(&mut rng, 20, 6), 1))
            .collect();
        let lead = common::rational(&mut rng, 20, 4);
        let lead = if lead.is_zero() { int(1) } else { lead };
        let q = Factorization::from_roots(lead, roots).expand();
        let fac = rational_roots_factorize(&q);
        ensure(fac.expand() == q, || format!("case {i}: factorization does not expand to Q"))?;
        let r = partial_fractions_expanded(&p, &q).map_err(|e| format!("case {i}: {e}"))?;
        let (n2, d2) = r.recompose();
        ensure(&n2 * &q == &p * &d2, || format!("case {i}: recomposition differs"))?;
    }

    // Additivity and derivative check.
    for i in 0..PROPERTY_CASES {
        let mut spec = common::integral_spec(&mut rng);
        if spec.lower.is_zero() {
            spec.lower = &spec.upper / int(2);
        }
        let whole = IntegralSpec {
            lower: int(0),
            ..spec.clone()
        };
        let left = IntegralSpec {
            upper: spec.lower.clone(),
            lower: int(0),
            ..spec.clone()
        };
        let fw = integrate_rational_log(&whole).map_err(|e| e.to_string())?;
        let fl = integrate_rational_log(&left).map_err(|e| e.to_string())?;
        let fr = integrate_rational_log(&spec).map_err(|e| e.to_string())?;
        ensure(fw == &fl + &fr, || format!("case {i}: not additive"))?;
        let precise = |f: &ClosedForm| f.eval_precise().unwrap();
        let (vw, vl, vr) = (precise(&fw), precise(&fl), precise(&fr));
        let d = (vw - vl - vr).abs();
        ensure(d <= 1e-12 * (1.0 + vl.abs() + vr.abs()), || {
            format!("case {i}: additivity residual {d:e}")
        })?;

        let b = rat(1, 2) + common::rational_in(&mut rng, 0, 19, 8) / int(2);
        let eps = rat(1, 100_000);
        let at = |t: Rational| {
            integrate_rational_log(&IntegralSpec {
                lower: int(0),
                upper: t,
                ..spec.clone()
            })
            .unwrap()
        };
        // Nearby high-order poles make the terms cancel by many orders of
        // magnitude, so the difference is evaluated at high precision.
        let diff = &at(&b + &eps) - &at(&b - &eps);
        let fd = diff.eval_precise().map_err(|e| e.to_string())? / 2e-5;
        let bf = to_f64(&b);
        let want = spec.numerator.eval_f64(bf) / spec.denominator.expanded().eval_f64(bf) * bf.ln();
        ensure((fd - want).abs() <= 1e-6 * want.abs().max(1.0), || {
            format!("case {i}: derivative {fd} vs {want} at b = {b}")
        })?;
    }

    // Canonicalization idempotence.
    for i in 0..PROPERTY_CASES {
        let raw = random_raw_form(&mut rng);
        let once = raw.canonicalize();
        ensure(once.canonicalize() == once && once.is_canonical(), || {
            format!("case {i}: canonicalize not idempotent on {raw:?}")
        })?;
    }

    // Dilog series against the Landen route on [−1, −1/2].
    for i in 0..PROPERTY_CASES {
        let x = -0.5 - 0.5 * rng.gen::<f64>();
        let d = (dilog_series(x).value - dilog_landen(x).value).abs();
        ensure(d <= 1e-13, || format!("case {i}: x = {x}: branches differ by {d:e}"))?;
    }
    Ok(format!(
        "{PROPERTY_CASES} cases each: recomposition, additivity, derivative, canonicalization, dilog branches"
    ))
}

fn random_raw_form<R: Rng>(rng: &mut R) -> ClosedForm {
    let small = |rng: &mut R| -> Rational {
        match rng.gen_range(0..4) {
            0 => int(1),
            1 => rat(rng.gen_range(1..=9), rng.gen_range(1..=9)),
            _ => rat(rng.gen_range(1..=30), rng.gen_range(1..=4)),
        }
    };
    let terms: Vec<(Atom, Rational)> = (0..rng.gen_range(0..8))
        .map(|_| {
            let atom = match rng.gen_range(0..6) {
                0 => Atom::Unit,
                1 => Atom::PiSquared,
                2 => Atom::Log(small(rng)),
                3 => Atom::LogProd(small(rng), small(rng)),
                4 => Atom::LogPow(small(rng), rng.gen_range(0..5)),
                _ => match rng.gen_range(0..3) {
                    0 => Atom::Dilog(int(-1)),
                    1 => Atom::Dilog(int(0)),
                    _ => Atom::Dilog(-small(rng)),
                },
            };
            (atom, common::rational(rng, 5, 3))
        })
        .collect();
    ClosedForm::from_raw_terms(terms)
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "golden table values",
            budget: Duration::from_secs(1),
            run: ac1_golden_values,
        },
        Criterion {
            id: 2,
            name: "double-pole asymptotics at b = 1e6",
            budget: Duration::from_secs(1),
            run: ac2_asymptotic_recovery,
        },
        Criterion {
            id: 3,
            name: "Euler dilogarithm identity",
            budget: Duration::from_secs(1),
            run: ac3_euler_identity,
        },
        Criterion {
            id: 4,
            name: "symmetric two-pole dual forms",
            budget: Duration::from_secs(30),
            run: ac4_dual_forms,
        },
        Criterion {
            id: 5,
            name: "symbolic vs quadrature oracle",
            budget: Duration::from_secs(120),
            run: ac5_oracle_agreement,
        },
        Criterion {
            id: 6,
            name: "X/Y/Z recurrences and q-identity",
            budget: Duration::from_secs(5),
            run: ac6_recurrences,
        },
        Criterion {
            id: 7,
            name: "T_n / S_n unimodal family",
            budget: Duration::from_secs(5),
            run: ac7_unimodal,
        },
        Criterion {
            id: 8,
            name: "property suites",
            budget: Duration::from_secs(120),
            run: ac8_properties,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(c.run)
            .unwrap_or_else(|p| Err(format!("panicked: {}", panic_message(&p))));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > c.budget => Err(format!(
                "took {:.2} s, budget {} s",
                elapsed.as_secs_f64(),
                c.budget.as_secs()
            )),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "AC{} {tag} {:<38} {:>7.3} s  {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn panic_message(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_default()
}
