//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so the summary is always shown:
//! `cargo test -p qhdeform --test acceptance`.

use std::process::ExitCode;
use std::thread;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qhdeform::coalgebra::{jordanian_coproduct_check, qh_coproduct_suite, uq_coproduct_suite};
use qhdeform::deform::identities::deformed_suite;
use qhdeform::deform::{
    basis_action_x_check, casimir_check, jordanian_limit_suite, normal_ordered_y_check, verify_hx_commutator,
    verify_hy_commutator, verify_main_commutator, verify_round_trip, verify_uv_relation, verify_x_jminus,
};
use qhdeform::qseries::{
    alpha, alphas, beta_oracle, beta_recursive, f_product_series, f_series, legendre_at, tanh_index_report,
    u_of_v, v_of_u, AlphaPoly,
};
use qhdeform::rep::checks::{rep_suite, verify_eq25_conjugation, verify_power_identity};
use qhdeform::sampling::{sample_point, sample_real_q};
use qhdeform::scalar::substitute_q_one;
use qhdeform::{
    build_deformed, build_uq_rep, ClassicalQ, ClassicalQh, ExactQh, Numeric, NumericContext,
    Rational, RepSpec, Ring, SymbolicQ, TensorRep, VerificationReport,
};

const SEED: u64 = 20_240_601;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(reports: &[VerificationReport], extra: &str) -> Verdict {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} {} [{}]", r.equation, r.subject, r.note.clone().unwrap_or_default()))
        .collect();
    let worst = reports.iter().filter_map(|r| r.max_residual).fold(0.0, f64::max);
    if failed.is_empty() {
        Verdict { pass: true, detail: format!("{} checks, max residual {worst:.1e}{extra}", reports.len()) }
    } else {
        Verdict { pass: false, detail: format!("failed: {}", failed.join("; ")) }
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let mut v = f();
    let took = start.elapsed();
    v.detail.push_str(&format!(", {:.1}s", took.as_secs_f64()));
    if took > limit {
        v.pass = false;
        v.detail.push_str(&format!(" exceeds {}s", limit.as_secs()));
    }
    v
}

/// Runs one job per spin on its own thread and concatenates the reports in order.
fn per_spin(spins: impl IntoIterator<Item = u32>, f: impl Fn(u32) -> Vec<VerificationReport> + Sync) -> Vec<VerificationReport> {
    let spins: Vec<u32> = spins.into_iter().collect();
    thread::scope(|s| {
        let f = &f;
        let handles: Vec<_> = spins.iter().map(|&tj| s.spawn(move || f(tj))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn criterion_1() -> Verdict {
    timed(Duration::from_secs(60), || {
        let reports = per_spin(1..=8, |tj| {
            let g = build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).unwrap();
            vec![verify_main_commutator(&ExactQh, &build_deformed(&ExactQh, &g).unwrap())]
        });
        verdict(&reports, "")
    })
}

fn criterion_2() -> Verdict {
    let reports = per_spin(0..=6, |tj| {
        let g = build_uq_rep(&SymbolicQ, RepSpec::polynomial(tj)).unwrap();
        let gh = build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).unwrap();
        let d = build_deformed(&ExactQh, &gh).unwrap();
        vec![
            verify_power_identity(&SymbolicQ, &g),
            verify_eq25_conjugation(&SymbolicQ, &g),
            verify_x_jminus(&ExactQh, &d),
            verify_hx_commutator(&ExactQh, &d),
            verify_hy_commutator(&ExactQh, &d),
            verify_uv_relation(&ExactQh, &d),
        ]
    });
    verdict(&reports, "")
}

fn t(c: i64, powers: &[(usize, u32)]) -> AlphaPoly {
    AlphaPoly::term(Rational::from_int(c), powers)
}

/// The published expansions of `β_1 .. β_6` in the abstract `α_n`.
fn published_betas() -> Vec<AlphaPoly> {
    let sum = |terms: Vec<AlphaPoly>| terms.into_iter().fold(AlphaPoly::zero(), |a, b| a + b);
    vec![
        sum(vec![t(-1, &[(1, 1)])]),
        sum(vec![t(-1, &[(2, 1)]), t(3, &[(1, 2)])]),
        sum(vec![t(-1, &[(3, 1)]), t(8, &[(2, 1), (1, 1)]), t(-12, &[(1, 3)])]),
        sum(vec![
            t(-1, &[(4, 1)]),
            t(10, &[(3, 1), (1, 1)]),
            t(5, &[(2, 2)]),
            t(-55, &[(2, 1), (1, 2)]),
            t(55, &[(1, 4)]),
        ]),
        sum(vec![
            t(-1, &[(5, 1)]),
            t(12, &[(4, 1), (1, 1)]),
            t(12, &[(3, 1), (2, 1)]),
            t(-78, &[(3, 1), (1, 2)]),
            t(-78, &[(2, 2), (1, 1)]),
            t(364, &[(2, 1), (1, 3)]),
            t(-273, &[(1, 5)]),
        ]),
        sum(vec![
            t(-1, &[(6, 1)]),
            t(14, &[(5, 1), (1, 1)]),
            t(14, &[(4, 1), (2, 1)]),
            t(-105, &[(4, 1), (1, 2)]),
            t(7, &[(3, 2)]),
            t(-210, &[(3, 1), (2, 1), (1, 1)]),
            t(560, &[(3, 1), (1, 3)]),
            t(-35, &[(2, 3)]),
            t(840, &[(2, 2), (1, 2)]),
            t(-2380, &[(2, 1), (1, 4)]),
            t(1428, &[(1, 6)]),
        ]),
    ]
}

fn criterion_3() -> Verdict {
    let mut symbols = vec![AlphaPoly::one()];
    symbols.extend((1..=6).map(AlphaPoly::symbol));
    let betas = beta_recursive(&symbols);
    let published = published_betas();
    let mismatched: Vec<usize> = (1..=6).filter(|&n| betas[n] != published[n - 1]).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut disagreements = 0;
    for _ in 0..20 {
        let mut a = vec![Rational::one()];
        a.extend((1..=10).map(|_| {
            Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=20).into())
        }));
        if beta_recursive(&a) != beta_oracle(&a) {
            disagreements += 1;
        }
    }
    let pass = mismatched.is_empty() && disagreements == 0;
    Verdict {
        pass,
        detail: format!(
            "published lines matched {}/6, recursion vs reversion agree on {}/20 random assignments (n <= 10)",
            6 - mismatched.len(),
            20 - disagreements
        ),
    }
}

fn criterion_4() -> Verdict {
    let alpha_ok = (0..=10).all(|n| {
        substitute_q_one(&alpha(&SymbolicQ, n).unwrap()) == Rational::new(1.into(), (2 * n as i64 + 1).into())
    });
    // Known Taylor coefficients of tanh(x) = Σ t_n x^{2n+1}.
    let tanh: Vec<Rational> = [(1, 1), (-1, 3), (2, 15), (-17, 315), (62, 2835), (-1382, 155925), (21844, 6081075)]
        .iter()
        .map(|&(a, b)| Rational::new(a.into(), b.into()))
        .collect();
    let classical = beta_recursive(&alphas(&ClassicalQ, 6).unwrap().values);
    let beta_ok = classical == tanh;
    let shifted = tanh_index_report(&classical);
    let shift_rows = shifted.iter().filter(|r| r.matches_at_n_plus_1 && !r.matches_at_n).count();
    Verdict {
        pass: alpha_ok && beta_ok,
        detail: format!(
            "alpha_n(q=1) = 1/(2n+1) for n <= 10: {alpha_ok}; beta_n(q=1) = tanh coefficients for n <= 6: {beta_ok}; \
             closed Bernoulli form matches only with index n+1 on {shift_rows}/{} rows (recorded, not failed)",
            shifted.len()
        ),
    }
}

fn criterion_5() -> Verdict {
    verdict(&per_spin(0..=6, |tj| jordanian_limit_suite(&ClassicalQh, tj)), "")
}

fn criterion_6() -> Verdict {
    let reports = per_spin(0..=6, |tj| vec![casimir_check(&SymbolicQ, &build_uq_rep(&SymbolicQ, RepSpec::polynomial(tj)).unwrap())]);
    verdict(&reports, "")
}

fn criterion_7() -> Verdict {
    let exact = per_spin(0..=8, |tj| {
        let g = build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).unwrap();
        vec![verify_round_trip(&ExactQh, &build_deformed(&ExactQh, &g).unwrap())]
    });
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut worst = 0.0f64;
    let mut failures = 0;
    for _ in 0..100 {
        let q = loop {
            let q = Complex64::from_polar(rng.gen_range(0.5f64.ln()..2f64.ln()).exp(), rng.gen_range(0.0..std::f64::consts::TAU));
            if NumericContext::new(q, Complex64::zero()).check_generic(4).is_ok() {
                break q;
            }
        };
        let u = Complex64::from_polar(rng.gen_range(0.0..0.3), rng.gen_range(0.0..std::f64::consts::TAU));
        match v_of_u(u, &NumericContext::new(q, Complex64::zero())) {
            Ok(v) => worst = worst.max((u_of_v(v, q) - u).norm()),
            Err(_) => failures += 1,
        }
    }
    let scalar_ok = failures == 0 && worst < 1e-10;
    let v = verdict(&exact, "");
    Verdict {
        pass: v.pass && scalar_ok,
        detail: format!("matrix round trip: {}; scalar round trip max error {worst:.1e}, {failures} unresolved", v.detail),
    }
}

fn criterion_8() -> Verdict {
    let series = f_series(&SymbolicQ, 9);
    let product = f_product_series(&SymbolicQ, 9);
    let ok = (0..10).all(|n| series[n] == legendre_at(&SymbolicQ, n) && product[n] == legendre_at(&SymbolicQ, n));
    Verdict { pass: ok, detail: "P_0 .. P_9 reproduced by both expansions".into() }
}

fn criterion_9() -> Verdict {
    timed(Duration::from_secs(120), || {
        let pairs = [TensorRep::new(1, 1), TensorRep::new(1, 2)];
        let reports: Vec<_> = thread::scope(|s| {
            let hs: Vec<_> = pairs
                .iter()
                .map(|&p| {
                    s.spawn(move || {
                        let mut r = uq_coproduct_suite(&SymbolicQ, p);
                        r.extend(qh_coproduct_suite(&ExactQh, p));
                        r.extend(jordanian_coproduct_check(&ClassicalQh, p));
                        r
                    })
                })
                .collect();
            hs.into_iter().flat_map(|h| h.join().unwrap()).collect()
        });
        verdict(&reports, "")
    })
}

fn numeric_reports(ctx: &NumericContext, real_q: f64) -> Vec<VerificationReport> {
    let dom = Numeric::<f64>::new(ctx);
    let mut out = Vec::new();
    for tj in 0..=6 {
        let g = build_uq_rep(&dom, RepSpec::polynomial(tj)).unwrap();
        out.extend(rep_suite(&dom, &g));
        out.push(casimir_check(&dom, &g));
        out.extend(deformed_suite(&dom, &build_deformed(&dom, &g).unwrap()));
    }
    for p in [TensorRep::new(1, 1), TensorRep::new(1, 2)] {
        out.extend(uq_coproduct_suite(&dom, p));
        out.extend(qh_coproduct_suite(&dom, p));
    }
    let at_one = Numeric::<f64>::new(&NumericContext::new(Complex64::one(), ctx.h));
    for tj in 0..=6 {
        out.extend(jordanian_limit_suite(&at_one, tj));
    }
    for p in [TensorRep::new(1, 1), TensorRep::new(1, 2)] {
        out.extend(jordanian_coproduct_check(&at_one, p));
    }
    let real = NumericContext::new(Complex64::new(real_q, 0.0), ctx.h);
    for tj in 0..=4 {
        out.push(basis_action_x_check(&real, tj));
        out.push(normal_ordered_y_check(&real, tj));
    }
    out
}

fn criterion_10() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let points: Vec<(NumericContext, f64)> = (0..5).map(|_| (sample_point(&mut rng), sample_real_q(&mut rng))).collect();
    let reports: Vec<_> = thread::scope(|s| {
        let hs: Vec<_> = points.iter().map(|(c, r)| s.spawn(move || numeric_reports(c, *r))).collect();
        hs.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    verdict(&reports, " over 5 random points")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("exact closure [X,Y] = [2H], twoJ 1..8", criterion_1),
        ("exact auxiliary identities, twoJ <= 6", criterion_2),
        ("inverse-coefficient table and oracle", criterion_3),
        ("classical collapse of alpha and beta", criterion_4),
        ("Jordanian relations and Casimir, twoJ <= 6", criterion_5),
        ("U_q Casimir forms and eigenvalue, twoJ <= 6", criterion_6),
        ("inversion of the map", criterion_7),
        ("Legendre generating function", criterion_8),
        ("coproducts on (1/2)x(1/2) and (1/2)x(1)", criterion_9),
        ("numeric consistency at random generic points", criterion_10),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        all &= v.pass;
        println!("criterion {:>2}: {} - {name} ({})", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    if all {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
