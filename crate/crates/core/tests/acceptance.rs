//! Acceptance criteria 1 to 9, one line each. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use octoplane::albert::{self, suite, AlbertAlgebra, AlbertElement, JordanTarget};
use octoplane::compalg::{build_spec, expected_law, identity_check, Algebra, AlgebraKind, Family, Law};
use octoplane::liecert::{self, float, Certificate, LieTarget, CLOSURE_TOL, DEFAULT_TOLERANCES};
use octoplane::planes::{axiom_scan, iso_check, Plane, PlaneKind};
use octoplane::scalars::{CQSqrt3, Field, QSqrt3};

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: impl Into<String>) -> Outcome {
    Outcome { pass, summary: summary.into() }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> (Outcome, Duration, Duration) {
    let t = Instant::now();
    let o = f();
    (o, t.elapsed(), budget)
}

fn criterion1() -> Outcome {
    let mut bad = Vec::new();
    let mut witnesses = 0;
    for f in Family::ALL {
        let kind = AlgebraKind::real(f);
        let a = Algebra::<QSqrt3>::new(&build_spec(kind));
        for law in Law::ALL {
            let r = identity_check(&a, law, 1000, 0);
            if r.holds != expected_law(kind, law) {
                bad.push(format!("{}:{law}", f.short()));
            }
            if law == Law::Division && f.is_split() {
                match &r.witness {
                    Some(w) if w.len() == 2 && a.mul(&w[0], &w[1]).iter().all(|c| c == &QSqrt3::int(0)) => {
                        witnesses += 1
                    }
                    _ => bad.push(format!("{}:no zero-divisor witness", f.short())),
                }
            }
        }
    }
    let pass = bad.is_empty() && witnesses == 3;
    outcome(
        pass,
        if pass {
            "6 families x 8 laws match the property table at 1000 samples; 3 split zero-divisor witnesses \
             (para-octonions also pass composition and division)"
                .to_string()
        } else {
            format!("mismatches: {bad:?}")
        },
    )
}

fn criterion2() -> Outcome {
    let mut lines = Vec::new();
    let mut all_stated = true;
    let stated =
        [suite::JORDAN, suite::ADJOINT, suite::CROSS_JORDAN_HALF, suite::CROSS_CROSS_QUARTER, suite::CHARACTERISTIC];
    let mut standard_ok = true;
    for jt in JordanTarget::ALL {
        let s = if jt.complexified() {
            albert::identity_suite(&AlbertAlgebra::<CQSqrt3>::of(jt), jt.selector(), 200, 2)
        } else {
            albert::identity_suite(&AlbertAlgebra::<QSqrt3>::of(jt), jt.selector(), 200, 2)
        };
        for id in stated {
            let r = s.get(id).expect("identity present");
            if !r.holds {
                all_stated = false;
                lines.push(format!("{jt} {id} fails on {}/200", r.failures));
            }
        }
        standard_ok &= s.ok();
    }
    lines.dedup();
    let summary = if all_stated {
        "all five identities exact on 200 elements of each of 5 algebras".to_string()
    } else {
        format!(
            "{}; the identities with constants 2 and 8 {} on every algebra",
            lines.iter().take(2).cloned().collect::<Vec<_>>().join("; "),
            if standard_ok { "hold" } else { "do not all hold" }
        )
    };
    outcome(all_stated, summary)
}

/// `U_A X = 2A∘(A∘X) − A²∘X`, which keeps rank one elements rank one.
fn quadratic_rep<S: Field>(j: &AlbertAlgebra<S>, a: &AlbertElement<S>, x: &AlbertElement<S>) -> AlbertElement<S> {
    let ax = j.jordan_mul(a, x);
    j.jordan_mul(a, &ax).scale(&S::from_i64(2)).sub(&j.jordan_mul(&j.square(a), x))
}

/// Returns (rank one elements mapped back, trace zero vectors without a trace 1 representative).
fn veronese_rank_one<S: Field>(sel: &str, n: usize, seed: u64) -> Result<(usize, usize), String> {
    let p = Plane::<S>::new(sel.parse::<PlaneKind>().unwrap());
    let j = &p.albert();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut converse, mut traceless) = (0, 0);
    for _ in 0..n {
        let v = p.sample_chart(&mut rng);
        let x = p.psi(&v).map_err(|e| e.to_string())?;
        if !j.sharp(&x).is_zero() {
            return Err(format!("{sel}: sharp of a Veronese image is nonzero"));
        }
        let c = p.canonical(&v);
        if j.trace(&x).is_zero() {
            traceless += 1;
        } else if j.trace(&p.psi(&c).unwrap()) != S::one() {
            return Err(format!("{sel}: normalized trace is not 1"));
        }
        // an independent rank one element: U_A e₁ for a random A
        let a = j.sample(&mut rng);
        let y = quadratic_rep(j, &a, &j.basis_e(1).unwrap());
        let t = j.trace(&y);
        if y.is_zero() || t.is_zero() {
            continue;
        }
        if !j.sharp(&y).is_zero() {
            return Err(format!("{sel}: U_A e1 has rank above one"));
        }
        let y = y.scale(&t.inv().unwrap());
        let w = p.psi_inv(&y).map_err(|e| e.to_string())?;
        if !p.is_veronese(&w) {
            return Err(format!("{sel}: psi_inv of a rank one element is not Veronese"));
        }
        converse += 1;
    }
    Ok((converse, traceless))
}

fn criterion3() -> Outcome {
    let (mut converse, mut traceless) = (0, 0);
    let runs = ["O-P2", "O-H2", "Os-P2", "Os-H2"]
        .map(|sel| veronese_rank_one::<QSqrt3>(sel, 200, 3))
        .into_iter()
        .chain([veronese_rank_one::<CQSqrt3>("OC-P2", 200, 3)]);
    for r in runs {
        match r {
            Ok((c, z)) => {
                converse += c;
                traceless += z;
            }
            Err(e) => return outcome(false, e),
        }
    }
    outcome(
        true,
        format!(
            "5 Hurwitz planes x 200 chart vectors have rank one and normalize to trace 1 \
             ({traceless} split trace-zero vectors have no such representative); \
             {converse} rank one U_A e1 elements map back to Veronese vectors"
        ),
    )
}

fn criterion4() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for sel in ["O-P2", "O-H2", "Ok-P2", "pO-P2"] {
        let r = axiom_scan(&Plane::<QSqrt3>::new(sel.parse().unwrap()), 500, 0);
        pass &= r.violation_count == 0 && r.pairs == 500 && r.quadrangle_ok;
        parts.push(format!("{sel} {}/{} unique", r.unique_joins, r.pairs));
    }
    for sel in ["Os-P2", "Os-H2"] {
        let r = axiom_scan(&Plane::<QSqrt3>::new(sel.parse().unwrap()), 500, 0);
        let witnessed = r.violations.first().is_some_and(|v| v.witness_lines.len() >= 2);
        pass &= r.violation_count >= 1 && witnessed && r.quadrangle_ok;
        parts.push(format!("{sel} {} violations", r.violation_count));
    }
    outcome(pass, parts.join(", "))
}

fn criterion5() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for sel in ["Ok-P2", "Ok-H2", "Oks-P2", "Oks-H2", "pO-P2", "pO-H2", "pOs-P2", "pOs-H2"] {
        match iso_check(&Plane::<QSqrt3>::new(sel.parse().unwrap()), 500, 5) {
            Ok(r) => {
                pass &= r.ok();
                if !r.ok() {
                    parts.push(format!("{sel}: {r:?}"));
                }
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{sel}: {e}"));
            }
        }
    }
    outcome(
        pass,
        if pass {
            "Phi and pPhi send 500 chart vectors of 8 planes to Veronese vectors with beta preserved".into()
        } else {
            parts.join("; ")
        },
    )
}

fn criterion6(certs: &[Certificate]) -> Outcome {
    let bad: Vec<String> = certs
        .iter()
        .filter(|c| !(c.stable && c.dim == c.expected_dim && c.exact_dim.is_none_or(|d| d == c.dim)))
        .map(|c| format!("{} dims {:?}", c.target, c.kernel_dims))
        .collect();
    let dims: Vec<String> = certs.iter().map(|c| format!("{}={}", c.target, c.dim)).collect();
    let exact = certs.iter().filter(|c| c.exact_dim.is_some()).count();
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} stable across 3 tolerances, {exact} also exact", dims.join(" "))
        } else {
            bad.join("; ")
        },
    )
}

fn criterion7(certs: &[Certificate]) -> Outcome {
    let mut bad = Vec::new();
    let mut chars = Vec::new();
    for c in certs.iter().filter(|c| c.field == "real") {
        if c.closure_residual > CLOSURE_TOL || c.killing_signature.is_none() {
            bad.push(format!("{}: {:?}", c.target, c.failures));
        }
        if let Some(want) = c.expected_character {
            if c.character != Some(want) {
                bad.push(format!("{} character {:?} want {want}", c.target, c.character));
            }
        }
        chars.push(format!("{}:{}", c.target, c.character.map_or("?".into(), |x| format!("{x:+}"))));
    }
    let worst = certs.iter().map(|c| c.closure_residual).fold(0.0, f64::max);
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{}; closure residual <= {worst:.1e}", chars.join(" "))
        } else {
            bad.join("; ")
        },
    )
}

fn criterion8() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for jt in [JordanTarget::J3O, JordanTarget::J21O, JordanTarget::J3Os, JordanTarget::J21Os] {
        match liecert::inclusions(jt, &DEFAULT_TOLERANCES) {
            Ok(r) => {
                pass &= r.ok();
                parts.push(format!(
                    "{jt} f4->e6 {}/{} (res {:.0e}), g2 lifts {}, rank 52+26={}",
                    r.f4_in_e6_count,
                    r.f4_dim,
                    r.f4_in_e6_residual,
                    if r.exact.lifts_are_derivations { "exact" } else { "FAILED" },
                    r.chevalley_schafer_rank
                ));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{jt}: {e}"));
            }
        }
    }
    outcome(pass, parts.join("; "))
}

fn criterion9() -> Outcome {
    let jt = JordanTarget::J3O;
    let f4 = liecert::real_basis(LieTarget::F4(jt), &DEFAULT_TOLERANCES).unwrap();
    let r = match liecert::exp_report(jt, &f4.operators(), 20, 0.1, 12, 9) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let f4_ok = r.product <= 1e-8 && r.trace <= 1e-8 && r.veronese <= 1e-8;
    let e6 = liecert::real_basis(LieTarget::E6(jt), &DEFAULT_TOLERANCES).unwrap();
    let j = AlbertAlgebra::<f64>::of(jt);
    let one = DMatrix::from_vec(27, 1, AlbertElement::<f64>::identity().to_vec());
    let witness = e6.operators().iter().position(|d| {
        let g = float::exp_operator(d, 0.1, 12).unwrap();
        (j.trace(&AlbertElement::from_slice((&g * &one).as_slice())) - 3.0).abs() > 1e-6
    });
    outcome(
        f4_ok && witness.is_some(),
        format!(
            "20 exp(0.1 D), D in f4: product {:.0e}, trace {:.0e}, Veronese {:.0e}; e6 basis element {} changes Tr(1)",
            r.product,
            r.trace,
            r.veronese,
            witness.map_or("none".into(), |i| i.to_string())
        ),
    )
}

fn main() {
    let mut results = vec![
        timed(Duration::from_secs(10), criterion1),
        timed(Duration::from_secs(30), criterion2),
        timed(Duration::from_secs(10), criterion3),
        timed(Duration::from_secs(30), criterion4),
        timed(Duration::from_secs(20), criterion5),
    ];
    let t = Instant::now();
    let certs: Vec<Certificate> =
        LieTarget::NAMED.iter().map(|t| liecert::certify(*t, &DEFAULT_TOLERANCES).expect("certificate")).collect();
    let cert_time = t.elapsed();
    let (o6, d6, _) = timed(Duration::from_secs(600), || criterion6(&certs));
    results.push((o6, d6 + cert_time, Duration::from_secs(600)));
    let (o7, d7, _) = timed(Duration::from_secs(300), || criterion7(&certs));
    results.push((o7, d7 + cert_time, Duration::from_secs(300)));
    results.push(timed(Duration::from_secs(120), criterion8));
    results.push(timed(Duration::from_secs(120), criterion9));

    let mut failed = 0;
    for (i, (o, took, budget)) in results.iter().enumerate() {
        let in_time = took <= budget;
        let pass = o.pass && in_time;
        if !pass {
            failed += 1;
        }
        let late = if in_time { String::new() } else { format!(" over the {}s budget", budget.as_secs()) };
        println!(
            "criterion {}: {} ({:.1}s{late}) {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            o.summary
        );
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
