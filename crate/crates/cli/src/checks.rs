//! Check suites behind each subcommand.

use std::path::Path;

use serde_json::{json, Value};

use octoplane::albert::{self, AlbertAlgebra, JordanTarget};
use octoplane::compalg::{self, build_spec, expected_law, identity_check, Algebra, AlgebraKind, CompalgError, Family, Law};
use octoplane::liecert::{self, LieTarget};
use octoplane::planes::{self, Plane, PlaneError, PlaneKind};
use octoplane::{CQSqrt3, Field, QSqrt3};

use crate::report::Check;
use crate::{LieKind, Usage};

fn check(name: String, pass: bool, detail: Value) -> Check {
    Check { name, pass, detail }
}

fn laws_for<S: Field>(kind: AlgebraKind, laws: &[Law], samples: usize, seed: u64) -> Vec<Check> {
    let alg = Algebra::<S>::new(&build_spec(kind));
    laws.iter()
        .map(|&law| {
            let r = identity_check(&alg, law, samples, seed);
            let expected = expected_law(kind, law);
            let mut detail = r.to_json();
            detail["expected"] = json!(expected);
            check(format!("{kind} {law}"), r.holds == expected, detail)
        })
        .collect()
}

pub fn algebra_verify(family: Family, law: Option<Law>, complex: bool, samples: usize, seed: u64) -> Vec<Check> {
    let laws: Vec<Law> = law.map_or(Law::ALL.to_vec(), |l| vec![l]);
    if complex {
        laws_for::<CQSqrt3>(AlgebraKind::complexified(family), &laws, samples, seed)
    } else {
        laws_for::<QSqrt3>(AlgebraKind::real(family), &laws, samples, seed)
    }
}

pub fn algebra_table(family: Family, complex: bool) -> String {
    let kind = if complex { AlgebraKind::complexified(family) } else { AlgebraKind::real(family) };
    compalg::write_table(&build_spec(kind))
}

pub fn algebra_ingest(path: &Path) -> Result<Vec<Check>, Usage> {
    let name = format!("ingest {}", path.display());
    Ok(vec![match compalg::read_table(path) {
        Ok(spec) => check(
            name,
            true,
            json!({
                "kind": spec.kind.map(|k| k.to_string()),
                "normdiag": spec.normdiag,
                "nonzero_constants": spec.table.len(),
            }),
        ),
        Err(CompalgError::Io(e)) => return Err(Usage(format!("cannot read {}: {e}", path.display()))),
        Err(e) => check(name, false, json!({ "error": e.to_string() })),
    }])
}

fn suite<S: Field>(jt: JordanTarget, samples: usize, seed: u64) -> Vec<Check> {
    let j = AlbertAlgebra::<S>::of(jt);
    albert::identity_suite(&j, jt.selector(), samples, seed)
        .results
        .into_iter()
        .map(|r| check(format!("{jt} {}", r.identity), r.ok(), serde_json::to_value(&r).expect("serializes")))
        .collect()
}

pub fn albert_check(jt: JordanTarget, samples: usize, seed: u64) -> Vec<Check> {
    if jt.complexified() {
        suite::<CQSqrt3>(jt, samples, seed)
    } else {
        suite::<QSqrt3>(jt, samples, seed)
    }
}

fn element_report<S: Field + std::str::FromStr>(text: &str) -> Result<Value, albert::AlbertError> {
    let (family, gamma, x) = albert::parse_element::<S>(text)?;
    let j = AlbertAlgebra::<S>::new(family, gamma)?;
    let r = j.cubic_report(&x);
    Ok(json!({
        "element": albert::format_element(family, gamma, &x),
        "norm": r.norm.to_string(),
        "trace": r.trace.to_string(),
        "s": r.s.to_string(),
        "sharp": albert::format_element(family, gamma, &r.sharp),
        "rank": r.rank,
    }))
}

pub fn albert_element(text: &str) -> Result<Vec<Check>, Usage> {
    let detail = element_report::<QSqrt3>(text)
        .or_else(|_| element_report::<CQSqrt3>(text))
        .map_err(|e| Usage(e.to_string()))?;
    Ok(vec![check("element".into(), true, detail)])
}

fn scan<S: Field>(kind: PlaneKind, samples: usize, seed: u64) -> Check {
    let r = planes::axiom_scan(&Plane::<S>::new(kind), samples, seed);
    // zero divisors exist in the split and complexified algebras
    let expect_violations = kind.family.is_split() || kind.complexified;
    let axioms_as_expected = if expect_violations {
        r.violation_count > 0 && r.violations.iter().all(|v| v.witness_lines.len() >= 2)
    } else {
        r.violation_count == 0
    };
    let mut detail = r.to_json();
    detail["expect_violations"] = json!(expect_violations);
    check(format!("{} axioms", kind.selector()), axioms_as_expected && r.quadrangle_ok, detail)
}

pub fn planes_axioms(kind: PlaneKind, samples: usize, seed: u64) -> Vec<Check> {
    vec![if kind.complexified { scan::<CQSqrt3>(kind, samples, seed) } else { scan::<QSqrt3>(kind, samples, seed) }]
}

pub fn planes_iso(kind: PlaneKind, samples: usize, seed: u64) -> Result<Vec<Check>, Usage> {
    match planes::iso_check(&Plane::<QSqrt3>::new(kind), samples, seed) {
        Ok(r) => Ok(vec![check(
            format!("{} iso {}", r.plane, r.target),
            r.ok(),
            serde_json::to_value(&r).expect("serializes"),
        )]),
        Err(e @ PlaneError::NeedsSymmetric(_)) => {
            Err(Usage(format!("{e}; choose an Okubo or para-Hurwitz plane")))
        }
        Err(e) => Ok(vec![check(format!("{} iso", kind.selector()), false, json!({ "error": e.to_string() }))]),
    }
}

pub fn lie_target(kind: LieKind, jordan: Option<JordanTarget>, algebra: Option<Family>) -> Result<LieTarget, Usage> {
    match (kind, jordan, algebra) {
        (LieKind::Der, None, Some(f)) => Ok(LieTarget::Der(f)),
        (LieKind::F4, Some(j), None) => Ok(LieTarget::F4(j)),
        (LieKind::E6, Some(j), None) => Ok(LieTarget::E6(j)),
        (LieKind::Der, _, _) => Err(Usage("--target der takes --algebra and no --jordan".into())),
        _ => Err(Usage("--target f4/e6 takes --jordan and no --algebra".into())),
    }
}

pub fn lie_cert(target: LieTarget, tolerances: &[f64]) -> Vec<Check> {
    let name = format!("{target} certificate");
    vec![match liecert::certify(target, tolerances) {
        Ok(c) => check(name, c.pass, serde_json::to_value(&c).expect("serializes")),
        Err(e) => check(name, false, json!({ "error": e.to_string() })),
    }]
}

pub fn lie_inclusions(jt: JordanTarget, tolerances: &[f64]) -> Result<Vec<Check>, Usage> {
    if jt.complexified() {
        return Err(Usage(format!("{jt}: inclusions are certified for the real forms")));
    }
    let name = format!("{jt} inclusions");
    Ok(vec![match liecert::inclusions(jt, tolerances) {
        Ok(r) => check(name, r.ok(), serde_json::to_value(&r).expect("serializes")),
        Err(e) => check(name, false, json!({ "error": e.to_string() })),
    }])
}

/// Every suite with the given sampling parameters.
pub fn everything(samples: usize, seed: u64, tolerances: &[f64]) -> Vec<Check> {
    let mut out = Vec::new();
    for f in Family::ALL {
        out.extend(algebra_verify(f, None, false, samples, seed));
    }
    out.extend(algebra_verify(Family::Octonion, None, true, samples, seed));
    for jt in JordanTarget::ALL {
        out.extend(albert_check(jt, samples, seed));
    }
    let selectors = [
        "O-P2", "O-H2", "Os-P2", "Os-H2", "pO-P2", "pO-H2", "pOs-P2", "pOs-H2", "Ok-P2", "Ok-H2", "Oks-P2", "Oks-H2",
        "OC-P2",
    ];
    for s in selectors {
        let kind: PlaneKind = s.parse().expect("built-in selector");
        out.extend(planes_axioms(kind, samples, seed));
        if !kind.family.is_hurwitz() {
            out.extend(planes_iso(kind, samples, seed).unwrap_or_default());
        }
    }
    for t in LieTarget::NAMED {
        out.extend(lie_cert(t, tolerances));
    }
    for jt in JordanTarget::ALL.into_iter().filter(|j| !j.complexified()) {
        out.extend(lie_inclusions(jt, tolerances).unwrap_or_default());
    }
    out
}
