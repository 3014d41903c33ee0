//! Decision procedures for the algebraic properties of a table.
//!
//! Polynomial laws are checked twice: on seeded random samples, and by an
//! exact certificate over basis elements of their full linearization (which
//! proves the law, since the characteristic is zero). Unital, paraunital
//! and division are decided by exact linear algebra.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::linalg;
use crate::scalars::Field;

use super::{add, basis, elem_eq, is_zero, scalar_eq, sub, AlgebraKind, Algebra, Class, Elem, ScalarKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Law {
    Composition,
    Flexible,
    Alternative,
    Associative,
    Commutative,
    Unital,
    Paraunital,
    Division,
}

impl Law {
    pub const ALL: [Law; 8] = [
        Law::Unital,
        Law::Paraunital,
        Law::Alternative,
        Law::Flexible,
        Law::Composition,
        Law::Division,
        Law::Associative,
        Law::Commutative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Composition => "composition",
            Law::Flexible => "flexible",
            Law::Alternative => "alternative",
            Law::Associative => "associative",
            Law::Commutative => "commutative",
            Law::Unital => "unital",
            Law::Paraunital => "paraunital",
            Law::Division => "division",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown law {s:?}"))
    }
}

/// Expected outcome for a built-in algebra.
pub fn expected_law(kind: AlgebraKind, law: Law) -> bool {
    let class = kind.family.class();
    match law {
        Law::Composition | Law::Flexible => true,
        Law::Associative | Law::Commutative => false,
        Law::Unital | Law::Alternative => class == Class::Hurwitz,
        Law::Paraunital => class != Class::Okubo,
        Law::Division => !kind.family.is_split() && kind.scalars == ScalarKind::Real,
    }
}

#[derive(Debug, Clone)]
pub struct LawReport<S> {
    pub law: Law,
    pub holds: bool,
    pub samples: usize,
    pub seed: u64,
    /// Outcome of the exact basis certificate, for polynomial laws.
    pub basis_certificate: Option<bool>,
    /// Counterexample elements when the law fails; the unit, paraunit or
    /// zero-divisor pair where that is the natural witness.
    pub witness: Option<Vec<Elem<S>>>,
    pub detail: String,
}

impl<S: Field> LawReport<S> {
    pub fn to_json(&self) -> serde_json::Value {
        let w = self.witness.as_ref().map(|v| {
            v.iter()
                .map(|x| x.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        });
        json!({
            "law": self.law,
            "holds": self.holds,
            "samples": self.samples,
            "seed": self.seed,
            "basis_certificate": self.basis_certificate,
            "witness": w,
            "detail": self.detail,
        })
    }
}

/// Coordinates drawn uniformly from the integers `-3..=3` (real and
/// imaginary parts separately for complex fields).
pub fn sample_elem<S: Field, R: Rng>(rng: &mut R) -> Elem<S> {
    std::array::from_fn(|_| {
        let re = S::from_i64(rng.gen_range(-3..=3));
        match S::imag_unit() {
            Some(i) => re.add_ref(&i.mul_ref(&S::from_i64(rng.gen_range(-3..=3)))),
            None => re,
        }
    })
}

fn assoc<S: Field>(a: &Algebra<S>, x: &Elem<S>, y: &Elem<S>, z: &Elem<S>) -> Elem<S> {
    sub(&a.mul(&a.mul(x, y), z), &a.mul(x, &a.mul(y, z)))
}

/// Sample test of a polynomial law: `Some(witness)` on the first failure.
fn sample_failure<S: Field>(
    a: &Algebra<S>,
    law: Law,
    x: &Elem<S>,
    y: &Elem<S>,
    z: &Elem<S>,
) -> Option<Vec<Elem<S>>> {
    let ok = match law {
        Law::Composition => scalar_eq(&a.norm(&a.mul(x, y)), &a.norm(x).mul_ref(&a.norm(y))),
        Law::Flexible => is_zero(&assoc(a, x, y, x)),
        Law::Alternative => {
            if !is_zero(&assoc(a, x, x, y)) {
                return Some(vec![x.clone(), x.clone(), y.clone()]);
            }
            is_zero(&assoc(a, y, x, x))
        }
        Law::Associative => is_zero(&assoc(a, x, y, z)),
        Law::Commutative => elem_eq(&a.mul(x, y), &a.mul(y, x)),
        _ => true,
    };
    if ok {
        return None;
    }
    Some(match law {
        Law::Flexible => vec![x.clone(), y.clone(), x.clone()],
        Law::Alternative => vec![y.clone(), x.clone(), x.clone()],
        Law::Associative => vec![x.clone(), y.clone(), z.clone()],
        _ => vec![x.clone(), y.clone()],
    })
}

/// Exact certificate on the full linearization over basis elements.
fn basis_failure<S: Field>(a: &Algebra<S>, law: Law) -> Option<Vec<Elem<S>>> {
    let e: Vec<Elem<S>> = (0..8).map(basis).collect();
    let prod: Vec<Vec<Elem<S>>> = (0..8).map(|i| (0..8).map(|j| a.mul(&e[i], &e[j])).collect()).collect();
    let r = 0..8;
    match law {
        Law::Composition => {
            for i in r.clone() {
                for j in r.clone() {
                    for k in r.clone() {
                        for l in r.clone() {
                            let lhs = a.polar(&prod[i][j], &prod[k][l]).add_ref(&a.polar(&prod[i][l], &prod[k][j]));
                            let rhs = a.polar(&e[i], &e[k]).mul_ref(&a.polar(&e[j], &e[l]));
                            if !scalar_eq(&lhs, &rhs) {
                                return Some(vec![e[i].clone(), e[j].clone(), e[k].clone(), e[l].clone()]);
                            }
                        }
                    }
                }
            }
            None
        }
        Law::Commutative => {
            for i in r.clone() {
                for j in r.clone() {
                    if !elem_eq(&prod[i][j], &prod[j][i]) {
                        return Some(vec![e[i].clone(), e[j].clone()]);
                    }
                }
            }
            None
        }
        _ => {
            for i in r.clone() {
                for j in r.clone() {
                    for k in r.clone() {
                        let (x, y, z) = (&e[i], &e[j], &e[k]);
                        let bad = match law {
                            Law::Associative => !is_zero(&assoc(a, x, y, z)),
                            Law::Flexible => !is_zero(&add(&assoc(a, x, y, z), &assoc(a, z, y, x))),
                            Law::Alternative => {
                                !is_zero(&add(&assoc(a, x, y, z), &assoc(a, y, x, z)))
                                    || !is_zero(&add(&assoc(a, z, x, y), &assoc(a, z, y, x)))
                            }
                            _ => false,
                        };
                        if bad {
                            return Some(vec![x.clone(), y.clone(), z.clone()]);
                        }
                    }
                }
            }
            None
        }
    }
}

fn columns_to_rows<S: Field>(cols: &[Elem<S>]) -> Vec<Vec<S>> {
    (0..8).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// Decide `law` for the algebra; see the module notes for the method.
pub fn identity_check<S: Field>(a: &Algebra<S>, law: Law, samples: usize, seed: u64) -> LawReport<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport {
        law,
        holds: true,
        samples,
        seed,
        basis_certificate: None,
        witness: None,
        detail: String::new(),
    };
    let draws: Vec<[Elem<S>; 3]> = (0..samples)
        .map(|_| [sample_elem(&mut rng), sample_elem(&mut rng), sample_elem(&mut rng)])
        .collect();
    match law {
        Law::Unital => {
            // u·i_j = i_j = i_j·u for every j: 128 equations in 8 unknowns
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for j in 0..8 {
                let left: Vec<Elem<S>> = (0..8).map(|i| a.mul(&basis(i), &basis(j))).collect();
                let right: Vec<Elem<S>> = (0..8).map(|i| a.mul(&basis(j), &basis(i))).collect();
                for side in [left, right] {
                    for (k, row) in columns_to_rows(&side).into_iter().enumerate() {
                        rows.push(row);
                        rhs.push(if k == j { S::one() } else { S::zero() });
                    }
                }
            }
            match linalg::solve(&rows, &rhs) {
                Some(u) => {
                    let u: Elem<S> = std::array::from_fn(|k| u[k].clone());
                    let bad = draws.iter().find(|d| !elem_eq(&a.mul(&u, &d[0]), &d[0]) || !elem_eq(&a.mul(&d[0], &u), &d[0]));
                    report.holds = bad.is_none();
                    report.detail = "two-sided unit found by exact solve".into();
                    report.witness = Some(vec![u]);
                }
                None => {
                    report.holds = false;
                    report.detail = "u·x = x·u = x has no solution".into();
                }
            }
        }
        Law::Paraunital => {
            // central u whose multiplication operator squares to a nonzero scalar
            let mut rows = Vec::new();
            for j in 0..8 {
                let diff: Vec<Elem<S>> = (0..8)
                    .map(|i| sub(&a.mul(&basis(i), &basis(j)), &a.mul(&basis(j), &basis(i))))
                    .collect();
                rows.extend(columns_to_rows(&diff));
            }
            let ker = linalg::kernel(rows, 8);
            report.holds = false;
            report.detail = format!("commutant has dimension {}", ker.len());
            for v in &ker {
                let v: Elem<S> = std::array::from_fn(|k| v[k].clone());
                let c = a.mul(&v, &a.mul(&v, &basis(0)))[0].clone();
                if linalg::negligible(&c) {
                    continue;
                }
                let sq_is_scalar = (0..8).all(|j| {
                    let ej = basis::<S>(j);
                    elem_eq(&a.mul(&v, &a.mul(&v, &ej)), &super::scale(&c, &ej))
                });
                let positive = S::COMPLEX || c.to_c64().re > 0.0;
                if sq_is_scalar && positive {
                    let bad = draws.iter().find(|d| !elem_eq(&a.mul(&v, &d[0]), &a.mul(&d[0], &v)));
                    report.holds = bad.is_none();
                    report.detail = format!("paraunit v/sqrt({c}) with v central and L_v squared = {c}");
                    report.witness = Some(vec![v]);
                    break;
                }
            }
        }
        Law::Division => {
            let nd = a.normdiag();
            let first_iso = if S::COMPLEX {
                // i0 + i·i1 is isotropic over any complexification
                let mut x = basis::<S>(0);
                x[1] = S::imag_unit().expect("complex field");
                Some(x)
            } else {
                nd.iter()
                    .position(|&s| s < 0)
                    .zip(nd.iter().position(|&s| s > 0))
                    .map(|(p, q)| add(&basis(p), &basis(q)))
            };
            if let Some(x) = first_iso {
                report.holds = false;
                match a.is_zero_divisor(&x) {
                    Ok(Some(y)) => {
                        report.detail = "isotropic element has a zero divisor partner".into();
                        report.witness = Some(vec![x, y]);
                    }
                    _ => report.detail = "norm is isotropic".into(),
                }
            } else {
                report.detail = "norm is anisotropic; sampled left multiplications are injective".into();
                for d in &draws {
                    if is_zero(&d[0]) {
                        continue;
                    }
                    if let Ok(Some(y)) = a.is_zero_divisor(&d[0]) {
                        report.holds = false;
                        report.witness = Some(vec![d[0].clone(), y]);
                        break;
                    }
                }
            }
        }
        _ => {
            for d in &draws {
                if let Some(w) = sample_failure(a, law, &d[0], &d[1], &d[2]) {
                    report.holds = false;
                    report.witness = Some(w);
                    report.detail = "random sample violates the law".into();
                    break;
                }
            }
            let cert = basis_failure(a, law);
            report.basis_certificate = Some(cert.is_none());
            if let Some(w) = cert {
                if report.holds {
                    report.holds = false;
                    report.detail = "basis certificate violates the linearized law".into();
                    report.witness = Some(w);
                }
            } else if report.holds {
                report.detail = "holds on every sample and on the linearized basis certificate".into();
            }
        }
    }
    report
}
