//! Text format for structure-constant tables.
//!
//! ```text
//! dim 8
//! normdiag + + + + - - - -
//! 1 2 3 1 + 0 r3
//! ```
//! Each data line `i j k c` sets the coefficient of `i_k` in `i_i · i_j`.
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;

use crate::scalars::QSqrt3;

use super::tables::{dense_mul, Dense};
use super::{build_spec, AlgebraKind, AlgebraSpec, CompalgError, Elem, Family, StructConst};

pub fn write_table(spec: &AlgebraSpec) -> String {
    let mut out = String::from("dim 8\nnormdiag");
    for s in spec.normdiag {
        out.push_str(if s > 0 { " +" } else { " -" });
    }
    out.push('\n');
    for s in &spec.table {
        out.push_str(&format!("{} {} {} {}\n", s.i, s.j, s.k, s.c));
    }
    out
}

fn perr(line: usize, msg: impl Into<String>) -> CompalgError {
    CompalgError::Parse { line, msg: msg.into() }
}

/// Parse a table and verify the composition law before accepting it.
///
/// A table identical to a built-in one gets that algebra's kind.
pub fn parse_table(text: &str) -> Result<AlgebraSpec, CompalgError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (n, l) = lines.next().ok_or_else(|| perr(1, "expected `dim 8`"))?;
    if l.split_whitespace().collect::<Vec<_>>() != ["dim", "8"] {
        return Err(perr(n, "expected `dim 8`"));
    }
    let (n, l) = lines.next().ok_or_else(|| perr(n + 1, "expected `normdiag`"))?;
    let mut it = l.split_whitespace();
    if it.next() != Some("normdiag") {
        return Err(perr(n, "expected `normdiag`"));
    }
    let signs: Vec<i8> = it
        .map(|t| match t {
            "+" => Ok(1),
            "-" => Ok(-1),
            _ => Err(perr(n, format!("bad sign {t:?}"))),
        })
        .collect::<Result<_, _>>()?;
    let normdiag: [i8; 8] = signs.try_into().map_err(|_| perr(n, "normdiag needs 8 signs"))?;

    let mut entries: BTreeMap<(usize, usize, usize), QSqrt3> = BTreeMap::new();
    for (n, l) in lines {
        let mut parts = l.splitn(4, char::is_whitespace);
        let mut idx = [0usize; 3];
        for slot in idx.iter_mut() {
            let t = parts.next().ok_or_else(|| perr(n, "expected `i j k coefficient`"))?;
            *slot = t.parse().map_err(|_| perr(n, format!("bad index {t:?}")))?;
            if *slot >= 8 {
                return Err(perr(n, format!("index {slot} out of range")));
            }
        }
        let c: QSqrt3 = parts
            .next()
            .ok_or_else(|| perr(n, "missing coefficient"))?
            .parse()
            .map_err(|e| perr(n, format!("{e}")))?;
        if entries.insert((idx[0], idx[1], idx[2]), c).is_some() {
            return Err(perr(n, "duplicate entry"));
        }
    }
    let table = entries
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((i, j, k), c)| StructConst { i, j, k, c })
        .collect();
    let mut spec = AlgebraSpec { kind: None, normdiag, table };
    verify_composition(&spec)?;
    spec.kind = Family::ALL
        .into_iter()
        .map(AlgebraKind::real)
        .find(|k| {
            let b = build_spec(*k);
            b.normdiag == spec.normdiag && b.table == spec.table
        });
    Ok(spec)
}

pub fn read_table(path: &Path) -> Result<AlgebraSpec, CompalgError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CompalgError::Io(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}

fn polar(nd: &[i8; 8], x: &Elem<QSqrt3>, y: &Elem<QSqrt3>) -> QSqrt3 {
    let mut s = QSqrt3::zero();
    for k in 0..8 {
        if !x[k].is_zero() && !y[k].is_zero() {
            s = s + &(&QSqrt3::int(2 * nd[k] as i64) * &(&x[k] * &y[k]));
        }
    }
    s
}

/// Exact check of the linearized composition law on all basis quadruples.
///
/// On failure the basis pair involved in the most failing quadruples is
/// reported, which singles out a corrupted constant.
pub fn verify_composition(spec: &AlgebraSpec) -> Result<(), CompalgError> {
    let t: Dense = spec.to_dense();
    let nd = &spec.normdiag;
    let e = |k: usize| super::basis::<QSqrt3>(k);
    let prod: Vec<Vec<Elem<QSqrt3>>> =
        (0..8).map(|i| (0..8).map(|j| dense_mul(&t, &e(i), &e(j))).collect()).collect();
    let mut blame = [[0usize; 8]; 8];
    let mut failed = false;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                for l in 0..8 {
                    let lhs = polar(nd, &prod[i][j], &prod[k][l]) + polar(nd, &prod[i][l], &prod[k][j]);
                    let rhs = &polar(nd, &e(i), &e(k)) * &polar(nd, &e(j), &e(l));
                    if lhs != rhs {
                        failed = true;
                        for (a, b) in [(i, j), (k, l), (i, l), (k, j)] {
                            blame[a][b] += 1;
                        }
                    }
                }
            }
        }
    }
    if !failed {
        return Ok(());
    }
    let (mut bi, mut bj) = (0, 0);
    for i in 0..8 {
        for j in 0..8 {
            if blame[i][j] > blame[bi][bj] {
                (bi, bj) = (i, j);
            }
        }
    }
    Err(CompalgError::Composition(bi, bj))
}
