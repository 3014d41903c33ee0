//! The six real eight-dimensional composition algebras and their
//! complexifications.
//!
//! Every table is exact over ℚ(√3). The division Okubo algebra comes from
//! its 3×3 matrix model; the octonions are recovered from it, the
//! para-octonions from the octonions, and the split families from the
//! doubled split octonions through the same conversion formulas.

mod algebra;
mod laws;
pub mod okubo;
mod table_io;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::scalars::QSqrt3;

pub use algebra::{convert, Algebra, AlgebraElement};
pub use laws::{expected_law, identity_check, sample_elem, Law, LawReport};
pub use table_io::{parse_table, read_table, verify_composition, write_table};
pub use tables::tau_matrix;

/// Coordinates in the basis `i0..i7`.
pub type Elem<S> = [S; 8];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompalgError {
    #[error("matrix is not in the Okubo model: {0}")]
    NotOkuboMatrix(String),
    #[error("composition law fails on basis pair ({0},{1})")]
    Composition(usize, usize),
    #[error("algebra kinds differ: {0} vs {1}")]
    KindMismatch(String, String),
    #[error("no conversion from {0} to {1}")]
    UnsupportedConversion(String, String),
    #[error("{0} needs an algebra of another family")]
    WrongFamily(String),
    #[error("element is zero")]
    ZeroElement,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Octonion,
    SplitOctonion,
    ParaOctonion,
    SplitParaOctonion,
    Okubo,
    SplitOkubo,
}

/// Hurwitz (unital), para-Hurwitz or Okubo.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Hurwitz,
    Para,
    Okubo,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Octonion,
        Family::SplitOctonion,
        Family::ParaOctonion,
        Family::SplitParaOctonion,
        Family::Okubo,
        Family::SplitOkubo,
    ];

    pub fn of(class: Class, split: bool) -> Family {
        match (class, split) {
            (Class::Hurwitz, false) => Family::Octonion,
            (Class::Hurwitz, true) => Family::SplitOctonion,
            (Class::Para, false) => Family::ParaOctonion,
            (Class::Para, true) => Family::SplitParaOctonion,
            (Class::Okubo, false) => Family::Okubo,
            (Class::Okubo, true) => Family::SplitOkubo,
        }
    }

    pub fn class(self) -> Class {
        match self {
            Family::Octonion | Family::SplitOctonion => Class::Hurwitz,
            Family::ParaOctonion | Family::SplitParaOctonion => Class::Para,
            Family::Okubo | Family::SplitOkubo => Class::Okubo,
        }
    }

    pub fn is_split(self) -> bool {
        matches!(
            self,
            Family::SplitOctonion | Family::SplitParaOctonion | Family::SplitOkubo
        )
    }

    pub fn is_hurwitz(self) -> bool {
        self.class() == Class::Hurwitz
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Octonion => "octonion",
            Family::SplitOctonion => "split-octonion",
            Family::ParaOctonion => "para-octonion",
            Family::SplitParaOctonion => "split-para-octonion",
            Family::Okubo => "okubo",
            Family::SplitOkubo => "split-okubo",
        }
    }

    /// Short selector used by the CLI: `O`, `Os`, `pO`, `pOs`, `Ok`, `Oks`.
    pub fn short(self) -> &'static str {
        match self {
            Family::Octonion => "O",
            Family::SplitOctonion => "Os",
            Family::ParaOctonion => "pO",
            Family::SplitParaOctonion => "pOs",
            Family::Okubo => "Ok",
            Family::SplitOkubo => "Oks",
        }
    }

    pub fn normdiag(self) -> [i8; 8] {
        if self.is_split() {
            [1, 1, 1, 1, -1, -1, -1, -1]
        } else {
            [1; 8]
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.to_ascii_lowercase().replace(['_', ' '], "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == t || f.short().to_ascii_lowercase() == t)
            .ok_or_else(|| format!("unknown algebra family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarKind {
    Real,
    Complexified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraKind {
    pub family: Family,
    pub scalars: ScalarKind,
}

impl AlgebraKind {
    pub fn real(family: Family) -> Self {
        AlgebraKind { family, scalars: ScalarKind::Real }
    }

    pub fn complexified(family: Family) -> Self {
        AlgebraKind { family, scalars: ScalarKind::Complexified }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scalars {
            ScalarKind::Real => write!(f, "{}", self.family),
            ScalarKind::Complexified => write!(f, "complex-{}", self.family),
        }
    }
}

/// One nonzero structure constant: `i_i · i_j` has coefficient `c` on `i_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructConst {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: QSqrt3,
}

/// Sparse structure-constant table plus the diagonal norm.
///
/// `kind` is `None` for tables read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub kind: Option<AlgebraKind>,
    pub normdiag: [i8; 8],
    /// Sorted by `(i, j, k)`; zero constants are never stored.
    pub table: Vec<StructConst>,
}

impl AlgebraSpec {
    pub fn from_dense(kind: Option<AlgebraKind>, normdiag: [i8; 8], t: &tables::Dense) -> Self {
        let mut table = Vec::new();
        for (i, row) in t.iter().enumerate() {
            for (j, prod) in row.iter().enumerate() {
                for (k, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        table.push(StructConst { i, j, k, c: c.clone() });
                    }
                }
            }
        }
        AlgebraSpec { kind, normdiag, table }
    }

    pub fn to_dense(&self) -> tables::Dense {
        let mut t = tables::dense_zero();
        for s in &self.table {
            t[s.i][s.j][s.k] = s.c.clone();
        }
        t
    }

    /// Family of the table, if it is one of the built-in ones.
    pub fn family(&self) -> Option<Family> {
        self.kind.map(|k| k.family)
    }

    /// Same table with the scalar kind switched.
    pub fn with_scalars(&self, scalars: ScalarKind) -> Self {
        let mut s = self.clone();
        if let Some(k) = s.kind.as_mut() {
            k.scalars = scalars;
        }
        s
    }
}

/// The canonical table of a built-in algebra.
pub fn build_spec(kind: AlgebraKind) -> AlgebraSpec {
    static CACHE: OnceLock<Vec<AlgebraSpec>> = OnceLock::new();
    let all = CACHE.get_or_init(|| match tables::build_all() {
        Ok(v) => v,
        Err(e) => panic!("built-in tables are inconsistent: {e}"),
    });
    let idx = Family::ALL.iter().position(|f| *f == kind.family).expect("known family");
    all[idx].with_scalars(kind.scalars)
}

/// Basis vector `i_k`.
pub fn basis<S: crate::scalars::Field>(k: usize) -> Elem<S> {
    let mut x: Elem<S> = std::array::from_fn(|_| S::zero());
    x[k] = S::one();
    x
}

pub fn zero_elem<S: crate::scalars::Field>() -> Elem<S> {
    std::array::from_fn(|_| S::zero())
}

pub fn add<S: crate::scalars::Field>(x: &Elem<S>, y: &Elem<S>) -> Elem<S> {
    std::array::from_fn(|k| x[k].add_ref(&y[k]))
}

pub fn sub<S: crate::scalars::Field>(x: &Elem<S>, y: &Elem<S>) -> Elem<S> {
    std::array::from_fn(|k| x[k].sub_ref(&y[k]))
}

pub fn scale<S: crate::scalars::Field>(c: &S, x: &Elem<S>) -> Elem<S> {
    std::array::from_fn(|k| c.mul_ref(&x[k]))
}

pub fn neg<S: crate::scalars::Field>(x: &Elem<S>) -> Elem<S> {
    std::array::from_fn(|k| x[k].neg_ref())
}

pub fn is_zero<S: crate::scalars::Field>(x: &Elem<S>) -> bool {
    x.iter().all(crate::linalg::negligible)
}

/// Image of an exact element in another field.
pub fn lift<S: crate::scalars::Field>(x: &Elem<QSqrt3>) -> Elem<S> {
    std::array::from_fn(|k| S::from_qs(&x[k]))
}

/// Equality up to the field's zero test.
pub fn elem_eq<S: crate::scalars::Field>(x: &Elem<S>, y: &Elem<S>) -> bool {
    if S::EXACT {
        x == y
    } else {
        let scale = x.iter().chain(y).map(|c| c.magnitude()).fold(1.0, f64::max);
        x.iter().zip(y).all(|(a, b)| a.sub_ref(b).magnitude() <= 1e-9 * scale)
    }
}

/// Equality of scalars up to the field's zero test.
pub fn scalar_eq<S: crate::scalars::Field>(a: &S, b: &S) -> bool {
    if S::EXACT {
        a == b
    } else {
        let scale = a.magnitude().max(b.magnitude()).max(1.0);
        a.sub_ref(b).magnitude() <= 1e-9 * scale
    }
}
