//! Sparse linear systems whose kernels are the Lie algebras.
//!
//! An operator on an `n`-dimensional space is flattened row-major: unknown
//! `r·n + c` is the coefficient of basis vector `r` in the image of basis
//! vector `c`.

use std::collections::BTreeMap;

use crate::albert::{AlbertAlgebra, AlbertElement};
use crate::compalg::{basis, Algebra};
use crate::scalars::Field;

/// One equation: `(unknown, coefficient)` pairs with nonzero coefficients.
pub type SparseRow<S> = Vec<(usize, S)>;

/// Bilinear product table: `prod[i][j]` is `b_i · b_j` in coordinates.
pub type ProductTable<S> = Vec<Vec<Vec<S>>>;

/// `D(b_i b_j) − D(b_i) b_j − b_i D(b_j)` for each output coordinate `k`.
fn derivation_rows<S: Field>(prod: &ProductTable<S>, pairs: &[(usize, usize)]) -> Vec<SparseRow<S>> {
    let n = prod.len();
    let mut rows = Vec::new();
    for &(i, j) in pairs {
        for k in 0..n {
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            let mut add = |var: usize, c: &S, neg: bool| {
                let e = acc.entry(var).or_insert_with(S::zero);
                *e = if neg { e.sub_ref(c) } else { e.add_ref(c) };
            };
            for (m, c) in prod[i][j].iter().enumerate() {
                if !c.is_zero() {
                    add(k * n + m, c, false);
                }
            }
            for r in 0..n {
                let c = &prod[r][j][k];
                if !c.is_zero() {
                    add(r * n + i, c, true);
                }
                let c = &prod[i][r][k];
                if !c.is_zero() {
                    add(r * n + j, c, true);
                }
            }
            let row: SparseRow<S> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rows
}

pub fn algebra_product_table<S: Field>(alg: &Algebra<S>) -> ProductTable<S> {
    (0..8)
        .map(|i| (0..8).map(|j| alg.mul(&basis(i), &basis(j)).to_vec()).collect())
        .collect()
}

pub fn jordan_product_table<S: Field>(j: &AlbertAlgebra<S>) -> ProductTable<S> {
    let e: Vec<AlbertElement<S>> = (0..27).map(AlbertElement::unit_coord).collect();
    let mut t = vec![vec![Vec::new(); 27]; 27];
    for a in 0..27 {
        for b in a..27 {
            let p = j.jordan_mul(&e[a], &e[b]).to_vec();
            t[b][a] = p.clone();
            t[a][b] = p;
        }
    }
    t
}

/// 512 equations in 64 unknowns (empty rows dropped).
pub fn derivation_equations<S: Field>(alg: &Algebra<S>) -> Vec<SparseRow<S>> {
    let pairs: Vec<(usize, usize)> = (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).collect();
    derivation_rows(&algebra_product_table(alg), &pairs)
}

/// One block of 27 equations per unordered basis pair, 729 unknowns.
pub fn jordan_derivation_equations<S: Field>(j: &AlbertAlgebra<S>) -> Vec<SparseRow<S>> {
    jordan_derivation_equations_from(&jordan_product_table(j))
}

pub fn jordan_derivation_equations_from<S: Field>(prod: &ProductTable<S>) -> Vec<SparseRow<S>> {
    let pairs: Vec<(usize, usize)> = (0..27).flat_map(|i| (i..27).map(move |j| (i, j))).collect();
    derivation_rows(prod, &pairs)
}

/// `t[r][a][b] = N(b_r, b_a, b_b)`, computed as `(b_r × b_a, b_b)/6`.
pub fn norm_tensor<S: Field>(j: &AlbertAlgebra<S>) -> Vec<Vec<Vec<S>>> {
    let e: Vec<AlbertElement<S>> = (0..27).map(AlbertElement::unit_coord).collect();
    let sixth = S::ratio(1, 6);
    let mut t = vec![vec![vec![S::zero(); 27]; 27]; 27];
    for r in 0..27 {
        for a in r..27 {
            let c = j.cross(&e[r], &e[a]);
            if c.is_zero() {
                continue;
            }
            for b in 0..27 {
                let v = j.trace_form(&c, &e[b]).mul_ref(&sixth);
                t[r][a][b] = v.clone();
                t[a][r][b] = v;
            }
        }
    }
    t
}

/// Coefficients of `N(DX, X, X)` on each monomial `X_p X_q X_s`, `p ≤ q ≤ s`.
pub fn norm_invariance_equations<S: Field>(j: &AlbertAlgebra<S>) -> Vec<SparseRow<S>> {
    norm_invariance_equations_from(&norm_tensor(j))
}

pub fn norm_invariance_equations_from<S: Field>(t: &[Vec<Vec<S>>]) -> Vec<SparseRow<S>> {
    let n = 27;
    let mut rows = Vec::new();
    for p in 0..n {
        for q in p..n {
            for s in q..n {
                let mut orders = vec![(p, q, s), (p, s, q), (q, p, s), (q, s, p), (s, p, q), (s, q, p)];
                orders.sort();
                orders.dedup();
                let mut acc: BTreeMap<usize, S> = BTreeMap::new();
                for (c, a, b) in orders {
                    for (r, tr) in t.iter().enumerate() {
                        let v = &tr[a][b];
                        if !v.is_zero() {
                            let e = acc.entry(r * n + c).or_insert_with(S::zero);
                            *e = e.add_ref(v);
                        }
                    }
                }
                let row: SparseRow<S> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Evaluate every row on a flattened operator; returns the row values.
pub fn apply_rows<S: Field>(rows: &[SparseRow<S>], v: &[S]) -> Vec<S> {
    rows.iter()
        .map(|row| {
            row.iter()
                .filter(|(k, _)| !v[*k].is_zero())
                .fold(S::zero(), |s, (k, c)| s.add_ref(&c.mul_ref(&v[*k])))
        })
        .collect()
}

/// Dense copy of sparse rows.
pub fn densify<S: Field>(rows: &[SparseRow<S>], cols: usize) -> Vec<Vec<S>> {
    rows.iter()
        .map(|row| {
            let mut d = vec![S::zero(); cols];
            for (k, c) in row {
                d[*k] = c.clone();
            }
            d
        })
        .collect()
}
