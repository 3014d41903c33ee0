//! Exact Lie algebra computations over ℚ(√3).

use crate::linalg::rref;
use crate::scalars::{Field, OrderedField};

use super::{LieError, Signature};

/// A basis of a subspace of flattened `n×n` operators, in echelon shape:
/// `vecs[i][key[j]] = δᵢⱼ`, so coordinates can be read off directly.
#[derive(Clone, Debug)]
pub struct SpanBasis<S> {
    pub n: usize,
    pub vecs: Vec<Vec<S>>,
    pub key: Vec<usize>,
}

impl<S: Field> SpanBasis<S> {
    /// Null space of the given dense rows.
    pub fn kernel(rows: Vec<Vec<S>>, n: usize) -> Self {
        let red = rref(rows, n * n);
        let mut is_pivot = vec![false; n * n];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        let key = (0..n * n).filter(|&c| !is_pivot[c]).collect();
        SpanBasis { n, vecs: red.kernel(), key }
    }

    /// Row space of the given vectors.
    pub fn span(vectors: Vec<Vec<S>>, n: usize) -> Self {
        let red = rref(vectors, n * n);
        SpanBasis { n, vecs: red.rows, key: red.pivots }
    }

    pub fn dim(&self) -> usize {
        self.vecs.len()
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[S]) -> Option<Vec<S>> {
        let c: Vec<S> = self.key.iter().map(|&k| v[k].clone()).collect();
        let mut r = v.to_vec();
        for (ci, b) in c.iter().zip(&self.vecs) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = x.sub_ref(&ci.mul_ref(y));
                }
            }
        }
        r.iter().all(|x| x.is_zero()).then_some(c)
    }
}

/// `AB − BA` for flattened `n×n` matrices.
pub fn commutator<S: Field>(a: &[S], b: &[S], n: usize) -> Vec<S> {
    let mut out = vec![S::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let (aik, bik) = (&a[i * n + k], &b[i * n + k]);
            for j in 0..n {
                let (bkj, akj) = (&b[k * n + j], &a[k * n + j]);
                if !aik.is_zero() && !bkj.is_zero() {
                    out[i * n + j] = out[i * n + j].add_ref(&aik.mul_ref(bkj));
                }
                if !bik.is_zero() && !akj.is_zero() {
                    out[i * n + j] = out[i * n + j].sub_ref(&bik.mul_ref(akj));
                }
            }
        }
    }
    out
}

/// `f[a][b][c]`: coefficient of basis element `c` in `[b_a, b_b]`.
pub fn structure_constants<S: Field>(basis: &SpanBasis<S>) -> Result<Vec<Vec<Vec<S>>>, LieError> {
    let m = basis.dim();
    let mut f = vec![vec![Vec::new(); m]; m];
    for a in 0..m {
        f[a][a] = vec![S::zero(); m];
        for b in a + 1..m {
            let c = commutator(&basis.vecs[a], &basis.vecs[b], basis.n);
            let coords = basis.coords(&c).ok_or(LieError::NotClosed { a, b })?;
            f[b][a] = coords.iter().map(|x| x.neg_ref()).collect();
            f[a][b] = coords;
        }
    }
    Ok(f)
}

/// `K(a,b) = tr(ad a · ad b)` from structure constants.
pub fn killing_form<S: Field>(f: &[Vec<Vec<S>>]) -> Vec<Vec<S>> {
    let m = f.len();
    // ad_a[c][d] = f[a][d][c]
    let mut k = vec![vec![S::zero(); m]; m];
    for a in 0..m {
        for b in a..m {
            let mut s = S::zero();
            for c in 0..m {
                for d in 0..m {
                    let (x, y) = (&f[a][d][c], &f[b][c][d]);
                    if !x.is_zero() && !y.is_zero() {
                        s = s.add_ref(&x.mul_ref(y));
                    }
                }
            }
            k[b][a] = s.clone();
            k[a][b] = s;
        }
    }
    k
}

/// Inertia of a symmetric matrix by congruence diagonalization.
pub fn signature<S: OrderedField>(m: &[Vec<S>]) -> Signature {
    let n = m.len();
    let mut a: Vec<Vec<S>> = m.to_vec();
    let mut sig = Signature { pos: 0, neg: 0, zero: 0 };
    let swap = |a: &mut Vec<Vec<S>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap(&mut a, k, i);
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        {
            // zero diagonal: x_i ← x_i + x_j makes a[i][i] = 2a[i][j]
            for c in 0..n {
                a[i][c] = a[i][c].add_ref(&a[j][c]);
            }
            for r in 0..n {
                a[r][i] = a[r][i].add_ref(&a[r][j]);
            }
            swap(&mut a, k, i);
        } else {
            sig.zero += n - k;
            break;
        }
        let p = a[k][k].clone();
        if p.sign() > 0 {
            sig.pos += 1;
        } else {
            sig.neg += 1;
        }
        let pinv = p.inv().expect("nonzero pivot");
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].mul_ref(&pinv);
            for c in k..n {
                a[i][c] = a[i][c].sub_ref(&f.mul_ref(&a[k][c]));
            }
            for r in k..n {
                a[r][i] = a[r][i].sub_ref(&f.mul_ref(&a[r][k]));
            }
        }
    }
    sig
}
