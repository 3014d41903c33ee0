//! Floating-point kernels, closure and Killing forms.

use nalgebra::{ComplexField, DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::scalars::Field;

use super::equations::SparseRow;
use super::{LieError, Signature};

/// `f64` or `Complex64`.
pub trait FloatScalar: ComplexField<RealField = f64> + Copy {
    fn from_c64(z: Complex64) -> Self;
}

impl FloatScalar for f64 {
    fn from_c64(z: Complex64) -> Self {
        z.re
    }
}

impl FloatScalar for Complex64 {
    fn from_c64(z: Complex64) -> Self {
        z
    }
}

pub fn convert_rows<S: Field, T: FloatScalar>(rows: &[SparseRow<S>]) -> Vec<SparseRow<T>> {
    rows.iter()
        .map(|r| r.iter().map(|(k, c)| (*k, T::from_c64(c.to_c64()))).collect())
        .collect()
}

/// `AᴴA` for sparse rows.
pub fn gram<T: FloatScalar>(rows: &[SparseRow<T>], cols: usize) -> DMatrix<T> {
    let mut g = DMatrix::<T>::zeros(cols, cols);
    for row in rows {
        for (p, a) in row {
            let ac = a.conjugate();
            for (q, b) in row {
                g[(*p, *q)] += ac * *b;
            }
        }
    }
    g
}

/// Kernel dimension at each relative tolerance, and an orthonormal kernel
/// basis at the working tolerance.
#[derive(Clone, Debug)]
pub struct KernelSweep<T: FloatScalar> {
    pub tolerances: Vec<f64>,
    pub dims: Vec<usize>,
    /// Largest Gram eigenvalue kept in the kernel, relative to the largest.
    pub kernel_edge: f64,
    /// Smallest Gram eigenvalue left out of the kernel, relative.
    pub range_edge: f64,
    pub basis: Vec<DVector<T>>,
}

impl<T: FloatScalar> KernelSweep<T> {
    pub fn stable(&self) -> bool {
        self.dims.windows(2).all(|w| w[0] == w[1])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Null space of sparse rows via the eigenvalues of the Gram matrix.
/// The basis is taken at the middle tolerance of the sweep.
pub fn kernel_sweep<T: FloatScalar>(rows: &[SparseRow<T>], cols: usize, tolerances: &[f64]) -> KernelSweep<T> {
    assert!(!tolerances.is_empty());
    let eig = SymmetricEigen::new(gram(rows, cols));
    let top = eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
    let rel: Vec<f64> = eig.eigenvalues.iter().map(|v| v.abs() / top).collect();
    let dims: Vec<usize> = tolerances.iter().map(|t| rel.iter().filter(|&&v| v <= *t).count()).collect();
    let work = tolerances[tolerances.len() / 2];
    let mut idx: Vec<usize> = (0..cols).filter(|&i| rel[i] <= work).collect();
    idx.sort_by(|&a, &b| rel[a].total_cmp(&rel[b]));
    let kernel_edge = idx.iter().map(|&i| rel[i]).fold(0.0, f64::max);
    let range_edge = (0..cols).filter(|i| rel[*i] > work).map(|i| rel[i]).fold(f64::INFINITY, f64::min);
    let basis = idx.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect();
    KernelSweep { tolerances: tolerances.to_vec(), dims, kernel_edge, range_edge, basis }
}

/// Largest absolute row value on `v`, relative to `‖v‖∞`.
pub fn row_residual<T: FloatScalar>(rows: &[SparseRow<T>], v: &[T]) -> f64 {
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.modulus())).max(f64::MIN_POSITIVE);
    rows.iter()
        .map(|r| r.iter().fold(T::zero(), |s, (k, c)| s + *c * v[*k]).modulus())
        .fold(0.0, f64::max)
        / scale
}

pub fn to_matrix<T: FloatScalar>(v: &DVector<T>, n: usize) -> DMatrix<T> {
    DMatrix::from_row_slice(n, n, v.as_slice())
}

pub fn flatten<T: FloatScalar>(m: &DMatrix<T>) -> DVector<T> {
    DVector::from_iterator(m.len(), m.transpose().iter().copied())
}

/// Structure constants of an orthonormal basis of flattened operators,
/// `f[a][b][c]` = coefficient of `c` in `[b_a, b_b]`, and the largest
/// projection residual in max-norm relative to the squared basis scale.
#[derive(Clone, Debug)]
pub struct Closure<T: FloatScalar> {
    pub structure: Vec<Vec<Vec<T>>>,
    pub residual: f64,
}

pub fn closure_check<T: FloatScalar>(basis: &[DVector<T>], n: usize) -> Closure<T> {
    let m = basis.len();
    let mats: Vec<DMatrix<T>> = basis.iter().map(|b| to_matrix(b, n)).collect();
    let amax = |v: &DVector<T>| v.iter().map(|x| x.modulus()).fold(0.0f64, f64::max);
    let scale = basis.iter().map(amax).fold(0.0f64, f64::max).max(f64::MIN_POSITIVE);
    let mut f = vec![vec![vec![T::zero(); m]; m]; m];
    let mut worst = 0.0f64;
    for a in 0..m {
        for b in a + 1..m {
            let c = flatten(&(&mats[a] * &mats[b] - &mats[b] * &mats[a]));
            let mut r = c.clone();
            for (k, bk) in basis.iter().enumerate() {
                let coef = bk.dotc(&c);
                r -= bk * coef;
                f[a][b][k] = coef;
                f[b][a][k] = -coef;
            }
            worst = worst.max(amax(&r) / (scale * scale));
        }
    }
    Closure { structure: f, residual: worst }
}

/// `tr(ad a · ad b)`.
pub fn killing_form<T: FloatScalar>(f: &[Vec<Vec<T>>]) -> DMatrix<T> {
    let m = f.len();
    // ad_a[c][d] = f[a][d][c]
    let ad: Vec<DMatrix<T>> = (0..m).map(|a| DMatrix::from_fn(m, m, |c, d| f[a][d][c])).collect();
    DMatrix::from_fn(m, m, |a, b| (&ad[a] * &ad[b]).trace())
}

/// Inertia of a real symmetric matrix; `Err` when an eigenvalue is below
/// `rel_tol` times the largest in modulus.
pub fn killing_signature(k: &DMatrix<f64>, rel_tol: f64) -> Result<Signature, LieError> {
    let sym = (k + k.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let top = eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut sig = Signature { pos: 0, neg: 0, zero: 0 };
    for v in eig.eigenvalues.iter() {
        if v.abs() <= rel_tol * top {
            sig.zero += 1;
        } else if *v > 0.0 {
            sig.pos += 1;
        } else {
            sig.neg += 1;
        }
    }
    if sig.zero > 0 {
        return Err(LieError::DegenerateKilling(sig));
    }
    Ok(sig)
}

/// Truncated series `Σ_{k ≤ order} (tD)ᵏ/k!`.
pub fn exp_operator<T: FloatScalar>(d: &DMatrix<T>, t: f64, order: usize) -> Result<DMatrix<T>, LieError> {
    if order < 8 {
        return Err(LieError::SeriesOrder(order));
    }
    let n = d.nrows();
    let td = d * T::from_real(t);
    let mut term = DMatrix::<T>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=order {
        term = &term * &td * T::from_real(1.0 / k as f64);
        sum += &term;
    }
    Ok(sum)
}
