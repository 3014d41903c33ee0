//! 3×3 matrix realization of the Okubo algebras.
//!
//! Division case: traceless Hermitian matrices. Split case: traceless
//! matrices self-adjoint for `J = diag(1,1,-1)`. Product in both cases is
//! `x*y = μxy + μ̄yx − Tr(xy)/3·I` with `μ = (3 + i√3)/6`.

use num_traits::{One, Zero};

use crate::scalars::{CQSqrt3, QSqrt3};

use super::{CompalgError, Elem};

pub type Mat3 = [[CQSqrt3; 3]; 3];

pub fn mat_zero() -> Mat3 {
    std::array::from_fn(|_| std::array::from_fn(|_| CQSqrt3::zero()))
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = mat_zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut s = CQSqrt3::zero();
            for k in 0..3 {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    s = s + &a[i][k] * &b[k][j];
                }
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn mat_trace(a: &Mat3) -> CQSqrt3 {
    &(&a[0][0] + &a[1][1]) + &a[2][2]
}

fn mat_lincomb(terms: &[(CQSqrt3, &Mat3)]) -> Mat3 {
    let mut out = mat_zero();
    for (c, m) in terms {
        for i in 0..3 {
            for j in 0..3 {
                if !m[i][j].is_zero() {
                    out[i][j] = &out[i][j] + &(c * &m[i][j]);
                }
            }
        }
    }
    out
}

fn mu() -> CQSqrt3 {
    CQSqrt3::new(QSqrt3::ratio(1, 2), QSqrt3::sqrt3_times(1, 6))
}

fn sign_form(split: bool) -> [i64; 3] {
    if split {
        [1, 1, -1]
    } else {
        [1, 1, 1]
    }
}

/// The twisted matrix product.
pub fn okubo_product(x: &Mat3, y: &Mat3) -> Mat3 {
    let xy = mat_mul(x, y);
    let yx = mat_mul(y, x);
    let t = &mat_trace(&xy) * &CQSqrt3::real(QSqrt3::ratio(-1, 3));
    let mut id = mat_zero();
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = CQSqrt3::one();
    }
    mat_lincomb(&[(mu(), &xy), (mu().conj(), &yx), (t, &id)])
}

/// Norm `Tr(m²)/6`.
pub fn matrix_norm(m: &Mat3) -> CQSqrt3 {
    &mat_trace(&mat_mul(m, m)) * &CQSqrt3::real(QSqrt3::ratio(1, 6))
}

/// Off-diagonal basis element `√3(z·E_pq + J_p J_q z̄·E_qp)`.
fn off_diag(p: usize, q: usize, z: CQSqrt3, split: bool) -> Mat3 {
    let j = sign_form(split);
    let s3 = CQSqrt3::real(QSqrt3::sqrt3());
    let mut m = mat_zero();
    m[q][p] = &(&s3 * &z.conj()) * &cint(j[p] * j[q]);
    m[p][q] = &s3 * &z;
    m
}

fn cint(n: i64) -> CQSqrt3 {
    CQSqrt3::real(QSqrt3::int(n))
}

/// Basis matrices `m_0..m_7`; `m_0 = diag(2,-1,-1)` is the idempotent `e`.
///
/// Labels and phases are chosen so the matrix product, written in this
/// basis, coincides with the Petersson twist of the doubled octonion table
/// by the fixed order-three automorphism (checked in tests).
pub fn basis_matrices(split: bool) -> [Mat3; 8] {
    let one = CQSqrt3::one();
    let i = CQSqrt3::i();
    let s3 = QSqrt3::sqrt3();
    let mut e = mat_zero();
    e[0][0] = cint(2);
    e[1][1] = cint(-1);
    e[2][2] = cint(-1);
    let mut d = mat_zero();
    d[1][1] = CQSqrt3::real(s3.clone());
    d[2][2] = CQSqrt3::real(-&s3);
    [
        e,
        d,
        off_diag(0, 1, i.clone(), split),
        off_diag(0, 1, -&one, split),
        off_diag(1, 2, one.clone(), split),
        off_diag(1, 2, i.clone(), split),
        off_diag(0, 2, one, split),
        off_diag(0, 2, i, split),
    ]
}

pub fn to_matrix(x: &Elem<QSqrt3>, split: bool) -> Mat3 {
    let b = basis_matrices(split);
    let terms: Vec<(CQSqrt3, &Mat3)> = x
        .iter()
        .zip(b.iter())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| (CQSqrt3::real(c.clone()), m))
        .collect();
    mat_lincomb(&terms)
}

pub fn from_matrix(m: &Mat3, split: bool) -> Result<Elem<QSqrt3>, CompalgError> {
    if !mat_trace(m).is_zero() {
        return Err(CompalgError::NotOkuboMatrix("trace is not zero".into()));
    }
    let j = sign_form(split);
    for p in 0..3 {
        for q in 0..3 {
            let want = &m[q][p].conj() * &cint(j[p] * j[q]);
            if m[p][q] != want {
                return Err(CompalgError::NotOkuboMatrix(format!(
                    "entry ({},{}) breaks the hermitian symmetry",
                    p + 1,
                    q + 1
                )));
            }
        }
    }
    let b = basis_matrices(split);
    let mut out: Elem<QSqrt3> = std::array::from_fn(|_| QSqrt3::zero());
    for k in 0..8 {
        // the basis is orthonormal for Tr(xy)/6 up to the sign of each norm
        let nk = matrix_norm(&b[k]);
        let c = &(&mat_trace(&mat_mul(m, &b[k])) * &CQSqrt3::real(QSqrt3::ratio(1, 6))) * &nk;
        if !c.im.is_zero() {
            return Err(CompalgError::NotOkuboMatrix("coordinate is not real".into()));
        }
        out[k] = c.re;
    }
    if &to_matrix(&out, split) != m {
        return Err(CompalgError::NotOkuboMatrix("matrix is outside the span".into()));
    }
    Ok(out)
}

/// Structure constants of the matrix product in the basis above.
pub fn matrix_table(split: bool) -> Result<[[Elem<QSqrt3>; 8]; 8], CompalgError> {
    let b = basis_matrices(split);
    let mut rows: Vec<[Elem<QSqrt3>; 8]> = Vec::with_capacity(8);
    for x in b.iter() {
        let mut row: Vec<Elem<QSqrt3>> = Vec::with_capacity(8);
        for y in b.iter() {
            row.push(from_matrix(&okubo_product(x, y), split)?);
        }
        rows.push(row.try_into().expect("eight columns"));
    }
    Ok(rows.try_into().expect("eight rows"))
}
