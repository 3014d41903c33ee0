//! Exact construction of the six built-in tables.

use num_traits::{One, Zero};

use crate::scalars::QSqrt3;

use super::{okubo, AlgebraKind, AlgebraSpec, CompalgError, Elem, Family};

/// `t[i][j]` is the product `i_i · i_j`.
pub type Dense = [[Elem<QSqrt3>; 8]; 8];

pub fn dense_zero() -> Dense {
    std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| QSqrt3::zero())))
}

fn e(k: usize) -> Elem<QSqrt3> {
    super::basis(k)
}

pub fn dense_mul(t: &Dense, x: &Elem<QSqrt3>, y: &Elem<QSqrt3>) -> Elem<QSqrt3> {
    let mut out = super::zero_elem::<QSqrt3>();
    for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let p = xi * yj;
            for (k, c) in t[i][j].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out[k] = &out[k] + &(&p * c);
            }
        }
    }
    out
}

pub fn conj_std(x: &Elem<QSqrt3>) -> Elem<QSqrt3> {
    std::array::from_fn(|k| if k == 0 { x[0].clone() } else { -&x[k] })
}

/// The order-three automorphism as a matrix: column `c` is `τ(i_c)`.
///
/// It fixes `i0, i1, i4, i5` and rotates the planes `(i2, i3)` and
/// `(i6, i7)` by 2π/3.
pub fn tau_matrix() -> [[QSqrt3; 8]; 8] {
    let mut m: [[QSqrt3; 8]; 8] = std::array::from_fn(|_| std::array::from_fn(|_| QSqrt3::zero()));
    for k in [0, 1, 4, 5] {
        m[k][k] = QSqrt3::one();
    }
    let c = QSqrt3::ratio(-1, 2);
    let s = QSqrt3::sqrt3_times(1, 2);
    for (p, q) in [(2, 3), (6, 7)] {
        m[p][p] = c.clone();
        m[q][p] = s.clone();
        m[p][q] = -&s;
        m[q][q] = c.clone();
    }
    m
}

pub fn apply(m: &[[QSqrt3; 8]; 8], x: &Elem<QSqrt3>) -> Elem<QSqrt3> {
    std::array::from_fn(|r| {
        let mut s = QSqrt3::zero();
        for (c, xc) in x.iter().enumerate() {
            if !xc.is_zero() && !m[r][c].is_zero() {
                s = s + &(&m[r][c] * xc);
            }
        }
        s
    })
}

fn quat_mul(a: &[QSqrt3], b: &[QSqrt3]) -> [QSqrt3; 4] {
    let p = |i: usize, j: usize| &a[i] * &b[j];
    [
        &(&(&p(0, 0) - &p(1, 1)) - &p(2, 2)) - &p(3, 3),
        &(&(&p(0, 1) + &p(1, 0)) + &p(2, 3)) - &p(3, 2),
        &(&(&p(0, 2) - &p(1, 3)) + &p(2, 0)) + &p(3, 1),
        &(&(&p(0, 3) + &p(1, 2)) - &p(2, 1)) + &p(3, 0),
    ]
}

fn quat_conj(a: &[QSqrt3]) -> [QSqrt3; 4] {
    [a[0].clone(), -&a[1], -&a[2], -&a[3]]
}

/// Doubling of the quaternions: `(a,b)(c,d) = (ac + γ d̄b, da + bc̄)`.
pub fn cd_table(gamma: i64) -> Dense {
    let g = QSqrt3::int(gamma);
    derive(|x, y| {
        let (a, b) = x.split_at(4);
        let (c, d) = y.split_at(4);
        let first = quat_mul(a, c);
        let second = quat_mul(&quat_conj(d), b);
        let third = quat_mul(d, a);
        let fourth = quat_mul(b, &quat_conj(c));
        std::array::from_fn(|k| {
            if k < 4 {
                &first[k] + &(&g * &second[k])
            } else {
                &third[k - 4] + &fourth[k - 4]
            }
        })
    })
}

pub fn derive(f: impl Fn(&Elem<QSqrt3>, &Elem<QSqrt3>) -> Elem<QSqrt3>) -> Dense {
    std::array::from_fn(|i| std::array::from_fn(|j| f(&e(i), &e(j))))
}

fn norm(nd: &[i8; 8], x: &Elem<QSqrt3>) -> QSqrt3 {
    x.iter()
        .zip(nd)
        .fold(QSqrt3::zero(), |acc, (c, s)| acc + &(&QSqrt3::int(*s as i64) * &(c * c)))
}

/// `n(i_i · i_j) = n(i_i) n(i_j)` on basis pairs.
pub fn check_basis_norms(t: &Dense, nd: &[i8; 8]) -> Result<(), CompalgError> {
    for i in 0..8 {
        for j in 0..8 {
            if norm(nd, &t[i][j]) != QSqrt3::int((nd[i] * nd[j]) as i64) {
                return Err(CompalgError::Composition(i, j));
            }
        }
    }
    Ok(())
}

/// All six tables in [`Family::ALL`] order.
pub fn build_all() -> Result<Vec<AlgebraSpec>, CompalgError> {
    let tau = tau_matrix();
    let tau2 = |x: &Elem<QSqrt3>| apply(&tau, &apply(&tau, x));

    let ok = okubo::matrix_table(false)?;
    let unit_ok = e(0);
    let oct = derive(|x, y| {
        dense_mul(&ok, &dense_mul(&ok, &unit_ok, x), &dense_mul(&ok, y, &unit_ok))
    });
    let para = derive(|x, y| dense_mul(&oct, &conj_std(x), &conj_std(y)));

    let soct = cd_table(1);
    let spara = derive(|x, y| dense_mul(&soct, &conj_std(x), &conj_std(y)));
    let sok = derive(|x, y| dense_mul(&soct, &apply(&tau, &conj_std(x)), &tau2(&conj_std(y))));

    let mut out = Vec::new();
    for f in Family::ALL {
        let t = match f {
            Family::Octonion => &oct,
            Family::SplitOctonion => &soct,
            Family::ParaOctonion => &para,
            Family::SplitParaOctonion => &spara,
            Family::Okubo => &ok,
            Family::SplitOkubo => &sok,
        };
        check_basis_norms(t, &f.normdiag())?;
        out.push(AlgebraSpec::from_dense(Some(AlgebraKind::real(f)), f.normdiag(), t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn okubo_derived_octonions_are_the_doubled_quaternions() {
        let ok = build_all().unwrap();
        let oct = ok[0].to_dense();
        assert_eq!(oct, cd_table(-1));
    }

    #[test]
    fn split_okubo_twist_matches_the_matrix_model() {
        let all = build_all().unwrap();
        assert_eq!(all[5].to_dense(), okubo::matrix_table(true).unwrap());
    }

    #[test]
    fn tau_has_order_three() {
        let t = tau_matrix();
        for k in 0..8 {
            let x = e(k);
            assert_eq!(apply(&t, &apply(&t, &apply(&t, &x))), x);
        }
    }

    #[test]
    fn tau_is_an_automorphism_of_both_doublings() {
        let t = tau_matrix();
        for g in [-1, 1] {
            let tab = cd_table(g);
            for i in 0..8 {
                for j in 0..8 {
                    let lhs = apply(&t, &tab[i][j]);
                    let rhs = dense_mul(&tab, &apply(&t, &e(i)), &apply(&t, &e(j)));
                    assert_eq!(lhs, rhs, "gamma {g} pair ({i},{j})");
                }
            }
        }
    }
}
