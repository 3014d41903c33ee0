use num_traits::Zero;

use crate::linalg;
use crate::scalars::{Field, QSqrt3};

use super::{
    basis, build_spec, tables, zero_elem, AlgebraKind, AlgebraSpec, Class, CompalgError, Elem,
    Family, ScalarKind,
};

#[derive(Clone, Debug)]
enum Coef<S> {
    Plus,
    Minus,
    Other(S),
}

/// Sparse linear map on the eight coordinates: `cols[c]` lists the image of `i_c`.
type Lin<S> = Vec<Vec<(usize, S)>>;

/// A structure-constant table compiled for a particular scalar field.
#[derive(Clone, Debug)]
pub struct Algebra<S: Field> {
    kind: Option<AlgebraKind>,
    normdiag: [i8; 8],
    prod: Vec<Vec<(usize, Coef<S>)>>,
    conj: Lin<S>,
    tau: Lin<S>,
}

/// Coordinates tagged with the algebra they belong to.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S: Field> {
    pub coords: Elem<S>,
    pub kind: Option<AlgebraKind>,
}

fn lin_apply<S: Field>(m: &Lin<S>, x: &Elem<S>) -> Elem<S> {
    let mut out = zero_elem::<S>();
    for (c, col) in m.iter().enumerate() {
        if x[c].is_zero() {
            continue;
        }
        for (r, v) in col {
            out[*r] = out[*r].add_ref(&x[c].mul_ref(v));
        }
    }
    out
}

fn lin_from_fn<S: Field>(f: impl Fn(&Elem<S>) -> Elem<S>) -> Lin<S> {
    (0..8)
        .map(|c| {
            f(&basis(c))
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect()
}

fn lin_from_qs<S: Field>(m: &[[QSqrt3; 8]; 8]) -> Lin<S> {
    (0..8)
        .map(|c| {
            (0..8)
                .filter(|&r| !m[r][c].is_zero())
                .map(|r| (r, S::from_qs(&m[r][c])))
                .collect()
        })
        .collect()
}

impl<S: Field> Algebra<S> {
    /// Compile a table. Conjugation and τ come from the family: the
    /// standard ones for Hurwitz and para-Hurwitz tables (and for tables of
    /// unknown origin), the derived maps through the idempotent for Okubo.
    pub fn new(spec: &AlgebraSpec) -> Self {
        let mut prod: Vec<Vec<(usize, Coef<S>)>> = vec![Vec::new(); 64];
        for s in &spec.table {
            let c = if s.c == QSqrt3::int(1) {
                Coef::Plus
            } else if s.c == QSqrt3::int(-1) {
                Coef::Minus
            } else {
                Coef::Other(S::from_qs(&s.c))
            };
            prod[s.i * 8 + s.j].push((s.k, c));
        }
        let mut alg = Algebra {
            kind: spec.kind,
            normdiag: spec.normdiag,
            prod,
            conj: lin_from_fn(|x: &Elem<S>| {
                std::array::from_fn(|k| if k == 0 { x[0].clone() } else { x[k].neg_ref() })
            }),
            tau: lin_from_qs(&tables::tau_matrix()),
        };
        if spec.family().map(Family::class) == Some(Class::Okubo) {
            let e = basis::<S>(0);
            let re = |a: &Algebra<S>, x: &Elem<S>| a.mul(x, &e);
            let conj = lin_from_fn(|x| re(&alg, &re(&alg, &re(&alg, x))));
            let tau = lin_from_fn(|x| re(&alg, &re(&alg, &re(&alg, &re(&alg, x)))));
            alg.conj = conj;
            alg.tau = tau;
        }
        alg
    }

    /// The built-in algebra of a family over `S`.
    pub fn of(family: Family) -> Self {
        let scalars = if S::COMPLEX { ScalarKind::Complexified } else { ScalarKind::Real };
        Self::new(&build_spec(AlgebraKind { family, scalars }))
    }

    pub fn kind(&self) -> Option<AlgebraKind> {
        self.kind
    }

    pub fn family(&self) -> Option<Family> {
        self.kind.map(|k| k.family)
    }

    pub fn normdiag(&self) -> [i8; 8] {
        self.normdiag
    }

    pub fn elem(&self, coords: Elem<S>) -> AlgebraElement<S> {
        AlgebraElement { coords, kind: self.kind }
    }

    pub fn mul(&self, x: &Elem<S>, y: &Elem<S>) -> Elem<S> {
        let mut out = zero_elem::<S>();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let terms = &self.prod[i * 8 + j];
                if terms.is_empty() {
                    continue;
                }
                let p = xi.mul_ref(yj);
                for (k, c) in terms {
                    out[*k] = match c {
                        Coef::Plus => out[*k].add_ref(&p),
                        Coef::Minus => out[*k].sub_ref(&p),
                        Coef::Other(v) => out[*k].add_ref(&p.mul_ref(v)),
                    };
                }
            }
        }
        out
    }

    /// Product of tagged elements; both must carry this algebra's kind.
    pub fn mul_checked(
        &self,
        x: &AlgebraElement<S>,
        y: &AlgebraElement<S>,
    ) -> Result<AlgebraElement<S>, CompalgError> {
        for z in [x, y] {
            if z.kind != self.kind {
                return Err(CompalgError::KindMismatch(kind_name(z.kind), kind_name(self.kind)));
            }
        }
        Ok(self.elem(self.mul(&x.coords, &y.coords)))
    }

    pub fn conj(&self, x: &Elem<S>) -> Elem<S> {
        lin_apply(&self.conj, x)
    }

    pub fn tau(&self, x: &Elem<S>) -> Elem<S> {
        lin_apply(&self.tau, x)
    }

    pub fn tau2(&self, x: &Elem<S>) -> Elem<S> {
        self.tau(&self.tau(x))
    }

    pub fn norm(&self, x: &Elem<S>) -> S {
        let mut s = S::zero();
        for (c, d) in x.iter().zip(self.normdiag) {
            if c.is_zero() {
                continue;
            }
            let sq = c.mul_ref(c);
            s = if d > 0 { s.add_ref(&sq) } else { s.sub_ref(&sq) };
        }
        s
    }

    /// `n(x+y) − n(x) − n(y)`.
    pub fn polar(&self, x: &Elem<S>, y: &Elem<S>) -> S {
        let mut s = S::zero();
        for k in 0..8 {
            if x[k].is_zero() || y[k].is_zero() {
                continue;
            }
            let p = x[k].mul_ref(&y[k]);
            s = if self.normdiag[k] > 0 { s.add_ref(&p) } else { s.sub_ref(&p) };
        }
        s.add_ref(&s.clone())
    }

    /// Matrix of `y ↦ x·y`, row-major.
    pub fn left_matrix(&self, x: &Elem<S>) -> Vec<Vec<S>> {
        let cols: Vec<Elem<S>> = (0..8).map(|j| self.mul(x, &basis(j))).collect();
        (0..8).map(|r| (0..8).map(|c| cols[c][r].clone()).collect()).collect()
    }

    /// Matrix of `y ↦ y·x`, row-major.
    pub fn right_matrix(&self, x: &Elem<S>) -> Vec<Vec<S>> {
        let cols: Vec<Elem<S>> = (0..8).map(|j| self.mul(&basis(j), x)).collect();
        (0..8).map(|r| (0..8).map(|c| cols[c][r].clone()).collect()).collect()
    }

    /// `Some(y)` with `y ≠ 0` and `x·y = 0`, or `None` when left
    /// multiplication by `x` is injective.
    pub fn is_zero_divisor(&self, x: &Elem<S>) -> Result<Option<Elem<S>>, CompalgError> {
        if super::is_zero(x) {
            return Err(CompalgError::ZeroElement);
        }
        let ker = linalg::kernel(self.left_matrix(x), 8);
        Ok(ker.into_iter().next().map(|v| std::array::from_fn(|k| v[k].clone())))
    }
}

fn kind_name(k: Option<AlgebraKind>) -> String {
    k.map_or_else(|| "custom".to_string(), |k| k.to_string())
}

/// Evaluate the product of `to` on elements of `from`, through the
/// conversion formulas between the three classes.
///
/// `to` must have the same split type as `from`.
pub fn convert<S: Field>(
    from: &Algebra<S>,
    to: Family,
    x: &Elem<S>,
    y: &Elem<S>,
) -> Result<Elem<S>, CompalgError> {
    let unsupported = || CompalgError::UnsupportedConversion(kind_name(from.kind), to.to_string());
    let src = from.family().ok_or_else(unsupported)?;
    if src.is_split() != to.is_split() {
        return Err(unsupported());
    }
    let e = basis::<S>(0);
    let m = |a: &Elem<S>, b: &Elem<S>| from.mul(a, b);
    Ok(match (src.class(), to.class()) {
        (a, b) if a == b => m(x, y),
        (Class::Okubo, Class::Hurwitz) => m(&m(&e, x), &m(y, &e)),
        (Class::Okubo, Class::Para) => m(&from.tau2(x), &from.tau(y)),
        (Class::Hurwitz, Class::Okubo) => m(&from.tau(&from.conj(x)), &from.tau2(&from.conj(y))),
        (Class::Hurwitz, Class::Para) => m(&from.conj(x), &from.conj(y)),
        (Class::Para, Class::Hurwitz) => m(&m(&e, x), &m(y, &e)),
        (Class::Para, Class::Okubo) => m(&from.tau(x), &from.tau2(y)),
        _ => unreachable!("all class pairs are covered"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compalg::{lift, sample_elem};
    use crate::scalars::{CQSqrt3, QSqrt3};
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type A = Algebra<QSqrt3>;

    fn q(n: i64) -> QSqrt3 {
        QSqrt3::int(n)
    }

    fn e(k: usize) -> Elem<QSqrt3> {
        basis(k)
    }

    #[test]
    fn basis_squares() {
        let o = A::of(Family::Octonion);
        let s = A::of(Family::SplitOctonion);
        for k in 1..8 {
            assert_eq!(o.mul(&e(k), &e(k)), super::super::neg(&e(0)));
        }
        for k in 1..4 {
            assert_eq!(s.mul(&e(k), &e(k)), super::super::neg(&e(0)));
        }
        for k in 4..8 {
            assert_eq!(s.mul(&e(k), &e(k)), e(0));
        }
    }

    #[test]
    fn okubo_idempotent_and_paraunit() {
        let ok = A::of(Family::Okubo);
        assert_eq!(ok.mul(&e(0), &e(0)), e(0));
        let p = A::of(Family::ParaOctonion);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x: Elem<QSqrt3> = sample_elem(&mut rng);
            assert_eq!(p.mul(&e(0), &x), p.conj(&x));
            assert_eq!(p.mul(&x, &e(0)), p.conj(&x));
        }
    }

    #[test]
    fn norms_and_polar() {
        let s = A::of(Family::SplitOctonion);
        assert_eq!(s.norm(&super::super::add(&e(0), &e(4))), q(0));
        let ok = A::of(Family::Okubo);
        assert_eq!(ok.norm(&e(0)), q(1));
        let o = A::of(Family::Octonion);
        assert_eq!(o.polar(&e(1), &e(2)), q(0));
        let x = super::super::add(&e(1), &e(2));
        assert_eq!(o.polar(&x, &x), &q(2) * &o.norm(&x));
    }

    #[test]
    fn tau_values() {
        let o = A::of(Family::Octonion);
        assert_eq!(o.tau(&e(1)), e(1));
        let mut want = zero_elem::<QSqrt3>();
        want[2] = QSqrt3::ratio(-1, 2);
        want[3] = QSqrt3::sqrt3_times(1, 2);
        assert_eq!(o.tau(&e(2)), want);
    }

    #[test]
    fn okubo_derived_maps_agree_with_the_standard_ones() {
        for f in [Family::Okubo, Family::SplitOkubo] {
            let ok = A::of(f);
            let h = A::of(Family::of(Class::Hurwitz, f.is_split()));
            for k in 0..8 {
                assert_eq!(ok.conj(&e(k)), h.conj(&e(k)), "{f} conj {k}");
                assert_eq!(ok.tau(&e(k)), h.tau(&e(k)), "{f} tau {k}");
            }
        }
    }

    #[test]
    fn conversions_reproduce_the_target_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for split in [false, true] {
            for from in [Class::Hurwitz, Class::Para, Class::Okubo] {
                let a = A::of(Family::of(from, split));
                for to in [Class::Hurwitz, Class::Para, Class::Okubo] {
                    let tf = Family::of(to, split);
                    let b = A::of(tf);
                    for _ in 0..15 {
                        let x: Elem<QSqrt3> = sample_elem(&mut rng);
                        let y: Elem<QSqrt3> = sample_elem(&mut rng);
                        assert_eq!(convert(&a, tf, &x, &y).unwrap(), b.mul(&x, &y), "{from:?}->{to:?}");
                    }
                }
            }
        }
        let a = A::of(Family::Okubo);
        assert!(convert(&a, Family::SplitOctonion, &e(0), &e(0)).is_err());
        assert_eq!(convert(&a, Family::Octonion, &e(0), &e(0)).unwrap(), e(0));
    }

    #[test]
    fn zero_divisor_witness() {
        let s = A::of(Family::SplitOctonion);
        let x = super::super::add(&e(0), &e(4));
        let y = s.is_zero_divisor(&x).unwrap().expect("zero divisor");
        assert!(!super::super::is_zero(&y));
        assert!(super::super::is_zero(&s.mul(&x, &y)));
        let o = A::of(Family::Octonion);
        assert_eq!(o.is_zero_divisor(&x).unwrap(), None);
        assert_eq!(o.is_zero_divisor(&zero_elem()), Err(CompalgError::ZeroElement));
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let o = A::of(Family::Octonion);
        let s = A::of(Family::SplitOctonion);
        let x = s.elem(e(1));
        assert!(matches!(o.mul_checked(&x, &x), Err(CompalgError::KindMismatch(..))));
        assert!(o.mul_checked(&o.elem(e(1)), &o.elem(e(2))).is_ok());
    }

    #[test]
    fn complexified_octonions_and_split_octonions_are_isomorphic() {
        let oc = Algebra::<CQSqrt3>::of(Family::Octonion);
        let sc = Algebra::<CQSqrt3>::of(Family::SplitOctonion);
        let phi = |x: &Elem<CQSqrt3>| -> Elem<CQSqrt3> {
            std::array::from_fn(|k| if k >= 4 { &x[k] * &CQSqrt3::i() } else { x[k].clone() })
        };
        for i in 0..8 {
            for j in 0..8 {
                let (a, b) = (basis::<CQSqrt3>(i), basis::<CQSqrt3>(j));
                assert_eq!(phi(&sc.mul(&a, &b)), oc.mul(&phi(&a), &phi(&b)));
            }
        }
    }

    #[test]
    fn float_paths_agree_with_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for f in Family::ALL {
            let ex = A::of(f);
            let fl = Algebra::<f64>::of(f);
            let cf = Algebra::<Complex64>::of(f);
            for _ in 0..10 {
                let x: Elem<QSqrt3> = sample_elem(&mut rng);
                let y: Elem<QSqrt3> = sample_elem(&mut rng);
                let p = ex.mul(&x, &y);
                let pf = fl.mul(&lift(&x), &lift(&y));
                let pc = cf.mul(&lift(&x), &lift(&y));
                for k in 0..8 {
                    assert!((p[k].to_f64() - pf[k]).abs() < 1e-9);
                    assert!((p[k].to_f64() - pc[k].re).abs() < 1e-9);
                }
            }
        }
    }
}
