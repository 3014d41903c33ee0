//! Albert algebras `H₃(𝕂; γ)` over the octonions and split octonions.
//!
//! An element is stored as `(λ₁,λ₂,λ₃; x₁,x₂,x₃)`. Its matrix is
//!
//! ```text
//! [ λ₁        x₃        γ₁γ₃ x̄₂ ]
//! [ γ₁γ₂ x̄₃   λ₂        x₁      ]
//! [ x₂        γ₂γ₃ x̄₁   λ₃      ]
//! ```
//!
//! which is self-adjoint for `η = diag(γ)`, so the symmetrized matrix
//! product `½(XY + YX)` stays in the space.

pub mod suite;
mod text;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::compalg::{self, sample_elem, Algebra, CompalgError, Elem, Family};
use crate::linalg::negligible;
use crate::scalars::Field;

pub use suite::{identity_suite, IdentityResult, IdentitySuite};
pub use text::{format_element, parse_element};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlbertError {
    #[error("{0} is not a Hurwitz algebra")]
    NotHurwitz(Family),
    #[error("index ({0},{1}) out of range")]
    Index(usize, usize),
    #[error("unknown jordan target {0:?}")]
    UnknownTarget(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Compalg(#[from] CompalgError),
}

/// Signs `(γ₁, γ₂, γ₃)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaTriple(pub [i8; 3]);

impl GammaTriple {
    pub const EUCLIDEAN: GammaTriple = GammaTriple([1, 1, 1]);
    pub const LORENTZIAN: GammaTriple = GammaTriple([1, 1, -1]);

    /// `γ_a γ_b` with 1-based indices.
    pub fn pair(self, a: usize, b: usize) -> i8 {
        self.0[a - 1] * self.0[b - 1]
    }
}

impl fmt::Display for GammaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for GammaTriple {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Vec<i8> = inner
            .split(',')
            .map(|t| match t.trim() {
                "1" | "+1" => Ok(1),
                "-1" => Ok(-1),
                o => Err(format!("bad gamma entry {o:?}")),
            })
            .collect::<Result<_, _>>()?;
        let arr: [i8; 3] = v.try_into().map_err(|_| "gamma needs three entries".to_string())?;
        Ok(GammaTriple(arr))
    }
}

/// The Jordan algebras named by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JordanTarget {
    J3O,
    J21O,
    J3Os,
    J21Os,
    J3CO,
}

impl JordanTarget {
    pub const ALL: [JordanTarget; 5] =
        [JordanTarget::J3O, JordanTarget::J21O, JordanTarget::J3Os, JordanTarget::J21Os, JordanTarget::J3CO];

    pub fn selector(self) -> &'static str {
        match self {
            JordanTarget::J3O => "J3-O",
            JordanTarget::J21O => "J21-O",
            JordanTarget::J3Os => "J3-Os",
            JordanTarget::J21Os => "J21-Os",
            JordanTarget::J3CO => "J3C-O",
        }
    }

    pub fn family(self) -> Family {
        match self {
            JordanTarget::J3Os | JordanTarget::J21Os => Family::SplitOctonion,
            _ => Family::Octonion,
        }
    }

    pub fn gamma(self) -> GammaTriple {
        match self {
            JordanTarget::J21O | JordanTarget::J21Os => GammaTriple::LORENTZIAN,
            _ => GammaTriple::EUCLIDEAN,
        }
    }

    pub fn complexified(self) -> bool {
        self == JordanTarget::J3CO
    }
}

impl fmt::Display for JordanTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.selector())
    }
}

impl FromStr for JordanTarget {
    type Err = AlbertError;
    fn from_str(s: &str) -> Result<Self, AlbertError> {
        JordanTarget::ALL
            .into_iter()
            .find(|t| t.selector().eq_ignore_ascii_case(s))
            .ok_or_else(|| AlbertError::UnknownTarget(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlbertElement<S: Field> {
    pub l: [S; 3],
    pub x: [Elem<S>; 3],
}

impl<S: Field> AlbertElement<S> {
    pub fn zero() -> Self {
        AlbertElement {
            l: std::array::from_fn(|_| S::zero()),
            x: std::array::from_fn(|_| compalg::zero_elem()),
        }
    }

    pub fn diag(l: [S; 3]) -> Self {
        AlbertElement { l, ..Self::zero() }
    }

    pub fn identity() -> Self {
        Self::diag(std::array::from_fn(|_| S::one()))
    }

    /// Coordinates in the order `λ₁, λ₂, λ₃, x₁[0..8], x₂[0..8], x₃[0..8]`.
    pub fn to_vec(&self) -> Vec<S> {
        let mut v: Vec<S> = self.l.to_vec();
        for x in &self.x {
            v.extend(x.iter().cloned());
        }
        v
    }

    pub fn from_slice(v: &[S]) -> Self {
        assert_eq!(v.len(), 27, "albert coordinates have length 27");
        AlbertElement {
            l: std::array::from_fn(|i| v[i].clone()),
            x: std::array::from_fn(|n| std::array::from_fn(|k| v[3 + 8 * n + k].clone())),
        }
    }

    /// Basis vector number `k` of the 27 coordinates.
    pub fn unit_coord(k: usize) -> Self {
        let mut v = vec![S::zero(); 27];
        v[k] = S::one();
        Self::from_slice(&v)
    }

    pub fn add(&self, o: &Self) -> Self {
        AlbertElement {
            l: std::array::from_fn(|i| self.l[i].add_ref(&o.l[i])),
            x: std::array::from_fn(|n| compalg::add(&self.x[n], &o.x[n])),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AlbertElement {
            l: std::array::from_fn(|i| self.l[i].sub_ref(&o.l[i])),
            x: std::array::from_fn(|n| compalg::sub(&self.x[n], &o.x[n])),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        AlbertElement {
            l: std::array::from_fn(|i| c.mul_ref(&self.l[i])),
            x: std::array::from_fn(|n| compalg::scale(c, &self.x[n])),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.l.iter().all(negligible) && self.x.iter().all(compalg::is_zero)
    }

    /// Equality up to the field's zero test.
    pub fn approx_eq(&self, o: &Self) -> bool {
        if S::EXACT {
            return self == o;
        }
        let scale = self.to_vec().iter().chain(o.to_vec().iter()).map(|c| c.magnitude()).fold(1.0, f64::max);
        self.sub(o).to_vec().iter().all(|c| c.magnitude() <= 1e-9 * scale)
    }

    /// Largest coordinate modulus.
    pub fn max_abs(&self) -> f64 {
        self.to_vec().iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

/// Summary of the cubic structure of one element.
#[derive(Clone, Debug)]
pub struct CubicReport<S: Field> {
    pub norm: S,
    pub trace: S,
    pub s: S,
    pub sharp: AlbertElement<S>,
    pub rank: u8,
}

/// `H₃(𝕂; γ)` for a Hurwitz algebra `𝕂` over the field `S`.
#[derive(Clone, Debug)]
pub struct AlbertAlgebra<S: Field> {
    alg: Algebra<S>,
    family: Family,
    gamma: GammaTriple,
}

type Mat<S> = [[Elem<S>; 3]; 3];

impl<S: Field> AlbertAlgebra<S> {
    pub fn new(family: Family, gamma: GammaTriple) -> Result<Self, AlbertError> {
        if !family.is_hurwitz() {
            return Err(AlbertError::NotHurwitz(family));
        }
        Ok(AlbertAlgebra { alg: Algebra::of(family), family, gamma })
    }

    pub fn of(target: JordanTarget) -> Self {
        Self::new(target.family(), target.gamma()).expect("targets use Hurwitz algebras")
    }

    pub fn algebra(&self) -> &Algebra<S> {
        &self.alg
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn gamma(&self) -> GammaTriple {
        self.gamma
    }

    fn g(&self, a: usize, b: usize) -> S {
        S::from_i64(self.gamma.pair(a, b) as i64)
    }

    fn real(&self, c: &S) -> Elem<S> {
        let mut e = compalg::zero_elem::<S>();
        e[0] = c.clone();
        e
    }

    pub fn to_matrix(&self, x: &AlbertElement<S>) -> Mat<S> {
        let a = &self.alg;
        let tw = |c: S, v: &Elem<S>| compalg::scale(&c, &a.conj(v));
        [
            [self.real(&x.l[0]), x.x[2].clone(), tw(self.g(1, 3), &x.x[1])],
            [tw(self.g(1, 2), &x.x[2]), self.real(&x.l[1]), x.x[0].clone()],
            [x.x[1].clone(), tw(self.g(2, 3), &x.x[0]), self.real(&x.l[2])],
        ]
    }

    /// Read coordinates back from the upper and lower corners of a matrix.
    pub fn from_matrix(&self, m: &Mat<S>) -> AlbertElement<S> {
        AlbertElement {
            l: std::array::from_fn(|i| m[i][i][0].clone()),
            x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        }
    }

    fn mat_mul(&self, p: &Mat<S>, q: &Mat<S>) -> Mat<S> {
        std::array::from_fn(|i| {
            std::array::from_fn(|k| {
                let mut s = compalg::zero_elem::<S>();
                for j in 0..3 {
                    s = compalg::add(&s, &self.alg.mul(&p[i][j], &q[j][k]));
                }
                s
            })
        })
    }

    /// `X∘Y = ½(XY + YX)`.
    pub fn jordan_mul(&self, x: &AlbertElement<S>, y: &AlbertElement<S>) -> AlbertElement<S> {
        let (mx, my) = (self.to_matrix(x), self.to_matrix(y));
        let (p, q) = (self.mat_mul(&mx, &my), self.mat_mul(&my, &mx));
        let sum: Mat<S> = std::array::from_fn(|i| std::array::from_fn(|k| compalg::add(&p[i][k], &q[i][k])));
        self.from_matrix(&sum).scale(&S::ratio(1, 2))
    }

    pub fn square(&self, x: &AlbertElement<S>) -> AlbertElement<S> {
        self.jordan_mul(x, x)
    }

    pub fn trace(&self, x: &AlbertElement<S>) -> S {
        x.l[0].add_ref(&x.l[1]).add_ref(&x.l[2])
    }

    /// The quadratic trace `S(X)`, the sum of principal 2×2 minors.
    pub fn quad_s(&self, x: &AlbertElement<S>) -> S {
        let n = |k: usize| self.alg.norm(&x.x[k]);
        let l = &x.l;
        l[0].mul_ref(&l[1])
            .add_ref(&l[1].mul_ref(&l[2]))
            .add_ref(&l[2].mul_ref(&l[0]))
            .sub_ref(&self.g(2, 3).mul_ref(&n(0)))
            .sub_ref(&self.g(1, 3).mul_ref(&n(1)))
            .sub_ref(&self.g(1, 2).mul_ref(&n(2)))
    }

    pub fn pair_s(&self, x: &AlbertElement<S>, y: &AlbertElement<S>) -> S {
        self.quad_s(&x.add(y)).sub_ref(&self.quad_s(x)).sub_ref(&self.quad_s(y))
    }

    /// `(X,Y) = Tr(X)Tr(Y) − S(X,Y)`.
    pub fn trace_form(&self, x: &AlbertElement<S>, y: &AlbertElement<S>) -> S {
        self.trace(x).mul_ref(&self.trace(y)).sub_ref(&self.pair_s(x, y))
    }

    pub fn cubic_norm(&self, x: &AlbertElement<S>) -> S {
        let a = &self.alg;
        let n = |k: usize| a.norm(&x.x[k]);
        let l = &x.l;
        let cubic = a.polar(&a.mul(&x.x[0], &x.x[1]), &a.conj(&x.x[2]));
        l[0].mul_ref(&l[1])
            .mul_ref(&l[2])
            .sub_ref(&self.g(2, 3).mul_ref(&l[0]).mul_ref(&n(0)))
            .sub_ref(&self.g(1, 3).mul_ref(&l[1]).mul_ref(&n(1)))
            .sub_ref(&self.g(1, 2).mul_ref(&l[2]).mul_ref(&n(2)))
            .add_ref(&cubic)
    }

    /// Symmetric trilinear form with `N(X,X,X) = N(X)`.
    pub fn norm_trilinear(&self, x: &AlbertElement<S>, y: &AlbertElement<S>, z: &AlbertElement<S>) -> S {
        let n = |v: &AlbertElement<S>| self.cubic_norm(v);
        let s = n(&x.add(y).add(z))
            .sub_ref(&n(&x.add(y)))
            .sub_ref(&n(&x.add(z)))
            .sub_ref(&n(&y.add(z)))
            .add_ref(&n(x))
            .add_ref(&n(y))
            .add_ref(&n(z));
        s.mul_ref(&S::ratio(1, 6))
    }

    pub fn sharp(&self, x: &AlbertElement<S>) -> AlbertElement<S> {
        let a = &self.alg;
        let l = &x.l;
        let n = |k: usize| a.norm(&x.x[k]);
        let c = |k: usize| a.conj(&x.x[k]);
        let lam = [
            l[1].mul_ref(&l[2]).sub_ref(&self.g(2, 3).mul_ref(&n(0))),
            l[2].mul_ref(&l[0]).sub_ref(&self.g(1, 3).mul_ref(&n(1))),
            l[0].mul_ref(&l[1]).sub_ref(&self.g(1, 2).mul_ref(&n(2))),
        ];
        let off = |ga: S, p: Elem<S>, lk: &S, xk: &Elem<S>| {
            compalg::sub(&compalg::scale(&ga, &p), &compalg::scale(lk, xk))
        };
        AlbertElement {
            l: lam,
            x: [
                off(self.g(2, 3), a.mul(&c(2), &c(1)), &l[0], &x.x[0]),
                off(self.g(1, 3), a.mul(&c(0), &c(2)), &l[1], &x.x[1]),
                off(self.g(1, 2), a.mul(&c(1), &c(0)), &l[2], &x.x[2]),
            ],
        }
    }

    /// Freudenthal product `X×Y = (X+Y)# − X# − Y#`.
    pub fn cross(&self, x: &AlbertElement<S>, y: &AlbertElement<S>) -> AlbertElement<S> {
        self.sharp(&x.add(y)).sub(&self.sharp(x)).sub(&self.sharp(y))
    }

    pub fn rank(&self, x: &AlbertElement<S>) -> u8 {
        if x.is_zero() {
            0
        } else if !negligible(&self.cubic_norm(x)) {
            3
        } else if !self.sharp(x).is_zero() {
            2
        } else {
            1
        }
    }

    pub fn cubic_report(&self, x: &AlbertElement<S>) -> CubicReport<S> {
        CubicReport {
            norm: self.cubic_norm(x),
            trace: self.trace(x),
            s: self.quad_s(x),
            sharp: self.sharp(x),
            rank: self.rank(x),
        }
    }

    /// `e_i`, 1-based.
    pub fn basis_e(&self, i: usize) -> Result<AlbertElement<S>, AlbertError> {
        if !(1..=3).contains(&i) {
            return Err(AlbertError::Index(i, i));
        }
        let mut l: [S; 3] = std::array::from_fn(|_| S::zero());
        l[i - 1] = S::one();
        Ok(AlbertElement::diag(l))
    }

    /// `ι_ij(a)` for `1 ≤ i < j ≤ 3`: `a` sits in the corner `(i,j)` for
    /// `(1,2)` and `(2,3)`, and in `(3,1)` for `(1,3)`.
    pub fn basis_iota(&self, i: usize, j: usize, a: &Elem<S>) -> Result<AlbertElement<S>, AlbertError> {
        let slot = match (i, j) {
            (2, 3) => 0,
            (1, 3) => 1,
            (1, 2) => 2,
            _ => return Err(AlbertError::Index(i, j)),
        };
        let mut x = AlbertElement::zero();
        x.x[slot] = a.clone();
        Ok(x)
    }

    /// `X³ − Tr(X)X² + S(X)X − N(X)𝟏`; identically zero.
    pub fn char_cubic_residual(&self, x: &AlbertElement<S>) -> AlbertElement<S> {
        let x2 = self.square(x);
        let x3 = self.jordan_mul(x, &x2);
        x3.sub(&x2.scale(&self.trace(x)))
            .add(&x.scale(&self.quad_s(x)))
            .sub(&AlbertElement::identity().scale(&self.cubic_norm(x)))
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> AlbertElement<S> {
        AlbertElement {
            l: std::array::from_fn(|_| S::from_i64(rng.gen_range(-3..=3))),
            x: std::array::from_fn(|_| sample_elem(rng)),
        }
    }

    /// Jordan multiplication operator `Y ↦ X∘Y` as a 27×27 row-major matrix.
    pub fn mult_operator(&self, x: &AlbertElement<S>) -> Vec<Vec<S>> {
        let cols: Vec<Vec<S>> =
            (0..27).map(|k| self.jordan_mul(x, &AlbertElement::unit_coord(k)).to_vec()).collect();
        (0..27).map(|r| (0..27).map(|c| cols[c][r].clone()).collect()).collect()
    }
}

#[cfg(test)]
mod tests;
