//! Veronese vectors and the incidence planes over the eight coordinate
//! algebras.
//!
//! A vector `(x₁,x₂,x₃; λ₁,λ₂,λ₃)` uses the same 27 coordinates as an
//! Albert element, so for Hurwitz planes `psi` is the identity on
//! coordinates and the Veronese conditions are exactly `X# = 0`.

mod iso;
mod scan;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::albert::{AlbertAlgebra, AlbertElement, GammaTriple};
use crate::compalg::{self, sample_elem, Algebra, Class, Elem, Family};
use crate::linalg::negligible;
use crate::scalars::Field;

pub use iso::{apply_collineation, cyclic_shift, iso_check, preserves_veronese, IsoReport};
pub use scan::{axiom_scan, JoinResult, ScanReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlaneError {
    #[error("unknown plane selector {0:?}")]
    UnknownPlane(String),
    #[error("vector is not Veronese")]
    NotVeronese,
    #[error("zero vector")]
    Zero,
    #[error("{0} needs a division plane")]
    NeedsDivision(&'static str),
    #[error("{0} needs a Hurwitz plane")]
    NeedsHurwitz(&'static str),
    #[error("{0} needs a symmetric composition plane")]
    NeedsSymmetric(&'static str),
    #[error("polarity is only defined for gamma (1,1,1)")]
    NotElliptic,
    #[error("element has nonzero sharp")]
    NotRankOne,
    #[error("points coincide")]
    SamePoint,
    #[error("{0}")]
    Parse(String),
}

/// Coordinate algebra and signs of a plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneKind {
    pub family: Family,
    pub gamma: GammaTriple,
    pub complexified: bool,
}

impl PlaneKind {
    pub fn new(family: Family, gamma: GammaTriple) -> Self {
        PlaneKind { family, gamma, complexified: false }
    }

    /// Selectors such as `O-P2`, `Os-H2`, `Oks-P2`, `OC-P2`.
    pub fn selector(&self) -> String {
        let c = if self.complexified { "C" } else { "" };
        let g = if self.gamma == GammaTriple::EUCLIDEAN { "P2" } else { "H2" };
        format!("{}{c}-{g}", self.family.short())
    }

    pub fn is_hurwitz(&self) -> bool {
        self.family.is_hurwitz()
    }

    /// The Hurwitz plane this one is identified with through Φ or pΦ.
    pub fn hurwitz_counterpart(&self) -> PlaneKind {
        PlaneKind { family: Family::of(Class::Hurwitz, self.family.is_split()), ..*self }
    }
}

impl fmt::Display for PlaneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.selector())
    }
}

impl FromStr for PlaneKind {
    type Err = PlaneError;
    fn from_str(s: &str) -> Result<Self, PlaneError> {
        let bad = || PlaneError::UnknownPlane(s.to_string());
        let (head, tail) = s.rsplit_once('-').ok_or_else(bad)?;
        let gamma = match tail {
            "P2" => GammaTriple::EUCLIDEAN,
            "H2" => GammaTriple::LORENTZIAN,
            _ => return Err(bad()),
        };
        let (head, complexified) = match head.strip_suffix('C') {
            Some(h) => (h, true),
            None => (head, false),
        };
        let family = Family::ALL.into_iter().find(|f| f.short() == head).ok_or_else(bad)?;
        Ok(PlaneKind { family, gamma, complexified })
    }
}

/// `(x₁,x₂,x₃; λ₁,λ₂,λ₃)`.
#[derive(Clone, Debug, PartialEq)]
pub struct VVector<S: Field> {
    pub x: [Elem<S>; 3],
    pub l: [S; 3],
}

impl<S: Field> VVector<S> {
    pub fn new(x: [Elem<S>; 3], l: [S; 3]) -> Self {
        VVector { x, l }
    }

    pub fn zero() -> Self {
        Self::from_albert(&AlbertElement::zero())
    }

    /// `(0,0,0; λ)` with a single 1 in position `i` (1-based).
    pub fn e(i: usize) -> Self {
        let mut l: [S; 3] = std::array::from_fn(|_| S::zero());
        l[i - 1] = S::one();
        VVector { x: std::array::from_fn(|_| compalg::zero_elem()), l }
    }

    pub fn to_albert(&self) -> AlbertElement<S> {
        AlbertElement { l: self.l.clone(), x: self.x.clone() }
    }

    pub fn from_albert(a: &AlbertElement<S>) -> Self {
        VVector { x: a.x.clone(), l: a.l.clone() }
    }

    /// The 27 coordinates, `λ` first.
    pub fn to_vec(&self) -> Vec<S> {
        self.to_albert().to_vec()
    }

    pub fn from_slice(v: &[S]) -> Self {
        Self::from_albert(&AlbertElement::from_slice(v))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_albert(&self.to_albert().scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.to_albert().is_zero()
    }
}

impl<S: Field> fmt::Display for VVector<S> {
    /// `v=(x1|x2|x3;l1, l2, l3)` with `", "` between coordinates.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[S]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "v=({}|{}|{};{})", list(&self.x[0]), list(&self.x[1]), list(&self.x[2]), list(&self.l))
    }
}

impl<S: Field + FromStr> FromStr for VVector<S> {
    type Err = PlaneError;
    fn from_str(s: &str) -> Result<Self, PlaneError> {
        let bad = |m: &str| PlaneError::Parse(format!("{m} in {s:?}"));
        let inner = s
            .trim()
            .strip_prefix("v=(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected v=(…)"))?;
        let (xs, ls) = inner.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let parse = |t: &str, n: usize| -> Result<Vec<S>, PlaneError> {
            let v: Vec<S> = t
                .split(", ")
                .map(|c| c.trim().parse::<S>().map_err(|_| bad("bad scalar")))
                .collect::<Result<_, _>>()?;
            if v.len() != n {
                return Err(bad("wrong number of coordinates"));
            }
            Ok(v)
        };
        let parts: Vec<&str> = xs.split('|').collect();
        if parts.len() != 3 {
            return Err(bad("expected three octonion blocks"));
        }
        let mut x: Vec<Elem<S>> = Vec::new();
        for p in parts {
            let v = parse(p, 8)?;
            x.push(std::array::from_fn(|k| v[k].clone()));
        }
        let l = parse(ls, 3)?;
        Ok(VVector {
            x: [x[0].clone(), x[1].clone(), x[2].clone()],
            l: std::array::from_fn(|i| l[i].clone()),
        })
    }
}

/// A point: the ray of a nonzero Veronese vector.
#[derive(Clone, Debug)]
pub struct Point<S: Field> {
    pub rep: VVector<S>,
}

/// A line: the β-orthogonal complement of a nonzero Veronese vector.
#[derive(Clone, Debug)]
pub struct Line<S: Field> {
    pub dual: VVector<S>,
}

/// Equality of rays: the 2×27 coordinate matrix has rank at most one.
pub fn same_ray<S: Field>(a: &VVector<S>, b: &VVector<S>) -> bool {
    let (u, v) = (a.to_vec(), b.to_vec());
    let Some(k) = (0..27).max_by(|&i, &j| u[i].magnitude().total_cmp(&u[j].magnitude())) else {
        return true;
    };
    if negligible(&u[k]) {
        return v.iter().all(negligible);
    }
    let tol = if S::EXACT { 0.0 } else { 1e-9 * u[k].magnitude() * v.iter().map(|c| c.magnitude()).fold(1.0, f64::max) };
    (0..27).all(|i| {
        let d = v[i].mul_ref(&u[k]).sub_ref(&u[i].mul_ref(&v[k]));
        if S::EXACT {
            d.is_zero()
        } else {
            d.magnitude() <= tol
        }
    })
}

/// A plane over the field `S`.
#[derive(Clone, Debug)]
pub struct Plane<S: Field> {
    kind: PlaneKind,
    alg: Algebra<S>,
    hurwitz: Algebra<S>,
}

impl<S: Field> Plane<S> {
    pub fn new(kind: PlaneKind) -> Self {
        Plane {
            kind,
            alg: Algebra::of(kind.family),
            hurwitz: Algebra::of(kind.hurwitz_counterpart().family),
        }
    }

    pub fn kind(&self) -> PlaneKind {
        self.kind
    }

    pub fn algebra(&self) -> &Algebra<S> {
        &self.alg
    }

    fn g(&self, a: usize, b: usize) -> S {
        S::from_i64(self.kind.gamma.pair(a, b) as i64)
    }

    /// `γ` factor attached to index `ν` (0-based): `γ_{ν+1}γ_{ν+2}`.
    fn g_nu(&self, nu: usize) -> S {
        match nu {
            0 => self.g(2, 3),
            1 => self.g(1, 3),
            _ => self.g(1, 2),
        }
    }

    /// Left side minus right side of the product condition for `ν`.
    fn product_residual(&self, v: &VVector<S>, nu: usize) -> Elem<S> {
        let a = &self.alg;
        let (p, q) = (&v.x[(nu + 1) % 3], &v.x[(nu + 2) % 3]);
        let rhs = compalg::scale(&self.g_nu(nu), &a.mul(p, q));
        let lhs = if self.kind.is_hurwitz() {
            compalg::scale(&v.l[nu], &a.conj(&v.x[nu]))
        } else {
            compalg::scale(&v.l[nu], &v.x[nu])
        };
        compalg::sub(&lhs, &rhs)
    }

    fn norm_residual(&self, v: &VVector<S>, nu: usize) -> S {
        self.g_nu(nu)
            .mul_ref(&self.alg.norm(&v.x[nu]))
            .sub_ref(&v.l[(nu + 1) % 3].mul_ref(&v.l[(nu + 2) % 3]))
    }

    /// All 27 condition residuals: three product conditions, three norms.
    pub fn conditions(&self, v: &VVector<S>) -> Vec<S> {
        let mut out = Vec::with_capacity(27);
        for nu in 0..3 {
            out.extend(self.product_residual(v, nu));
        }
        for nu in 0..3 {
            out.push(self.norm_residual(v, nu));
        }
        out
    }

    /// Largest residual relative to the square of the vector's scale.
    pub fn veronese_residual(&self, v: &VVector<S>) -> f64 {
        let scale = v.to_vec().iter().map(|c| c.magnitude()).fold(1.0, f64::max);
        self.conditions(v).iter().map(|c| c.magnitude()).fold(0.0, f64::max) / (scale * scale)
    }

    pub fn is_veronese(&self, v: &VVector<S>) -> bool {
        if S::EXACT {
            self.conditions(v).iter().all(|c| c.is_zero())
        } else {
            self.veronese_residual(v) <= 1e-9
        }
    }

    /// The three conditions of the reduced system: the product condition
    /// for `ν = 1` and the norm conditions for `ν = 2, 3`.
    ///
    /// Equivalent to [`Plane::is_veronese`] when `λ₁ ≠ 0`.
    pub fn reduced_is_veronese(&self, v: &VVector<S>) -> Result<bool, PlaneError> {
        if self.kind.family.is_split() || self.kind.complexified || S::COMPLEX {
            return Err(PlaneError::NeedsDivision("reduced_is_veronese"));
        }
        let ok = compalg::is_zero(&self.product_residual(v, 0))
            && negligible(&self.norm_residual(v, 1))
            && negligible(&self.norm_residual(v, 2));
        Ok(ok)
    }

    /// `β(v,w) = Σ λ_ν μ_ν + Σ γ_{ν+1}γ_{ν+2} ⟨x_ν, y_ν⟩`.
    pub fn beta(&self, v: &VVector<S>, w: &VVector<S>) -> S {
        let mut s = S::zero();
        for nu in 0..3 {
            s = s
                .add_ref(&v.l[nu].mul_ref(&w.l[nu]))
                .add_ref(&self.g_nu(nu).mul_ref(&self.alg.polar(&v.x[nu], &w.x[nu])));
        }
        s
    }

    pub fn point(&self, v: VVector<S>) -> Result<Point<S>, PlaneError> {
        if v.is_zero() {
            return Err(PlaneError::Zero);
        }
        if !self.is_veronese(&v) {
            return Err(PlaneError::NotVeronese);
        }
        Ok(Point { rep: v })
    }

    pub fn line(&self, v: VVector<S>) -> Result<Line<S>, PlaneError> {
        Ok(Line { dual: self.point(v)?.rep })
    }

    pub fn incident(&self, p: &Point<S>, l: &Line<S>) -> bool {
        negligible(&self.beta(&p.rep, &l.dual))
    }

    /// Display representative: `Σλ = 1` when possible, else the first
    /// nonzero coordinate (`λ` first) equal to 1.
    pub fn canonical(&self, v: &VVector<S>) -> VVector<S> {
        let t = v.l[0].add_ref(&v.l[1]).add_ref(&v.l[2]);
        let pivot = if !negligible(&t) {
            Some(t)
        } else {
            v.to_vec().into_iter().find(|c| !negligible(c))
        };
        match pivot.and_then(|p| p.inv()) {
            Some(inv) => v.scale(&inv),
            None => v.clone(),
        }
    }

    pub fn polarity(&self, p: &Point<S>) -> Result<Line<S>, PlaneError> {
        if self.kind.gamma != GammaTriple::EUCLIDEAN {
            return Err(PlaneError::NotElliptic);
        }
        Ok(Line { dual: p.rep.clone() })
    }

    pub fn polarity_inv(&self, l: &Line<S>) -> Result<Point<S>, PlaneError> {
        if self.kind.gamma != GammaTriple::EUCLIDEAN {
            return Err(PlaneError::NotElliptic);
        }
        Ok(Point { rep: l.dual.clone() })
    }

    /// The Albert algebra whose rank-one elements are this plane's points.
    pub fn albert(&self) -> AlbertAlgebra<S> {
        AlbertAlgebra::new(self.kind.hurwitz_counterpart().family, self.kind.gamma)
            .expect("counterpart is Hurwitz")
    }

    pub fn psi(&self, v: &VVector<S>) -> Result<AlbertElement<S>, PlaneError> {
        if !self.kind.is_hurwitz() {
            return Err(PlaneError::NeedsHurwitz("psi"));
        }
        Ok(v.to_albert())
    }

    pub fn psi_inv(&self, x: &AlbertElement<S>) -> Result<VVector<S>, PlaneError> {
        if !self.kind.is_hurwitz() {
            return Err(PlaneError::NeedsHurwitz("psi_inv"));
        }
        if !self.albert().sharp(x).is_zero() {
            return Err(PlaneError::NotRankOne);
        }
        Ok(VVector::from_albert(x))
    }

    /// Chart vector built from `x, y`:
    /// `(x, y, γ₁γ₂·z; γ₁γ₃ n(y), γ₂γ₃ n(x), 1)` with `z = conj(xy)` for
    /// Hurwitz planes and `z = x∘y` otherwise.
    pub fn chart(&self, x: &Elem<S>, y: &Elem<S>) -> VVector<S> {
        let a = &self.alg;
        let xy = a.mul(x, y);
        let third = if self.kind.is_hurwitz() { a.conj(&xy) } else { xy };
        VVector {
            x: [x.clone(), y.clone(), compalg::scale(&self.g(1, 2), &third)],
            l: [self.g(1, 3).mul_ref(&a.norm(y)), self.g(2, 3).mul_ref(&a.norm(x)), S::one()],
        }
    }

    /// `(0,0,x; n(x),1,0)`.
    pub fn chart_at_infinity(&self, x: &Elem<S>) -> VVector<S> {
        VVector {
            x: [compalg::zero_elem(), compalg::zero_elem(), x.clone()],
            l: [self.alg.norm(x), S::one(), S::zero()],
        }
    }

    /// Random Veronese vector from the main chart with small integer data.
    pub fn sample_chart<R: Rng>(&self, rng: &mut R) -> VVector<S> {
        let x = sample_elem(rng);
        let y = sample_elem(rng);
        self.chart(&x, &y)
    }

    /// Map to the Hurwitz counterpart: identity, Φ or pΦ.
    pub fn to_hurwitz(&self, v: &VVector<S>) -> VVector<S> {
        let h = &self.hurwitz;
        match self.kind.family.class() {
            Class::Hurwitz => v.clone(),
            Class::Para => VVector { x: std::array::from_fn(|n| h.conj(&v.x[n])), l: v.l.clone() },
            Class::Okubo => VVector {
                x: [h.conj(&v.x[0]), h.tau(&h.conj(&v.x[1])), h.tau2(&h.conj(&v.x[2]))],
                l: v.l.clone(),
            },
        }
    }

    /// Inverse of [`Plane::to_hurwitz`].
    pub fn from_hurwitz(&self, v: &VVector<S>) -> VVector<S> {
        let h = &self.hurwitz;
        match self.kind.family.class() {
            Class::Hurwitz => v.clone(),
            Class::Para => VVector { x: std::array::from_fn(|n| h.conj(&v.x[n])), l: v.l.clone() },
            Class::Okubo => VVector {
                x: [h.conj(&v.x[0]), h.conj(&h.tau2(&v.x[1])), h.conj(&h.tau(&v.x[2]))],
                l: v.l.clone(),
            },
        }
    }

    /// Φ from an Okubo plane to its octonion counterpart.
    pub fn phi_iso(&self, v: &VVector<S>) -> Result<VVector<S>, PlaneError> {
        if self.kind.family.class() != Class::Okubo {
            return Err(PlaneError::NeedsSymmetric("phi_iso"));
        }
        self.checked_to_hurwitz(v)
    }

    /// pΦ from a para-octonion plane to its octonion counterpart.
    pub fn pphi_iso(&self, v: &VVector<S>) -> Result<VVector<S>, PlaneError> {
        if self.kind.family.class() != Class::Para {
            return Err(PlaneError::NeedsSymmetric("pphi_iso"));
        }
        self.checked_to_hurwitz(v)
    }

    fn checked_to_hurwitz(&self, v: &VVector<S>) -> Result<VVector<S>, PlaneError> {
        if !self.is_veronese(v) {
            return Err(PlaneError::NotVeronese);
        }
        Ok(self.to_hurwitz(v))
    }
}
