//! Derivation algebras of the eight-dimensional algebras and the Lie
//! algebras `f₄` (derivations of an Albert algebra) and `e₆` (operators
//! killing the cubic norm), computed as kernels of linear systems and
//! certified by dimension, closure and Killing signature.

pub mod equations;
pub mod exact;
pub mod float;

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_traits::Zero;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::albert::{AlbertAlgebra, AlbertElement, JordanTarget};
use crate::compalg::{Algebra, Family};
use crate::planes::{Plane, PlaneKind, VVector};
use crate::scalars::{CQSqrt3, Field, QSqrt3};

use equations::SparseRow;
use exact::SpanBasis;
use float::{FloatScalar, KernelSweep};

pub const CERT_SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_TOLERANCES: [f64; 3] = [1e-6, 1e-8, 1e-10];
pub const CLOSURE_TOL: f64 = 1e-8;
pub const KILLING_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LieError {
    #[error("commutator of basis elements {a} and {b} leaves the span")]
    NotClosed { a: usize, b: usize },
    #[error("Killing form is degenerate: {0}")]
    DegenerateKilling(Signature),
    #[error("series order {0} is below the minimum of 8")]
    SeriesOrder(usize),
    #[error("not a derivation (residual {0:e})")]
    NotDerivation(f64),
    #[error("unknown Lie target {0:?}")]
    UnknownTarget(String),
    #[error("{0} has no real form to certify here")]
    ComplexTarget(String),
    #[error("empty tolerance list")]
    NoTolerances,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    /// `pos − neg`; compact forms are negative definite.
    pub fn character(&self) -> i64 {
        self.pos as i64 - self.neg as i64
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(+{}, -{}, 0:{})", self.pos, self.neg, self.zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieTarget {
    Der(Family),
    F4(JordanTarget),
    E6(JordanTarget),
}

impl LieTarget {
    pub const NAMED: [LieTarget; 16] = [
        LieTarget::Der(Family::Octonion),
        LieTarget::Der(Family::SplitOctonion),
        LieTarget::Der(Family::ParaOctonion),
        LieTarget::Der(Family::SplitParaOctonion),
        LieTarget::Der(Family::Okubo),
        LieTarget::Der(Family::SplitOkubo),
        LieTarget::F4(JordanTarget::J3O),
        LieTarget::F4(JordanTarget::J21O),
        LieTarget::F4(JordanTarget::J3Os),
        LieTarget::F4(JordanTarget::J21Os),
        LieTarget::F4(JordanTarget::J3CO),
        LieTarget::E6(JordanTarget::J3O),
        LieTarget::E6(JordanTarget::J21O),
        LieTarget::E6(JordanTarget::J3Os),
        LieTarget::E6(JordanTarget::J21Os),
        LieTarget::E6(JordanTarget::J3CO),
    ];

    pub fn selector(&self) -> String {
        match self {
            LieTarget::Der(f) => format!("der:{}", f.short()),
            LieTarget::F4(j) => format!("f4:{}", j.selector()),
            LieTarget::E6(j) => format!("e6:{}", j.selector()),
        }
    }

    pub fn complexified(&self) -> bool {
        match self {
            LieTarget::Der(_) => false,
            LieTarget::F4(j) | LieTarget::E6(j) => j.complexified(),
        }
    }

    pub fn module_dim(&self) -> usize {
        match self {
            LieTarget::Der(_) => 8,
            _ => 27,
        }
    }

    /// Size of the formal system: one equation per basis pair (ordered for
    /// the 8-dimensional algebras, unordered for the commutative Jordan
    /// product) and output coordinate, or one per cubic monomial.
    pub fn formal_equations(&self) -> usize {
        match self {
            LieTarget::Der(_) => 8 * 8 * 8,
            LieTarget::F4(_) => 27 * 28 / 2 * 27,
            LieTarget::E6(_) => 27 * 28 * 29 / 6,
        }
    }

    pub fn expected_dim(&self) -> usize {
        match self {
            LieTarget::Der(f) if f.class() == crate::compalg::Class::Okubo => 8,
            LieTarget::Der(_) => 14,
            LieTarget::F4(_) => 52,
            LieTarget::E6(_) => 78,
        }
    }

    /// Expected `pos − neg` of the Killing form, where known.
    pub fn expected_character(&self) -> Option<i64> {
        use JordanTarget::*;
        match self {
            LieTarget::Der(f) => match f {
                Family::Octonion | Family::ParaOctonion => Some(-14),
                Family::SplitOctonion | Family::SplitParaOctonion => Some(2),
                Family::Okubo => Some(-8),
                Family::SplitOkubo => None,
            },
            LieTarget::F4(j) => match j {
                J3O => Some(-52),
                J21O => Some(-20),
                J3Os | J21Os => Some(4),
                J3CO => None,
            },
            LieTarget::E6(j) => match j {
                J3O | J21O => Some(-26),
                J3Os | J21Os => Some(6),
                J3CO => None,
            },
        }
    }
}

impl fmt::Display for LieTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.selector())
    }
}

impl FromStr for LieTarget {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self, LieError> {
        let bad = || LieError::UnknownTarget(s.to_string());
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        match head {
            "der" => Ok(LieTarget::Der(tail.parse().map_err(|_| bad())?)),
            "f4" => Ok(LieTarget::F4(tail.parse().map_err(|_| bad())?)),
            "e6" => Ok(LieTarget::E6(tail.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

/// Exact rows for the target's defining system.
pub fn exact_equations(target: LieTarget) -> Vec<SparseRow<QSqrt3>> {
    match target {
        LieTarget::Der(f) => equations::derivation_equations(&Algebra::<QSqrt3>::of(f)),
        LieTarget::F4(j) => equations::jordan_derivation_equations(&AlbertAlgebra::<QSqrt3>::of(j)),
        LieTarget::E6(j) => equations::norm_invariance_equations(&AlbertAlgebra::<QSqrt3>::of(j)),
    }
}

/// Rows over ℚ(√3)(i) for the complexified targets.
pub fn complex_equations(target: LieTarget) -> Vec<SparseRow<CQSqrt3>> {
    match target {
        LieTarget::Der(f) => equations::derivation_equations(&Algebra::<CQSqrt3>::of(f)),
        LieTarget::F4(j) => equations::jordan_derivation_equations(&AlbertAlgebra::<CQSqrt3>::of(j)),
        LieTarget::E6(j) => equations::norm_invariance_equations(&AlbertAlgebra::<CQSqrt3>::of(j)),
    }
}

/// Float result of one target: kernel sweep plus closure.
#[derive(Clone, Debug)]
pub struct LieBasis<T: FloatScalar> {
    pub target: LieTarget,
    pub module_dim: usize,
    pub equations: usize,
    pub kernel: KernelSweep<T>,
    pub closure: float::Closure<T>,
}

impl<T: FloatScalar> LieBasis<T> {
    pub fn operators(&self) -> Vec<DMatrix<T>> {
        self.kernel.basis.iter().map(|b| float::to_matrix(b, self.module_dim)).collect()
    }
}

pub fn lie_basis<T: FloatScalar, S: Field>(
    target: LieTarget,
    rows: &[SparseRow<S>],
    tolerances: &[f64],
) -> LieBasis<T> {
    let n = target.module_dim();
    let rows_f = float::convert_rows::<S, T>(rows);
    let kernel = float::kernel_sweep(&rows_f, n * n, tolerances);
    let closure = float::closure_check(&kernel.basis, n);
    LieBasis { target, module_dim: n, equations: rows.len(), kernel, closure }
}

/// Real float basis of a real target.
pub fn real_basis(target: LieTarget, tolerances: &[f64]) -> Result<LieBasis<f64>, LieError> {
    if target.complexified() {
        return Err(LieError::ComplexTarget(target.selector()));
    }
    Ok(lie_basis(target, &exact_equations(target), tolerances))
}

/// Exact derivation algebra of an eight-dimensional algebra.
#[derive(Clone, Debug)]
pub struct ExactDerivations {
    pub basis: SpanBasis<QSqrt3>,
    pub structure: Vec<Vec<Vec<QSqrt3>>>,
    pub signature: Signature,
}

pub fn exact_derivations(family: Family) -> Result<ExactDerivations, LieError> {
    let rows = equations::derivation_equations(&Algebra::<QSqrt3>::of(family));
    let basis = SpanBasis::kernel(equations::densify(&rows, 64), 8);
    let structure = exact::structure_constants(&basis)?;
    let signature = exact::signature(&exact::killing_form(&structure));
    Ok(ExactDerivations { basis, structure, signature })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub target: String,
    pub field: String,
    pub module_dim: usize,
    pub equations: usize,
    /// Equations left after dropping those with no nonzero coefficient.
    pub nonzero_equations: usize,
    pub tolerances: Vec<f64>,
    pub kernel_dims: Vec<usize>,
    pub stable: bool,
    pub dim: usize,
    pub expected_dim: usize,
    pub exact_dim: Option<usize>,
    pub kernel_edge: f64,
    pub range_edge: f64,
    pub closure_residual: f64,
    pub killing_signature: Option<Signature>,
    pub exact_signature: Option<Signature>,
    pub character: Option<i64>,
    pub expected_character: Option<i64>,
    pub pass: bool,
    pub failures: Vec<String>,
}

impl Certificate {
    /// Fields that do not depend on floating-point rounding, as JSON; this
    /// is what the stored golden certificates hold.
    pub fn stable_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        let m = v.as_object_mut().expect("object");
        for k in ["kernel_edge", "range_edge", "closure_residual"] {
            m.remove(k);
        }
        v
    }
}

fn finish<T: FloatScalar>(
    target: LieTarget,
    b: &LieBasis<T>,
    exact: Option<&ExactDerivations>,
) -> Certificate {
    let mut failures = Vec::new();
    let dim = b.kernel.dim();
    if !b.kernel.stable() {
        failures.push(format!("kernel dimension varies with tolerance: {:?}", b.kernel.dims));
    }
    if dim != target.expected_dim() {
        failures.push(format!("dimension {dim}, expected {}", target.expected_dim()));
    }
    if let Some(e) = exact {
        if e.basis.dim() != dim {
            failures.push(format!("exact dimension {} differs from float {dim}", e.basis.dim()));
        }
    }
    if b.closure.residual > CLOSURE_TOL {
        failures.push(format!("closure residual {:e}", b.closure.residual));
    }
    let mut killing = None;
    if !T::is_complex_type() {
        let k = float::killing_form(&b.closure.structure).map(|z| z.real());
        match float::killing_signature(&k, KILLING_REL_TOL) {
            Ok(s) => killing = Some(s),
            Err(e) => failures.push(e.to_string()),
        }
    }
    let exact_signature = exact.map(|e| e.signature);
    let character = exact_signature.or(killing).map(|s| s.character());
    if let (Some(s), Some(k)) = (exact_signature, killing) {
        if s != k {
            failures.push(format!("exact signature {s} differs from float {k}"));
        }
    }
    if let Some(want) = target.expected_character() {
        if character != Some(want) {
            failures.push(format!("character {character:?}, expected {want}"));
        }
    }
    Certificate {
        schema_version: CERT_SCHEMA_VERSION,
        target: target.selector(),
        field: if T::is_complex_type() { "complex" } else { "real" }.into(),
        module_dim: b.module_dim,
        equations: target.formal_equations(),
        nonzero_equations: b.equations,
        tolerances: b.kernel.tolerances.clone(),
        kernel_dims: b.kernel.dims.clone(),
        stable: b.kernel.stable(),
        dim,
        expected_dim: target.expected_dim(),
        exact_dim: exact.map(|e| e.basis.dim()),
        kernel_edge: b.kernel.kernel_edge,
        range_edge: b.kernel.range_edge,
        closure_residual: b.closure.residual,
        killing_signature: killing,
        exact_signature,
        character,
        expected_character: target.expected_character(),
        pass: failures.is_empty(),
        failures,
    }
}

trait IsComplex {
    fn is_complex_type() -> bool;
}

impl<T: FloatScalar> IsComplex for T {
    fn is_complex_type() -> bool {
        T::from_c64(Complex64::new(0.0, 1.0)).imaginary() != 0.0
    }
}

/// Compute and check the certificate of one target.
pub fn certify(target: LieTarget, tolerances: &[f64]) -> Result<Certificate, LieError> {
    if tolerances.is_empty() {
        return Err(LieError::NoTolerances);
    }
    if target.complexified() {
        let b = lie_basis::<Complex64, _>(target, &complex_equations(target), tolerances);
        return Ok(finish(target, &b, None));
    }
    let b = real_basis(target, tolerances)?;
    let ex = match target {
        LieTarget::Der(f) => Some(exact_derivations(f)?),
        _ => None,
    };
    Ok(finish(target, &b, ex.as_ref()))
}

/// `D` acting on each off-diagonal block of a 27-dimensional Albert vector,
/// zero on the diagonal. `d` is a flattened 8×8 operator.
fn lift_blocks<S: Field>(d: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); 27 * 27];
    for block in 0..3 {
        let off = 3 + 8 * block;
        for r in 0..8 {
            for c in 0..8 {
                out[(off + r) * 27 + off + c] = d[r * 8 + c].clone();
            }
        }
    }
    out
}

/// Lift a derivation of the coordinate algebra to the Albert algebra.
/// Rejects `d` unless it solves the derivation equations of `alg` (exactly,
/// or to `1e-9` relative over floats).
pub fn lift_algebra_derivation<S: Field>(alg: &Algebra<S>, d: &[S]) -> Result<Vec<S>, LieError> {
    let vals = equations::apply_rows(&equations::derivation_equations(alg), d);
    let scale = d.iter().map(|x| x.magnitude()).fold(0.0f64, f64::max).max(f64::MIN_POSITIVE);
    let worst = vals.iter().map(|x| x.magnitude()).fold(0.0f64, f64::max) / scale;
    let ok = if S::EXACT { vals.iter().all(|x| x.is_zero()) } else { worst <= 1e-9 };
    if !ok {
        return Err(LieError::NotDerivation(worst));
    }
    Ok(lift_blocks(d))
}

/// Exact cross-check of the 27-dimensional certificates.
#[derive(Clone, Debug, Serialize)]
pub struct ExactBounds {
    pub target: String,
    /// Rank of `{[L_a, L_b]}` over the coordinate basis.
    pub inner_rank: usize,
    pub inner_are_derivations: bool,
    pub lifted_count: usize,
    pub lifts_are_derivations: bool,
    /// Rank after adjoining the lifted algebra derivations.
    pub joint_rank: usize,
    /// Rank after adjoining the 26 traceless multiplication operators.
    pub with_traceless_mult: usize,
}

pub fn multiplication_operators(j: &AlbertAlgebra<QSqrt3>) -> Vec<Vec<QSqrt3>> {
    (0..27).map(|k| j.mult_operator(&AlbertElement::unit_coord(k)).concat()).collect()
}

/// `L_X` for a basis of the trace-zero subspace.
pub fn traceless_mult_operators(j: &AlbertAlgebra<QSqrt3>) -> Vec<Vec<QSqrt3>> {
    let one = QSqrt3::int(1);
    let mut xs = vec![
        AlbertElement::diag([one.clone(), -one.clone(), QSqrt3::int(0)]),
        AlbertElement::diag([QSqrt3::int(0), one.clone(), -one]),
    ];
    xs.extend((3..27).map(AlbertElement::unit_coord));
    xs.iter().map(|x| j.mult_operator(x).concat()).collect()
}

pub fn exact_bounds(jt: JordanTarget) -> Result<ExactBounds, LieError> {
    if jt.complexified() {
        return Err(LieError::ComplexTarget(jt.selector().into()));
    }
    let j = AlbertAlgebra::<QSqrt3>::of(jt);
    let rows = equations::jordan_derivation_equations(&j);
    let l = multiplication_operators(&j);
    let mut inner = Vec::new();
    for a in 0..27 {
        for b in a + 1..27 {
            let c = exact::commutator(&l[a], &l[b], 27);
            if c.iter().any(|x| !x.is_zero()) {
                inner.push(c);
            }
        }
    }
    let span = SpanBasis::span(inner, 27);
    let zero = |v: &Vec<QSqrt3>| equations::apply_rows(&rows, v).iter().all(|x| x.is_zero());
    let inner_are_derivations = span.vecs.iter().all(zero);
    let der = exact_derivations(jt.family())?;
    let lifts = der
        .basis
        .vecs
        .iter()
        .map(|d| lift_algebra_derivation(j.algebra(), d))
        .collect::<Result<Vec<_>, _>>()?;
    let lifts_are_derivations = lifts.iter().all(zero);
    let joint = SpanBasis::span(span.vecs.iter().cloned().chain(lifts.iter().cloned()).collect(), 27);
    let cs = SpanBasis::span(span.vecs.iter().cloned().chain(traceless_mult_operators(&j)).collect(), 27);
    Ok(ExactBounds {
        target: jt.selector().into(),
        inner_rank: span.dim(),
        inner_are_derivations,
        lifted_count: lifts.len(),
        lifts_are_derivations,
        joint_rank: joint.dim(),
        with_traceless_mult: cs.dim(),
    })
}

/// Float and exact containment certificates for one real Albert algebra.
#[derive(Clone, Debug, Serialize)]
pub struct Inclusions {
    pub exact: ExactBounds,
    pub f4_dim: usize,
    /// Largest norm-invariance residual over the derivation basis.
    pub f4_in_e6_residual: f64,
    pub f4_in_e6_count: usize,
    /// Largest `|Tr(D e_k)|` over the derivation basis.
    pub trace_residual: f64,
    /// Largest derivation residual over the lifted algebra derivations.
    pub lifted_residual: f64,
    /// Float rank of the derivation basis together with the traceless
    /// multiplication operators.
    pub chevalley_schafer_rank: usize,
}

pub const INCLUSION_TOL: f64 = 1e-9;

impl Inclusions {
    pub fn ok(&self) -> bool {
        let e = &self.exact;
        e.inner_rank == 52
            && e.inner_are_derivations
            && e.lifts_are_derivations
            && e.joint_rank == 52
            && e.with_traceless_mult == 78
            && self.f4_dim == 52
            && self.f4_in_e6_count == self.f4_dim
            && self.trace_residual <= INCLUSION_TOL
            && self.lifted_residual <= INCLUSION_TOL
            && self.chevalley_schafer_rank == 78
    }
}

pub fn inclusions(jt: JordanTarget, tolerances: &[f64]) -> Result<Inclusions, LieError> {
    let exact = exact_bounds(jt)?;
    let f4 = real_basis(LieTarget::F4(jt), tolerances)?;
    let j = AlbertAlgebra::<QSqrt3>::of(jt);
    let e6_rows = float::convert_rows::<_, f64>(&equations::norm_invariance_equations(&j));
    let f4_rows = float::convert_rows::<_, f64>(&equations::jordan_derivation_equations(&j));
    let res: Vec<f64> = f4.kernel.basis.iter().map(|b| float::row_residual(&e6_rows, b.as_slice())).collect();
    let trace_residual = f4
        .kernel
        .basis
        .iter()
        .flat_map(|b| (0..27).map(move |k| (b[k] + b[27 + k] + b[54 + k]).abs()))
        .fold(0.0, f64::max);
    let der = exact_derivations(jt.family())?;
    let mut lifted_residual = 0.0f64;
    for d in &der.basis.vecs {
        let lift: Vec<f64> = lift_algebra_derivation(j.algebra(), d)?.iter().map(|x| x.to_f64()).collect();
        lifted_residual = lifted_residual.max(float::row_residual(&f4_rows, &lift));
    }
    let mut cs = f4.kernel.basis.clone();
    cs.extend(
        traceless_mult_operators(&j).iter().map(|v| DVector::from_iterator(729, v.iter().map(|x| x.to_f64()))),
    );
    Ok(Inclusions {
        exact,
        f4_dim: f4.kernel.dim(),
        f4_in_e6_residual: res.iter().copied().fold(0.0, f64::max),
        f4_in_e6_count: res.iter().filter(|r| **r <= INCLUSION_TOL).count(),
        trace_residual,
        lifted_residual,
        chevalley_schafer_rank: float_rank(&cs, 1e-8),
    })
}

/// Rank of float operators stacked as rows, by singular values above
/// `rel_tol` times the largest.
pub fn float_rank(vectors: &[DVector<f64>], rel_tol: f64) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let m = DMatrix::from_columns(vectors);
    let sv = m.singular_values();
    let top = sv.iter().fold(0.0f64, |a, b| a.max(*b));
    sv.iter().filter(|s| **s > rel_tol * top).count()
}

/// Largest relative row residual over a set of flattened operators.
pub fn worst_residual<T: FloatScalar>(rows: &[SparseRow<T>], vectors: &[DVector<T>]) -> f64 {
    vectors.iter().map(|v| float::row_residual(rows, v.as_slice())).fold(0.0, f64::max)
}

/// How far `exp(tD)` is from an automorphism on seeded samples.
#[derive(Clone, Debug, Serialize)]
pub struct ExpReport {
    pub operators: usize,
    pub t: f64,
    pub order: usize,
    pub product: f64,
    pub trace: f64,
    pub norm: f64,
    pub veronese: f64,
}

fn apply(m: &DMatrix<f64>, x: &AlbertElement<f64>) -> AlbertElement<f64> {
    let v = m * DVector::from_vec(x.to_vec());
    AlbertElement::from_slice(v.as_slice())
}

/// Random unit combination of the basis operators.
pub fn sample_operator<R: Rng>(ops: &[DMatrix<f64>], rng: &mut R) -> DMatrix<f64> {
    let n = ops[0].nrows();
    let mut d = DMatrix::zeros(n, n);
    for o in ops {
        d += o * rng.gen_range(-1.0..1.0);
    }
    let s = d.norm();
    d / s
}

/// Apply `exp(tD)` for `count` sampled `D` in the span of `ops` and record
/// the worst defects: Jordan product, trace, cubic norm and rank-one-ness of
/// chart points.
pub fn exp_report(
    jt: JordanTarget,
    ops: &[DMatrix<f64>],
    count: usize,
    t: f64,
    order: usize,
    seed: u64,
) -> Result<ExpReport, LieError> {
    let j = AlbertAlgebra::<f64>::of(jt);
    let plane = Plane::<f64>::new(PlaneKind { family: jt.family(), gamma: jt.gamma(), complexified: false });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = ExpReport { operators: count, t, order, product: 0.0, trace: 0.0, norm: 0.0, veronese: 0.0 };
    for _ in 0..count {
        let d = sample_operator(ops, &mut rng);
        let g = float::exp_operator(&d, t, order)?;
        for _ in 0..4 {
            let x = j.sample(&mut rng);
            let y = j.sample(&mut rng);
            let lhs = apply(&g, &j.jordan_mul(&x, &y));
            let rhs = j.jordan_mul(&apply(&g, &x), &apply(&g, &y));
            let scale = x.max_abs() * y.max_abs();
            r.product = r.product.max(lhs.sub(&rhs).max_abs() / scale);
            let tx = j.trace(&x);
            r.trace = r.trace.max((j.trace(&apply(&g, &x)) - tx).abs() / x.max_abs());
            let nx = j.cubic_norm(&x);
            r.norm = r.norm.max((j.cubic_norm(&apply(&g, &x)) - nx).abs() / x.max_abs().powi(3));
            let v = plane.sample_chart(&mut rng);
            let w = VVector::from_albert(&apply(&g, &v.to_albert()));
            r.veronese = r.veronese.max(plane.veronese_residual(&w));
        }
    }
    Ok(r)
}
