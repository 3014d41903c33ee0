//! Joins, meets and the projective-axiom scan.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::compalg::{self, sample_elem, Elem};
use crate::linalg::negligible;
use crate::scalars::Field;

use super::{same_ray, Line, Plane, PlaneError, Point, VVector};

/// Outcome of a join or meet.
#[derive(Clone, Debug)]
pub enum JoinResult<T> {
    Unique(T),
    /// The Freudenthal product vanishes; `witnesses` are distinct objects
    /// incident with both inputs.
    Degenerate { witnesses: Vec<T> },
}

impl<S: Field> Plane<S> {
    /// Veronese vectors β-orthogonal to both `a` and `b`.
    fn connect(&self, a: &VVector<S>, b: &VVector<S>) -> Result<JoinResult<VVector<S>>, PlaneError> {
        if same_ray(a, b) {
            return Err(PlaneError::SamePoint);
        }
        let j = self.albert();
        let (ha, hb) = (self.to_hurwitz(a).to_albert(), self.to_hurwitz(b).to_albert());
        let on_both = |w: &VVector<S>| negligible(&self.beta(a, w)) && negligible(&self.beta(b, w));
        let c = j.cross(&ha, &hb);
        if !c.is_zero() && j.sharp(&c).is_zero() {
            let w = self.canonical(&self.from_hurwitz(&VVector::from_albert(&c)));
            if on_both(&w) {
                return Ok(JoinResult::Unique(w));
            }
        }
        // X×Y = 0 makes N(X,Y,Z) vanish for every Z, so each rank-one X×Z
        // is incident with both points.
        let mut probes: Vec<VVector<S>> = (1..=3).map(VVector::e).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let hp = Plane::<S>::new(self.kind.hurwitz_counterpart());
        probes.extend((0..24).map(|_| hp.sample_chart(&mut rng)));
        let mut witnesses: Vec<VVector<S>> = Vec::new();
        for z in &probes {
            for h in [&ha, &hb] {
                let w = j.cross(h, &z.to_albert());
                if w.is_zero() || !j.sharp(&w).is_zero() {
                    continue;
                }
                let w = self.canonical(&self.from_hurwitz(&VVector::from_albert(&w)));
                if on_both(&w) && !witnesses.iter().any(|u| same_ray(u, &w)) {
                    witnesses.push(w);
                }
            }
            if witnesses.len() >= 3 {
                break;
            }
        }
        Ok(JoinResult::Degenerate { witnesses })
    }

    pub fn join(&self, p: &Point<S>, q: &Point<S>) -> Result<JoinResult<Line<S>>, PlaneError> {
        Ok(match self.connect(&p.rep, &q.rep)? {
            JoinResult::Unique(w) => JoinResult::Unique(Line { dual: w }),
            JoinResult::Degenerate { witnesses } => JoinResult::Degenerate {
                witnesses: witnesses.into_iter().map(|dual| Line { dual }).collect(),
            },
        })
    }

    /// Dual of [`Plane::join`]: incidence is symmetric in β.
    pub fn meet(&self, l: &Line<S>, m: &Line<S>) -> Result<JoinResult<Point<S>>, PlaneError> {
        Ok(match self.connect(&l.dual, &m.dual)? {
            JoinResult::Unique(w) => JoinResult::Unique(Point { rep: w }),
            JoinResult::Degenerate { witnesses } => JoinResult::Degenerate {
                witnesses: witnesses.into_iter().map(|rep| Point { rep }).collect(),
            },
        })
    }

    /// `(a,0,0; 0,1,0)` for a nonzero isotropic `a`, if one turns up.
    fn isotropic_neighbor<R: rand::Rng>(&self, rng: &mut R) -> Option<VVector<S>> {
        for _ in 0..64 {
            let a: Elem<S> = sample_elem(rng);
            if !compalg::is_zero(&a) && negligible(&self.algebra().norm(&a)) {
                let mut v = VVector::e(2);
                v.x[0] = a;
                return Some(v);
            }
        }
        None
    }
}

#[derive(Clone, Debug)]
pub struct Violation<S: Field> {
    pub p: VVector<S>,
    pub q: VVector<S>,
    pub witness_lines: Vec<VVector<S>>,
}

#[derive(Clone, Debug)]
pub struct ScanReport<S: Field> {
    pub plane: String,
    pub samples: usize,
    pub seed: u64,
    pub pairs: usize,
    pub unique_joins: usize,
    pub violation_count: usize,
    /// The first few violations in sample order.
    pub violations: Vec<Violation<S>>,
    pub quadrangle: Vec<VVector<S>>,
    pub quadrangle_ok: bool,
}

impl<S: Field> ScanReport<S> {
    pub fn to_json(&self) -> serde_json::Value {
        let s = |v: &VVector<S>| v.to_string();
        json!({
            "plane": self.plane,
            "samples": self.samples,
            "seed": self.seed,
            "pairs": self.pairs,
            "unique_joins": self.unique_joins,
            "violation_count": self.violation_count,
            "violations": self.violations.iter().map(|v| json!({
                "p": s(&v.p),
                "q": s(&v.q),
                "witness_lines": v.witness_lines.iter().map(s).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "quadrangle": self.quadrangle.iter().map(s).collect::<Vec<_>>(),
            "quadrangle_ok": self.quadrangle_ok,
        })
    }
}

const KEPT_VIOLATIONS: usize = 8;

/// Check the two-point axiom on `samples` point pairs and exhibit a
/// quadrangle.
///
/// Even-numbered samples are random chart pairs. Odd-numbered ones pair
/// `e₂` with `(a,0,0; 0,1,0)` for an isotropic `a` when the algebra has
/// one, and fall back to a random pair otherwise.
pub fn axiom_scan<S: Field>(plane: &Plane<S>, samples: usize, seed: u64) -> ScanReport<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ScanReport {
        plane: plane.kind().selector(),
        samples,
        seed,
        pairs: 0,
        unique_joins: 0,
        violation_count: 0,
        violations: Vec::new(),
        quadrangle: Vec::new(),
        quadrangle_ok: false,
    };
    for i in 0..samples {
        let neighbor = if i % 2 == 1 { plane.isotropic_neighbor(&mut rng) } else { None };
        let (p, q) = match neighbor {
            Some(q) => (VVector::e(2), q),
            None => {
                let p = plane.sample_chart(&mut rng);
                let mut q = plane.sample_chart(&mut rng);
                while same_ray(&p, &q) {
                    q = plane.sample_chart(&mut rng);
                }
                (p, q)
            }
        };
        report.pairs += 1;
        match plane.connect(&p, &q) {
            Ok(JoinResult::Unique(_)) => report.unique_joins += 1,
            Ok(JoinResult::Degenerate { witnesses }) => {
                report.violation_count += 1;
                if report.violations.len() < KEPT_VIOLATIONS {
                    report.violations.push(Violation {
                        p: plane.canonical(&p),
                        q: plane.canonical(&q),
                        witness_lines: witnesses,
                    });
                }
            }
            Err(_) => report.pairs -= 1,
        }
    }
    let one = compalg::basis::<S>(0);
    let quad = vec![VVector::e(1), VVector::e(2), VVector::e(3), plane.chart(&one, &one)];
    let j = plane.albert();
    let h: Vec<_> = quad.iter().map(|v| plane.to_hurwitz(v).to_albert()).collect();
    let mut ok = quad.iter().all(|v| plane.is_veronese(v));
    for a in 0..4 {
        for b in a + 1..4 {
            for c in b + 1..4 {
                ok &= !negligible(&j.norm_trilinear(&h[a], &h[b], &h[c]));
            }
        }
    }
    report.quadrangle = quad;
    report.quadrangle_ok = ok;
    report
}
