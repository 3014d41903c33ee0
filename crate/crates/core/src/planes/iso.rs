//! Linear maps on the 27-coordinate space acting on Veronese vectors.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::compalg::{scalar_eq, Class};
use crate::linalg::negligible;
use crate::scalars::Field;

use super::{same_ray, Plane, PlaneError, VVector};

/// `M·v` for a row-major 27×27 matrix.
pub fn apply_collineation<S: Field>(m: &[Vec<S>], v: &VVector<S>) -> VVector<S> {
    let u = v.to_vec();
    let out: Vec<S> = m
        .iter()
        .map(|row| {
            row.iter()
                .zip(&u)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(S::zero(), |s, (a, b)| s.add_ref(&a.mul_ref(b)))
        })
        .collect();
    VVector::from_slice(&out)
}

/// `(x₁,x₂,x₃; λ₁,λ₂,λ₃) ↦ (x₂,x₃,x₁; λ₂,λ₃,λ₁)` as a matrix.
pub fn cyclic_shift<S: Field>() -> Vec<Vec<S>> {
    let src = |r: usize| -> usize {
        if r < 3 {
            (r + 1) % 3
        } else {
            let (block, k) = ((r - 3) / 8, (r - 3) % 8);
            3 + 8 * ((block + 1) % 3) + k
        }
    };
    (0..27)
        .map(|r| (0..27).map(|c| if c == src(r) { S::one() } else { S::zero() }).collect())
        .collect()
}

/// Largest Veronese residual of `M·v` over seeded chart samples, together
/// with the verdict (exact equality for exact fields, `1e-8` otherwise).
pub fn preserves_veronese<S: Field>(
    plane: &Plane<S>,
    m: &[Vec<S>],
    samples: usize,
    seed: u64,
) -> (bool, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut ok = true;
    for _ in 0..samples {
        let v = plane.sample_chart(&mut rng);
        let w = apply_collineation(m, &v);
        if S::EXACT {
            ok &= plane.is_veronese(&w);
        }
        worst = worst.max(plane.veronese_residual(&w));
    }
    if !S::EXACT {
        ok = worst <= 1e-8;
    }
    (ok, worst)
}

/// Result of pushing chart samples through `Φ` or `pΦ`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct IsoReport {
    pub plane: String,
    pub target: String,
    pub map: &'static str,
    pub samples: usize,
    pub seed: u64,
    /// Images that are Veronese vectors of the Hurwitz plane.
    pub veronese_images: usize,
    /// Consecutive sample pairs whose β value survived the map.
    pub beta_preserved: usize,
    /// Pairs that were β-orthogonal before the map (and after, if preserved).
    pub orthogonal_pairs: usize,
    pub round_trips: usize,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.veronese_images == self.samples
            && self.beta_preserved == self.samples
            && self.round_trips == self.samples
    }
}

/// Map seeded chart samples of an Okubo or para-Hurwitz plane to its Hurwitz
/// counterpart and count the preserved properties. The first sample is
/// paired with `e₂`, later ones with their predecessor.
pub fn iso_check<S: Field>(plane: &Plane<S>, samples: usize, seed: u64) -> Result<IsoReport, PlaneError> {
    let para = plane.kind().family.class() == Class::Para;
    let h = Plane::<S>::new(plane.kind().hurwitz_counterpart());
    let map = |v: &VVector<S>| if para { plane.pphi_iso(v) } else { plane.phi_iso(v) };
    map(&VVector::e(1))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = IsoReport {
        plane: plane.kind().selector(),
        target: h.kind().selector(),
        map: if para { "pPhi" } else { "Phi" },
        samples,
        seed,
        veronese_images: 0,
        beta_preserved: 0,
        orthogonal_pairs: 0,
        round_trips: 0,
    };
    let mut prev = VVector::e(2);
    for _ in 0..samples {
        let v = plane.sample_chart(&mut rng);
        let (mv, mp) = (map(&v)?, map(&prev)?);
        if h.is_veronese(&mv) {
            r.veronese_images += 1;
        }
        let (b0, b1) = (plane.beta(&v, &prev), h.beta(&mv, &mp));
        if scalar_eq(&b0, &b1) {
            r.beta_preserved += 1;
            if negligible(&b0) {
                r.orthogonal_pairs += 1;
            }
        }
        let back = plane.from_hurwitz(&mv);
        if back == v || (!S::EXACT && same_ray(&back, &v)) {
            r.round_trips += 1;
        }
        prev = v;
    }
    Ok(r)
}
