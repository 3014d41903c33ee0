//! Seeded identity suite for an Albert algebra.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::scalars::Field;

use super::{AlbertAlgebra, AlbertElement};

#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub identity: &'static str,
    /// Whether the identity is a theorem with the normalizations used here.
    pub expected: bool,
    pub holds: bool,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl IdentityResult {
    pub fn ok(&self) -> bool {
        self.holds == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentitySuite {
    pub jordan: String,
    pub samples: usize,
    pub seed: u64,
    pub results: Vec<IdentityResult>,
}

impl IdentitySuite {
    pub fn get(&self, identity: &str) -> Option<&IdentityResult> {
        self.results.iter().find(|r| r.identity == identity)
    }

    pub fn ok(&self) -> bool {
        self.results.iter().all(IdentityResult::ok)
    }
}

pub const JORDAN: &str = "(X∘Y)∘X² = X∘(Y∘X²)";
pub const ADJOINT: &str = "(X#)# = N(X)X";
pub const SHARP_QUADRATIC: &str = "X# = X² − Tr(X)X + S(X)1";
pub const CHARACTERISTIC: &str = "X³ − Tr(X)X² + S(X)X − N(X)1 = 0";
pub const CROSS_JORDAN: &str = "(X×X)∘X = 2N(X)1";
pub const CROSS_CROSS: &str = "(X×X)×(X×X) = 8N(X)X";
pub const CROSS_JORDAN_HALF: &str = "2(X×X)∘X = N(X)1";
pub const CROSS_CROSS_QUARTER: &str = "4(X×X)×(X×X) = N(X)X";

/// Evaluate every identity on `samples` seeded elements (a second element
/// `Y` is drawn for the Jordan identity). Equality is exact over exact
/// fields and relative to `1e-9` otherwise.
pub fn identity_suite<S: Field>(j: &AlbertAlgebra<S>, label: &str, samples: usize, seed: u64) -> IdentitySuite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: [(&'static str, bool); 8] = [
        (JORDAN, true),
        (ADJOINT, true),
        (SHARP_QUADRATIC, true),
        (CHARACTERISTIC, true),
        (CROSS_JORDAN, true),
        (CROSS_CROSS, true),
        (CROSS_JORDAN_HALF, false),
        (CROSS_CROSS_QUARTER, false),
    ];
    let mut results: Vec<IdentityResult> = names
        .iter()
        .map(|&(identity, expected)| IdentityResult { identity, expected, holds: true, failures: 0, counterexample: None })
        .collect();
    let one = AlbertElement::<S>::identity();
    for _ in 0..samples {
        let x = j.sample(&mut rng);
        let y = j.sample(&mut rng);
        let n = j.cubic_norm(&x);
        let x2 = j.square(&x);
        let sh = j.sharp(&x);
        let xx = j.cross(&x, &x);
        let xxxx = j.cross(&xx, &xx);
        let two = S::from_i64(2);
        let pairs: [(AlbertElement<S>, AlbertElement<S>); 8] = [
            (j.jordan_mul(&j.jordan_mul(&x, &y), &x2), j.jordan_mul(&x, &j.jordan_mul(&y, &x2))),
            (j.sharp(&sh), x.scale(&n)),
            (sh.clone(), x2.sub(&x.scale(&j.trace(&x))).add(&one.scale(&j.quad_s(&x)))),
            (j.char_cubic_residual(&x), AlbertElement::zero()),
            (j.jordan_mul(&xx, &x), one.scale(&n.mul_ref(&two))),
            (xxxx.clone(), x.scale(&n.mul_ref(&S::from_i64(8)))),
            (j.jordan_mul(&xx, &x).scale(&two), one.scale(&n)),
            (xxxx.scale(&S::from_i64(4)), x.scale(&n)),
        ];
        for (r, (lhs, rhs)) in results.iter_mut().zip(pairs) {
            if !same(&lhs, &rhs) {
                r.holds = false;
                r.failures += 1;
                if r.counterexample.is_none() {
                    r.counterexample = Some(super::format_element(j.family(), j.gamma(), &x));
                }
            }
        }
    }
    IdentitySuite { jordan: label.to_string(), samples, seed, results }
}

fn same<S: Field>(a: &AlbertElement<S>, b: &AlbertElement<S>) -> bool {
    if S::EXACT {
        a == b
    } else {
        let scale = a.max_abs().max(b.max_abs()).max(1.0);
        a.sub(b).max_abs() <= 1e-9 * scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::JordanTarget;
    use crate::scalars::QSqrt3;

    #[test]
    fn suite_on_the_split_lorentzian_algebra() {
        let j = AlbertAlgebra::<QSqrt3>::of(JordanTarget::J21Os);
        let s = identity_suite(&j, "J21-Os", 10, 3);
        assert!(s.ok());
        assert!(s.get(ADJOINT).unwrap().holds);
        let half = s.get(CROSS_JORDAN_HALF).unwrap();
        assert!(!half.holds && half.failures > 0 && half.counterexample.is_some());
    }

    #[test]
    fn suite_over_floats() {
        let j = AlbertAlgebra::<f64>::of(JordanTarget::J3O);
        assert!(identity_suite(&j, "J3-O", 10, 4).ok());
    }
}
