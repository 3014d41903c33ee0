use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::compalg::basis;
use crate::scalars::QSqrt3;

type Q = QSqrt3;

fn q(n: i64) -> Q {
    Q::int(n)
}

fn all_real() -> Vec<AlbertAlgebra<Q>> {
    [JordanTarget::J3O, JordanTarget::J21O, JordanTarget::J3Os, JordanTarget::J21Os]
        .into_iter()
        .map(AlbertAlgebra::of)
        .collect()
}

#[test]
fn idempotent_relations() {
    for j in all_real() {
        for a in 1..=3 {
            for b in 1..=3 {
                let p = j.jordan_mul(&j.basis_e(a).unwrap(), &j.basis_e(b).unwrap());
                let want = if a == b { j.basis_e(a).unwrap() } else { AlbertElement::zero() };
                assert_eq!(p, want);
            }
        }
    }
}

#[test]
fn idempotent_acts_by_one_half_on_iota() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for j in all_real() {
        let a = sample_elem::<Q, _>(&mut rng);
        for (s, t) in [(1, 2), (2, 3), (1, 3)] {
            let io = j.basis_iota(s, t, &a).unwrap();
            for i in [s, t] {
                let p = j.jordan_mul(&j.basis_e(i).unwrap(), &io);
                assert_eq!(p, io.scale(&Q::ratio(1, 2)));
            }
        }
    }
}

#[test]
fn iota_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for j in all_real() {
        let alg = j.algebra();
        let a = sample_elem::<Q, _>(&mut rng);
        let b = sample_elem::<Q, _>(&mut rng);
        let lhs = j.jordan_mul(&j.basis_iota(1, 2, &a).unwrap(), &j.basis_iota(2, 3, &b).unwrap());
        let g13 = q(j.gamma().pair(1, 3) as i64);
        let c = compalg::scale(&g13, &alg.conj(&alg.mul(&a, &b)));
        assert_eq!(lhs, j.basis_iota(1, 3, &c).unwrap().scale(&Q::ratio(1, 2)));
        for (s, t) in [(1, 2), (2, 3), (1, 3)] {
            let io = j.basis_iota(s, t, &a).unwrap();
            let want = j
                .basis_e(s)
                .unwrap()
                .add(&j.basis_e(t).unwrap())
                .scale(&(&q(j.gamma().pair(s, t) as i64) * &alg.norm(&a)));
            assert_eq!(j.square(&io), want);
            assert_eq!(j.trace(&io), q(0));
        }
    }
    assert!(AlbertAlgebra::<Q>::of(JordanTarget::J3O).basis_iota(2, 1, &basis(0)).is_err());
}

#[test]
fn traces_and_forms() {
    let j = AlbertAlgebra::<Q>::of(JordanTarget::J21O);
    assert_eq!(j.trace(&j.basis_e(3).unwrap()), q(1));
    let j3 = AlbertAlgebra::<Q>::of(JordanTarget::J3O);
    assert_eq!(j3.trace(&AlbertElement::identity()), q(3));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = AlbertElement::<Q>::identity();
    for j in all_real() {
        for _ in 0..5 {
            let x = j.sample(&mut rng);
            let y = j.sample(&mut rng);
            assert_eq!(j.pair_s(&x, &y), &q(6) * &j.norm_trilinear(&x, &y, &c));
            assert_eq!(j.trace_form(&x, &y), j.trace(&j.jordan_mul(&x, &y)));
            assert_eq!(j.norm_trilinear(&x, &x, &x), j.cubic_norm(&x));
        }
    }
}

#[test]
fn cubic_norm_values() {
    for j in all_real() {
        assert_eq!(j.cubic_norm(&AlbertElement::identity()), q(1));
        assert_eq!(j.cubic_norm(&AlbertElement::diag([q(2), q(-3), q(5)])), q(-30));
    }
}

#[test]
fn cubic_term_is_independent_of_the_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for j in all_real() {
        let a = j.algebra();
        for _ in 0..5 {
            let x = j.sample(&mut rng).x;
            let t0 = a.polar(&a.mul(&x[0], &x[1]), &a.conj(&x[2]));
            let t1 = a.polar(&a.mul(&x[1], &x[2]), &a.conj(&x[0]));
            let t2 = a.polar(&a.mul(&x[2], &x[0]), &a.conj(&x[1]));
            assert_eq!(t0, t1);
            assert_eq!(t1, t2);
        }
    }
}

#[test]
fn sharp_and_cross_examples() {
    let j = AlbertAlgebra::<Q>::of(JordanTarget::J3O);
    let e = |i| j.basis_e(i).unwrap();
    assert!(j.sharp(&e(1)).is_zero());
    assert_eq!(j.cross(&e(1), &e(2)), e(3));
    assert_eq!(j.cross(&e(1), &e(2)), j.sharp(&e(1).add(&e(2))));
    assert_eq!(j.sharp(&AlbertElement::identity()), AlbertElement::identity());
}

#[test]
fn ranks() {
    let j = AlbertAlgebra::<Q>::of(JordanTarget::J3O);
    assert_eq!(j.rank(&AlbertElement::zero()), 0);
    assert_eq!(j.rank(&j.basis_e(1).unwrap()), 1);
    assert_eq!(j.rank(&AlbertElement::diag([q(1), q(1), q(0)])), 2);
    assert_eq!(j.sharp(&AlbertElement::diag([q(1), q(1), q(0)])), j.basis_e(3).unwrap());
    assert_eq!(j.rank(&AlbertElement::identity()), 3);
}

#[test]
fn sharp_matches_the_quadratic_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for j in all_real() {
        for _ in 0..5 {
            let x = j.sample(&mut rng);
            let rhs = j
                .square(&x)
                .sub(&x.scale(&j.trace(&x)))
                .add(&AlbertElement::identity().scale(&j.quad_s(&x)));
            assert_eq!(j.sharp(&x), rhs);
        }
    }
}

#[test]
fn characteristic_residuals() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for j in all_real() {
        assert!(j.char_cubic_residual(&AlbertElement::identity()).is_zero());
        let x = j.basis_e(1).unwrap().add(&j.basis_iota(2, 3, &basis(1)).unwrap());
        assert!(j.char_cubic_residual(&x).is_zero());
        for _ in 0..5 {
            assert!(j.char_cubic_residual(&j.sample(&mut rng)).is_zero());
        }
    }
}

#[test]
fn freudenthal_relations_with_their_exact_constants() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for j in all_real() {
        for _ in 0..5 {
            let x = j.sample(&mut rng);
            let n = j.cubic_norm(&x);
            let xx = j.cross(&x, &x);
            assert_eq!(xx, j.sharp(&x).scale(&q(2)));
            assert_eq!(j.jordan_mul(&xx, &x), AlbertElement::identity().scale(&(&q(2) * &n)));
            assert_eq!(j.cross(&xx, &xx), x.scale(&(&q(8) * &n)));
        }
    }
}

#[test]
fn text_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let j = AlbertAlgebra::<Q>::of(JordanTarget::J21Os);
    let x = j.sample(&mut rng).scale(&Q::sqrt3_times(1, 2));
    let s = format_element(j.family(), j.gamma(), &x);
    assert!(s.starts_with("albert gamma=(1,1,-1) kind=split-octonion l=("));
    let (f, g, y) = parse_element::<Q>(&s).unwrap();
    assert_eq!((f, g), (Family::SplitOctonion, GammaTriple::LORENTZIAN));
    assert_eq!(y, x);
    assert!(parse_element::<Q>("albert gamma=(1,1) kind=octonion").is_err());
}

#[test]
fn selectors_parse() {
    for t in JordanTarget::ALL {
        assert_eq!(t.selector().parse::<JordanTarget>().unwrap(), t);
    }
    assert!("J4-O".parse::<JordanTarget>().is_err());
    assert!(AlbertAlgebra::<Q>::new(Family::Okubo, GammaTriple::EUCLIDEAN).is_err());
}
