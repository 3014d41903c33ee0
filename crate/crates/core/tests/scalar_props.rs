mod common;

use common::{cqs, qs, rat};
use num_traits::{One, Zero};
use octoplane::scalars::{CQSqrt3, Field, OrderedField, QSqrt3, Rat};
use proptest::prelude::*;

proptest! {
    #[test]
    fn rat_round_trips_through_text(a in rat()) {
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
    }

    #[test]
    fn qsqrt3_is_a_field(a in qs(), b in qs(), c in qs()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.checked_inv().unwrap()).is_one());
        } else {
            prop_assert!(a.checked_inv().is_err());
        }
    }

    #[test]
    fn sign_agrees_with_floats(a in qs(), b in qs()) {
        let d = &a - &b;
        let f = d.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(OrderedField::sign(&d) as f64, f.signum());
        }
        prop_assert_eq!(d.sign() == 0, d.is_zero());
    }

    #[test]
    fn galois_conjugation_is_multiplicative(a in qs(), b in qs()) {
        prop_assert_eq!((&a * &b).galois(), &a.galois() * &b.galois());
        prop_assert_eq!(QSqrt3::new(a.field_norm(), Rat::from_int(0)), &a * &a.galois());
    }

    #[test]
    fn qsqrt3_round_trips_through_text(a in qs()) {
        prop_assert_eq!(a.to_string().parse::<QSqrt3>().unwrap(), a);
    }

    #[test]
    fn complex_scalars_are_a_field(a in cqs(), b in cqs(), c in cqs()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(&a * &a.conj(), CQSqrt3::real(a.abs2()));
        if !a.is_zero() {
            prop_assert!((&a * &a.checked_inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<CQSqrt3>().unwrap(), a);
    }

    #[test]
    fn float_images_are_ring_maps(a in qs(), b in qs()) {
        let (x, y) = (a.to_f64(), b.to_f64());
        let p = (&a * &b).to_f64();
        prop_assert!((p - x * y).abs() <= 1e-9 * (1.0 + p.abs()));
        prop_assert_eq!(<f64 as Field>::from_qs(&a), x);
    }
}

#[test]
fn sqrt3_squares_to_three() {
    let r = QSqrt3::sqrt3();
    assert_eq!(&r * &r, QSqrt3::int(3));
    assert_eq!(QSqrt3::int(12).sqrt_exact(), Some(QSqrt3::sqrt3_times(2, 1)));
    assert_eq!(QSqrt3::int(2).sqrt_exact(), None);
}
