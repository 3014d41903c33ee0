//! Exact scalar tower ℚ ⊂ ℚ(√3) ⊂ ℚ(√3)(i), plus the `Field` trait that
//! lets the algebra code run unchanged over exact or floating-point scalars.

mod cscalar;
mod qsqrt3;
mod rat;

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

pub use cscalar::CQSqrt3;
pub use qsqrt3::{QSqrt3, SQRT3_F64};
pub use rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

macro_rules! forward_binops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl<'a> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                &self + o
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                &self - o
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                &self * o
            }
        }
        impl std::ops::Div for $t {
            type Output = $t;
            fn div(self, o: $t) -> $t {
                &self / &o
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_binops;

/// Scalar field the algebra, Albert and plane code is generic over.
///
/// Exact instances are [`QSqrt3`] and [`CQSqrt3`]; `f64`, `f32` and
/// `Complex64` give the floating-point path.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Arithmetic is exact, so `==` decides identities.
    const EXACT: bool;
    const COMPLEX: bool;

    /// Image of an element of the base field ℚ(√3).
    fn from_qs(q: &QSqrt3) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_qs(&QSqrt3::int(n))
    }

    fn ratio(n: i64, d: i64) -> Self {
        Self::from_qs(&QSqrt3::ratio(n, d))
    }

    /// √-1 for complex fields.
    fn imag_unit() -> Option<Self>;

    fn inv(&self) -> Option<Self>;

    /// Modulus as a float; used for residuals and tolerances.
    fn magnitude(&self) -> f64;

    fn to_c64(&self) -> Complex64;

    fn mul_ref(&self, o: &Self) -> Self {
        self.clone() * o
    }

    fn add_ref(&self, o: &Self) -> Self {
        self.clone() + o
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.clone() - o
    }

    fn neg_ref(&self) -> Self {
        -self.clone()
    }

    fn half(&self) -> Self {
        self.mul_ref(&Self::ratio(1, 2))
    }
}

/// Exact real scalar with decidable sign.
pub trait OrderedField: Field {
    fn sign(&self) -> i8;
}

impl Field for QSqrt3 {
    const EXACT: bool = true;
    const COMPLEX: bool = false;
    fn from_qs(q: &QSqrt3) -> Self {
        q.clone()
    }
    fn imag_unit() -> Option<Self> {
        None
    }
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl OrderedField for QSqrt3 {
    fn sign(&self) -> i8 {
        QSqrt3::sign(self)
    }
}

impl Field for CQSqrt3 {
    const EXACT: bool = true;
    const COMPLEX: bool = true;
    fn from_qs(q: &QSqrt3) -> Self {
        CQSqrt3::real(q.clone())
    }
    fn imag_unit() -> Option<Self> {
        Some(CQSqrt3::i())
    }
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn magnitude(&self) -> f64 {
        let (r, i) = self.to_f64_pair();
        r.hypot(i)
    }
    fn to_c64(&self) -> Complex64 {
        let (r, i) = self.to_f64_pair();
        Complex64::new(r, i)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

macro_rules! float_field {
    ($t:ty) => {
        impl Field for $t {
            const EXACT: bool = false;
            const COMPLEX: bool = false;
            fn from_qs(q: &QSqrt3) -> Self {
                q.to_f64() as $t
            }
            fn imag_unit() -> Option<Self> {
                None
            }
            fn inv(&self) -> Option<Self> {
                (*self != 0.0).then(|| 1.0 / *self)
            }
            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }
            fn to_c64(&self) -> Complex64 {
                Complex64::new(*self as f64, 0.0)
            }
        }
    };
}
float_field!(f64);
float_field!(f32);

impl Field for Complex64 {
    const EXACT: bool = false;
    const COMPLEX: bool = true;
    fn from_qs(q: &QSqrt3) -> Self {
        Complex64::new(q.to_f64(), 0.0)
    }
    fn imag_unit() -> Option<Self> {
        Some(Complex64::i())
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.inv())
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
}

/// Float image of an exact complex scalar, as `(re, im)`.
pub fn to_float_pair(z: &CQSqrt3) -> (f64, f64) {
    z.to_f64_pair()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(s: &str) -> QSqrt3 {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let x = qs("1 + 1 r3");
        let y = qs("1 + -1 r3");
        assert_eq!(&x * &y, QSqrt3::int(-2));
    }

    #[test]
    fn inverse_of_sqrt3() {
        assert_eq!(QSqrt3::sqrt3().checked_inv().unwrap(), QSqrt3::sqrt3_times(1, 3));
    }

    #[test]
    fn additive_inverse() {
        assert!((qs("1 + 2 r3") + qs("-1 + -2 r3")).is_zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(QSqrt3::zero().checked_inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(CQSqrt3::zero().checked_inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn signs() {
        assert_eq!(QSqrt3::zero().sign(), 0);
        assert_eq!(qs("1 + -2/3 r3").sign(), -1);
        assert_eq!(qs("2 + -1 r3").sign(), 1);
        assert_eq!(qs("-2 + 1 r3").sign(), -1);
        assert_eq!(qs("-1 + 2/3 r3").sign(), 1);
    }

    #[test]
    fn floats() {
        assert_eq!(QSqrt3::sqrt3().to_f64(), 1.7320508075688772);
        assert_eq!(QSqrt3::ratio(1, 2).to_f64(), 0.5);
        let v = QSqrt3::sqrt3_times(-1, 6).to_f64();
        assert!((v + 0.28867513459481287).abs() < 1e-16);
    }

    #[test]
    fn text_round_trip() {
        for s in ["1/2 + -1/6 r3", "0 + 0 r3", "-7 + 1 r3", "123456789012345678901234567890 + 1/3 r3"] {
            assert_eq!(qs(s).to_string(), s);
        }
        assert_eq!(qs("3/4"), QSqrt3::ratio(3, 4));
        assert!("1/0".parse::<QSqrt3>().is_err());
        assert!("r3".parse::<QSqrt3>().is_err());
        let z: CQSqrt3 = "1/2 + 0 r3 +i 0 + -1 r3".parse().unwrap();
        assert_eq!(z.to_string(), "1/2 + 0 r3 +i 0 + -1 r3");
    }

    #[test]
    fn complex_conjugation_is_involutive() {
        let z = CQSqrt3::new(qs("1 + 1 r3"), qs("2/3 + -1 r3"));
        assert_eq!(z.conj().conj(), z);
        assert_eq!((&z * &z.conj()).im, QSqrt3::zero());
    }
}
