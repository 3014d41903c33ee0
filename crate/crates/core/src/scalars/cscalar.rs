use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{QSqrt3, ScalarError};

/// Exact element `re + i·im` of ℚ(√3)(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CQSqrt3 {
    pub re: QSqrt3,
    pub im: QSqrt3,
}

impl CQSqrt3 {
    pub fn new(re: QSqrt3, im: QSqrt3) -> Self {
        CQSqrt3 { re, im }
    }

    pub fn real(re: QSqrt3) -> Self {
        CQSqrt3::new(re, QSqrt3::zero())
    }

    pub fn i() -> Self {
        CQSqrt3::new(QSqrt3::zero(), QSqrt3::one())
    }

    pub fn conj(&self) -> Self {
        CQSqrt3::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`, an element of ℚ(√3).
    pub fn abs2(&self) -> QSqrt3 {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        let d = self.abs2().checked_inv()?;
        Ok(CQSqrt3::new(&self.re * &d, -&(&self.im * &d)))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self * &o.checked_inv()?)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Zero for CQSqrt3 {
    fn zero() -> Self {
        CQSqrt3::real(QSqrt3::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for CQSqrt3 {
    fn one() -> Self {
        CQSqrt3::real(QSqrt3::one())
    }
}

impl Add for &CQSqrt3 {
    type Output = CQSqrt3;
    fn add(self, o: &CQSqrt3) -> CQSqrt3 {
        CQSqrt3::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &CQSqrt3 {
    type Output = CQSqrt3;
    fn sub(self, o: &CQSqrt3) -> CQSqrt3 {
        CQSqrt3::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &CQSqrt3 {
    type Output = CQSqrt3;
    fn mul(self, o: &CQSqrt3) -> CQSqrt3 {
        if self.im.is_zero() && o.im.is_zero() {
            return CQSqrt3::real(&self.re * &o.re);
        }
        CQSqrt3::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}

impl Div for &CQSqrt3 {
    type Output = CQSqrt3;
    fn div(self, o: &CQSqrt3) -> CQSqrt3 {
        self.checked_div(o).expect("division by zero in Q(sqrt3)(i)")
    }
}

impl Neg for &CQSqrt3 {
    type Output = CQSqrt3;
    fn neg(self) -> CQSqrt3 {
        CQSqrt3::new(-&self.re, -&self.im)
    }
}

super::forward_binops!(CQSqrt3);

impl fmt::Display for CQSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} +i {}", self.re, self.im)
    }
}

impl fmt::Debug for CQSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CQSqrt3 {
    type Err = ScalarError;
    /// `"<re> +i <im>"`, or a real scalar alone.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(" +i ") {
            Some((re, im)) => Ok(CQSqrt3::new(re.parse()?, im.parse()?)),
            None => Ok(CQSqrt3::real(s.parse()?)),
        }
    }
}
