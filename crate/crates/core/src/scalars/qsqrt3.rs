use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{Rat, ScalarError};

pub const SQRT3_F64: f64 = 1.732_050_807_568_877_2;

/// Exact element `a + b·√3` of ℚ(√3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    pub a: Rat,
    pub b: Rat,
}

impl QSqrt3 {
    pub fn new(a: Rat, b: Rat) -> Self {
        QSqrt3 { a, b }
    }

    pub fn int(n: i64) -> Self {
        QSqrt3::new(Rat::from_int(n), Rat::zero())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        QSqrt3::new(Rat::new(n, d), Rat::zero())
    }

    /// `(n/d)·√3`
    pub fn sqrt3_times(n: i64, d: i64) -> Self {
        QSqrt3::new(Rat::zero(), Rat::new(n, d))
    }

    pub fn sqrt3() -> Self {
        Self::sqrt3_times(1, 1)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√3`.
    pub fn galois(&self) -> Self {
        QSqrt3::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² − 3b²`.
    pub fn field_norm(&self) -> Rat {
        &(&self.a * &self.a) - &(&Rat::from_int(3) * &(&self.b * &self.b))
    }

    /// Exact sign of the real number `a + b√3`.
    pub fn sign(&self) -> i8 {
        let (sa, sb) = (self.a.signum(), self.b.signum());
        if sa >= 0 && sb >= 0 {
            return sa.max(sb);
        }
        if sa <= 0 && sb <= 0 {
            return sa.min(sb);
        }
        // opposite signs: compare a² with 3b²
        let d = self.field_norm().signum();
        if sa > 0 {
            d
        } else {
            -d
        }
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let ni = n.recip()?;
        Ok(QSqrt3::new(&self.a * &ni, -&(&self.b * &ni)))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self * &o.checked_inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            self.a.to_f64()
        } else {
            self.a.to_f64() + self.b.to_f64() * SQRT3_F64
        }
    }

    /// Square root inside the field when one exists among `r` and `r·√3`
    /// style candidates with rational parts.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.sign() < 0 {
            return None;
        }
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt_exact() {
                return Some(QSqrt3::new(r, Rat::zero()));
            }
            if let Some(r) = (&self.a / &Rat::from_int(3)).sqrt_exact() {
                return Some(QSqrt3::new(Rat::zero(), r));
            }
        }
        None
    }
}

impl Zero for QSqrt3 {
    fn zero() -> Self {
        QSqrt3::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt3 {
    fn one() -> Self {
        QSqrt3::int(1)
    }
}

impl Add for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: &QSqrt3) -> QSqrt3 {
        if self.b.is_zero() && o.b.is_zero() {
            return QSqrt3::new(&self.a * &o.a, Rat::zero());
        }
        let three = Rat::from_int(3);
        let a = &(&self.a * &o.a) + &(&three * &(&self.b * &o.b));
        let b = &(&self.a * &o.b) + &(&self.b * &o.a);
        QSqrt3::new(a, b)
    }
}

impl Div for &QSqrt3 {
    type Output = QSqrt3;
    fn div(self, o: &QSqrt3) -> QSqrt3 {
        self.checked_div(o).expect("division by zero in Q(sqrt3)")
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-&self.a, -&self.b)
    }
}

super::forward_binops!(QSqrt3);

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} r3", self.a, self.b)
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QSqrt3 {
    type Err = ScalarError;
    /// Accepts the canonical `"a + b r3"` as well as a bare rational `"a"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.strip_suffix("r3") {
            Some(rest) => {
                let (a, b) = rest
                    .trim_end()
                    .rsplit_once(" + ")
                    .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
                Ok(QSqrt3::new(a.parse()?, b.parse()?))
            }
            None => Ok(QSqrt3::new(t.parse()?, Rat::zero())),
        }
    }
}
