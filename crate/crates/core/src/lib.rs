//! Exact composition algebras, Albert algebras, Veronese planes and
//! certificates for the exceptional Lie algebras attached to them.

pub mod albert;
pub mod compalg;
pub mod liecert;
pub mod linalg;
pub mod planes;
pub mod scalars;

pub use scalars::{CQSqrt3, Field, OrderedField, QSqrt3, Rat};

/// Default exact real scalar, ℚ(√3).
pub type Scalar = QSqrt3;
/// Default exact complex scalar, ℚ(√3)(i).
pub type CScalar = CQSqrt3;
