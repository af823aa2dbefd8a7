//! Exact scalar rings and truncated formal power series.
//!
//! Two scalar instances ship with the crate: [`Rational`] for numeric
//! specializations of the parameters and [`RationalFunction`] for identities
//! that hold symbolically in `b` and `c`. No floating point is used anywhere.

pub mod bivar;
pub mod combin;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod series;

pub use bivar::BivarPoly;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use scalar::{parse_rational, Rational, Scalar};
pub use series::TruncatedSeries;

/// Default truncation order for library computations.
pub const DEFAULT_ORDER: usize = 16;
