//! Exact computer algebra for constant-coefficient Laurent biorthogonal
//! polynomials, built on Riordan arrays.
//!
//! The family `P_n(x) = (x - c) P_{n-1}(x) - b x P_{n-2}(x)` has the Riordan
//! coefficient array `(1/(1+ct), t(1-bt)/(1+ct))`. Everything else in the crate
//! (moments, continued fractions, Hankel and Toeplitz determinants, the
//! companion orthogonal families and the factorizations linking them) is
//! computed exactly, either over the rationals or symbolically over `Q(b, c)`.

pub mod algebra;
pub mod cfrac;
pub mod cli;
pub mod error;
pub mod hankel_toeplitz;
pub mod lbp;
pub mod oeis;
pub mod orthopoly;
pub mod paths;
pub mod report;
pub mod riordan;
pub mod scenarios;

pub use error::{Error, Result};
