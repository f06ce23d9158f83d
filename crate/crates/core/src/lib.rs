//! Orthogonal bases of reduced-quaternion inframonogenic polynomials on the
//! unit ball of R³, built and verified in exact rational arithmetic.
//!
//! Polynomials are generic over [`Scalar`]; construction, rank computations
//! and every verification use [`Rational`], while `f64`/`f32` copies are
//! available for fast evaluation.

pub mod ball;
pub mod basis;
pub mod check;
pub mod error;
pub mod fourier;
pub mod harmonics;
pub mod identities;
pub mod linalg;
pub mod ops;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod tables;

pub use error::{Error, Result};
pub use scalar::{rat, Rational, Scalar};

pub type QPoly = poly::QPolynomial<Rational>;
pub type QPolyF64 = poly::QPolynomial<f64>;
pub type QPolyF32 = poly::QPolynomial<f32>;
