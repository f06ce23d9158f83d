//! Quaternion-valued polynomials in three real variables.

pub mod json;
mod monomial;
mod qpoly;
pub mod render;
mod scalar_poly;

pub use monomial::{Axis, Monomial};
pub use qpoly::{QPolynomial, Quaternion};
pub use scalar_poly::ScalarPoly;
