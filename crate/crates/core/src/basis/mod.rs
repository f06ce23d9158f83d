//! The orthogonal basis of inframonogenic polynomials of each degree.
//!
//! For `n ≥ 2` the basis `𝓑ₙ` has `6n + 3` elements in three families:
//! the monogenic `Xₙ,ₘ = ∂Uₙ₊₁,ₘ`, the family
//! `Yₙ,ₘ = x̄Xₙ₋₁,ₘ + Xₙ₋₁,ₘx̄ + 2(n+m)|x|²Xₙ₋₂,ₘ`, and `Zₙ,ₘ`, obtained by
//! orthogonalizing `Z̲ₙ,ₘ = x̄Xₙ₋₁,ₘ + Xₙ₋₁,ₘx̄ − Uₙ,ₘ + (n+m)|x|²Xₙ₋₂,ₘ`
//! against `X` and `Y`.

mod construct;
mod dimension;
mod expansion;
mod gram;
mod id;

pub use construct::{basis_element, contragenic_operator_form, shared, Basis, OrthoConstants};
pub use dimension::{coordinates, from_coordinates, infr_dimension, infr_nullspace, sandwich_matrix, spans_within};
pub use expansion::{appell_holds, appell_sides, components_expansion};
pub use gram::GramMatrix;
pub use id::{enumerate_basis, enumerate_provisional, BasisId, Family};
