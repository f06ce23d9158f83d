//! Generalized Cauchy–Riemann operators `∂̄ = ∂0 + e1∂1 + e2∂2` and
//! `∂ = ∂0 − e1∂1 − e2∂2`, their two-sided "sandwich" forms, and
//! classification predicates.

use serde::Serialize;

use crate::poly::{Axis, QPolynomial};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    Sandwich,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OperatorSpec {
    /// `true` selects `∂`, `false` selects `∂̄`.
    pub conjugated: bool,
    pub side: Side,
}

impl OperatorSpec {
    pub const DBAR_LEFT: Self = Self { conjugated: false, side: Side::Left };
    pub const DBAR_RIGHT: Self = Self { conjugated: false, side: Side::Right };
    pub const D_LEFT: Self = Self { conjugated: true, side: Side::Left };
    pub const D_RIGHT: Self = Self { conjugated: true, side: Side::Right };
    pub const DBAR_SANDWICH: Self = Self { conjugated: false, side: Side::Sandwich };
    pub const D_SANDWICH: Self = Self { conjugated: true, side: Side::Sandwich };

    pub fn apply<T: Scalar>(&self, f: &QPolynomial<T>) -> QPolynomial<T> {
        match self.side {
            Side::Left => one_sided(self.conjugated, false, f),
            Side::Right => one_sided(self.conjugated, true, f),
            Side::Sandwich => sandwich(self.conjugated, f),
        }
    }
}

fn one_sided<T: Scalar>(conjugated: bool, right: bool, f: &QPolynomial<T>) -> QPolynomial<T> {
    let mut vec = QPolynomial::zero();
    for (k, axis) in [(1, Axis::X1), (2, Axis::X2)] {
        let d = f.partial(axis);
        vec = vec + if right { d.unit_mul_right(k) } else { d.unit_mul_left(k) };
    }
    let d0 = f.partial(Axis::X0);
    if conjugated {
        d0 - vec
    } else {
        d0 + vec
    }
}

/// Left application: `∂̄f = ∂0f + e1∂1f + e2∂2f` (or `∂f` when conjugated).
pub fn apply_left<T: Scalar>(conjugated: bool, f: &QPolynomial<T>) -> QPolynomial<T> {
    one_sided(conjugated, false, f)
}

/// Right application: `f∂̄ = ∂0f + (∂1f)e1 + (∂2f)e2` (or `f∂` when conjugated).
pub fn apply_right<T: Scalar>(conjugated: bool, f: &QPolynomial<T>) -> QPolynomial<T> {
    one_sided(conjugated, true, f)
}

/// `∂̄f∂̄` (or `∂f∂`), computed as a right application after a left one.
pub fn sandwich<T: Scalar>(conjugated: bool, f: &QPolynomial<T>) -> QPolynomial<T> {
    apply_right(conjugated, &apply_left(conjugated, f))
}

pub fn laplacian<T: Scalar>(f: &QPolynomial<T>, iterations: u32) -> QPolynomial<T> {
    (0..iterations).fold(f.clone(), |g, _| g.laplacian())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub harmonic: bool,
    pub biharmonic: bool,
    pub monogenic: bool,
    pub antimonogenic: bool,
    pub inframonogenic: bool,
    pub antiinframonogenic: bool,
    pub reduced: bool,
}

impl ClassFlags {
    /// The implications between the flags that hold for every function.
    pub fn is_consistent(&self) -> bool {
        (!self.monogenic || self.inframonogenic)
            && (!self.antimonogenic || self.antiinframonogenic)
            && (!self.harmonic || self.biharmonic)
    }
}

pub fn classify<T: Scalar>(f: &QPolynomial<T>) -> ClassFlags {
    let lap = f.laplacian();
    ClassFlags {
        harmonic: lap.is_zero(),
        biharmonic: lap.laplacian().is_zero(),
        monogenic: apply_left(false, f).is_zero(),
        antimonogenic: apply_left(true, f).is_zero(),
        inframonogenic: sandwich(false, f).is_zero(),
        antiinframonogenic: sandwich(true, f).is_zero(),
        reduced: f.is_reduced(),
    }
}
