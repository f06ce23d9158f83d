//! Reference identities for the one- and two-sided operators, evaluated as
//! exact polynomial equalities on concrete inputs.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::ops::{apply_left, apply_right, classify, sandwich};
use crate::poly::{Axis, QPolynomial, ScalarPoly};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub status: Status,
}

/// What an identity needs from its inputs before it applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Needs {
    Nothing,
    ReducedF,
    ReducedPair,
    MonogenicF,
}

type Q<T> = QPolynomial<T>;

fn d<T: Scalar>(f: &Q<T>, axis: Axis) -> Q<T> {
    f.partial(axis)
}

fn dd<T: Scalar>(f: &ScalarPoly<T>, a: Axis, b: Axis) -> ScalarPoly<T> {
    f.partial(a).partial(b)
}

fn int<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

fn vec_part_left<T: Scalar>(f: &Q<T>) -> Q<T> {
    &d(f, Axis::X1).unit_mul_left(1) + &d(f, Axis::X2).unit_mul_left(2)
}

fn vec_part_right<T: Scalar>(f: &Q<T>) -> Q<T> {
    &d(f, Axis::X1).unit_mul_right(1) + &d(f, Axis::X2).unit_mul_right(2)
}

fn along<T: Scalar>(k: usize, p: ScalarPoly<T>) -> Q<T> {
    Q::along(k, p)
}

fn leibniz<T: Scalar>(conjugated: bool, right: bool, f: &Q<T>, g: &Q<T>) -> bool {
    let fg = f * g;
    let (lhs, rhs) = if right {
        // (g1 ∂2f − g2 ∂1f) e3
        let corr = &d(f, Axis::X2).scale_poly(g.component(1)) - &d(f, Axis::X1).scale_poly(g.component(2));
        let corr = corr.unit_mul_right(3).scale(&int(if conjugated { -2 } else { 2 }));
        let op = |h: &Q<T>| apply_right(conjugated, h);
        (op(&fg), &(&(f * &op(g)) + &(&op(f) * g)) + &corr)
    } else {
        // e3 (f1 ∂2g − f2 ∂1g)
        let corr = &d(g, Axis::X2).scale_poly(f.component(1)) - &d(g, Axis::X1).scale_poly(f.component(2));
        let corr = corr.unit_mul_left(3).scale(&int(if conjugated { 2 } else { -2 }));
        let op = |h: &Q<T>| apply_left(conjugated, h);
        (op(&fg), &(&(&op(f) * g) + &(f * &op(g))) + &corr)
    };
    lhs == rhs
}

/// `∂̄ vec(f) ∂̄` in the corrected closed form.
pub fn dbar_vector_sandwich_closed_form<T: Scalar>(f: &Q<T>) -> Q<T> {
    closed_form_vector(f, false)
}

/// `∂̄ vec(f) ∂̄` transcribed with the `e2` coefficient as typeset, which
/// differentiates `f1` where `f2` is needed.
pub fn dbar_vector_sandwich_as_printed<T: Scalar>(f: &Q<T>) -> Q<T> {
    closed_form_vector(f, true)
}

fn closed_form_vector<T: Scalar>(f: &Q<T>, printed: bool) -> Q<T> {
    use Axis::*;
    let (f1, f2) = (f.component(1), f.component(2));
    let scalar = (&dd(f1, X0, X1) + &dd(f2, X0, X2)).scale(&int(-2));
    let e1 = &(&(&dd(f1, X0, X0) - &dd(f1, X1, X1)) + &dd(f1, X2, X2)) - &dd(f2, X1, X2).scale(&int(2));
    let g = if printed { f1 } else { f2 };
    let e2 = &(&(&dd(g, X0, X0) + &dd(g, X1, X1)) - &dd(g, X2, X2)) - &dd(f1, X1, X2).scale(&int(2));
    Q::from_components([scalar, e1, e2, ScalarPoly::zero()])
}

fn identity_value<T: Scalar>(name: &str, f: &Q<T>, g: &Q<T>) -> bool {
    use Axis::*;
    let f0 = f.component(0);
    let (f1, f2) = (f.component(1), f.component(2));
    let vf = Q::from_components([ScalarPoly::zero(), f1.clone(), f2.clone(), ScalarPoly::zero()]);
    let sf0 = f.scalar_part();
    match name {
        "leibniz_d_left" => leibniz(true, false, f, g),
        "leibniz_d_right" => leibniz(true, true, f, g),
        "leibniz_dbar_left" => leibniz(false, false, f, g),
        "leibniz_dbar_right" => leibniz(false, true, f, g),
        "bilateral_vector_anticommutator" => {
            let lhs = &vec_part_left(&vf) + &vec_part_right(&vf);
            let rhs = Q::scalar((&f1.partial(X1) + &f2.partial(X2)).scale(&int(-2)));
            lhs == rhs
        }
        "bilateral_vector_scalar_sandwich" => {
            let lhs = vec_part_right(&vec_part_left(&sf0));
            lhs == Q::scalar(-(&dd(f0, X1, X1) + &dd(f0, X2, X2)))
        }
        "bilateral_vector_vector_sandwich" => {
            let lhs = vec_part_right(&vec_part_left(&vf));
            let e1 = &(&dd(f1, X2, X2) - &dd(f1, X1, X1)) - &dd(f2, X1, X2).scale(&int(2));
            let e2 = &(&dd(f2, X1, X1) - &dd(f2, X2, X2)) - &dd(f1, X1, X2).scale(&int(2));
            lhs == Q::from_components([ScalarPoly::zero(), e1, e2, ScalarPoly::zero()])
        }
        "bilateral_split" => {
            let lap12 = &dd(f0, X1, X1) + &dd(f0, X2, X2);
            let scalar_part =
                &Q::scalar(&dd(f0, X0, X0) - &lap12) + &vec_part_left(&sf0).partial(X0).scale(&int(2));
            let anti = &vec_part_left(&vf) + &vec_part_right(&vf);
            let vector_part = &(&vf.partial(X0).partial(X0) + &anti.partial(X0))
                + &vec_part_right(&vec_part_left(&vf));
            sandwich(false, f) == &scalar_part + &vector_part
        }
        "bilateral_dbar_scalar" => {
            let rhs = Q::from_components([
                &(&dd(f0, X0, X0) - &dd(f0, X1, X1)) - &dd(f0, X2, X2),
                dd(f0, X0, X1).scale(&int(2)),
                dd(f0, X0, X2).scale(&int(2)),
                ScalarPoly::zero(),
            ]);
            sandwich(false, &sf0) == rhs
        }
        "bilateral_dbar_e1" => {
            let rhs = Q::from_components([
                dd(f1, X0, X1).scale(&int(-2)),
                &(&dd(f1, X0, X0) - &dd(f1, X1, X1)) + &dd(f1, X2, X2),
                dd(f1, X1, X2).scale(&int(-2)),
                ScalarPoly::zero(),
            ]);
            sandwich(false, &along(1, f1.clone())) == rhs
        }
        "bilateral_dbar_e2" => {
            let rhs = Q::from_components([
                dd(f2, X0, X2).scale(&int(-2)),
                dd(f2, X1, X2).scale(&int(-2)),
                &(&dd(f2, X0, X0) + &dd(f2, X1, X1)) - &dd(f2, X2, X2),
                ScalarPoly::zero(),
            ]);
            sandwich(false, &along(2, f2.clone())) == rhs
        }
        "bilateral_dbar_vector" => sandwich(false, &vf) == dbar_vector_sandwich_closed_form(f),
        "bilateral_dbar_sum" => {
            let lhs = &apply_left(false, f) + &apply_right(false, f);
            let rhs = Q::from_components([
                &(&f0.partial(X0) - &f1.partial(X1)) - &f2.partial(X2),
                &f1.partial(X0) + &f0.partial(X1),
                &f2.partial(X0) + &f0.partial(X2),
                ScalarPoly::zero(),
            ])
            .scale(&int(2));
            lhs == rhs
        }
        "bilateral_d_sum" => {
            let lhs = &apply_left(true, f) + &apply_right(true, f);
            let rhs = Q::from_components([
                &(&f0.partial(X0) + &f1.partial(X1)) + &f2.partial(X2),
                &f1.partial(X0) - &f0.partial(X1),
                &f2.partial(X0) - &f0.partial(X2),
                ScalarPoly::zero(),
            ])
            .scale(&int(2));
            lhs == rhs
        }
        "sandwich_order_dbar" => apply_left(false, &apply_right(false, f)) == sandwich(false, f),
        "sandwich_order_d" => apply_left(true, &apply_right(true, f)) == sandwich(true, f),
        "sandwich_reduced_dbar" => sandwich(false, f).is_reduced(),
        "sandwich_reduced_d" => sandwich(true, f).is_reduced(),
        "sandwich_conjugation" => sandwich(false, f).conj() == sandwich(true, &f.conj()),
        "laplace_factor_d_dbar" => apply_left(true, &apply_left(false, f)) == f.laplacian(),
        "laplace_factor_dbar_d" => apply_left(false, &apply_left(true, f)) == f.laplacian(),
        "left_right_link" => {
            let e3 = Q::unit(3);
            -&(&(&e3 * &apply_left(false, f)) * &e3) == apply_right(false, f).conj()
        }
        "monogenic_d_sum" => {
            &apply_left(true, f) + &apply_right(true, f) == f.partial(X0).scale(&int(4))
        }
        "monogenic_paravector_product" => {
            let xb = Q::position().conj();
            let h = &(&xb * f) + &(f * &xb);
            sandwich(false, &h) == apply_left(false, &sf0).scale(&int(4))
        }
        "monogenic_radial_product" => {
            sandwich(false, &(&Q::radius_squared() * f)) == f.conj().scale(&int(-2))
        }
        other => unreachable!("unknown identity {other}"),
    }
}

const IDENTITIES: &[(&str, Needs)] = &[
    ("leibniz_d_left", Needs::ReducedPair),
    ("leibniz_d_right", Needs::ReducedPair),
    ("leibniz_dbar_left", Needs::ReducedPair),
    ("leibniz_dbar_right", Needs::ReducedPair),
    ("bilateral_vector_anticommutator", Needs::ReducedF),
    ("bilateral_vector_scalar_sandwich", Needs::Nothing),
    ("bilateral_vector_vector_sandwich", Needs::ReducedF),
    ("bilateral_split", Needs::ReducedF),
    ("bilateral_dbar_scalar", Needs::Nothing),
    ("bilateral_dbar_e1", Needs::Nothing),
    ("bilateral_dbar_e2", Needs::Nothing),
    ("bilateral_dbar_vector", Needs::ReducedF),
    ("bilateral_dbar_sum", Needs::ReducedF),
    ("bilateral_d_sum", Needs::ReducedF),
    ("sandwich_order_dbar", Needs::Nothing),
    ("sandwich_order_d", Needs::Nothing),
    ("sandwich_reduced_dbar", Needs::ReducedF),
    ("sandwich_reduced_d", Needs::ReducedF),
    ("sandwich_conjugation", Needs::Nothing),
    ("laplace_factor_d_dbar", Needs::Nothing),
    ("laplace_factor_dbar_d", Needs::Nothing),
    ("left_right_link", Needs::ReducedF),
    ("monogenic_d_sum", Needs::MonogenicF),
    ("monogenic_paravector_product", Needs::MonogenicF),
    ("monogenic_radial_product", Needs::MonogenicF),
];

/// Names of every identity evaluated by [`check_identities`], in report order.
pub fn identity_names() -> impl Iterator<Item = &'static str> {
    IDENTITIES.iter().map(|(name, _)| *name)
}

/// Evaluates every identity on `(f, g)`. Identities whose hypotheses the
/// inputs do not satisfy are reported as not applicable.
pub fn check_identities<T: Scalar>(f: &Q<T>, g: &Q<T>) -> Vec<IdentityCheck> {
    let f_reduced = f.is_reduced();
    let pair_reduced = f_reduced && g.is_reduced();
    let f_monogenic = f_reduced && classify(f).monogenic;
    IDENTITIES
        .iter()
        .map(|&(identity, needs)| {
            let applies = match needs {
                Needs::Nothing => true,
                Needs::ReducedF => f_reduced,
                Needs::ReducedPair => pair_reduced,
                Needs::MonogenicF => f_monogenic,
            };
            let status = if applies {
                Status::from_bool(identity_value(identity, f, g))
            } else {
                Status::NotApplicable
            };
            IdentityCheck { identity, status }
        })
        .collect()
}
