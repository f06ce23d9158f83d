//! Closed-form expressions of the basis elements in solid harmonics, and the
//! Appell property of the monogenic family.

use super::construct::x_element;
use super::id::{BasisId, Family};
use crate::error::{Error, Result};
use crate::harmonics::{harmonic_or_zero, Parity};
use crate::ops::{apply_left, apply_right};
use crate::poly::{QPolynomial, ScalarPoly};
use crate::scalar::{Rational, Scalar};

type QPoly = QPolynomial<Rational>;

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

fn half(v: i64) -> Rational {
    Rational::ratio(v, 2)
}

fn other(p: Parity) -> Parity {
    match p {
        Parity::Plus => Parity::Minus,
        Parity::Minus => Parity::Plus,
    }
}

/// `Σ cᵢ Uᵢ` plus `Σ dᵢ |x|² Uᵢ'` as a real polynomial.
struct Combo(ScalarPoly<Rational>);

impl Combo {
    fn new() -> Self {
        Combo(ScalarPoly::zero())
    }

    fn u(mut self, c: Rational, n: i64, m: i64, p: Parity) -> Self {
        self.0 += &harmonic_or_zero(n, m, p).scale(&c);
        self
    }

    fn ru(mut self, c: Rational, n: i64, m: i64, p: Parity) -> Self {
        let h = &ScalarPoly::radius_squared() * &harmonic_or_zero(n, m, p);
        self.0 += &h.scale(&c);
        self
    }
}

fn assemble(e0: Combo, e1: Combo, e2: Combo) -> QPoly {
    QPolynomial::from_components([e0.0, e1.0, e2.0, ScalarPoly::zero()])
}

/// The element as asserted by its expansion in solid harmonics, with
/// `U±ₙ,ₙ₊₁ = 0`, `U⁻ₙ,₀ = 0` and the `m = −1` substitution. The type 1
/// and type 2 expansions are stated for `(2n−1)` times the element; the
/// returned polynomial is already divided by that factor.
pub fn components_expansion(id: BasisId) -> Result<QPoly> {
    let BasisId { n, family, parity: p, m } = id;
    let (n, m) = (n as i64, m as i64);
    let s = p.sign();
    let op = other(p);
    let poly = match family {
        Family::X => {
            let a = (n + m) * (n + m + 1);
            let e0 = Combo::new().u(q(n + m + 1), n, m, p);
            let e1 = Combo::new().u(half(a), n, m - 1, p).u(half(-1), n, m + 1, p);
            let e2 = Combo::new().u(half(-s * a), n, m - 1, op).u(half(-s), n, m + 1, op);
            assemble(e0, e1, e2)
        }
        Family::Y if n >= 2 => {
            let c1 = (n + m) * (n - m + 1) * (2 * m - 1);
            let c2 = (2 * n + 1) * (n + m) * (n + m - 1) * (n + m - 2);
            let e0 = Combo::new()
                .u(q(2 * (n - 2 * m * m)), n, m, p)
                .ru(q(2 * (2 * n + 1) * (n + m) * (n - 1 + m)), n - 2, m, p);
            let e1 = Combo::new()
                .u(q(c1), n, m - 1, p)
                .ru(q(c2), n - 2, m - 1, p)
                .u(q(2 * m + 1), n, m + 1, p)
                .ru(q(-(2 * n + 1) * (n + m)), n - 2, m + 1, p);
            let e2 = Combo::new()
                .u(q(-s * c1), n, m - 1, op)
                .ru(q(-s * c2), n - 2, m - 1, op)
                .u(q(s * (2 * m + 1)), n, m + 1, op)
                .ru(q((2 * n + 1) * (n + m)), n - 2, m + 1, op);
            assemble(e0, e1, e2).scale(&Rational::ratio(1, 2 * n - 1))
        }
        Family::Zu if n >= 2 && m == 0 && p == Parity::Plus => assemble(
            Combo::new(),
            Combo::new().u(q(1), n, 1, Parity::Minus),
            Combo::new().u(q(-1), n, 1, Parity::Plus),
        ),
        Family::Zu if n >= 2 => {
            let c1 = (n + m) * (n - m + 1) * (2 * m - 1);
            let c2 = (2 * n + 3) * (n + m) * (n + m - 1) * (n + m - 2);
            let c3 = (2 * n + 3) * (n + m);
            let e0 = Combo::new()
                .u(q(-(2 * m - 1) * (2 * m + 1)), n, m, p)
                .ru(q((2 * n + 3) * (n + m) * (n + m - 1)), n - 2, m, p);
            let e1 = Combo::new()
                .u(q(c1), n, m - 1, p)
                .ru(half(c2), n - 2, m - 1, p)
                .u(q(2 * m + 1), n, m + 1, p)
                .ru(half(-c3), n - 2, m + 1, p);
            let e2 = Combo::new()
                .u(q(-s * c1), n, m - 1, op)
                .ru(half(-s * c2), n - 2, m - 1, op)
                .u(q(s * (2 * m + 1)), n, m + 1, op)
                .ru(half(c3), n - 2, m + 1, op);
            assemble(e0, e1, e2).scale(&Rational::ratio(1, 2 * n - 1))
        }
        _ => {
            return Err(Error::InvalidIndex(format!("no component expansion for {id}")));
        }
    };
    Ok(poly)
}

/// Both one-sided applications of `∂` to `Xₙ,ₘ`, and the expected value
/// `2(n+m+1) Xₙ₋₁,ₘ` (zero when `m = n+1`).
pub fn appell_sides(n: u32, m: u32, parity: Parity) -> (QPoly, QPoly, QPoly) {
    let (n, m) = (n as i64, m as i64);
    let x = x_element(n, m, parity);
    let expected = if m == n + 1 {
        QPolynomial::zero()
    } else {
        x_element(n - 1, m, parity).scale(&q(2 * (n + m + 1)))
    };
    (apply_left(true, &x), apply_right(true, &x), expected)
}

pub fn appell_holds(n: u32, m: u32, parity: Parity) -> bool {
    let (left, right, expected) = appell_sides(n, m, parity);
    left == expected && right == expected
}
