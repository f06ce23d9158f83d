//! Solid spherical harmonics `U±ₙ,ₘ = ρⁿ Pₙᵐ(cos θ){cos, sin}(mφ)` as exact
//! Cartesian polynomials, with `x0 = ρ cos θ` the polar axis.
//!
//! The associated Legendre functions carry the Condon–Shortley phase
//! `Pₙᵐ(t) = (−1)ᵐ (1 − t²)^{m/2} Pₙ⁽ᵐ⁾(t)`. Writing `r² = x1² + x2²` and
//! `ρ² = x0² + r²`,
//!
//! `U±ₙ,ₘ = Qₙ,ₘ · {Re, Im}((x1 + i x2)ᵐ)`, `Qₙ,ₘ = (−1)ᵐ ρ^{n−m} Pₙ⁽ᵐ⁾(x0/ρ)`,
//!
//! and `Qₙ,ₘ` is a polynomial because `Pₙ⁽ᵐ⁾` has the parity of `n − m`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Axis, Monomial, QPolynomial, ScalarPoly};
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Plus, Parity::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Plus => "+",
            Parity::Minus => "-",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Parity::Plus),
            "-" => Ok(Parity::Minus),
            _ => Err(Error::InvalidIndex(format!("parity must be `+` or `-`, got `{s}`"))),
        }
    }
}

/// Index of a solid harmonic. `m = −1` selects the substitution
/// `U±ₙ,₋₁ = ∓ U±ₙ,₁ / (n(n+1))`; `(−, m = 0)` is the zero function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HarmonicId {
    pub n: u32,
    pub m: i32,
    pub parity: Parity,
}

impl HarmonicId {
    pub fn new(n: u32, m: i32, parity: Parity) -> Result<Self> {
        if m < -1 || m > n as i32 {
            return Err(Error::InvalidIndex(format!("harmonic order m = {m} outside -1..={n}")));
        }
        if m == -1 && n == 0 {
            return Err(Error::InvalidIndex("U_{0,-1} is undefined".into()));
        }
        Ok(HarmonicId { n, m, parity })
    }

    pub fn plus(n: u32, m: i32) -> Result<Self> {
        Self::new(n, m, Parity::Plus)
    }

    pub fn minus(n: u32, m: i32) -> Result<Self> {
        Self::new(n, m, Parity::Minus)
    }
}

impl fmt::Display for HarmonicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U{}({},{})", self.parity, self.n, self.m)
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn falling(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * big(n - i))
}

/// Coefficients `[c_0, …, c_{n−m}]` of the `m`-th derivative of the Legendre
/// polynomial `Pₙ`, lowest power first.
pub fn legendre_derivative(n: u32, m: u32) -> Vec<Rational> {
    let (n, m) = (n as u64, m as u64);
    if m > n {
        return Vec::new();
    }
    let mut coeffs = vec![Rational::zero(); (n - m + 1) as usize];
    let denom = BigInt::one() << n;
    for k in 0..=n / 2 {
        let power = n - 2 * k;
        if power < m {
            break;
        }
        let c = binomial(big(n), big(k)) * binomial(big(2 * n - 2 * k), big(n)) * falling(power, m);
        let c = if k % 2 == 1 { -c } else { c };
        coeffs[(power - m) as usize] = Rational::new(c, denom.clone());
    }
    coeffs
}

fn pow(p: &ScalarPoly<Rational>, e: u32) -> ScalarPoly<Rational> {
    (0..e).fold(ScalarPoly::one(), |acc, _| &acc * p)
}

/// `r² = x1² + x2²`.
pub fn cylinder_radius_squared() -> ScalarPoly<Rational> {
    ScalarPoly::from_terms([(Monomial::new(0, 2, 0), Rational::one()), (Monomial::new(0, 0, 2), Rational::one())])
}

/// The polar factor `Qₙ,ₘ = (−1)ᵐ ρ^{n−m} Pₙ⁽ᵐ⁾(x0/ρ)`. Zero for `m > n`;
/// defined for integer arguments so that recurrences can reference
/// out-of-range indices.
pub fn polar_factor(n: i64, m: i64) -> ScalarPoly<Rational> {
    if n < 0 || m < 0 || m > n {
        return ScalarPoly::zero();
    }
    let rho2 = ScalarPoly::radius_squared();
    let x0 = ScalarPoly::var(Axis::X0);
    let mut out = ScalarPoly::zero();
    for (j, c) in legendre_derivative(n as u32, m as u32).into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let j = j as u32;
        let k = (n as u32 - m as u32 - j) / 2;
        out += &(&pow(&x0, j) * &pow(&rho2, k)).scale(&c);
    }
    if m % 2 == 1 {
        -out
    } else {
        out
    }
}

/// `{Re, Im}((x1 + i x2)ᵐ)` for parity `+` resp. `−`.
pub fn azimuthal_factor(m: u32, parity: Parity) -> ScalarPoly<Rational> {
    let start = match parity {
        Parity::Plus => 0,
        Parity::Minus => 1,
    };
    let mut out = ScalarPoly::zero();
    for j in (start..=m).step_by(2) {
        let sign = if (j / 2) % 2 == 1 { -1 } else { 1 };
        let c = Rational::from_integer(binomial(big(m as u64), big(j as u64)) * sign);
        out.add_term(Monomial::new(0, m - j, j), c);
    }
    out
}

/// `U±ₙ,ₘ` as a real polynomial.
pub fn harmonic_poly(id: HarmonicId) -> ScalarPoly<Rational> {
    if id.m == -1 {
        let n = id.n as i64;
        let base = harmonic_poly(HarmonicId { m: 1, ..id });
        return base.scale(&Rational::new(BigInt::from(-id.parity.sign()), BigInt::from(n * (n + 1))));
    }
    &polar_factor(id.n as i64, id.m as i64) * &azimuthal_factor(id.m as u32, id.parity)
}

/// `U±ₙ,ₘ` as a scalar-valued quaternion polynomial.
pub fn solid_harmonic(id: HarmonicId) -> QPolynomial<Rational> {
    QPolynomial::scalar(harmonic_poly(id))
}

/// `U±ₙ,ₘ` in any coefficient field.
pub fn solid_harmonic_in<T: Scalar>(id: HarmonicId) -> QPolynomial<T> {
    solid_harmonic(id).map_coeffs(T::from_rational)
}

/// `U±ₙ,ₘ` for arbitrary integer indices, with the conventions used inside
/// closed-form expansions: zero for `n < 0` or `m > n`, and the `m = −1`
/// substitution. `U±₀,₋₁` is taken as zero.
pub fn harmonic_or_zero(n: i64, m: i64, parity: Parity) -> ScalarPoly<Rational> {
    if n < 0 || m > n || m < -1 || (m == -1 && n == 0) {
        return ScalarPoly::zero();
    }
    harmonic_poly(HarmonicId { n: n as u32, m: m as i32, parity })
}

/// Legendre recurrences restated for the polar factors `Qₙ,ₘ`, each
/// multiplied through by a power of `ρ` so both sides are polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Recurrence {
    /// `Pₙᵐ/√(1−t²) = −(Pₙ₋₁ᵐ⁺¹ + (n+m−1)(n+m)Pₙ₋₁ᵐ⁻¹)/(2m)`.
    LoweringOrder,
    /// `√(1−t²)Pₙᵐ⁺¹ = (n−m)tPₙᵐ − (n+m)Pₙ₋₁ᵐ`.
    RaisingOrder,
    /// `(n−m+1)Pₙ₊₁ᵐ = (2n+1)tPₙᵐ − (n+m)Pₙ₋₁ᵐ`.
    ThreeTerm,
    /// `√(1−t²)Pₙᵐ = ((n−m+1)(n−m+2)Pₙ₊₁ᵐ⁻¹ − (n+m−1)(n+m)Pₙ₋₁ᵐ⁻¹)/(2n+1)`.
    DegreeShiftLower,
    /// `√(1−t²)Pₙᵐ = −(Pₙ₊₁ᵐ⁺¹ − Pₙ₋₁ᵐ⁺¹)/(2n+1)`.
    DegreeShiftRaise,
}

impl Recurrence {
    pub const ALL: [Recurrence; 5] = [
        Recurrence::LoweringOrder,
        Recurrence::RaisingOrder,
        Recurrence::ThreeTerm,
        Recurrence::DegreeShiftLower,
        Recurrence::DegreeShiftRaise,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Recurrence::LoweringOrder => "lowering_order",
            Recurrence::RaisingOrder => "raising_order",
            Recurrence::ThreeTerm => "three_term",
            Recurrence::DegreeShiftLower => "degree_shift_lower",
            Recurrence::DegreeShiftRaise => "degree_shift_raise",
        }
    }

    /// Smallest order the identity is stated for.
    pub fn min_order(self) -> u32 {
        match self {
            Recurrence::LoweringOrder | Recurrence::DegreeShiftLower => 1,
            _ => 0,
        }
    }

    /// Both sides of the identity at `(n, m)`.
    pub fn sides(self, n: u32, m: u32) -> (ScalarPoly<Rational>, ScalarPoly<Rational>) {
        let (n, m) = (n as i64, m as i64);
        let q = polar_factor;
        let r2 = cylinder_radius_squared();
        let rho2 = ScalarPoly::radius_squared();
        let x0 = ScalarPoly::var(Axis::X0);
        let c = |v: i64| Rational::from_integer(BigInt::from(v));
        let frac = |a: i64, b: i64| Rational::new(BigInt::from(a), BigInt::from(b));
        match self {
            Recurrence::LoweringOrder => {
                let rhs = &(&r2 * &q(n - 1, m + 1)) + &q(n - 1, m - 1).scale(&c((n + m - 1) * (n + m)));
                (q(n, m), rhs.scale(&frac(-1, 2 * m)))
            }
            Recurrence::RaisingOrder => {
                let rhs = &(&x0 * &q(n, m)).scale(&c(n - m)) - &(&rho2 * &q(n - 1, m)).scale(&c(n + m));
                (&r2 * &q(n, m + 1), rhs)
            }
            Recurrence::ThreeTerm => {
                let rhs = &(&x0 * &q(n, m)).scale(&c(2 * n + 1)) - &(&rho2 * &q(n - 1, m)).scale(&c(n + m));
                (q(n + 1, m).scale(&c(n - m + 1)), rhs)
            }
            Recurrence::DegreeShiftLower => {
                let rhs = &q(n + 1, m - 1).scale(&c((n - m + 1) * (n - m + 2)))
                    - &(&rho2 * &q(n - 1, m - 1)).scale(&c((n + m - 1) * (n + m)));
                (&r2 * &q(n, m), rhs.scale(&frac(1, 2 * n + 1)))
            }
            Recurrence::DegreeShiftRaise => {
                let rhs = &q(n + 1, m + 1) - &(&rho2 * &q(n - 1, m + 1));
                (q(n, m), rhs.scale(&frac(-1, 2 * n + 1)))
            }
        }
    }

    pub fn holds(self, n: u32, m: u32) -> bool {
        let (lhs, rhs) = self.sides(n, m);
        lhs == rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn u(n: u32, m: i32, p: Parity) -> ScalarPoly<Rational> {
        harmonic_poly(HarmonicId::new(n, m, p).unwrap())
    }

    fn mono(a: u32, b: u32, c: u32, v: Rational) -> ScalarPoly<Rational> {
        ScalarPoly::term(Monomial::new(a, b, c), v)
    }

    #[test]
    fn low_degree_harmonics() {
        assert_eq!(u(0, 0, Parity::Plus), ScalarPoly::one());
        assert_eq!(u(1, 0, Parity::Plus), ScalarPoly::var(Axis::X0));
        assert_eq!(u(1, 1, Parity::Plus), mono(0, 1, 0, rat(-1, 1)));
        assert_eq!(u(2, 1, Parity::Plus), mono(1, 1, 0, rat(-3, 1)));
        assert_eq!(u(2, 2, Parity::Minus), mono(0, 1, 1, rat(6, 1)));
        let u20 = &mono(2, 0, 0, rat(1, 1)) - &cylinder_radius_squared().scale(&rat(1, 2));
        assert_eq!(u(2, 0, Parity::Plus), u20);
        assert!(u(4, 0, Parity::Minus).is_zero());
    }

    #[test]
    fn substitution_rule() {
        assert_eq!(u(2, -1, Parity::Plus), mono(1, 1, 0, rat(1, 2)));
        assert_eq!(u(2, -1, Parity::Minus), u(2, 1, Parity::Minus).scale(&rat(1, 6)));
    }

    #[test]
    fn index_validation() {
        assert!(HarmonicId::plus(2, 3).is_err());
        assert!(HarmonicId::plus(2, -2).is_err());
        assert!(HarmonicId::plus(0, -1).is_err());
        assert!(HarmonicId::minus(0, 0).is_ok());
        assert!(harmonic_or_zero(-1, 0, Parity::Plus).is_zero());
        assert!(harmonic_or_zero(2, 3, Parity::Plus).is_zero());
    }

    #[test]
    fn legendre_derivatives() {
        // P2 = (3t² − 1)/2
        assert_eq!(legendre_derivative(2, 0), vec![rat(-1, 2), rat(0, 1), rat(3, 2)]);
        assert_eq!(legendre_derivative(2, 1), vec![rat(0, 1), rat(3, 1)]);
        assert_eq!(legendre_derivative(3, 3), vec![rat(15, 1)]);
        assert!(legendre_derivative(2, 3).is_empty());
    }

    #[test]
    fn harmonic_and_homogeneous() {
        for n in 0..=6 {
            for m in -1..=n as i32 {
                for p in Parity::BOTH {
                    if m == -1 && n == 0 {
                        continue;
                    }
                    let h = u(n, m, p);
                    assert!(h.laplacian().is_zero(), "U{p}({n},{m})");
                    assert!(h.is_homogeneous(n));
                }
            }
        }
    }

    #[test]
    fn recurrences_hold_for_small_indices() {
        for rec in Recurrence::ALL {
            for n in 1..=5 {
                for m in rec.min_order()..=n {
                    assert!(rec.holds(n, m), "{} at ({n},{m})", rec.name());
                }
            }
        }
    }
}
