//! Exact integration over the closed unit ball `B = {|x| ≤ 1}` in R³.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::harmonics::{harmonic_poly, HarmonicId, Parity};
use crate::poly::{Monomial, QPolynomial, ScalarPoly};
use crate::scalar::{parse_rational, rational_to_string, Rational, Scalar};

/// The real number `coeff · π`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PiMultiple<T> {
    pub coeff: T,
}

/// An exact rational multiple of π, the value type of every inner product.
pub type PiRational = PiMultiple<Rational>;

impl<T: Scalar> PiMultiple<T> {
    pub fn new(coeff: T) -> Self {
        PiMultiple { coeff }
    }

    pub fn zero() -> Self {
        PiMultiple { coeff: T::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, c: &T) -> Self {
        PiMultiple { coeff: self.coeff.clone() * c.clone() }
    }

    /// The dimensionless ratio `self / other`.
    pub fn ratio(&self, other: &Self) -> T {
        self.coeff.clone() / other.coeff.clone()
    }
}

impl PiRational {
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        PiMultiple { coeff: Rational::new(numer.into(), denom.into()) }
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    /// Parses the `pi_coeff` string form.
    pub fn parse(text: &str) -> Result<Self> {
        parse_rational(text)
            .map(PiMultiple::new)
            .map_err(|message| Error::Schema { path: "$.pi_coeff".into(), message })
    }

    pub fn to_f64(&self) -> f64 {
        f64::from_rational(&self.coeff) * std::f64::consts::PI
    }
}

impl<T: Scalar> Add for PiMultiple<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        PiMultiple { coeff: self.coeff + rhs.coeff }
    }
}

impl<T: Scalar> AddAssign for PiMultiple<T> {
    fn add_assign(&mut self, rhs: Self) {
        self.coeff = self.coeff.clone() + rhs.coeff;
    }
}

impl<T: Scalar> Sub for PiMultiple<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        PiMultiple { coeff: self.coeff - rhs.coeff }
    }
}

impl<T: Scalar> Neg for PiMultiple<T> {
    type Output = Self;
    fn neg(self) -> Self {
        PiMultiple { coeff: -self.coeff }
    }
}

impl<T: Scalar> Mul<T> for PiMultiple<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        PiMultiple { coeff: self.coeff * rhs }
    }
}

impl<T: Scalar> std::iter::Sum for PiMultiple<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl fmt::Display for PiRational {
    /// `0`, `π`, `-π/3`, `8π/5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return f.write_str("0");
        }
        let numer = self.coeff.numer();
        let head = if numer.is_one() {
            "π".to_string()
        } else if *numer == -BigInt::one() {
            "-π".to_string()
        } else {
            format!("{numer}π")
        };
        if self.coeff.is_integer() {
            f.write_str(&head)
        } else {
            write!(f, "{head}/{}", self.coeff.denom())
        }
    }
}

impl Serialize for PiRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry("pi_coeff", &rational_to_string(&self.coeff))?;
        map.end()
    }
}

fn double_factorial_odd(k: u32) -> BigInt {
    // (k−1)!! for even k
    (1..k).step_by(2).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// `∫_B x0ᵃ x1ᵇ x2ᶜ dV`, which vanishes unless every exponent is even and is
/// otherwise `4π (a−1)!!(b−1)!!(c−1)!! / ((s+3)(s+1)!!)` with `s = a+b+c`.
pub fn ball_monomial_integral<T: Scalar>(m: Monomial) -> PiMultiple<T> {
    let [a, b, c] = m.exps();
    if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
        return PiMultiple::zero();
    }
    let s = a + b + c;
    let numer = BigInt::from(4) * double_factorial_odd(a) * double_factorial_odd(b) * double_factorial_odd(c);
    let denom = BigInt::from(s + 3) * double_factorial_odd(s + 2);
    PiMultiple::new(T::from_big_ratio(&numer, &denom))
}

/// `∫_B p q dV` for real polynomials.
pub fn scalar_inner<T: Scalar>(p: &ScalarPoly<T>, q: &ScalarPoly<T>) -> PiMultiple<T> {
    let mut total = T::zero();
    for (ma, ca) in p.terms() {
        for (mb, cb) in q.terms() {
            let prod = ma.mul(mb);
            let [x, y, z] = prod.exps();
            if x % 2 == 1 || y % 2 == 1 || z % 2 == 1 {
                continue;
            }
            let w = ball_monomial_integral::<T>(prod).coeff;
            total = total + ca.clone() * cb.clone() * w;
        }
    }
    PiMultiple::new(total)
}

/// `⟨f, g⟩ = ∫_B Σₖ fₖ gₖ dV`, summed over all four components.
pub fn inner_product<T: Scalar>(f: &QPolynomial<T>, g: &QPolynomial<T>) -> PiMultiple<T> {
    (0..4).map(|k| scalar_inner(f.component(k), g.component(k))).sum()
}

pub fn norm2<T: Scalar>(f: &QPolynomial<T>) -> PiMultiple<T> {
    inner_product(f, f)
}

/// `⟨ρ²ᵏU, ρ²ᵏ'U'⟩` by the closed form
/// `2(1+δ₀ₘ)π (n+m)!/(n−m)! / ((2(k+k')+n+n'+3)(2n+1))` on equal indices,
/// and zero otherwise.
pub fn harmonic_inner_closed_form(k: u32, k2: u32, a: HarmonicId, b: HarmonicId) -> Result<PiRational> {
    if a.m < 0 || b.m < 0 {
        return Err(Error::InvalidIndex("closed form requires m >= 0; substitute U_{n,-1} first".into()));
    }
    if a != b || (a.parity == Parity::Minus && a.m == 0) {
        return Ok(PiRational::zero());
    }
    let (n, m) = (a.n as u64, a.m as u64);
    let ratio: BigInt = ((n - m + 1)..=(n + m)).map(BigInt::from).product();
    let doubling = if m == 0 { 2 } else { 1 };
    let numer = BigInt::from(2 * doubling) * ratio;
    let denom = BigInt::from(2 * (k + k2) as u64 + 2 * n + 3) * BigInt::from(2 * n + 1);
    Ok(PiMultiple::new(Rational::new(numer, denom)))
}

/// `⟨ρ²ᵏU, ρ²ᵏ'U'⟩` by direct integration.
pub fn harmonic_inner_integrated(k: u32, k2: u32, a: HarmonicId, b: HarmonicId) -> PiRational {
    let rho2 = ScalarPoly::radius_squared();
    let lift = |k: u32, id: HarmonicId| (0..k).fold(harmonic_poly(id), |acc, _| &acc * &rho2);
    scalar_inner(&lift(k, a), &lift(k2, b))
}
