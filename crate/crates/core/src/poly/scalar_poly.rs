use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::monomial::{Axis, Monomial};
use crate::scalar::Scalar;

/// Real polynomial in `x0, x1, x2`, stored sparsely with no zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPoly<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for ScalarPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> ScalarPoly<T> {
    pub fn zero() -> Self {
        ScalarPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn var(axis: Axis) -> Self {
        Self::term(Monomial::var(axis), T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `x0² + x1² + x2²`.
    pub fn radius_squared() -> Self {
        Axis::ALL
            .iter()
            .map(|&a| Self::term(Monomial::var(a).mul(&Monomial::var(a)), T::one()))
            .fold(Self::zero(), |acc, t| acc + t)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, T> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&T> {
        self.terms.get(m)
    }

    /// Highest total degree of a stored term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Every term has total degree `n`. The zero polynomial is homogeneous of every degree.
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    /// Terms of total degree exactly `n`.
    pub fn homogeneous_part(&self, n: u32) -> Self {
        ScalarPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ScalarPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())).collect(),
        }
    }

    pub fn partial(&self, axis: Axis) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(axis) {
                out.add_term(lowered, c.clone() * T::from_int(e as i64));
            }
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        Axis::ALL
            .iter()
            .map(|&a| self.partial(a).partial(a))
            .fold(Self::zero(), |acc, t| acc + t)
    }

    pub fn eval(&self, point: &[T; 3]) -> T {
        let mut total = T::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps().iter()) {
                for _ in 0..e {
                    v = v * x.clone();
                }
            }
            total = total + v;
        }
        total
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ScalarPoly<U> {
        ScalarPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Whether `self = r · other` for some scalar `r`; returns `r`.
    /// Both polynomials zero gives `Some(1)`; exactly one zero gives `None`.
    pub fn ratio_to(&self, other: &Self) -> Option<T> {
        if self.is_zero() && other.is_zero() {
            return Some(T::one());
        }
        let (m, c) = other.terms.iter().next()?;
        let r = self.terms.get(m)?.clone() / c.clone();
        (other.scale(&r) == *self).then_some(r)
    }
}

impl<T: Scalar> AddAssign<&ScalarPoly<T>> for ScalarPoly<T> {
    fn add_assign(&mut self, rhs: &ScalarPoly<T>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<T: Scalar> SubAssign<&ScalarPoly<T>> for ScalarPoly<T> {
    fn sub_assign(&mut self, rhs: &ScalarPoly<T>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<T: Scalar> Add<&ScalarPoly<T>> for &ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn add(self, rhs: &ScalarPoly<T>) -> ScalarPoly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Scalar> Sub<&ScalarPoly<T>> for &ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn sub(self, rhs: &ScalarPoly<T>) -> ScalarPoly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Mul<&ScalarPoly<T>> for &ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn mul(self, rhs: &ScalarPoly<T>) -> ScalarPoly<T> {
        let mut out = ScalarPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn neg(self) -> ScalarPoly<T> {
        ScalarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Add for ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn add(mut self, rhs: ScalarPoly<T>) -> ScalarPoly<T> {
        self += &rhs;
        self
    }
}

impl<T: Scalar> Sub for ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn sub(mut self, rhs: ScalarPoly<T>) -> ScalarPoly<T> {
        self -= &rhs;
        self
    }
}

impl<T: Scalar> Mul for ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn mul(self, rhs: ScalarPoly<T>) -> ScalarPoly<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for ScalarPoly<T> {
    type Output = ScalarPoly<T>;
    fn neg(self) -> ScalarPoly<T> {
        -&self
    }
}

impl<T: Scalar> Zero for ScalarPoly<T> {
    fn zero() -> Self {
        ScalarPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> One for ScalarPoly<T> {
    fn one() -> Self {
        ScalarPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type P = ScalarPoly<Rational>;

    fn x(i: usize) -> P {
        P::var(Axis::from_index(i).unwrap())
    }

    #[test]
    fn zero_terms_are_pruned() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn partials_and_laplacian() {
        let r2 = P::radius_squared();
        assert_eq!(r2.laplacian(), P::constant(rat(6, 1)));
        let p = &r2 * &x(0);
        assert_eq!(p.laplacian(), x(0).scale(&rat(10, 1)));
        assert!(p.laplacian().laplacian().is_zero());
    }

    #[test]
    fn ratio_detection() {
        let p = &x(0) + &x(1);
        assert_eq!(p.scale(&rat(-3, 2)).ratio_to(&p), Some(rat(-3, 2)));
        assert_eq!((&p + &x(2)).ratio_to(&p), None);
    }

    #[test]
    fn homogeneity() {
        let p = &(&x(0) * &x(1)) + &x(2);
        assert!(!p.is_homogeneous(2));
        assert!(p.homogeneous_part(2).is_homogeneous(2));
        assert!(P::zero().is_homogeneous(7));
    }
}
