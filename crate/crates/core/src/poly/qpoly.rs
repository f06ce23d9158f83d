use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::monomial::{Axis, Monomial};
use super::scalar_poly::ScalarPoly;
use crate::scalar::Scalar;

/// Hamilton product on coefficient quadruples `(e0, e1, e2, e3)` with
/// `e1² = e2² = e3² = e1e2e3 = -1`.
fn hamilton<R>(a: &[R; 4], b: &[R; 4], mul: impl Fn(&R, &R) -> R) -> [R; 4]
where
    R: Add<Output = R> + Sub<Output = R>,
{
    let p = |i: usize, j: usize| mul(&a[i], &b[j]);
    [
        p(0, 0) - p(1, 1) - p(2, 2) - p(3, 3),
        p(0, 1) + p(1, 0) + p(2, 3) - p(3, 2),
        p(0, 2) - p(1, 3) + p(2, 0) + p(3, 1),
        p(0, 3) + p(1, 2) - p(2, 1) + p(3, 0),
    ]
}

/// A quaternion with coefficients in `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quaternion<T>(pub [T; 4]);

impl<T: Scalar> Quaternion<T> {
    pub fn zero() -> Self {
        Quaternion(std::array::from_fn(|_| T::zero()))
    }

    pub fn unit(k: usize) -> Self {
        let mut q = Self::zero();
        q.0[k] = T::one();
        q
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.0.clone();
        Quaternion([a, -b, -c, -d])
    }
}

impl<T: Scalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, rhs: &Quaternion<T>) -> Quaternion<T> {
        Quaternion(hamilton(&self.0, &rhs.0, |x, y| x.clone() * y.clone()))
    }
}

impl<T: Scalar> Add for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn add(self, rhs: &Quaternion<T>) -> Quaternion<T> {
        Quaternion(std::array::from_fn(|k| self.0[k].clone() + rhs.0[k].clone()))
    }
}

/// Quaternion-valued polynomial in `x0, x1, x2`: one [`ScalarPoly`] per unit `e0..e3`.
///
/// The `e3` component is always stored, so "reduced" (paravector-valued) is a
/// checkable predicate rather than a representation invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolynomial<T> {
    comps: [ScalarPoly<T>; 4],
}

impl<T: Scalar> Default for QPolynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> QPolynomial<T> {
    pub fn zero() -> Self {
        QPolynomial { comps: std::array::from_fn(|_| ScalarPoly::zero()) }
    }

    pub fn from_components(comps: [ScalarPoly<T>; 4]) -> Self {
        QPolynomial { comps }
    }

    /// `p · e0`.
    pub fn scalar(p: ScalarPoly<T>) -> Self {
        Self::along(0, p)
    }

    /// `p · e_k`.
    pub fn along(k: usize, p: ScalarPoly<T>) -> Self {
        let mut q = Self::zero();
        q.comps[k] = p;
        q
    }

    pub fn unit(k: usize) -> Self {
        Self::along(k, ScalarPoly::one())
    }

    pub fn constant(c: T) -> Self {
        Self::scalar(ScalarPoly::constant(c))
    }

    pub fn var(axis: Axis) -> Self {
        Self::scalar(ScalarPoly::var(axis))
    }

    /// The identity paravector `x = x0 + x1 e1 + x2 e2`.
    pub fn position() -> Self {
        QPolynomial {
            comps: [
                ScalarPoly::var(Axis::X0),
                ScalarPoly::var(Axis::X1),
                ScalarPoly::var(Axis::X2),
                ScalarPoly::zero(),
            ],
        }
    }

    /// `|x|² = x0² + x1² + x2²` as a scalar polynomial.
    pub fn radius_squared() -> Self {
        Self::scalar(ScalarPoly::radius_squared())
    }

    pub fn component(&self, k: usize) -> &ScalarPoly<T> {
        &self.comps[k]
    }

    pub fn components(&self) -> &[ScalarPoly<T>; 4] {
        &self.comps
    }

    pub fn into_components(self) -> [ScalarPoly<T>; 4] {
        self.comps
    }

    /// The real part `f0` as a scalar-valued polynomial.
    pub fn scalar_part(&self) -> Self {
        Self::scalar(self.comps[0].clone())
    }

    /// `f1 e1 + f2 e2 + f3 e3`.
    pub fn vector_part(&self) -> Self {
        let mut q = self.clone();
        q.comps[0] = ScalarPoly::zero();
        q
    }

    /// Component `k` as a scalar-valued polynomial (`f_k · e0`).
    pub fn component_poly(&self, k: usize) -> Self {
        Self::scalar(self.comps[k].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(ScalarPoly::is_zero)
    }

    /// No `e3` term: values lie in `span{e0, e1, e2}` ≅ R³.
    pub fn is_reduced(&self) -> bool {
        self.comps[3].is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.comps[1..].iter().all(ScalarPoly::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(ScalarPoly::degree).max()
    }

    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.comps.iter().all(|c| c.is_homogeneous(n))
    }

    pub fn homogeneous_part(&self, n: u32) -> Self {
        QPolynomial { comps: std::array::from_fn(|k| self.comps[k].homogeneous_part(n)) }
    }

    /// Monomials with a nonzero coefficient in any component, ascending.
    pub fn support(&self) -> Vec<Monomial> {
        let mut ms: Vec<Monomial> =
            self.comps.iter().flat_map(|c| c.terms().map(|(m, _)| *m)).collect();
        ms.sort();
        ms.dedup();
        ms
    }

    pub fn scale(&self, c: &T) -> Self {
        QPolynomial { comps: std::array::from_fn(|k| self.comps[k].scale(c)) }
    }

    pub fn scale_poly(&self, p: &ScalarPoly<T>) -> Self {
        QPolynomial { comps: std::array::from_fn(|k| &self.comps[k] * p) }
    }

    pub fn conj(&self) -> Self {
        QPolynomial {
            comps: std::array::from_fn(|k| {
                if k == 0 {
                    self.comps[0].clone()
                } else {
                    -&self.comps[k]
                }
            }),
        }
    }

    pub fn partial(&self, axis: Axis) -> Self {
        QPolynomial { comps: std::array::from_fn(|k| self.comps[k].partial(axis)) }
    }

    pub fn laplacian(&self) -> Self {
        QPolynomial { comps: std::array::from_fn(|k| self.comps[k].laplacian()) }
    }

    /// Multiplies by the unit `e_k` on the left.
    pub fn unit_mul_left(&self, k: usize) -> Self {
        &Self::unit(k) * self
    }

    /// Multiplies by the unit `e_k` on the right.
    pub fn unit_mul_right(&self, k: usize) -> Self {
        self * &Self::unit(k)
    }

    pub fn eval(&self, point: &[T; 3]) -> Quaternion<T> {
        Quaternion(std::array::from_fn(|k| self.comps[k].eval(point)))
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> QPolynomial<U> {
        QPolynomial { comps: std::array::from_fn(|k| self.comps[k].map_coeffs(&f)) }
    }

    /// Whether `self = r · other` for a single scalar `r`; returns `r`.
    pub fn ratio_to(&self, other: &Self) -> Option<T> {
        if self.is_zero() && other.is_zero() {
            return Some(T::one());
        }
        let k = (0..4).find(|&k| !other.comps[k].is_zero())?;
        let r = self.comps[k].ratio_to(&other.comps[k])?;
        (other.scale(&r) == *self).then_some(r)
    }
}

impl<T: Scalar> Add<&QPolynomial<T>> for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn add(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        QPolynomial { comps: std::array::from_fn(|k| &self.comps[k] + &rhs.comps[k]) }
    }
}

impl<T: Scalar> Sub<&QPolynomial<T>> for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn sub(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        QPolynomial { comps: std::array::from_fn(|k| &self.comps[k] - &rhs.comps[k]) }
    }
}

impl<T: Scalar> Mul<&QPolynomial<T>> for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn mul(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        QPolynomial { comps: hamilton(&self.comps, &rhs.comps, |x, y| x * y) }
    }
}

impl<T: Scalar> Neg for &QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn neg(self) -> QPolynomial<T> {
        QPolynomial { comps: std::array::from_fn(|k| -&self.comps[k]) }
    }
}

impl<T: Scalar> Add for QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn add(self, rhs: QPolynomial<T>) -> QPolynomial<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn sub(self, rhs: QPolynomial<T>) -> QPolynomial<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn mul(self, rhs: QPolynomial<T>) -> QPolynomial<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for QPolynomial<T> {
    type Output = QPolynomial<T>;
    fn neg(self) -> QPolynomial<T> {
        -&self
    }
}

impl<T: Scalar> Zero for QPolynomial<T> {
    fn zero() -> Self {
        QPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
}
