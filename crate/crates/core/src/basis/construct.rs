use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::id::{BasisId, Family};
use crate::ball::{inner_product, norm2, PiRational};
use crate::error::{Error, Result};
use crate::harmonics::{harmonic_or_zero, Parity};
use crate::ops::{apply_left, sandwich};
use crate::poly::{Axis, QPolynomial, ScalarPoly};
use crate::scalar::{Rational, Scalar};

type QPoly = QPolynomial<Rational>;

/// Gram–Schmidt constants turning `Z̲ₙ,ₘ` into `Zₙ,ₘ = Z̲ + αX + βY`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoConstants {
    pub alpha: Rational,
    /// Absent for `m = n`, where there is no `Yₙ,ₙ`.
    pub beta: Option<Rational>,
}

/// Builds basis elements on demand and memoizes them.
///
/// Every cached value is a pure function of its key, so the cache is
/// observably equivalent to recomputation and safe to share across threads.
#[derive(Debug, Default)]
pub struct Basis {
    elements: RwLock<HashMap<BasisId, Arc<QPoly>>>,
    constants: RwLock<HashMap<(u32, u32, Parity), OrthoConstants>>,
    norms: RwLock<HashMap<BasisId, PiRational>>,
}

/// A process-wide basis cache.
pub fn shared() -> &'static Basis {
    static SHARED: OnceLock<Basis> = OnceLock::new();
    SHARED.get_or_init(Basis::new)
}

/// `Bₙ,ⱼ` for the given id, from the shared cache.
pub fn basis_element(id: BasisId) -> Result<Arc<QPoly>> {
    shared().element(id)
}

fn scalar(p: ScalarPoly<Rational>) -> QPoly {
    QPolynomial::scalar(p)
}

fn int(v: i64) -> Rational {
    Rational::from_int(v)
}

/// `x̄ f + f x̄`.
fn paravector_anticommutator(f: &QPoly) -> QPoly {
    let xb = QPolynomial::position().conj();
    &(&xb * f) + &(f * &xb)
}

impl Basis {
    pub fn new() -> Self {
        Self::default()
    }

    /// The element for `id`, with its defining properties verified: it is
    /// reduced, homogeneous of degree `n` and annihilated by `∂̄(·)∂̄`.
    pub fn element(&self, id: BasisId) -> Result<Arc<QPoly>> {
        if let Some(hit) = self.elements.read().expect("basis cache poisoned").get(&id) {
            return Ok(hit.clone());
        }
        let f = self.construct(id)?;
        if !f.is_reduced() || !f.is_homogeneous(id.n) || !sandwich(false, &f).is_zero() {
            return Err(Error::Postcondition(format!(
                "{id} is not a reduced homogeneous inframonogenic polynomial of degree {}",
                id.n
            )));
        }
        let f = Arc::new(f);
        self.elements.write().expect("basis cache poisoned").insert(id, f.clone());
        Ok(f)
    }

    /// The element with coefficients converted into another scalar field.
    pub fn element_in<T: Scalar>(&self, id: BasisId) -> Result<QPolynomial<T>> {
        Ok(self.element(id)?.map_coeffs(T::from_rational))
    }

    fn construct(&self, id: BasisId) -> Result<QPoly> {
        let BasisId { n, family, parity, m } = id;
        Ok(match family {
            Family::E => monomial_element(n, m),
            Family::X => x_element(n as i64, m as i64, parity),
            Family::Y => y_element(n, m, parity),
            Family::Zu => zu_element(n, m, parity),
            Family::Z => {
                let zu = self.element(BasisId { family: Family::Zu, ..id })?;
                if m == 0 {
                    return Ok((*zu).clone());
                }
                let c = self.ortho_constants_for(n, m, parity)?;
                let mut z = &*zu + &self.element(BasisId { family: Family::X, ..id })?.scale(&c.alpha);
                if let Some(beta) = &c.beta {
                    z = &z + &self.element(BasisId { family: Family::Y, ..id })?.scale(beta);
                }
                z
            }
        })
    }

    /// `‖Bₙ,ⱼ‖²`, memoized.
    pub fn norm2(&self, id: BasisId) -> Result<PiRational> {
        if let Some(hit) = self.norms.read().expect("norm cache poisoned").get(&id) {
            return Ok(hit.clone());
        }
        let v = norm2(&*self.element(id)?);
        self.norms.write().expect("norm cache poisoned").insert(id, v.clone());
        Ok(v)
    }

    /// `α = −⟨Z̲, X⟩/‖X‖²` and `β = −⟨Z̲, Y⟩/‖Y‖²` for the `+` elements.
    pub fn ortho_constants(&self, n: u32, m: u32) -> Result<OrthoConstants> {
        self.ortho_constants_for(n, m, Parity::Plus)
    }

    pub fn ortho_constants_for(&self, n: u32, m: u32, parity: Parity) -> Result<OrthoConstants> {
        if n < 2 || m == 0 || m > n {
            return Err(Error::InvalidIndex(format!("constants need n >= 2 and 1 <= m <= n, got ({n}, {m})")));
        }
        let key = (n, m, parity);
        if let Some(hit) = self.constants.read().expect("constant cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let zu = self.element(BasisId::zu(n, m, parity)?)?;
        let x = self.element(BasisId::x(n, m, parity)?)?;
        let alpha = -(inner_product(&zu, &x).ratio(&inner_product(&x, &x)));
        let beta = if m < n {
            let y = self.element(BasisId::y(n, m, parity)?)?;
            Some(-(inner_product(&zu, &y).ratio(&inner_product(&y, &y))))
        } else {
            None
        };
        let c = OrthoConstants { alpha, beta };
        self.constants.write().expect("constant cache poisoned").insert(key, c.clone());
        Ok(c)
    }
}

/// `x_{j mod 3} e_{j div 3}`; in degree 0 simply `e_j`.
fn monomial_element(n: u32, j: u32) -> QPoly {
    let unit = if n == 0 { j } else { j / 3 } as usize;
    let p = if n == 0 {
        ScalarPoly::one()
    } else {
        ScalarPoly::var(Axis::from_index((j % 3) as usize).expect("index below 3"))
    };
    QPolynomial::along(unit, p)
}

/// `Xₙ,ₘ = ∂ U_{n+1,m}`, taken as zero outside the index range.
pub(crate) fn x_element(n: i64, m: i64, parity: Parity) -> QPoly {
    if n < 0 || m < 0 || m > n + 1 || (parity == Parity::Minus && m == 0) {
        return QPolynomial::zero();
    }
    apply_left(true, &scalar(harmonic_or_zero(n + 1, m, parity)))
}

fn y_element(n: u32, m: u32, parity: Parity) -> QPoly {
    let (n, m) = (n as i64, m as i64);
    let lower = x_element(n - 2, m, parity).scale_poly(&ScalarPoly::radius_squared());
    &paravector_anticommutator(&x_element(n - 1, m, parity)) + &lower.scale(&int(2 * (n + m)))
}

fn zu_element(n: u32, m: u32, parity: Parity) -> QPoly {
    let (n, m) = (n as i64, m as i64);
    if m == 0 {
        return contragenic(n);
    }
    let lower = x_element(n - 2, m, parity).scale_poly(&ScalarPoly::radius_squared());
    &(&paravector_anticommutator(&x_element(n - 1, m, parity)) - &scalar(harmonic_or_zero(n, m, parity)))
        + &lower.scale(&int(n + m))
}

/// `Z̲⁺ₙ,₀ = U⁻ₙ,₁ e1 − U⁺ₙ,₁ e2`.
fn contragenic(n: i64) -> QPoly {
    &QPolynomial::along(1, harmonic_or_zero(n, 1, Parity::Minus))
        - &QPolynomial::along(2, harmonic_or_zero(n, 1, Parity::Plus))
}

/// `Z̲⁺ₙ,₀` as the two-sided operator expression
/// `(e2∂̄ + ∂̄e2)U⁺ₙ₊₁,₁ − (e1∂̄ + ∂̄e1)U⁻ₙ₊₁,₁`, with `e∂̄U` and `∂̄eU` read as
/// left and right multiples of `∂̄U`.
pub fn contragenic_operator_form(n: u32) -> QPoly {
    let term = |k: usize, parity: Parity| {
        let d = apply_left(false, &scalar(harmonic_or_zero(n as i64 + 1, 1, parity)));
        &d.unit_mul_left(k) + &d.unit_mul_right(k)
    };
    &term(2, Parity::Plus) - &term(1, Parity::Minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn el(s: &str) -> QPoly {
        (*basis_element(s.parse().unwrap()).unwrap()).clone()
    }

    fn x(i: usize) -> ScalarPoly<Rational> {
        ScalarPoly::var(Axis::from_index(i).unwrap())
    }

    #[test]
    fn low_degree_monogenic_elements() {
        assert_eq!(el("0:X:+:0"), QPolynomial::constant(rat(1, 1)));
        let expected = QPolynomial::from_components([x(0).scale(&rat(2, 1)), x(1), x(2), ScalarPoly::zero()]);
        assert_eq!(el("1:X:+:0"), expected);
    }

    #[test]
    fn y_matches_the_degree_two_table_row() {
        let sq = |i| &x(i) * &x(i);
        let expected = QPolynomial::from_components([
            &(&sq(0).scale(&rat(8, 1)) + &sq(1).scale(&rat(6, 1))) + &sq(2).scale(&rat(6, 1)),
            (&x(0) * &x(1)).scale(&rat(-2, 1)),
            (&x(0) * &x(2)).scale(&rat(-2, 1)),
            ScalarPoly::zero(),
        ]);
        assert_eq!(el("2:Y:+:0"), expected);
    }

    #[test]
    fn contragenic_element_and_operator_form() {
        let expected = QPolynomial::from_components([
            ScalarPoly::zero(),
            (&x(0) * &x(2)).scale(&rat(-3, 1)),
            (&x(0) * &x(1)).scale(&rat(3, 1)),
            ScalarPoly::zero(),
        ]);
        assert_eq!(el("2:Zu:+:0"), expected);
        for n in 2..=5 {
            let z = el(&format!("{n}:Zu:+:0"));
            assert_eq!(contragenic_operator_form(n).ratio_to(&z), Some(rat(-2 * (n as i64 + 2), 1)));
        }
    }

    #[test]
    fn alpha_examples() {
        let basis = Basis::new();
        assert_eq!(basis.ortho_constants(2, 1).unwrap().alpha, rat(2, 15));
        assert_eq!(basis.ortho_constants(2, 2).unwrap().alpha, rat(1, 15));
        assert!(basis.ortho_constants(2, 2).unwrap().beta.is_none());
        assert!(basis.ortho_constants(2, 0).is_err());
    }

    #[test]
    fn beta_orthogonalizes() {
        let basis = Basis::new();
        let c = basis.ortho_constants(2, 1).unwrap();
        let z = basis.element("2:Z:+:1".parse().unwrap()).unwrap();
        let y = basis.element("2:Y:+:1".parse().unwrap()).unwrap();
        assert!(inner_product(&z, &y).is_zero());
        assert_eq!(c.beta, Some(rat(-63, 88)));
    }

    #[test]
    fn float_elements() {
        let f: QPolynomial<f64> = shared().element_in("2:Y:+:0".parse().unwrap()).unwrap();
        let v = f.eval(&[1.0, 0.0, 0.0]);
        assert_eq!(v.0[0], 8.0);
    }
}
