//! Fourier-type expansion of polynomials in the inframonogenic basis.
//!
//! Coefficients are computed degree by degree: the homogeneous part `fₙ` of
//! `f` is projected onto `𝓑ₙ` with `aₙ,ⱼ = ⟨fₙ, Bₙ,ⱼ⟩ / ‖Bₙ,ⱼ‖²`. Bases of
//! different degree are not mutually orthogonal in general (for instance
//! `⟨e0, Y⁺₂,₀⟩ = 16π/3`), so projecting `f` as a whole would mix degrees.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ball::{inner_product, norm2, PiRational};
use crate::basis::{enumerate_basis, shared, BasisId};
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, rational_to_string, Rational};
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expansion {
    pub max_degree: u32,
    coefficients: BTreeMap<BasisId, Rational>,
}

impl Expansion {
    pub fn new(max_degree: u32) -> Self {
        Expansion { max_degree, coefficients: BTreeMap::new() }
    }

    /// Sets a coefficient; zero removes the entry.
    pub fn set(&mut self, id: BasisId, c: Rational) -> Result<()> {
        if id.n > self.max_degree {
            return Err(Error::InvalidIndex(format!("{id} exceeds max degree {}", self.max_degree)));
        }
        if c.is_zero() {
            self.coefficients.remove(&id);
        } else {
            self.coefficients.insert(id, c);
        }
        Ok(())
    }

    pub fn get(&self, id: BasisId) -> Rational {
        self.coefficients.get(&id).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &BTreeMap<BasisId, Rational> {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `self + λ·other`, over the larger degree range.
    pub fn add_scaled(&self, lambda: &Rational, other: &Expansion) -> Expansion {
        let mut out = Expansion { max_degree: self.max_degree.max(other.max_degree), ..self.clone() };
        for (id, c) in &other.coefficients {
            let v = out.get(*id) + lambda * c;
            out.set(*id, v).expect("degree within the combined range");
        }
        out
    }
}

impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            max_degree: u32,
            coefficients: serde_json::Map<String, serde_json::Value>,
        }
        let coefficients = self
            .coefficients
            .iter()
            .map(|(id, c)| (id.to_string(), serde_json::Value::String(rational_to_string(c))))
            .collect();
        Raw { max_degree: self.max_degree, coefficients }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Expansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            max_degree: u32,
            coefficients: BTreeMap<BasisId, String>,
        }
        let raw = Raw::deserialize(d)?;
        let mut e = Expansion::new(raw.max_degree);
        for (id, text) in raw.coefficients {
            let c = parse_rational(&text).map_err(|m| D::Error::custom(format!("coefficient of {id}: {m}")))?;
            e.set(id, c).map_err(D::Error::custom)?;
        }
        Ok(e)
    }
}

/// Coefficients of `f` in `𝓑₀ ∪ … ∪ 𝓑_max_degree`.
pub fn project(f: &QPoly, max_degree: u32) -> Result<Expansion> {
    let basis = shared();
    let mut e = Expansion::new(max_degree);
    for n in 0..=max_degree {
        let part = f.homogeneous_part(n);
        if part.is_zero() {
            continue;
        }
        let ids = enumerate_basis(n);
        let coeffs = ids
            .par_iter()
            .map(|&id| Ok(inner_product(&part, &*basis.element(id)?).ratio(&basis.norm2(id)?)))
            .collect::<Result<Vec<_>>>()?;
        for (id, c) in ids.into_iter().zip(coeffs) {
            e.set(id, c)?;
        }
    }
    Ok(e)
}

/// `Σ aₙ,ⱼ Bₙ,ⱼ`.
pub fn reconstruct(e: &Expansion) -> Result<QPoly> {
    let basis = shared();
    let mut out = QPoly::zero();
    for (&id, c) in &e.coefficients {
        out = &out + &basis.element(id)?.scale(c);
    }
    Ok(out)
}

/// `‖f − reconstruct(e)‖²`.
pub fn residual_norm2(f: &QPoly, e: &Expansion) -> Result<PiRational> {
    Ok(norm2(&(f - &reconstruct(e)?)))
}

/// `Σ aₙ,ⱼ² ‖Bₙ,ⱼ‖²`, optionally restricted to one degree.
pub fn coefficient_energy(e: &Expansion, degree: Option<u32>) -> Result<PiRational> {
    let basis = shared();
    let mut total = PiRational::zero();
    for (&id, c) in e.coefficients.iter().filter(|(id, _)| degree.is_none_or(|n| id.n == n)) {
        total += basis.norm2(id)? * (c * c);
    }
    Ok(total)
}

/// `‖f‖² − residual − Σ a²‖B‖²`; zero when Parseval's identity holds for
/// the whole polynomial.
pub fn parseval_defect(f: &QPoly, e: &Expansion) -> Result<PiRational> {
    Ok(norm2(f) - residual_norm2(f, e)? - coefficient_energy(e, None)?)
}

/// The same defect for each homogeneous part `fₙ` against its own
/// coefficients, for `n ≤ e.max_degree`.
pub fn parseval_defect_by_degree(f: &QPoly, e: &Expansion) -> Result<Vec<PiRational>> {
    let basis = shared();
    (0..=e.max_degree)
        .map(|n| {
            let part = f.homogeneous_part(n);
            let mut rec = QPoly::zero();
            for (&id, c) in e.coefficients.iter().filter(|(id, _)| id.n == n) {
                rec = &rec + &basis.element(id)?.scale(c);
            }
            Ok(norm2(&part) - norm2(&(&part - &rec)) - coefficient_energy(e, Some(n))?)
        })
        .collect()
}
