//! The JSON polynomial schema:
//! `{"terms":[{"exp":[a,b,c],"coeff":[q0,q1,q2,q3]}]}` with each `qi` a
//! rational string, terms in ascending lexicographic exponent order.

use serde::Serialize;
use serde_json::Value;

use super::monomial::Monomial;
use super::qpoly::QPolynomial;
use super::scalar_poly::ScalarPoly;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, rational_to_string, Rational};

#[derive(Serialize)]
struct TermRepr {
    exp: [u32; 3],
    coeff: [String; 4],
}

#[derive(Serialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

fn repr(f: &QPolynomial<Rational>) -> PolyRepr {
    let zero = Rational::from_integer(0.into());
    let terms = f
        .support()
        .into_iter()
        .map(|m| TermRepr {
            exp: m.exps(),
            coeff: std::array::from_fn(|k| {
                rational_to_string(f.component(k).coeff(&m).unwrap_or(&zero))
            }),
        })
        .collect();
    PolyRepr { terms }
}

/// Canonical serialization as a JSON value.
pub fn to_value(f: &QPolynomial<Rational>) -> Value {
    serde_json::to_value(repr(f)).expect("polynomial representation is always serializable")
}

/// Canonical compact serialization.
pub fn to_json(f: &QPolynomial<Rational>) -> String {
    serde_json::to_string(&repr(f)).expect("polynomial representation is always serializable")
}

pub fn from_json(text: &str) -> Result<QPolynomial<Rational>> {
    let value: Value = serde_json::from_str(text)?;
    from_value(&value)
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { path: path.into(), message: message.into() }
}

pub fn from_value(value: &Value) -> Result<QPolynomial<Rational>> {
    let obj = value.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    let terms = obj
        .get("terms")
        .ok_or_else(|| schema("$", "missing `terms`"))?
        .as_array()
        .ok_or_else(|| schema("$.terms", "expected an array"))?;

    let mut comps: [ScalarPoly<Rational>; 4] = std::array::from_fn(|_| ScalarPoly::zero());
    let mut seen = std::collections::BTreeSet::new();
    for (i, term) in terms.iter().enumerate() {
        let at = |field: &str| format!("$.terms[{i}]{field}");
        let term = term.as_object().ok_or_else(|| schema(at(""), "expected an object"))?;
        let exp = term
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| schema(at(".exp"), "expected an array of three exponents"))?;
        if exp.len() != 3 {
            return Err(schema(at(".exp"), format!("expected 3 exponents, found {}", exp.len())));
        }
        let mut exps = [0u32; 3];
        for (j, e) in exp.iter().enumerate() {
            let v = e
                .as_i64()
                .ok_or_else(|| schema(at(&format!(".exp[{j}]")), "expected an integer"))?;
            exps[j] = u32::try_from(v).map_err(|_| {
                schema(at(&format!(".exp[{j}]")), format!("exponent {v} is not a non-negative integer"))
            })?;
        }
        let m = Monomial::new(exps[0], exps[1], exps[2]);
        if !seen.insert(m) {
            return Err(schema(at(".exp"), format!("duplicate exponent {exps:?}")));
        }
        let coeff = term
            .get("coeff")
            .and_then(Value::as_array)
            .ok_or_else(|| schema(at(".coeff"), "expected an array of four rational strings"))?;
        if coeff.len() != 4 {
            return Err(schema(at(".coeff"), format!("expected 4 coefficients, found {}", coeff.len())));
        }
        for (k, c) in coeff.iter().enumerate() {
            let path = at(&format!(".coeff[{k}]"));
            let text = c.as_str().ok_or_else(|| schema(&path, "expected a string"))?;
            let q = parse_rational(text).map_err(|msg| schema(&path, msg))?;
            comps[k].add_term(m, q);
        }
    }
    Ok(QPolynomial::from_components(comps))
}
