//! Human-readable rendering in the layout of the published tables:
//! scalar part first, then each imaginary component grouped as `( ... ) e_k`.

use std::fmt;

use num_traits::{One, Signed};

use super::monomial::Monomial;
use super::qpoly::QPolynomial;
use super::scalar_poly::ScalarPoly;
use crate::scalar::{rational_to_string, Rational};

/// Table term order: ascending in the `x2` exponent, then `x1`, then descending in `x0`.
fn table_key(m: &Monomial) -> (u32, u32, std::cmp::Reverse<u32>) {
    let [a, b, c] = m.exps();
    (c, b, std::cmp::Reverse(a))
}

fn term_body(c: &Rational, m: &Monomial) -> String {
    let mono = m.to_string();
    let abs = c.abs();
    match (mono.is_empty(), abs.is_one()) {
        (true, _) => rational_to_string(&abs),
        (false, true) => mono,
        (false, false) => format!("{} {mono}", rational_to_string(&abs)),
    }
}

/// A scalar polynomial as a signed sum, e.g. `12 x_0^2 - 3/2 x_1 x_2`.
pub fn render_scalar(p: &ScalarPoly<Rational>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|(m, _)| table_key(m));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let body = term_body(c, m);
        match (i, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub fn render(f: &QPolynomial<Rational>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let scalar = f.component(0);
    if !scalar.is_zero() {
        out.push_str(&render_scalar(scalar));
    }
    for k in 1..4 {
        let comp = f.component(k);
        if comp.is_zero() {
            continue;
        }
        let body = render_scalar(comp);
        let piece = if comp.len() == 1 {
            let (m, c) = comp.terms().next().expect("nonempty component");
            if m.degree() == 0 && c.abs().is_one() {
                format!("{}e_{k}", if c.is_negative() { "-" } else { "" })
            } else {
                format!("{body} e_{k}")
            }
        } else {
            format!("( {body} ) e_{k}")
        };
        if !out.is_empty() {
            out.push(' ');
            if !piece.starts_with('-') {
                out.push_str("+ ");
            }
        }
        out.push_str(&piece);
    }
    out
}

impl fmt::Display for QPolynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl fmt::Display for ScalarPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_scalar(self))
    }
}

/// Equality up to whitespace, the comparison used against typeset tables.
pub fn eq_modulo_whitespace(a: &str, b: &str) -> bool {
    a.chars().filter(|c| !c.is_whitespace()).eq(b.chars().filter(|c| !c.is_whitespace()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Axis;
    use crate::scalar::rat;

    fn x(i: usize) -> ScalarPoly<Rational> {
        ScalarPoly::var(Axis::from_index(i).unwrap())
    }

    #[test]
    fn renders_table_layout() {
        let s = &(&x(0) * &x(0)).scale(&rat(8, 1)) + &(&x(1) * &x(1)).scale(&rat(6, 1));
        let f = QPolynomial::from_components([
            s,
            (&x(0) * &x(1)).scale(&rat(-2, 1)),
            &(&x(0) * &x(0)) - &(&x(1) * &x(2)).scale(&rat(3, 2)),
            ScalarPoly::zero(),
        ]);
        assert_eq!(
            render(&f),
            "8 x_0^2 + 6 x_1^2 -2 x_0 x_1 e_1 + ( x_0^2 - 3/2 x_1 x_2 ) e_2"
        );
    }

    #[test]
    fn renders_units_and_zero() {
        assert_eq!(render(&QPolynomial::zero()), "0");
        assert_eq!(render(&QPolynomial::unit(1)), "e_1");
        assert_eq!(render(&(-&QPolynomial::unit(2))), "-e_2");
        assert_eq!(render(&QPolynomial::unit(0)), "1");
        let f = &QPolynomial::constant(rat(1, 2)) - &QPolynomial::unit(3);
        assert_eq!(render(&f), "1/2 -e_3");
    }

    #[test]
    fn whitespace_insensitive_comparison() {
        assert!(eq_modulo_whitespace("( 12 x_0^2 )e_1", "(12 x_0^2) e_1"));
        assert!(!eq_modulo_whitespace("x_0", "x_1"));
    }
}
