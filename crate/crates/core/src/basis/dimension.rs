//! `dim Infrₙ` as the nullity of the sandwich operator restricted to reduced
//! homogeneous polynomials of degree `n`.

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::ops::sandwich;
use crate::poly::{Monomial, QPolynomial, ScalarPoly};
use crate::scalar::Rational;

type QPoly = QPolynomial<Rational>;

/// Coordinates of a polynomial in the monomial basis `x^a e_k` of degree
/// `n`, for units `k < units`; terms of other degrees are ignored.
pub fn coordinates(f: &QPoly, n: u32, units: usize) -> Vec<Rational> {
    let monos = Monomial::of_degree(n);
    let mut v = Vec::with_capacity(units * monos.len());
    for k in 0..units {
        for m in &monos {
            v.push(f.component(k).coeff(m).cloned().unwrap_or_else(Rational::zero));
        }
    }
    v
}

/// The reduced polynomial with the given degree-`n` coordinates.
pub fn from_coordinates(v: &[Rational], n: u32) -> QPoly {
    let monos = Monomial::of_degree(n);
    let comps: [ScalarPoly<Rational>; 4] = std::array::from_fn(|k| {
        if k == 3 {
            return ScalarPoly::zero();
        }
        ScalarPoly::from_terms(monos.iter().enumerate().map(|(i, m)| (*m, v[k * monos.len() + i].clone())))
    });
    QPolynomial::from_components(comps)
}

/// Matrix of `f ↦ ∂̄f∂̄` from reduced degree-`n` polynomials
/// (`3(n+1)(n+2)/2` columns) to quaternion polynomials of degree `n − 2`.
pub fn sandwich_matrix(n: u32) -> Matrix {
    let monos = Monomial::of_degree(n);
    let out_len = if n >= 2 { 4 * Monomial::of_degree(n - 2).len() } else { 0 };
    let columns: Vec<Vec<Rational>> = (0..3)
        .flat_map(|k| monos.iter().map(move |m| (k, *m)))
        .map(|(k, m)| {
            let f = QPolynomial::along(k, ScalarPoly::term(m, Rational::from_integer(1.into())));
            if n >= 2 {
                coordinates(&sandwich(false, &f), n - 2, 4)
            } else {
                Vec::new()
            }
        })
        .collect();
    Matrix::from_columns(&columns, out_len)
}

pub fn infr_dimension(n: u32) -> usize {
    let a = sandwich_matrix(n);
    a.cols() - a.rank()
}

/// A basis of `Infrₙ` read off the reduced row echelon form.
pub fn infr_nullspace(n: u32) -> Vec<QPoly> {
    sandwich_matrix(n).nullspace().iter().map(|v| from_coordinates(v, n)).collect()
}

/// Whether `elements` are linearly independent and all lie in the span of `space`.
pub fn spans_within(elements: &[QPoly], space: &[QPoly], n: u32) -> (usize, bool) {
    let coords = |fs: &[QPoly]| fs.iter().map(|f| coordinates(f, n, 3)).collect::<Vec<_>>();
    let len = 3 * Monomial::of_degree(n).len();
    let el = coords(elements);
    let sp = coords(space);
    let rank_el = Matrix::from_rows(el.clone(), len).rank();
    let rank_sp = Matrix::from_rows(sp.clone(), len).rank();
    let rank_both = Matrix::from_rows([sp, el].concat(), len).rank();
    (rank_el, rank_both == rank_sp)
}
