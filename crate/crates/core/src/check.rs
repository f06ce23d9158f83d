//! The hard invariants of the basis, evaluated degree by degree.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::ball::{inner_product, PiRational};
use crate::basis::{enumerate_basis, infr_dimension, infr_nullspace, shared, spans_within, Basis, BasisId};
use crate::error::Result;
use crate::harmonics::Parity;
use crate::ops::{apply_left, apply_right, sandwich};
use crate::report::alpha_closed_form;
use crate::scalar::{rational_to_string, Rational, Scalar};
use crate::QPoly;

/// Where the checked polynomials come from.
pub trait ElementSource: Sync {
    fn element(&self, id: BasisId) -> Result<QPoly>;
}

impl ElementSource for Basis {
    fn element(&self, id: BasisId) -> Result<QPoly> {
        Ok((*Basis::element(self, id)?).clone())
    }
}

/// Another source with one element altered: the coefficient of its first
/// term is negated.
pub struct Mutated<'a, S: ?Sized> {
    pub inner: &'a S,
    pub target: BasisId,
}

impl<S: ElementSource + ?Sized> ElementSource for Mutated<'_, S> {
    fn element(&self, id: BasisId) -> Result<QPoly> {
        let f = self.inner.element(id)?;
        if id != self.target {
            return Ok(f);
        }
        let mut comps = f.into_components();
        if let Some(p) = comps.iter_mut().find(|p| !p.is_zero()) {
            let (m, c) = p.terms().next().map(|(m, c)| (*m, c.clone())).expect("nonzero component");
            p.add_term(m, -(c.clone() + c));
        }
        Ok(QPoly::from_components(comps))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub invariant: &'static str,
    pub degree: u32,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub max_degree: u32,
    pub dims: Vec<usize>,
    pub outcomes: Vec<Outcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    pub fn dims_line(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        format!("dims: {}", dims.join(","))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let mark = if o.passed { "pass" } else { "FAIL" };
            writeln!(f, "[{mark}] {} n={}: {}", o.invariant, o.degree, o.detail)?;
        }
        writeln!(f, "{}", self.dims_line())?;
        if self.passed() {
            writeln!(f, "all {} checks passed", self.outcomes.len())
        } else {
            let names: Vec<String> = self.failures().map(|o| format!("{} (n={})", o.invariant, o.degree)).collect();
            writeln!(f, "failed: {}", names.join(", "))
        }
    }
}

/// `6n + 3`, which also covers `n = 0, 1`.
pub fn expected_dimension(n: u32) -> usize {
    6 * n as usize + 3
}

/// Runs every hard invariant for degrees `0..=max_degree` on the shared basis.
pub fn run_checks(max_degree: u32) -> Result<CheckReport> {
    run_checks_on(shared(), max_degree)
}

pub fn run_checks_on<S: ElementSource + ?Sized>(source: &S, max_degree: u32) -> Result<CheckReport> {
    let mut outcomes = Vec::new();
    let mut dims = Vec::new();
    for n in 0..=max_degree {
        let ids = enumerate_basis(n);
        let elements = ids.iter().map(|&id| source.element(id)).collect::<Result<Vec<_>>>()?;
        let mut push = |invariant, passed, detail: String| outcomes.push(Outcome { invariant, degree: n, passed, detail });

        let bad: Vec<String> = ids
            .iter()
            .zip(&elements)
            .filter(|(_, f)| !f.is_reduced() || !f.is_homogeneous(n) || !sandwich(false, f).is_zero())
            .map(|(id, _)| id.to_string())
            .collect();
        push("annihilation", bad.is_empty(), describe(ids.len(), &bad, "elements reduced, homogeneous and annihilated"));

        let dim = infr_dimension(n);
        dims.push(dim);
        push("dimension", dim == expected_dimension(n), format!("nullity {dim}, expected {}", expected_dimension(n)));

        let (rank, contained) = spans_within(&elements, &infr_nullspace(n), n);
        push(
            "independence",
            rank == ids.len() && contained,
            format!("rank {rank} of {}, inside the nullspace: {contained}", ids.len()),
        );

        let off = off_diagonal(&ids, &elements);
        push("diagonality", off.is_empty(), describe_gram(&off));

        if n >= 2 {
            let wrong = alpha_mismatches(source, n)?;
            push("alpha", wrong.is_empty(), describe(n as usize, &wrong, "constants equal (n-m+1)/((n+1)(2n+1))"));
        }

        let wrong = appell_failures(source, n)?;
        push("appell", wrong.is_empty(), describe(n as usize + 2, &wrong, "orders satisfy the Appell identity"));
    }
    Ok(CheckReport { max_degree, dims, outcomes })
}

fn describe(total: usize, bad: &[String], what: &str) -> String {
    if bad.is_empty() {
        format!("{total} {what}")
    } else {
        format!("violated by {}", bad.join(", "))
    }
}

fn describe_gram(off: &[String]) -> String {
    if off.is_empty() {
        "Gram matrix diagonal with positive diagonal".into()
    } else {
        format!("{} defects, first {}", off.len(), off[0])
    }
}

/// Nonzero off-diagonal entries and nonpositive diagonal entries.
fn off_diagonal(ids: &[BasisId], elements: &[QPoly]) -> Vec<String> {
    let pairs: Vec<(usize, usize)> = (0..ids.len()).flat_map(|i| (i..ids.len()).map(move |j| (i, j))).collect();
    let values: Vec<PiRational> = pairs.par_iter().map(|&(i, j)| inner_product(&elements[i], &elements[j])).collect();
    pairs
        .into_iter()
        .zip(values)
        .filter(|((i, j), v)| if i == j { !v.is_positive() } else { !v.is_zero() })
        .map(|((i, j), v)| format!("<{}, {}> = {v}", ids[i], ids[j]))
        .collect()
}

fn alpha_mismatches<S: ElementSource + ?Sized>(source: &S, n: u32) -> Result<Vec<String>> {
    let mut wrong = Vec::new();
    for m in 1..=n {
        let zu = source.element(BasisId::zu(n, m, Parity::Plus)?)?;
        let x = source.element(BasisId::x(n, m, Parity::Plus)?)?;
        let alpha: Rational = -(inner_product(&zu, &x).ratio(&inner_product(&x, &x)));
        let expected = alpha_closed_form(n.into(), m.into());
        if alpha != expected {
            wrong.push(format!("m={m}: {} vs {}", rational_to_string(&alpha), rational_to_string(&expected)));
        }
    }
    Ok(wrong)
}

fn appell_failures<S: ElementSource + ?Sized>(source: &S, n: u32) -> Result<Vec<String>> {
    let mut wrong = Vec::new();
    for m in 0..=n + 1 {
        for p in Parity::BOTH {
            let Ok(id) = BasisId::x(n, m, p) else { continue };
            let x = source.element(id)?;
            let expected = if m == n + 1 || n == 0 {
                QPoly::zero()
            } else {
                source.element(BasisId::x(n - 1, m, p)?)?.scale(&Rational::from_int(2 * (n + m + 1) as i64))
            };
            if apply_left(true, &x) != expected || apply_right(true, &x) != expected {
                wrong.push(id.to_string());
            }
        }
    }
    Ok(wrong)
}
