//! Comparison of the published closed forms, expansions and tables with
//! exactly computed values.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::ball::{inner_product, norm2, PiRational};
use crate::basis::{
    appell_sides, components_expansion, contragenic_operator_form, enumerate_basis, shared, BasisId, Family,
};
use crate::error::Result;
use crate::harmonics::Parity;
use crate::identities::{dbar_vector_sandwich_as_printed, dbar_vector_sandwich_closed_form};
use crate::ops::sandwich;
use crate::poly::render::render;
use crate::poly::{Axis, ScalarPoly};
use crate::scalar::{rational_to_string, Rational, Scalar};
use crate::tables::{compare_row, golden_tables};
use crate::QPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Match,
    Mismatch,
    OutOfRange,
    Unparseable,
}

impl ReportStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportStatus::Match => "match",
            ReportStatus::Mismatch => "mismatch",
            ReportStatus::OutOfRange => "out_of_range",
            ReportStatus::Unparseable => "unparseable",
        }
    }

    fn of(ok: bool) -> Self {
        if ok {
            ReportStatus::Match
        } else {
            ReportStatus::Mismatch
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub formula_name: String,
    pub indices: String,
    pub paper_value: String,
    pub computed_value: String,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Every comparison made, in a fixed order.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct DiscrepancyReport {
    pub entries: Vec<ReportEntry>,
}

impl DiscrepancyReport {
    pub fn count(&self, status: ReportStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn find(&self, formula_name: &str, indices: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.formula_name == formula_name && e.indices == indices)
    }

    pub fn with_status(&self, status: ReportStatus) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(move |e| e.status == status)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn push(&mut self, name: &str, indices: String, published: String, computed: String, status: ReportStatus) {
        self.entries.push(ReportEntry {
            formula_name: name.to_string(),
            indices,
            paper_value: published,
            computed_value: computed,
            status,
            note: None,
        });
    }

    fn note(&mut self, note: impl Into<String>) {
        if let Some(last) = self.entries.last_mut() {
            last.note = Some(note.into());
        }
    }

    fn compare_pi(&mut self, name: &str, indices: String, published: PiRational, computed: PiRational) {
        let status = ReportStatus::of(published == computed);
        self.push(name, indices, published.to_string(), computed.to_string(), status);
    }
}

impl fmt::Display for DiscrepancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(
                f,
                "[{}] {} ({}): published = {}; computed = {}",
                e.status.as_str(),
                e.formula_name,
                e.indices,
                e.paper_value,
                e.computed_value
            )?;
            if let Some(note) = &e.note {
                write!(f, "; {note}")?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "summary: {} match, {} mismatch, {} out_of_range, {} unparseable",
            self.count(ReportStatus::Match),
            self.count(ReportStatus::Mismatch),
            self.count(ReportStatus::OutOfRange),
            self.count(ReportStatus::Unparseable)
        )
    }
}

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

/// `a! / b!` for `a ≥ b ≥ 0`.
fn fact_ratio(a: i64, b: i64) -> Rational {
    let mut p = BigInt::one();
    for k in (b + 1)..=a {
        p *= k;
    }
    Rational::from_integer(p)
}

fn pi(c: Rational) -> PiRational {
    PiRational::new(c)
}

fn idx(n: u32, m: u32, p: Parity) -> String {
    format!("n={n}, m={m}, {p}")
}

pub fn norm_x_closed_form(n: i64, m: i64) -> PiRational {
    if m == 0 {
        pi(q(4 * (n + 1)) / q(2 * n + 3))
    } else {
        pi(q(2 * (n + 1)) / q(2 * n + 3) * fact_ratio(n + 1 + m, n + 1 - m))
    }
}

pub fn norm_y_closed_form(n: i64, m: i64) -> PiRational {
    if m == 0 {
        let inner = (2 * n - 3) * (3 * n + 1) + (2 * n + 1).pow(3) * n * (n - 1) * (3 * n - 4);
        pi(q(8 * n * inner) / q((2 * n - 3) * (2 * n + 1) * (2 * n + 3)))
    } else {
        let inner = (2 * n + 1).pow(3) * (n * n - m * m) * (n - 1)
            + 2 * (n - 2 * m * m).pow(2)
            + (n + m) * (n - m + 1).pow(2) * (2 * m - 1).pow(2)
            + (n - m) * (n + m + 1).pow(2) * (2 * m + 1).pow(2);
        let den = (2 * n - 1).pow(2) * (2 * n + 1) * (2 * n + 3);
        pi(q(4 * inner) / q(den) * fact_ratio(n + m, n - m))
    }
}

pub fn norm_zu_closed_form(n: i64, m: i64) -> PiRational {
    if m == 0 {
        pi(q(4 * n * (n + 1)) / q((2 * n + 1) * (2 * n + 3)))
    } else {
        let s = (2 * n + 1).pow(2);
        let inner = (2 * m - 1).pow(2) * (8 * m + s) - (2 * m + 1).pow(2) * (8 * m - s)
            + (n - 1) * (2 * n + 1) * (2 * n + 3).pow(2) * (n * n - m * m);
        let den = (2 * n - 1).pow(2) * (2 * n + 1) * (2 * n + 3);
        pi(q(inner) / q(den) * fact_ratio(n + m, n - m))
    }
}

pub fn inner_x_zu_closed_form(n: i64, m: i64) -> PiRational {
    pi(q(-2) / q((2 * n + 1) * (2 * n + 3)) * fact_ratio(n + m + 1, n - m))
}

pub fn inner_y_zu_closed_form(n: i64, m: i64) -> PiRational {
    let inner = (2 * n - 3) * (4 * (n - 1) * m * m + n)
        + (2 * n + 1).pow(2) * (n * n - m * m) * ((n - 1).pow(2) + m * (m - 1));
    let den = (2 * n - 3) * (2 * n - 1).pow(2) * (2 * n + 1);
    pi(q(4 * inner) / q(den) * fact_ratio(n + m, n - m))
}

pub fn alpha_closed_form(n: i64, m: i64) -> Rational {
    q(n - m + 1) / q((n + 1) * (2 * n + 1))
}

/// Compares the published formulas with exact computation for all indices
/// up to degree `max_n`.
pub fn verify_paper_formulas(max_n: u32) -> Result<DiscrepancyReport> {
    let mut r = DiscrepancyReport::default();
    norms(&mut r, max_n)?;
    products(&mut r, max_n)?;
    constants(&mut r, max_n)?;
    expansions(&mut r, max_n)?;
    tables(&mut r, max_n)?;
    appell(&mut r, max_n);
    contragenic_scale(&mut r, max_n)?;
    printed_identity(&mut r);
    cross_degree(&mut r, max_n)?;
    Ok(r)
}

fn parities(m: u32) -> &'static [Parity] {
    if m == 0 {
        &[Parity::Plus]
    } else {
        &Parity::BOTH
    }
}

fn norms(r: &mut DiscrepancyReport, max_n: u32) -> Result<()> {
    let b = shared();
    for n in 0..=max_n {
        for m in 0..=n + 1 {
            for &p in parities(m) {
                let computed = norm2(&*b.element(BasisId::x(n, m, p)?)?);
                r.compare_pi("norm2_X", idx(n, m, p), norm_x_closed_form(n.into(), m.into()), computed);
            }
        }
    }
    for n in 2..=max_n {
        for m in 0..n {
            for &p in parities(m) {
                let computed = norm2(&*b.element(BasisId::y(n, m, p)?)?);
                r.compare_pi("norm2_Y", idx(n, m, p), norm_y_closed_form(n.into(), m.into()), computed);
            }
        }
        for m in 0..=n {
            for &p in parities(m) {
                let computed = norm2(&*b.element(BasisId::zu(n, m, p)?)?);
                r.compare_pi("norm2_Zu", idx(n, m, p), norm_zu_closed_form(n.into(), m.into()), computed);
            }
        }
    }
    Ok(())
}

fn products(r: &mut DiscrepancyReport, max_n: u32) -> Result<()> {
    let b = shared();
    for n in 2..=max_n {
        for m in 1..=n {
            for p in Parity::BOTH {
                let x = b.element(BasisId::x(n, m, p)?)?;
                let zu = b.element(BasisId::zu(n, m, p)?)?;
                r.compare_pi(
                    "inner_X_Zu",
                    idx(n, m, p),
                    inner_x_zu_closed_form(n.into(), m.into()),
                    inner_product(&x, &zu),
                );
            }
        }
        for m in 1..n {
            for p in Parity::BOTH {
                let y = b.element(BasisId::y(n, m, p)?)?;
                let zu = b.element(BasisId::zu(n, m, p)?)?;
                r.compare_pi(
                    "inner_Y_Zu",
                    idx(n, m, p),
                    inner_y_zu_closed_form(n.into(), m.into()),
                    inner_product(&y, &zu),
                );
            }
        }

        for p in Parity::BOTH {
            r.push(
                "inner_X_Y_top_order",
                idx(n, n, p),
                "0".into(),
                "undefined".into(),
                ReportStatus::OutOfRange,
            );
            r.note(format!("Y is defined only for m <= n-1, so Y({n},{n}) does not exist"));
        }

        let zu0 = b.element(BasisId::zu(n, 0, Parity::Plus)?)?;
        let x0 = b.element(BasisId::x(n, 0, Parity::Plus)?)?;
        r.compare_pi("inner_X_Zu_order_zero", idx(n, 0, Parity::Plus), PiRational::zero(), inner_product(&x0, &zu0));
        for m in 0..n {
            for &p in parities(m) {
                let y = b.element(BasisId::y(n, m, p)?)?;
                r.compare_pi("inner_Y_Zu_order_zero", idx(n, m, p), PiRational::zero(), inner_product(&y, &zu0));
            }
        }

        let ids: Vec<BasisId> = enumerate_basis(n)
            .into_iter()
            .map(|id| if id.family == Family::Z { BasisId { family: Family::Zu, ..id } } else { id })
            .collect();
        let g = b.gram(&ids)?;
        let unexpected: Vec<String> = g
            .off_diagonal_nonzero()
            .into_iter()
            .filter(|&(i, j)| !listed_nonzero(ids[i], ids[j]))
            .map(|(i, j)| format!("<{}, {}> = {}", ids[i], ids[j], g.entry(i, j)))
            .collect();
        let computed = if unexpected.is_empty() { "none".to_string() } else { unexpected.join(", ") };
        r.push(
            "other_products_vanish",
            format!("n={n}"),
            "none".into(),
            computed,
            ReportStatus::of(unexpected.is_empty()),
        );
    }
    Ok(())
}

/// Pairs whose product has a nonzero closed form.
fn listed_nonzero(a: BasisId, b: BasisId) -> bool {
    let (a, b) = if a.family <= b.family { (a, b) } else { (b, a) };
    if a.m != b.m || a.parity != b.parity || a.m == 0 {
        return false;
    }
    matches!((a.family, b.family), (Family::X, Family::Zu)) || matches!((a.family, b.family), (Family::Y, Family::Zu))
}

fn constants(r: &mut DiscrepancyReport, max_n: u32) -> Result<()> {
    let b = shared();
    for n in 2..=max_n {
        for m in 1..=n {
            let c = b.ortho_constants(n, m)?;
            let published = alpha_closed_form(n.into(), m.into());
            let status = ReportStatus::of(published == c.alpha);
            r.push(
                "alpha",
                format!("n={n}, m={m}"),
                rational_to_string(&published),
                rational_to_string(&c.alpha),
                status,
            );
            if let Some(beta) = &c.beta {
                r.push(
                    "beta",
                    format!("n={n}, m={m}"),
                    "unbalanced parentheses".into(),
                    rational_to_string(beta),
                    ReportStatus::Unparseable,
                );
                r.note("computed by orthogonalizing against Y");
            }
        }
    }
    Ok(())
}

fn expansions(r: &mut DiscrepancyReport, max_n: u32) -> Result<()> {
    let b = shared();
    for n in 0..=max_n {
        let mut ids: Vec<BasisId> = (0..=n + 1)
            .flat_map(|m| parities(m).iter().map(move |&p| BasisId { n, family: Family::X, parity: p, m }))
            .collect();
        if n >= 2 {
            ids.extend(enumerate_basis(n).into_iter().filter(|id| id.family == Family::Y));
            ids.extend(enumerate_basis(n).into_iter().filter(|id| id.family == Family::Z).map(|id| BasisId {
                family: Family::Zu,
                ..id
            }));
        }
        for id in ids {
            let printed = components_expansion(id)?;
            let built = b.element(id)?;
            let status = ReportStatus::of(printed == *built);
            r.push(
                &format!("components_{}", id.family),
                idx(n, id.m, id.parity),
                render(&printed),
                render(&built),
                status,
            );
            if status == ReportStatus::Mismatch {
                match printed.ratio_to(&built) {
                    Some(c) => r.note(format!("proportional with factor {}", rational_to_string(&c))),
                    None => r.note("not proportional"),
                }
            }
        }
    }
    Ok(())
}

fn tables(r: &mut DiscrepancyReport, max_n: u32) -> Result<()> {
    let b = shared();
    for entry in golden_tables().iter().filter(|e| e.id.n <= max_n) {
        let c = compare_row(entry)?;
        let name = format!("table{}", entry.table);
        let id = entry.id;
        let target = match id.family {
            Family::Zu => b.element(BasisId { family: Family::Z, ..id })?,
            _ => b.element(id)?,
        };
        r.push(
            &format!("{name}_row"),
            id.to_string(),
            render(&entry.poly),
            render(&target),
            ReportStatus::of(c.exact()),
        );
        if id.family == Family::Zu {
            r.note("compared with the orthogonalized Z");
        }
        if !c.stray.is_zero() {
            let scale = c.scale.as_ref().map(rational_to_string).unwrap_or_else(|| "none".into());
            r.push(
                &format!("{name}_row_stripped"),
                id.to_string(),
                render(&c.stripped),
                render(&target),
                ReportStatus::of(c.scale == Some(Rational::one())),
            );
            r.note(format!("stray constant {} removed; scale {scale}", render(&c.stray)));
            let alpha = b.ortho_constants_for(id.n, id.m, id.parity)?.alpha;
            let stray_is_alpha = c.stray == QPoly::along(2, ScalarPoly::constant(alpha.clone()));
            r.push(
                &format!("{name}_stray_constant"),
                id.to_string(),
                render(&c.stray),
                format!("alpha = {}", rational_to_string(&alpha)),
                ReportStatus::of(stray_is_alpha),
            );
            r.note("compared with alpha e_2");
        }
        if id.family == Family::Zu && id.m > 0 {
            let zu = b.element(id)?;
            let status = ReportStatus::of(c.provisional_scale == Some(Rational::one()));
            r.push(&format!("{name}_row_vs_provisional"), id.to_string(), render(&c.stripped), render(&zu), status);
            if status == ReportStatus::Mismatch {
                r.note("the printed row is the orthogonalized Z, not the provisional element");
            }
        }
    }
    Ok(())
}

fn appell(r: &mut DiscrepancyReport, max_n: u32) {
    for n in 0..=max_n {
        for m in 0..=n + 1 {
            for &p in parities(m) {
                let (left, right, expected) = appell_sides(n, m, p);
                let published = if m == n + 1 { "0".to_string() } else { format!("{} X({},{},{p})", 2 * (n + m + 1), n as i64 - 1, m) };
                let describe = |h: &QPoly| {
                    if h == &expected {
                        published.clone()
                    } else {
                        render(h)
                    }
                };
                let status = ReportStatus::of(left == expected && right == expected);
                r.push("appell", idx(n, m, p), published.clone(), format!("left {}; right {}", describe(&left), describe(&right)), status);
            }
        }
    }
}

fn contragenic_scale(r: &mut DiscrepancyReport, max_n: u32) -> Result<()> {
    for n in 2..=max_n {
        let op = contragenic_operator_form(n);
        let canonical = shared().element(BasisId::zu(n, 0, Parity::Plus)?)?;
        let ratio = op.ratio_to(&canonical);
        r.push(
            "contragenic_operator_form",
            format!("n={n}"),
            render(&op),
            render(&canonical),
            ReportStatus::of(ratio == Some(Rational::one())),
        );
        if let Some(c) = ratio {
            r.note(format!("operator form = {} times the component form", rational_to_string(&c)));
        }
    }
    Ok(())
}

fn printed_identity(r: &mut DiscrepancyReport) {
    let f = QPoly::along(2, &ScalarPoly::var(Axis::X0) * &ScalarPoly::var(Axis::X0));
    let truth = sandwich(false, &f);
    let printed = dbar_vector_sandwich_as_printed(&f);
    r.push(
        "bilateral_dbar_vector",
        "f = x_0^2 e_2".into(),
        render(&printed),
        render(&truth),
        ReportStatus::of(printed == truth),
    );
    if dbar_vector_sandwich_closed_form(&f) == truth {
        r.note("the e_2 coefficient must act on f_2; with that correction the identity holds");
    }
}

fn cross_degree(r: &mut DiscrepancyReport, max_n: u32) -> Result<()> {
    let b = shared();
    for lo in 0..=max_n {
        for hi in (lo + 1)..=max_n {
            let left = enumerate_basis(lo);
            let right = enumerate_basis(hi);
            let block = b.cross_gram(&left, &right)?;
            let mut nonzero = Vec::new();
            for (i, row) in block.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        nonzero.push(format!("<{}, {}> = {v}", left[i], right[j]));
                    }
                }
            }
            let computed = match nonzero.len() {
                0 => "all zero".to_string(),
                k => format!("{k} of {} nonzero, e.g. {}", left.len() * right.len(), nonzero[0]),
            };
            r.push(
                "cross_degree_orthogonality",
                format!("degrees {lo} and {hi}"),
                "all zero".into(),
                computed,
                ReportStatus::of(nonzero.is_empty()),
            );
        }
    }
    Ok(())
}
