//! The published tables of degree 2, 3 and 4 basis polynomials, kept as
//! golden data and compared against the constructed elements.

use std::sync::OnceLock;

use serde::Deserialize;
use serde_json::Value;

use crate::basis::{shared, BasisId, Family};
use crate::error::Result;
use crate::poly::json::from_value;
use crate::poly::render::render;
use crate::scalar::Rational;
use crate::QPoly;

/// One row of a published table, exactly as printed.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub table: u32,
    pub id: BasisId,
    pub poly: QPoly,
}

#[derive(Deserialize)]
struct RawEntry {
    table: u32,
    id: BasisId,
    poly: Value,
}

const DATA: &str = include_str!("../data/tables.json");

/// All rows of all tables, in printed order.
pub fn golden_tables() -> &'static [TableEntry] {
    static ROWS: OnceLock<Vec<TableEntry>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let raw: Vec<RawEntry> = serde_json::from_str(DATA).expect("bundled table data is valid JSON");
        raw.into_iter()
            .map(|r| TableEntry {
                table: r.table,
                id: r.id,
                poly: from_value(&r.poly).expect("bundled table polynomial is valid"),
            })
            .collect()
    })
}

/// Rows of the tables for degree `n`.
pub fn table_rows(n: u32) -> impl Iterator<Item = &'static TableEntry> {
    golden_tables().iter().filter(move |e| e.id.n == n)
}

/// Outcome of comparing one printed row with the constructed polynomials.
#[derive(Debug, Clone)]
pub struct RowComparison {
    pub entry: &'static TableEntry,
    /// Terms of the printed row whose degree differs from the row's degree.
    pub stray: QPoly,
    /// The printed row with the stray terms removed.
    pub stripped: QPoly,
    /// `c` with `stripped = c · constructed`, where the constructed element
    /// is `Y` for Y rows and the orthogonalized `Z` for `Z̲` rows.
    pub scale: Option<Rational>,
    /// For `Z̲` rows, the same ratio against the provisional `Z̲`.
    pub provisional_scale: Option<Rational>,
}

impl RowComparison {
    pub fn exact(&self) -> bool {
        self.stray.is_zero() && self.scale == Some(Rational::from_integer(1.into()))
    }
}

pub fn compare_row(entry: &'static TableEntry) -> Result<RowComparison> {
    let stripped = entry.poly.homogeneous_part(entry.id.n);
    let stray = &entry.poly - &stripped;
    let basis = shared();
    let (target, provisional_scale) = match entry.id.family {
        Family::Zu => {
            let z = basis.element(BasisId { family: Family::Z, ..entry.id })?;
            let zu = basis.element(entry.id)?;
            (z, stripped.ratio_to(&zu))
        }
        _ => (basis.element(entry.id)?, None),
    };
    Ok(RowComparison { entry, scale: stripped.ratio_to(&target), stray, stripped, provisional_scale })
}

/// A row in the printed layout, e.g. `Y^+_{2,0} & 8 x_0^2 + ...`.
pub fn table_line(id: BasisId, poly: &QPoly) -> String {
    let symbol = match id.family {
        Family::Zu => "\\underline{Z}",
        other => other.as_str(),
    };
    format!("{symbol}^{}_{{{},{}}} & {}", id.parity, id.n, id.m, render(poly))
}
