//! Expected verdicts of the reference postulate table.

use qbaf_core::aggregators::postulates::{Postulate, PostulateMatrix};
use serde::Serialize;

/// One row per table function, cells for P1..P12 in the format of
/// `PostulateVerdict::cell`.
pub const TABLE2: [(&str, [&str; 12]); 10] = [
    ("avg_am", ["yes", "yes", "yes", "yes", "yes", "no", "no", "no", "no", "no", "yes", "yes"]),
    ("avg_gm", ["yes", "yes", "yes", "yes", "yes", "no", "no", "no", "no", "e0=0", "yes", "yes"]),
    ("tnorm_product", ["yes", "yes", "yes", "yes", "no", "yes", "yes", "no", "e1=1", "e0=0", "yes", "yes"]),
    ("tconorm_algebraic", ["yes", "yes", "yes", "yes", "no", "yes", "no", "yes", "e1=0", "e0=1", "yes", "yes"]),
    ("min", ["yes", "yes", "yes", "yes", "yes", "yes", "yes", "no", "e1=1", "e0=0", "yes", "yes"]),
    ("max", ["yes", "yes", "yes", "yes", "yes", "yes", "no", "yes", "e1=0", "e0=1", "yes", "yes"]),
    ("tnorm_lukasiewicz", ["yes", "yes", "yes", "yes", "no", "yes", "yes", "no", "e1=1", "e0=0", "yes", "yes"]),
    ("tconorm_bounded_sum", ["yes", "yes", "yes", "yes", "no", "yes", "no", "yes", "e1=0", "e0=1", "yes", "yes"]),
    ("tnorm_drastic", ["yes", "yes", "no", "yes", "no", "yes", "yes", "no", "e1=1", "e0=0", "yes", "yes"]),
    ("tconorm_drastic", ["yes", "yes", "no", "yes", "no", "yes", "no", "yes", "e1=0", "e0=1", "yes", "yes"]),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub aggregator: String,
    pub postulate: Postulate,
    pub expected: String,
    pub got: String,
}

/// Cells of `matrix` that disagree with the table, plus one mismatch per
/// table row missing from the matrix.
pub fn compare_table2(matrix: &PostulateMatrix) -> Vec<CellMismatch> {
    let mut out = Vec::new();
    for (name, expected) in TABLE2 {
        let row = matrix.rows.iter().find(|(n, _)| n == name);
        for (k, p) in Postulate::ALL.into_iter().enumerate() {
            let got = row.and_then(|(_, v)| v.get(k)).map_or("missing".to_owned(), |v| v.cell());
            if got != expected[k] {
                out.push(CellMismatch { aggregator: name.to_owned(), postulate: p, expected: expected[k].to_owned(), got });
            }
        }
    }
    out
}

/// Number of compared cells.
pub const TABLE2_CELLS: usize = 120;
