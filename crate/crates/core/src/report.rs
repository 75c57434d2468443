//! Per-`n` summary tables for a family.

use std::fmt::Write as _;
use std::thread;

use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::group::{h1, presentation_from_pairings, AbelianGroup};
use crate::symmetry::{singularity_report, SingularityReport};

pub const VOLUME_NOTE: &str =
    "volume: external (hyperbolic volumes need hyperbolic-geometry software and are not computed)";

/// Rotation step used for the covering data of `family(n)`: even members
/// of `M25` are quotiented by the half rotation.
pub fn table_step(family: FamilyId, n: usize) -> usize {
    if family == FamilyId::M25 && n.is_multiple_of(2) {
        2
    } else {
        1
    }
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: usize,
    pub homology: AbelianGroup,
    pub singular: SingularityReport,
}

impl TableRow {
    pub fn compute(family: FamilyId, n: usize) -> Result<Self> {
        let c = family.build(n)?;
        let homology = h1(&presentation_from_pairings(&c)?);
        let singular = singularity_report(family, n, table_step(family, n))?;
        Ok(TableRow { n, homology, singular })
    }

    pub fn components_cell(&self) -> String {
        let idx: Vec<String> = self.singular.components.iter().map(|c| c.branching_index.to_string()).collect();
        if idx.is_empty() {
            "0".to_string()
        } else {
            format!("{} (index {})", idx.len(), idx.join(", "))
        }
    }
}

/// Rows for `from..=to`, evaluated on separate threads (sequentially on
/// wasm) and returned in order.
pub fn table_rows(family: FamilyId, from: usize, to: usize) -> Result<Vec<TableRow>> {
    if from == 0 || from > to {
        return Err(Error::Domain(format!("bad range {from}..{to}")));
    }
    if cfg!(target_arch = "wasm32") {
        return (from..=to).map(|n| TableRow::compute(family, n)).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = (from..=to).map(|n| s.spawn(move || TableRow::compute(family, n))).collect();
        handles.into_iter().map(|h| h.join().expect("row worker panicked")).collect()
    })
}

pub fn render_table(family: FamilyId, rows: &[TableRow]) -> String {
    let header = ["n", "H_1", "singular components", "volume"];
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| [r.n.to_string(), r.homology.to_string(), r.components_cell(), "external".to_string()])
        .collect();
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cols: [&str; 4]| -> String {
        let padded: Vec<String> = cols.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = String::new();
    let _ = writeln!(out, "{family}");
    let _ = writeln!(out, "{}", line(header));
    let _ = writeln!(out, "{}", width.map(|w| "-".repeat(w)).join("-+-"));
    for row in &cells {
        let _ = writeln!(out, "{}", line([&row[0], &row[1], &row[2], &row[3]]));
    }
    let _ = writeln!(out, "{VOLUME_NOTE}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_in_order() {
        let rows = table_rows(FamilyId::M25, 3, 6).unwrap();
        let got: Vec<(usize, String, String)> =
            rows.iter().map(|r| (r.n, r.homology.to_string(), r.components_cell())).collect();
        assert_eq!(
            got,
            vec![
                (3, "Z2 + Z18".into(), "2 (index 3, 3)".into()),
                (4, "Z3 + Z3 + Z6".into(), "3 (index 2, 2, 2)".into()),
                (5, "Z5 + Z5 + Z15".into(), "2 (index 5, 5)".into()),
                (6, "Z8 + Z72".into(), "3 (index 3, 3, 3)".into()),
            ]
        );
    }

    #[test]
    fn rendered_table_has_external_volume() {
        let text = render_table(FamilyId::M24, &table_rows(FamilyId::M24, 3, 4).unwrap());
        assert!(text.lines().any(|l| l.starts_with("3 ") && l.contains("Z9") && l.ends_with("external")));
        assert!(text.contains("not computed"));
    }

    #[test]
    fn bad_range() {
        assert!(table_rows(FamilyId::M24, 5, 3).is_err());
        assert!(table_rows(FamilyId::M24, 0, 3).is_err());
    }
}
