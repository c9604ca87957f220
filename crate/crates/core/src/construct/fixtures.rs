//! Reference maps and the reference pullback table, stored as text under
//! `fixtures/`. Each file holds `label = polynomial` lines; `#` starts a
//! comment line.

use super::{ConstructError, ProjectiveCurveMap, D_VARS};
use crate::exactalg::SparseMultiPoly;

pub const J_CORRECTED: &str = include_str!("../../fixtures/j_corrected.txt");
pub const J_PRINTED: &str = include_str!("../../fixtures/j_printed.txt");
pub const JPRIME_CORRECTED: &str = include_str!("../../fixtures/jprime_corrected.txt");
pub const JPRIME_PRINTED: &str = include_str!("../../fixtures/jprime_printed.txt");
pub const PULLBACK_TABLE: &str = include_str!("../../fixtures/pullback_table.txt");

/// Splits a fixture into `(label, right-hand side)` pairs.
pub fn parse_lines(text: &str) -> Result<Vec<(String, String)>, ConstructError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (lhs, rhs) = l
                .split_once('=')
                .ok_or_else(|| ConstructError::BadMap(format!("fixture line without '=': {l}")))?;
            Ok((lhs.trim().to_string(), rhs.trim().to_string()))
        })
        .collect()
}

/// Loads a map over `S0, S1` without checking homogeneity.
pub fn parse_map(text: &str) -> Result<ProjectiveCurveMap, ConstructError> {
    let mut labels = Vec::new();
    let mut entries = Vec::new();
    for (label, rhs) in parse_lines(text)? {
        entries.push(SparseMultiPoly::parse(&rhs, &D_VARS)?);
        labels.push(label);
    }
    ProjectiveCurveMap::unvalidated(D_VARS, entries, labels)
}

fn load(text: &str) -> ProjectiveCurveMap {
    parse_map(text).expect("bundled fixture parses")
}

pub fn j_corrected() -> ProjectiveCurveMap {
    load(J_CORRECTED)
}

pub fn j_printed() -> ProjectiveCurveMap {
    load(J_PRINTED)
}

pub fn jprime_corrected() -> ProjectiveCurveMap {
    load(JPRIME_CORRECTED)
}

/// Seven entries, as printed.
pub fn jprime_printed() -> ProjectiveCurveMap {
    load(JPRIME_PRINTED)
}

/// The printed `j'` with the repeated entry removed, relabelled onto `V`.
pub fn jprime_printed_dedup() -> ProjectiveCurveMap {
    jprime_printed()
        .without_repeated_entries()
        .with_labels(super::V_LABELS.iter().map(|s| s.to_string()).collect())
        .expect("six entries after removing the repeat")
}

/// Reference rows `(left label, right label, quintic text)`.
pub fn pullback_table_rows() -> Vec<(String, String, String)> {
    parse_lines(PULLBACK_TABLE)
        .expect("bundled fixture parses")
        .into_iter()
        .map(|(lhs, rhs)| {
            let (a, b) = lhs.split_once('*').expect("row label is a product");
            (a.to_string(), b.to_string(), rhs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_load() {
        assert_eq!(j_corrected().len(), 6);
        assert_eq!(j_corrected().degree().unwrap(), 5);
        assert!(j_printed().degree().is_err());
        assert_eq!(jprime_printed().len(), 7);
        let dedup = jprime_printed_dedup();
        assert_eq!(dedup.len(), 6);
        assert_eq!(dedup.target_labels()[5], "Xm2");
        assert_eq!(pullback_table_rows().len(), 12);
    }

    #[test]
    fn rejects_lines_without_equals() {
        assert!(parse_map("Xp0 S0").is_err());
    }
}
