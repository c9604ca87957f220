use serde::Serialize;
use serde_json::{json, Value};

use super::{
    check_weighted_equivariance, derive_jprime_and_compare, fixtures, monomial_norm, normalized_map_degree,
    paired_quadric_descend, pushforward_splitting_type, quadratic_pullback_table, ConstructError, WeightedTorusAction,
};
use crate::exactalg::{Field, Rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Informational checks are reported but never affect the verdict.
    pub informational: bool,
    pub details: Value,
}

impl Check {
    fn new(name: &str, passed: bool, details: Value) -> Self {
        Check {
            name: name.to_string(),
            passed,
            informational: false,
            details,
        }
    }

    fn info(name: &str, passed: bool, details: Value) -> Self {
        Check {
            informational: true,
            ..Check::new(name, passed, details)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionReport {
    pub samples: Vec<String>,
    pub checks: Vec<Check>,
    /// Rows `X_a*X_b -> quintic` of the pullback table for the corrected `j'`.
    pub table: Vec<(String, String)>,
    pub table_rank: usize,
}

impl ConstructionReport {
    pub fn verified(&self) -> bool {
        self.checks.iter().filter(|c| !c.informational).all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn outcome<T: Serialize>(r: &Result<T, ConstructError>) -> Value {
    match r {
        Ok(v) => json!({ "ok": v }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

/// Runs every check on the bundled corrected maps, plus informational
/// diagnostics on the maps as printed.
pub fn verify_construction(samples: &[Rational]) -> Result<ConstructionReport, ConstructError> {
    let j = fixtures::j_corrected();
    let jp = fixtures::jprime_corrected();
    let action = WeightedTorusAction::standard_mu6();
    let mut checks = Vec::new();

    let c = check_weighted_equivariance(&j, &action);
    checks.push(Check::new(
        "j_equivariance",
        c.is_ok(),
        json!({ "weights": action.target_weights(), "modulus": 6, "offset": outcome(&c) }),
    ));
    let c = check_weighted_equivariance(&jp, &action.dual());
    checks.push(Check::new(
        "jprime_equivariance",
        c.is_ok(),
        json!({ "weights": action.dual().target_weights(), "modulus": 6, "offset": outcome(&c) }),
    ));

    for (name, m) in [("j_degree", &j), ("jprime_degree", &jp)] {
        let d = normalized_map_degree(m);
        checks.push(Check::new(
            name,
            d == Ok(5),
            json!({ "expected": 5, "degree": outcome(&d) }),
        ));
    }

    let q = paired_quadric_descend(&j);
    let (passed, details) = match &q {
        Ok(q) => {
            let quintic = q.entries().all(|(_, _, p)| p.homogeneous_degree() == Ok(Some(5)));
            let coefficients: Vec<Value> = q
                .entries()
                .map(|(a, b, p)| json!([format!("{}*{}", q.labels()[a], q.labels()[b]), p.to_string()]))
                .collect();
            (quintic && q.len() == 12, json!({ "coefficients": coefficients }))
        }
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    checks.push(Check::new("quadric_descent", passed, details));

    // Diagonal coefficient j_a(S0, S1) j_a(S0, -S1) against the norm along g,
    // which twists S0 instead: the two differ by (-1)^deg.
    let mut diag_ok = q.is_ok();
    if let Ok(q) = &q {
        for (a, e) in j.entries().iter().enumerate() {
            let norm = monomial_norm(&e.deflate(1, &super::C_VARS).expect("step 1"), 2)?;
            let sign = if e.degree().unwrap_or(0) % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            let twisted = norm.deflate(1, &super::C_VARS).expect("step 1").scale(&sign);
            diag_ok &= q.coefficient(a, a) == Some(&twisted);
        }
    }
    checks.push(Check::new("diagonal_is_norm", diag_ok, json!({ "cover_degree": 2 })));

    let cmp = derive_jprime_and_compare(&j, &jp, samples)?;
    checks.push(Check::new(
        "jprime_oracle",
        cmp.all_match() && !cmp.checks.is_empty(),
        json!({ "point_checks": cmp.checks.len(), "matched": cmp.matched(), "points": cmp.checks }),
    ));

    let table = quadratic_pullback_table(&jp)?;
    let reference: Vec<(String, String)> = fixtures::pullback_table_rows()
        .into_iter()
        .map(|(a, b, img)| (format!("{a}*{b}"), img))
        .collect();
    let rendered = table.rendered();
    let mismatched: Vec<&String> = rendered
        .iter()
        .zip(&reference)
        .filter(|(x, y)| x != y)
        .map(|(x, _)| &x.0)
        .collect();
    checks.push(Check::new(
        "pullback_table",
        mismatched.is_empty() && rendered.len() == reference.len(),
        json!({ "rows": rendered.len(), "mismatched_rows": mismatched }),
    ));
    checks.push(Check::new(
        "pullback_surjective",
        table.is_surjective(),
        json!({ "rank": table.rank, "columns": table.matrix.cols() }),
    ));

    let split = pushforward_splitting_type(3, 5);
    checks.push(Check::new(
        "splitting_type",
        split == [1, 1, 1],
        json!({ "cover_degree": 3, "sheaf_degree": 5, "twists": split }),
    ));

    let printed = fixtures::j_printed();
    let c = check_weighted_equivariance(&printed, &action);
    checks.push(Check::info(
        "printed_j_diagnostic",
        matches!(c, Err(ConstructError::NotHomogeneous { .. })),
        json!({ "entries": printed.to_strings(), "outcome": outcome(&c) }),
    ));

    let raw = fixtures::jprime_printed();
    let dedup = fixtures::jprime_printed_dedup();
    let dedup_table = quadratic_pullback_table(&dedup).map(|t| t.rendered());
    checks.push(Check::info(
        "printed_jprime_dedup",
        raw.len() == 7 && dedup.len() == 6 && dedup_table.as_ref().ok() == Some(&rendered),
        json!({
            "printed_entries": raw.len(),
            "dedup_entries": dedup.to_strings(),
            "same_table": dedup_table.as_ref().ok() == Some(&rendered),
        }),
    ));

    let cmp_printed = derive_jprime_and_compare(&j, &dedup, samples)?;
    checks.push(Check::info(
        "printed_jprime_oracle",
        cmp_printed.all_match(),
        json!({
            "matched": cmp_printed.matched(),
            "point_checks": cmp_printed.checks.len(),
            "matches_at_partner": cmp_printed.all_match_at_partner(),
        }),
    ));

    Ok(ConstructionReport {
        samples: samples.iter().map(ToString::to_string).collect(),
        checks,
        table: rendered,
        table_rank: table.rank,
    })
}
