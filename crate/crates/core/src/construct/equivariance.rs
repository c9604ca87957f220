use serde::Serialize;

use super::{ConstructError, ProjectiveCurveMap};
use crate::exactalg::{Field, Rational};

/// A cyclic group `mu_m` acting on the source line with weights on
/// `(S0, S1)` and on the target coordinates with the given residues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedTorusAction {
    modulus: u32,
    source_weights: [u32; 2],
    target_weights: Vec<u32>,
}

impl WeightedTorusAction {
    /// `zeta . [S0, S1] = [S0, zeta S1]` on the source.
    pub fn new(modulus: u32, target_weights: Vec<i64>) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let m = i64::from(modulus);
        WeightedTorusAction {
            modulus,
            source_weights: [0, 1],
            target_weights: target_weights.iter().map(|w| w.rem_euclid(m) as u32).collect(),
        }
    }

    /// The weights `(0, 2, 4, 1, 3, 5)` of `mu_6` on `V+ ⊕ V-`.
    pub fn standard_mu6() -> Self {
        Self::new(6, vec![0, 2, 4, 1, 3, 5])
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn source_weights(&self) -> [u32; 2] {
        self.source_weights
    }

    pub fn target_weights(&self) -> &[u32] {
        &self.target_weights
    }

    /// The contragredient action: every target weight negated.
    pub fn dual(&self) -> Self {
        WeightedTorusAction {
            modulus: self.modulus,
            source_weights: self.source_weights,
            target_weights: self
                .target_weights
                .iter()
                .map(|&w| (self.modulus - w) % self.modulus)
                .collect(),
        }
    }
}

/// Offsets `source weight - target weight (mod m)` found among the terms of one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryDiagnostic {
    pub label: String,
    pub target_weight: u32,
    pub offsets: Vec<u32>,
}

/// Finds the common offset `c` with `weight(term) ≡ target_weight + c` for
/// every term of every entry. Zero entries impose nothing.
pub fn check_weighted_equivariance(
    m: &ProjectiveCurveMap,
    action: &WeightedTorusAction,
) -> Result<u32, ConstructError> {
    if m.len() != action.target_weights.len() {
        return Err(ConstructError::LengthMismatch {
            entries: m.len(),
            expected: action.target_weights.len(),
        });
    }
    m.degree()?;
    let modulus = action.modulus;
    let [w0, w1] = action.source_weights;
    let diagnostics: Vec<EntryDiagnostic> = m
        .entries()
        .iter()
        .zip(m.target_labels())
        .zip(&action.target_weights)
        .map(|((e, label), &tw)| {
            let mut offsets: Vec<u32> = e
                .terms()
                .map(|(mono, _)| {
                    let x = mono.exponents();
                    let w = (u64::from(w0) * u64::from(x[0]) + u64::from(w1) * u64::from(x[1])) % u64::from(modulus);
                    (w as u32 + modulus - tw) % modulus
                })
                .collect();
            offsets.sort_unstable();
            offsets.dedup();
            EntryDiagnostic {
                label: label.clone(),
                target_weight: tw,
                offsets,
            }
        })
        .collect();
    let mut all: Vec<u32> = diagnostics.iter().flat_map(|d| d.offsets.iter().copied()).collect();
    all.sort_unstable();
    all.dedup();
    match all.as_slice() {
        [c] => Ok(*c),
        _ => Err(ConstructError::WeightMismatch { entries: diagnostics }),
    }
}

/// Substitutes `S1 -> -S1` in every entry.
pub fn involution_conjugate(m: &ProjectiveCurveMap) -> ProjectiveCurveMap {
    let factors = [Rational::one(), -Rational::one()];
    m.map_entries(|e| e.rescale_variables(&factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn corrected_maps_are_equivariant() {
        let a = WeightedTorusAction::standard_mu6();
        assert_eq!(check_weighted_equivariance(&fixtures::j_corrected(), &a).unwrap(), 0);
        assert_eq!(a.dual().target_weights(), &[0, 4, 2, 5, 3, 1]);
        assert_eq!(
            check_weighted_equivariance(&fixtures::jprime_corrected(), &a.dual()).unwrap(),
            5
        );
        assert_eq!(
            check_weighted_equivariance(&fixtures::jprime_printed_dedup(), &a.dual()).unwrap(),
            5
        );
    }

    #[test]
    fn printed_j_is_not_homogeneous() {
        let err =
            check_weighted_equivariance(&fixtures::j_printed(), &WeightedTorusAction::standard_mu6()).unwrap_err();
        assert!(matches!(err, ConstructError::NotHomogeneous { .. }));
    }

    #[test]
    fn line_with_trivial_weights_fails() {
        let m = ProjectiveCurveMap::from_strs(&["S0", "S1"]).unwrap();
        let err = check_weighted_equivariance(&m, &WeightedTorusAction::new(6, vec![0, 0])).unwrap_err();
        let ConstructError::WeightMismatch { entries } = err else {
            panic!("expected a weight mismatch");
        };
        assert_eq!(entries[0].offsets, vec![0]);
        assert_eq!(entries[1].offsets, vec![1]);
    }

    #[test]
    fn conjugation() {
        let m = ProjectiveCurveMap::from_strs(&["S0", "S1"]).unwrap();
        assert_eq!(involution_conjugate(&m).to_strings(), ["S0", "-S1"]);
        let j = fixtures::j_corrected();
        let cj = involution_conjugate(&j);
        assert_eq!(
            cj.to_strings(),
            ["S0^5", "S0^3*S1^2", "S0*S1^4", "-S0^4*S1", "-S0^2*S1^3", "-S1^5"]
        );
        assert_eq!(involution_conjugate(&cj), j);
    }
}
