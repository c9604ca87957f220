use serde::Serialize;

use super::{projectively_equal, ConstructError, ProjectiveCurveMap};
use crate::exactalg::{Cyclotomic, ExactMatrix, Field, Rational};

/// Sample parameters used when none are given.
pub const DEFAULT_SAMPLES: [i64; 5] = [1, 2, 3, 5, 7];

/// Degree of the composite cover `f ∘ g`.
const COVER_DEGREE: usize = 6;
/// Number of points in a fibre of `f` alone; `k` and `k + 3` share a `g`-fibre.
const F_BLOCKS: usize = 3;

/// The six points `[zeta_6^k t, 1]` lying over `[t^6, 1]`.
pub fn fiber_of_composite(t: &Rational) -> Vec<[Cyclotomic; 2]> {
    let t = Cyclotomic::rational(t.clone());
    (0..COVER_DEGREE as i64)
        .map(|k| [Cyclotomic::zeta_pow(6, k) * t.clone(), Cyclotomic::one()])
        .collect()
}

/// The point of `P(V)` annihilated by `j` at every given point: the
/// one-dimensional nullspace of the evaluation matrix.
pub fn dual_point_on_fiber(
    j: &ProjectiveCurveMap,
    points: &[[Cyclotomic; 2]],
) -> Result<Vec<Cyclotomic>, ConstructError> {
    let expected = j.len() - 1;
    if points.len() != expected {
        return Err(ConstructError::BadMap(format!(
            "{} points given, {expected} needed to cut out a point",
            points.len()
        )));
    }
    let rows: Vec<Vec<Cyclotomic>> = points.iter().map(|p| j.eval(p)).collect();
    let m = ExactMatrix::from_rows(rows)?;
    let rank = m.rank();
    if rank != expected {
        return Err(ConstructError::DegenerateFiber { rank, expected });
    }
    Ok(m.nullspace().swap_remove(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub sample: String,
    pub index: usize,
    /// Candidate at the fibre point itself agrees with the dual point.
    pub matches: bool,
    /// Candidate at the point sharing its `g`-fibre agrees with the dual point.
    pub matches_at_partner: bool,
    pub dual_point: Vec<String>,
    pub candidate_value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JPrimeComparison {
    pub checks: Vec<PointCheck>,
}

impl JPrimeComparison {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.matches)
    }

    pub fn all_match_at_partner(&self) -> bool {
        self.checks.iter().all(|c| c.matches_at_partner)
    }

    pub fn matched(&self) -> usize {
        self.checks.iter().filter(|c| c.matches).count()
    }
}

fn strings(v: &[Cyclotomic]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// For every sample `t` and every point `s` over `[t^6, 1]`, intersects the
/// hyperplanes dual to `j` at `s` and at the four points outside the
/// `g`-fibre of `s`, then compares with `candidate(s)`.
pub fn derive_jprime_and_compare(
    j: &ProjectiveCurveMap,
    candidate: &ProjectiveCurveMap,
    samples: &[Rational],
) -> Result<JPrimeComparison, ConstructError> {
    if candidate.len() != j.len() {
        return Err(ConstructError::LengthMismatch {
            entries: candidate.len(),
            expected: j.len(),
        });
    }
    j.degree()?;
    for (i, t) in samples.iter().enumerate() {
        if t.is_zero() {
            return Err(ConstructError::SampleZero);
        }
        if samples[..i].contains(t) {
            return Err(ConstructError::DuplicateSample(t.to_string()));
        }
    }
    let mut checks = Vec::with_capacity(samples.len() * COVER_DEGREE);
    for t in samples {
        let fiber = fiber_of_composite(t);
        for k in 0..COVER_DEGREE {
            let chosen: Vec<[Cyclotomic; 2]> = (0..COVER_DEGREE)
                .filter(|&m| m == k || m % F_BLOCKS != k % F_BLOCKS)
                .map(|m| fiber[m].clone())
                .collect();
            let dual = dual_point_on_fiber(j, &chosen)?;
            let here = candidate.eval(&fiber[k]);
            let partner = candidate.eval(&fiber[(k + F_BLOCKS) % COVER_DEGREE]);
            checks.push(PointCheck {
                sample: t.to_string(),
                index: k,
                matches: projectively_equal(&dual, &here),
                matches_at_partner: projectively_equal(&dual, &partner),
                dual_point: strings(&dual),
                candidate_value: strings(&here),
            });
        }
    }
    Ok(JPrimeComparison { checks })
}

pub fn default_samples() -> Vec<Rational> {
    DEFAULT_SAMPLES.iter().map(|&t| Rational::from(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn corrected_jprime_matches_everywhere() {
        let r = derive_jprime_and_compare(
            &fixtures::j_corrected(),
            &fixtures::jprime_corrected(),
            &default_samples(),
        )
        .unwrap();
        assert_eq!(r.checks.len(), 30);
        assert!(r.all_match());
        assert!(!r.checks.iter().any(|c| c.matches_at_partner));
    }

    #[test]
    fn printed_jprime_matches_at_partner() {
        let r = derive_jprime_and_compare(
            &fixtures::j_corrected(),
            &fixtures::jprime_printed_dedup(),
            &default_samples(),
        )
        .unwrap();
        assert!(!r.checks.iter().any(|c| c.matches));
        assert!(r.all_match_at_partner());
    }

    #[test]
    fn shuffled_candidate_fails() {
        let c = fixtures::jprime_corrected();
        let mut e = c.entries().to_vec();
        e.swap(0, 1);
        let shuffled = ProjectiveCurveMap::new(super::super::D_VARS, e, c.target_labels().to_vec()).unwrap();
        let r = derive_jprime_and_compare(&fixtures::j_corrected(), &shuffled, &default_samples()).unwrap();
        // At t = 1 the swapped entries agree at the two real fibre points.
        assert!(!r.all_match());
        assert_eq!(r.matched(), 2);
    }

    #[test]
    fn repeated_point_is_degenerate() {
        let fiber = fiber_of_composite(&Rational::from(2));
        let pts = vec![
            fiber[0].clone(),
            fiber[0].clone(),
            fiber[1].clone(),
            fiber[2].clone(),
            fiber[4].clone(),
        ];
        assert_eq!(
            dual_point_on_fiber(&fixtures::j_corrected(), &pts),
            Err(ConstructError::DegenerateFiber { rank: 4, expected: 5 })
        );
    }

    #[test]
    fn bad_samples() {
        let (j, c) = (fixtures::j_corrected(), fixtures::jprime_corrected());
        assert_eq!(
            derive_jprime_and_compare(&j, &c, &[Rational::from(0)]),
            Err(ConstructError::SampleZero)
        );
        assert!(matches!(
            derive_jprime_and_compare(&j, &c, &[Rational::from(2), Rational::from(2)]),
            Err(ConstructError::DuplicateSample(_))
        ));
    }
}
