//! Degree divisibility from monodromy on strata of degenerate fibers.
//!
//! Each stratum class carries a transitive group action on its connected
//! components; an irreducible multi-section lying in that stratum has degree
//! divisible by the orbit size. A [`PencilModel`] collects those divisors
//! together with the degrees of explicitly constructed multi-sections, and an
//! [`IndexReport`] squeezes the minimal degree and the index between the two.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::perm::{cube_strata_action, induced_subset_action, orbit_decomposition, GroupAction, PermError};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrataError {
    #[error("stratum {name} is acted on with {orbits} orbits; a transitive action is required")]
    NotTransitive { name: String, orbits: usize },
    #[error("divisor {divisor} of stratum {name} is not divisible by {k}")]
    NotDivisible { name: String, divisor: u64, k: u64 },
    #[error("model needs at least one stratum and one realized degree")]
    EmptyModel,
    #[error("realized degree {degree} is not a combination of the stratum divisors {divisors:?}")]
    NotRealizable { degree: u64, divisors: Vec<u64> },
    #[error("d and n must be positive (got d = {d}, n = {n})")]
    BadInput { d: usize, n: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Clone, Debug)]
pub struct StratumClass {
    name: String,
    action: GroupAction,
    orbit_size: u64,
    divisor: u64,
}

impl StratumClass {
    /// Computes the orbit decomposition and fails unless it is a single orbit.
    pub fn analyze(name: impl Into<String>, action: GroupAction) -> Result<Self, StrataError> {
        let name = name.into();
        let orbits = orbit_decomposition(&action);
        if !orbits.is_transitive() {
            return Err(StrataError::NotTransitive {
                name,
                orbits: orbits.orbits.len(),
            });
        }
        let size = action.len() as u64;
        Ok(StratumClass {
            name,
            action,
            orbit_size: size,
            divisor: size,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// Size of the monodromy orbit, before any quotient.
    pub fn orbit_size(&self) -> u64 {
        self.orbit_size
    }

    pub fn divisor(&self) -> u64 {
        self.divisor
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizedDegree {
    pub degree: u64,
    pub provenance: String,
}

impl RealizedDegree {
    pub fn new(degree: u64, provenance: impl Into<String>) -> Self {
        RealizedDegree {
            degree,
            provenance: provenance.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PencilModel {
    strata: Vec<StratumClass>,
    realized: Vec<RealizedDegree>,
    quotient_factor: u64,
}

impl PencilModel {
    /// Every realized degree must lie in the semigroup of the divisors.
    pub fn new(
        strata: Vec<StratumClass>,
        realized: Vec<RealizedDegree>,
        quotient_factor: u64,
    ) -> Result<Self, StrataError> {
        let model = PencilModel {
            strata,
            realized,
            quotient_factor,
        };
        model.check_realized()?;
        Ok(model)
    }

    fn check_realized(&self) -> Result<(), StrataError> {
        if self.realized.is_empty() {
            return Ok(());
        }
        let divisors = self.divisors();
        let sg = NumericalSemigroup::new(divisors.clone()).map_err(|_| StrataError::EmptyModel)?;
        for r in &self.realized {
            if !sg.contains(r.degree) {
                return Err(StrataError::NotRealizable {
                    degree: r.degree,
                    divisors,
                });
            }
        }
        Ok(())
    }

    pub fn strata(&self) -> &[StratumClass] {
        &self.strata
    }

    pub fn realized(&self) -> &[RealizedDegree] {
        &self.realized
    }

    pub fn quotient_factor(&self) -> u64 {
        self.quotient_factor
    }

    pub fn divisors(&self) -> Vec<u64> {
        self.strata.iter().map(StratumClass::divisor).collect()
    }

    pub fn degree_semigroup(&self) -> Option<NumericalSemigroup> {
        NumericalSemigroup::new(self.divisors()).ok()
    }

    pub fn with_realized(mut self, realized: Vec<RealizedDegree>) -> Result<Self, StrataError> {
        self.realized = realized;
        self.check_realized()?;
        Ok(self)
    }
}

/// Strata `X^i`, `i = 1..=min(d, n)`, of a pencil of degree-`d` hypersurfaces
/// whose generic member degenerates to `d` hyperplanes permuted by `S_d`.
pub fn hypersurface_pencil_model(d: usize, n: usize) -> Result<PencilModel, StrataError> {
    if d == 0 || n == 0 {
        return Err(StrataError::BadInput { d, n });
    }
    let strata = (1..=d.min(n))
        .map(|i| StratumClass::analyze(format!("X^{i}"), induced_subset_action(d, i)?))
        .collect::<Result<Vec<_>, _>>()?;
    PencilModel::new(
        strata,
        vec![RealizedDegree::new(d as u64, "intersection with a general line")],
        1,
    )
}

/// K3-level model: strata `Y^3, Y^4, Y^5` are the vertices, edges and faces
/// of the cube, permuted by the wreath product.
pub fn enriques_k3_model() -> Result<PencilModel, StrataError> {
    let strata = [(3, 0), (4, 1), (5, 2)]
        .into_iter()
        .map(|(l, w)| StratumClass::analyze(format!("Y^{l}"), cube_strata_action(w)?))
        .collect::<Result<Vec<_>, _>>()?;
    PencilModel::new(strata, Vec::new(), 1)
}

/// The Enriques pencil: the K3 model divided by the fixed-point-free
/// involution, with the multi-sections coming from the cube's vertices and
/// faces.
pub fn enriques_pencil_model() -> Result<PencilModel, StrataError> {
    quotient_by_cover(&enriques_k3_model()?, 2)?.with_realized(vec![
        RealizedDegree::new(4, "8 cube vertices (stratum Y^3) modulo the involution"),
        RealizedDegree::new(3, "6 cube faces (stratum Y^5) modulo the involution"),
    ])
}

pub fn quotient_by_cover(m: &PencilModel, k: u64) -> Result<PencilModel, StrataError> {
    assert!(k > 0);
    let mut strata = m.strata.clone();
    for s in &mut strata {
        if s.divisor % k != 0 {
            return Err(StrataError::NotDivisible {
                name: s.name.clone(),
                divisor: s.divisor,
                k,
            });
        }
        s.divisor /= k;
    }
    PencilModel::new(strata, m.realized.clone(), m.quotient_factor * k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: u64,
    pub upper: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexBounds {
    /// gcd of the divisors; divides the degree of every multi-section and
    /// hence the index.
    pub lower_divisor: u64,
    /// gcd of the realized degrees; the index divides it.
    pub upper: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    /// Stratum divisors, ascending.
    pub divisors: Vec<u64>,
    /// Realized degrees, ascending by degree.
    pub realized: Vec<RealizedDegree>,
    pub min_degree: Bounds,
    pub index: IndexBounds,
}

impl IndexReport {
    pub fn min_degree_lower(&self) -> u64 {
        self.min_degree.lower
    }

    pub fn min_degree_upper(&self) -> u64 {
        self.min_degree.upper
    }

    pub fn exact_min(&self) -> Option<u64> {
        self.min_degree.exact
    }

    pub fn exact_index(&self) -> Option<u64> {
        self.index.exact
    }
}

pub fn index_and_degree_report(m: &PencilModel) -> Result<IndexReport, StrataError> {
    if m.strata.is_empty() || m.realized.is_empty() {
        return Err(StrataError::EmptyModel);
    }
    let mut divisors = m.divisors();
    divisors.sort_unstable();
    let mut realized = m.realized.clone();
    realized.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.provenance.cmp(&b.provenance)));

    let min_lower = divisors[0];
    let min_upper = realized[0].degree;
    let gcd_div = divisors.iter().fold(0, |a: u64, &b| a.gcd(&b));
    let gcd_real = realized.iter().fold(0, |a: u64, r| a.gcd(&r.degree));
    debug_assert!(min_lower <= min_upper);
    debug_assert_eq!(gcd_real % gcd_div, 0);

    Ok(IndexReport {
        divisors,
        realized,
        min_degree: Bounds {
            lower: min_lower,
            upper: min_upper,
            exact: (min_lower == min_upper).then_some(min_lower),
        },
        index: IndexBounds {
            lower_divisor: gcd_div,
            upper: gcd_real,
            exact: (gcd_div == gcd_real).then_some(gcd_div),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{GroupAction, PermGroup, Permutation};

    #[test]
    fn hypersurface_examples() {
        let m = hypersurface_pencil_model(5, 2).unwrap();
        assert_eq!(m.divisors(), vec![5, 10]);
        assert_eq!(m.quotient_factor(), 1);
        assert_eq!(hypersurface_pencil_model(3, 5).unwrap().divisors(), vec![3, 3, 1]);
        assert_eq!(hypersurface_pencil_model(7, 3).unwrap().divisors(), vec![7, 21, 35]);
        assert!(hypersurface_pencil_model(0, 2).is_err());
    }

    #[test]
    fn hypersurface_reports() {
        let r = index_and_degree_report(&hypersurface_pencil_model(5, 2).unwrap()).unwrap();
        assert_eq!(r.exact_min(), Some(5));
        assert_eq!(r.index.lower_divisor, 5);
        let r = index_and_degree_report(&hypersurface_pencil_model(4, 2).unwrap()).unwrap();
        assert_eq!(r.exact_min(), Some(4));
        assert_eq!(r.index.lower_divisor, 2);
        assert_eq!(r.index.upper, 4);
        assert_eq!(r.exact_index(), None);
    }

    #[test]
    fn enriques() {
        assert_eq!(enriques_k3_model().unwrap().divisors(), vec![8, 12, 6]);
        let m = enriques_pencil_model().unwrap();
        assert_eq!(m.divisors(), vec![4, 6, 3]);
        assert_eq!(m.quotient_factor(), 2);
        let r = index_and_degree_report(&m).unwrap();
        assert_eq!(r.divisors, vec![3, 4, 6]);
        assert_eq!(r.realized.iter().map(|x| x.degree).collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(r.exact_min(), Some(3));
        assert_eq!(r.exact_index(), Some(1));
    }

    #[test]
    fn quotient_examples() {
        let k3 = enriques_k3_model().unwrap();
        assert!(matches!(
            quotient_by_cover(&k3, 4),
            Err(StrataError::NotDivisible { divisor: 6, .. })
        ));
        let q3 = quotient_by_cover(&quotient_by_cover(&k3, 2).unwrap(), 1).unwrap();
        assert_eq!(q3.divisors(), vec![4, 6, 3]);
        // {6} by 3
        let y5 = StratumClass::analyze("Y^5", cube_strata_action(2).unwrap()).unwrap();
        let single = PencilModel::new(vec![y5], vec![], 1).unwrap();
        let q = quotient_by_cover(&single, 3).unwrap();
        assert_eq!(q.divisors(), vec![2]);
        assert_eq!(q.quotient_factor(), 3);
    }

    #[test]
    fn empty_model_and_non_transitive() {
        let k3 = enriques_k3_model().unwrap();
        assert_eq!(index_and_degree_report(&k3), Err(StrataError::EmptyModel));
        let g = PermGroup::new(2, vec![Permutation::identity(2)]).unwrap();
        let a = GroupAction::natural(g);
        assert!(matches!(
            StratumClass::analyze("bad", a),
            Err(StrataError::NotTransitive { orbits: 2, .. })
        ));
    }

    #[test]
    fn unrealizable_degree_rejected() {
        let m = hypersurface_pencil_model(5, 2).unwrap();
        let err = m.with_realized(vec![RealizedDegree::new(7, "bogus")]).unwrap_err();
        assert!(matches!(err, StrataError::NotRealizable { degree: 7, .. }));
    }

    #[test]
    fn report_invariant_under_reordering() {
        let m = enriques_pencil_model().unwrap();
        let base = index_and_degree_report(&m).unwrap();
        let mut strata = m.strata().to_vec();
        strata.reverse();
        let mut realized = m.realized().to_vec();
        realized.reverse();
        let shuffled = PencilModel::new(strata, realized, m.quotient_factor()).unwrap();
        assert_eq!(index_and_degree_report(&shuffled).unwrap(), base);
    }

    #[test]
    fn exact_min_is_d_when_d_exceeds_n() {
        for d in 2..=8 {
            for n in 1..d {
                let r = index_and_degree_report(&hypersurface_pencil_model(d, n).unwrap()).unwrap();
                assert_eq!(r.exact_min(), Some(d as u64), "d={d} n={n}");
            }
        }
    }
}
