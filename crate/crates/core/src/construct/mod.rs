//! Exact checks of the explicit monomial construction: covers of the line
//! and their norm maps, the equivariant rational normal curve `j`, the
//! dual-point map `j'`, the descended quadric family and the quadratic
//! pullback table.
//!
//! Source coordinates are `[S0, S1]` on `D`, `[T0, T1]` on `C` and
//! `[U0, U1]` on `B`, with `g(S) = [S0^2, S1^2]` and `f(T) = [T0^3, T1^3]`.
//! The six coordinates of `V = V+ ⊕ V-` are labelled `Xp0, Xp1, Xp2` and
//! `Xm0, Xm1, Xm2`.

use thiserror::Error;

use crate::exactalg::{ExactAlgError, Field, Rational, SparseMultiPoly};

mod dual;
mod equivariance;
pub mod fixtures;
mod norm;
mod quadric;
mod suite;

pub use dual::{
    default_samples, derive_jprime_and_compare, dual_point_on_fiber, fiber_of_composite, JPrimeComparison, PointCheck,
    DEFAULT_SAMPLES,
};
pub use equivariance::{check_weighted_equivariance, involution_conjugate, EntryDiagnostic, WeightedTorusAction};
pub use norm::{monomial_norm, pushforward_splitting_type, MonomialCover};
pub use quadric::{paired_quadric_descend, quadratic_pullback_table, PullbackRow, PullbackTable, QuadricFamily};
pub use suite::{verify_construction, Check, ConstructionReport};

pub const D_VARS: [&str; 2] = ["S0", "S1"];
pub const C_VARS: [&str; 2] = ["T0", "T1"];
pub const B_VARS: [&str; 2] = ["U0", "U1"];
pub const V_LABELS: [&str; 6] = ["Xp0", "Xp1", "Xp2", "Xm0", "Xm1", "Xm2"];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructError {
    #[error("map entries are not homogeneous of one degree (entry degrees {degrees:?})")]
    NotHomogeneous { degrees: Vec<Option<u32>> },
    #[error("map has {entries} entries but {expected} were expected")]
    LengthMismatch { entries: usize, expected: usize },
    #[error("no common weight offset: {entries:?}")]
    WeightMismatch { entries: Vec<EntryDiagnostic> },
    #[error("mixed coefficient of {left}*{right} is {coefficient}, not zero")]
    MixedTermNonzero {
        left: String,
        right: String,
        coefficient: String,
    },
    #[error("{what} has odd exponents and does not descend: {poly}")]
    NotDescendable { what: String, poly: String },
    #[error("norm produced a non-rational coefficient: {0}")]
    InternalNonRational(String),
    #[error("norm produced a monomial that is not a d-th power: {0}")]
    InternalNonInvariant(String),
    #[error("evaluation matrix has rank {rank}, expected {expected}")]
    DegenerateFiber { rank: usize, expected: usize },
    #[error("sample parameter t = 0 lies over a totally ramified fiber")]
    SampleZero,
    #[error("sample parameter {0} is repeated")]
    DuplicateSample(String),
    #[error("label {0:?} is not a coordinate of V+ or V-")]
    UnknownLabel(String),
    #[error("invalid map: {0}")]
    BadMap(String),
    #[error(transparent)]
    Alg(#[from] ExactAlgError),
}

/// The two eigenspaces of the involution on `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Block {
    Plus,
    Minus,
}

impl Block {
    pub fn of_label(label: &str) -> Result<Block, ConstructError> {
        match label.get(..2) {
            Some("Xp") => Ok(Block::Plus),
            Some("Xm") => Ok(Block::Minus),
            _ => Err(ConstructError::UnknownLabel(label.to_string())),
        }
    }
}

/// A map from the projective line to projective space given by binary forms.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveCurveMap {
    source_vars: [String; 2],
    entries: Vec<SparseMultiPoly<Rational>>,
    target_labels: Vec<String>,
}

impl ProjectiveCurveMap {
    /// Validated constructor: entries must be homogeneous of one common degree
    /// and not all zero.
    pub fn new(
        source_vars: [&str; 2],
        entries: Vec<SparseMultiPoly<Rational>>,
        target_labels: Vec<String>,
    ) -> Result<Self, ConstructError> {
        let m = Self::unvalidated(source_vars, entries, target_labels)?;
        m.degree()?;
        Ok(m)
    }

    /// Only checks shapes, so that misprinted maps can be loaded and diagnosed.
    pub fn unvalidated(
        source_vars: [&str; 2],
        entries: Vec<SparseMultiPoly<Rational>>,
        target_labels: Vec<String>,
    ) -> Result<Self, ConstructError> {
        if entries.len() != target_labels.len() {
            return Err(ConstructError::LengthMismatch {
                entries: entries.len(),
                expected: target_labels.len(),
            });
        }
        if entries.iter().all(SparseMultiPoly::is_zero) {
            return Err(ConstructError::BadMap("all entries are zero".into()));
        }
        if let Some(e) = entries.iter().find(|e| e.vars() != source_vars) {
            return Err(ConstructError::BadMap(format!(
                "entry over variables {:?}, expected {source_vars:?}",
                e.vars()
            )));
        }
        Ok(ProjectiveCurveMap {
            source_vars: source_vars.map(String::from),
            entries,
            target_labels,
        })
    }

    /// Parses entries in canonical text form over `S0, S1` with the `V` labels.
    pub fn from_strs(entries: &[&str]) -> Result<Self, ConstructError> {
        let polys = entries
            .iter()
            .map(|s| SparseMultiPoly::parse(s, &D_VARS))
            .collect::<Result<Vec<_>, _>>()?;
        let labels = if polys.len() == V_LABELS.len() {
            V_LABELS.iter().map(|s| s.to_string()).collect()
        } else {
            (0..polys.len()).map(|i| format!("e{i}")).collect()
        };
        Self::new(D_VARS, polys, labels)
    }

    pub fn source_vars(&self) -> &[String; 2] {
        &self.source_vars
    }

    pub fn entries(&self) -> &[SparseMultiPoly<Rational>] {
        &self.entries
    }

    pub fn target_labels(&self) -> &[String] {
        &self.target_labels
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Degree of each entry (`None` for a zero entry or a non-homogeneous one).
    pub fn entry_degrees(&self) -> Vec<Option<u32>> {
        self.entries
            .iter()
            .map(|e| if e.is_homogeneous() { e.degree() } else { None })
            .collect()
    }

    /// Common degree of the entries, ignoring zero entries.
    pub fn degree(&self) -> Result<u32, ConstructError> {
        let err = || ConstructError::NotHomogeneous {
            degrees: self.entry_degrees(),
        };
        let mut common = None;
        for e in self.entries.iter().filter(|e| !e.is_zero()) {
            let d = e.homogeneous_degree().map_err(|_| err())?.expect("nonzero entry");
            match common {
                None => common = Some(d),
                Some(c) if c != d => return Err(err()),
                _ => {}
            }
        }
        common.ok_or_else(|| ConstructError::BadMap("all entries are zero".into()))
    }

    pub fn map_entries(&self, f: impl Fn(&SparseMultiPoly<Rational>) -> SparseMultiPoly<Rational>) -> Self {
        ProjectiveCurveMap {
            source_vars: self.source_vars.clone(),
            entries: self.entries.iter().map(f).collect(),
            target_labels: self.target_labels.clone(),
        }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self, ConstructError> {
        let vars = [self.source_vars[0].as_str(), self.source_vars[1].as_str()];
        Self::unvalidated(vars, self.entries.clone(), labels)
    }

    /// Drops an entry equal to the one before it (with its label).
    pub fn without_repeated_entries(&self) -> Self {
        let mut entries = Vec::new();
        let mut labels = Vec::new();
        for (e, l) in self.entries.iter().zip(&self.target_labels) {
            if entries.last() != Some(e) {
                entries.push(e.clone());
                labels.push(l.clone());
            }
        }
        ProjectiveCurveMap {
            source_vars: self.source_vars.clone(),
            entries,
            target_labels: labels,
        }
    }

    /// Coordinates of the image of `point`, over any field containing the rationals.
    pub fn eval<F: Field>(&self, point: &[F; 2]) -> Vec<F> {
        self.entries
            .iter()
            .map(|e| e.map_coeffs(F::from_rational).eval(point))
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.to_string()).collect()
    }
}

/// Projective equality by cross-multiplication: `u_i v_k = u_k v_i` for all
/// pairs. Both vectors must be nonzero.
pub fn projectively_equal<F: Field>(u: &[F], v: &[F]) -> bool {
    if u.len() != v.len() || u.iter().all(F::is_zero) || v.iter().all(F::is_zero) {
        return false;
    }
    (0..u.len()).all(|i| (i + 1..u.len()).all(|k| u[i].clone() * v[k].clone() == u[k].clone() * v[i].clone()))
}

/// Degree of the map after removing the gcd common to all entries.
pub fn normalized_map_degree(m: &ProjectiveCurveMap) -> Result<u32, ConstructError> {
    use crate::exactalg::UniPoly;

    let n = m.degree()?;
    // Dehomogenize at S0 = 1: F(S0, S1) -> F(1, x). Powers of S1 become powers
    // of x; the power of S0 dividing F is n - deg F(1, x).
    let mut g = UniPoly::<Rational>::zero();
    let mut s0_power = u32::MAX;
    for e in m.entries().iter().filter(|e| !e.is_zero()) {
        let mut coeffs = vec![Rational::zero(); n as usize + 1];
        for (mono, c) in e.terms() {
            coeffs[mono.exponents()[1] as usize] = c.clone();
        }
        let u = UniPoly::new(coeffs);
        s0_power = s0_power.min(n - u.degree().expect("nonzero") as u32);
        g = g.gcd(&u);
    }
    let common = g.degree().expect("nonzero gcd") as u32 + s0_power;
    Ok(n - common)
}
