//! Numerical semigroups of admissible multi-section degrees.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("a numerical semigroup needs at least one generator")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("d and n must be positive (got d = {d}, n = {n})")]
    BadInput { d: u64, n: u64 },
    #[error("binomial coefficient C({d}, {i}) does not fit in 64 bits")]
    Overflow { d: u64, i: u64 },
}

/// Submonoid of the nonnegative integers given by generators. Duplicates are
/// kept as given; computations use the deduplicated set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn new(generators: Vec<u64>) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        Ok(NumericalSemigroup { generators })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn distinct_generators(&self) -> Vec<u64> {
        let mut g = self.generators.clone();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn gcd(&self) -> u64 {
        self.generators.iter().fold(0, |acc, &g| acc.gcd(&g))
    }

    /// Least positive element, which is the least generator.
    pub fn min_positive(&self) -> u64 {
        *self.generators.iter().min().expect("nonempty")
    }

    /// Membership: divide through by the gcd, then a coin-change reachability
    /// table up to `x / gcd`.
    pub fn contains(&self, x: u64) -> bool {
        if x == 0 {
            return true;
        }
        let g = self.gcd();
        if !x.is_multiple_of(g) {
            return false;
        }
        let target = (x / g) as usize;
        let coins: Vec<usize> = self
            .distinct_generators()
            .into_iter()
            .map(|c| (c / g) as usize)
            .filter(|&c| c <= target)
            .collect();
        let mut reach = vec![false; target + 1];
        reach[0] = true;
        for v in 1..=target {
            reach[v] = coins.iter().any(|&c| c <= v && reach[v - c]);
        }
        reach[target]
    }

    /// Members up to and including `bound`, ascending.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }
}

fn binomial(d: u64, i: u64) -> BigUint {
    (0..i).fold(BigUint::from(1u32), |acc, k| acc * (d - k) / (k + 1))
}

/// Generators `C(d, i)` for `i = 1..=min(d, n)`.
pub fn sdn_generators(d: u64, n: u64) -> Result<NumericalSemigroup, SemigroupError> {
    if d == 0 || n == 0 {
        return Err(SemigroupError::BadInput { d, n });
    }
    let gens = (1..=d.min(n))
        .map(|i| u64::try_from(binomial(d, i)).map_err(|_| SemigroupError::Overflow { d, i }))
        .collect::<Result<Vec<_>, _>>()?;
    NumericalSemigroup::new(gens)
}

/// Least generator of `S_{d,n}` without materialising every binomial, so it
/// also works when the middle binomials overflow. `i -> C(d, i)` is unimodal,
/// so the minimum over `1..=m` sits at `i = 1` or `i = m`.
pub fn sdn_min_generator(d: u64, n: u64) -> Result<u64, SemigroupError> {
    if d == 0 || n == 0 {
        return Err(SemigroupError::BadInput { d, n });
    }
    let m = d.min(n);
    let last = binomial(d, m.min(d - m));
    Ok(u64::try_from(last).map_or(d, |c| c.min(d)))
}

pub fn semigroup_contains(s: &NumericalSemigroup, x: u64) -> bool {
    s.contains(x)
}

pub fn semigroup_min_and_gcd(s: &NumericalSemigroup) -> (u64, u64) {
    (s.min_positive(), s.gcd())
}
