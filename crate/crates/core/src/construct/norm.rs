use serde::Serialize;

use super::{ConstructError, B_VARS, C_VARS};
use crate::exactalg::{Cyclotomic, Field, Rational, SparseMultiPoly};

/// The self-map `[T0, T1] -> [T0^d, T1^d]` of the line, viewed as a cover
/// `C -> B` with deck group `mu_d` acting on `T0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialCover {
    degree: u32,
}

impl MonomialCover {
    pub fn new(degree: u32) -> Self {
        assert!(degree >= 1, "cover degree must be positive");
        MonomialCover { degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Points of the fibre over `[1, u]` for `u = c^d`: the `d` points `[1, zeta^k c]`.
    pub fn fiber_over_power(&self, c: &Rational) -> Vec<[Cyclotomic; 2]> {
        (0..self.degree)
            .map(|k| {
                [
                    Cyclotomic::one(),
                    Cyclotomic::zeta_pow(self.degree, i64::from(k)) * Cyclotomic::rational(c.clone()),
                ]
            })
            .collect()
    }

    /// Pulls a form in `U0, U1` back to `T0, T1` by `U_i = T_i^d`.
    pub fn pullback(&self, p: &SparseMultiPoly<Rational>) -> SparseMultiPoly<Rational> {
        let terms = p
            .terms()
            .map(|(m, c)| (m.exponents().iter().map(|e| e * self.degree).collect(), c.clone()));
        SparseMultiPoly::from_terms(&C_VARS, terms).expect("two variables")
    }

    pub fn norm(&self, p: &SparseMultiPoly<Rational>) -> Result<SparseMultiPoly<Rational>, ConstructError> {
        monomial_norm(p, self.degree)
    }
}

/// `prod_k p(zeta_d^k T0, T1)`, computed over `Q(zeta_d)` and written in
/// `U0 = T0^d, U1 = T1^d`.
pub fn monomial_norm(p: &SparseMultiPoly<Rational>, d: u32) -> Result<SparseMultiPoly<Rational>, ConstructError> {
    assert!(d >= 1, "cover degree must be positive");
    p.homogeneous_degree()?;
    let lifted = p.map_coeffs(Cyclotomic::from_rational);
    let mut prod = SparseMultiPoly::constant(p.vars(), Cyclotomic::one());
    for k in 0..d {
        let factors = [Cyclotomic::zeta_pow(d, i64::from(k)), Cyclotomic::one()];
        prod = &prod * &lifted.rescale_variables(&factors);
    }
    let mut rational = Vec::new();
    for (m, c) in prod.terms() {
        let r = c
            .as_rational()
            .ok_or_else(|| ConstructError::InternalNonRational(c.to_string()))?;
        rational.push((m.exponents().to_vec(), r));
    }
    let rational = SparseMultiPoly::from_terms(p.vars(), rational)?;
    rational
        .deflate(d, &B_VARS)
        .ok_or_else(|| ConstructError::InternalNonInvariant(rational.to_string()))
}

/// Twists of `f_* O(m)` for the degree-`d` monomial cover: the monomials
/// `T0^a T1^(m-a)` grouped by `a mod d`, one summand `O(floor((m - r)/d))`
/// per nonempty residue class `r`.
pub fn pushforward_splitting_type(d: u32, m: u32) -> Vec<u32> {
    assert!(d >= 1, "cover degree must be positive");
    (0..d.min(m + 1)).map(|r| (m - r) / d).collect()
}
