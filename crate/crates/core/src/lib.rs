//! Exact verification of the combinatorial and algebraic inputs behind
//! index and minimal-degree bounds for degenerate pencils.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: rationals, cyclotomic fields, sparse polynomials and exact
//!   linear algebra.
//! * [`perm`]: small permutation groups, induced actions and orbits.
//! * [`semigroup`]: numerical semigroups of admissible multi-section degrees.
//! * [`strata`]: turns transitive stratum actions into degree divisors and
//!   index / minimal-degree reports.
//! * [`construct`]: the explicit monomial covers, equivariant rational normal
//!   curves, dual-point maps and the quadratic pullback table.
//! * [`witness`]: parameter arithmetic for witness-family counterexamples.
//! * [`cli`]: request dispatch and deterministic report rendering used by the
//!   `pencil-index` binary.

pub mod cli;
pub mod construct;
pub mod exactalg;
pub mod perm;
pub mod semigroup;
pub mod strata;
pub mod witness;

pub use exactalg::{Cyclotomic, ExactMatrix, Field, Rational, SparseMultiPoly};
