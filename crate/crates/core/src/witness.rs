//! Parameter arithmetic for the witness families: hypersurfaces of degree
//! `n = 4ab` in `P^n`, pencils of minimal multi-section degree `d = n - 1`,
//! pulled back along a degree-`e` map.

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::sdn_min_generator;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("{name} must be a positive integer")]
    BadInput { name: &'static str },
    #[error("parameters too large: 4*{a}*{b} overflows")]
    Overflow { a: u64, b: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub a: u64,
    pub b: u64,
    pub n: u64,
    pub d: u64,
    pub span_bound: i64,
    pub basepoint_ok: bool,
    pub e: Option<u64>,
    pub no_section_ok: Option<bool>,
    /// Least generator of the degree semigroup `S_{d,n}`.
    pub strata_min_divisor: u64,
    /// Whether that generator equals `d`. For `d = n - 1` the full stratum
    /// `i = d` is available and contributes `C(d, d) = 1`, so this is false.
    pub bound_meets_d: bool,
    /// Least `C(d, i)` over the proper strata `1 <= i <= d - 1`; equals `d`.
    pub proper_strata_min_divisor: u64,
}

fn positive(value: u64, name: &'static str) -> Result<u64, WitnessError> {
    if value == 0 {
        Err(WitnessError::BadInput { name })
    } else {
        Ok(value)
    }
}

fn four_ab(a: u64, b: u64) -> Result<u64, WitnessError> {
    a.checked_mul(b)
        .and_then(|p| p.checked_mul(4))
        .filter(|&p| p <= i64::MAX as u64)
        .ok_or(WitnessError::Overflow { a, b })
}

/// `n = 4ab`, `d = n - 1`, the span bound and the semigroup cross-check.
pub fn witness_parameters(a: u64, b: u64) -> Result<WitnessReport, WitnessError> {
    positive(a, "a")?;
    positive(b, "b")?;
    let n = four_ab(a, b)?;
    let d = n - 1;
    let (span_bound, basepoint_ok) = span_and_basepoint(a, b)?;
    let strata_min_divisor = sdn_min_generator(d, n).expect("d, n positive");
    Ok(WitnessReport {
        a,
        b,
        n,
        d,
        span_bound,
        basepoint_ok,
        e: None,
        no_section_ok: None,
        strata_min_divisor,
        bound_meets_d: strata_min_divisor == d,
        proper_strata_min_divisor: if d > 1 {
            sdn_min_generator(d, d - 1).expect("d > 1")
        } else {
            d
        },
    })
}

/// `n - b - (a-1)(b-1)` and whether `span_bound + 1 <= n`.
pub fn span_and_basepoint(a: u64, b: u64) -> Result<(i64, bool), WitnessError> {
    positive(a, "a")?;
    positive(b, "b")?;
    let n = four_ab(a, b)? as i64;
    let (a, b) = (a as i64, b as i64);
    let span_bound = n - b - (a - 1) * (b - 1);
    Ok((span_bound, span_bound < n))
}

/// The pair `a >= a_prime`, `b >= b_prime` with `4ab > e + 1` and `4ab`
/// least, ties going to the smaller `a`.
pub fn choose_ab(a_prime: u64, b_prime: u64, e: u64) -> Result<(u64, u64), WitnessError> {
    positive(a_prime, "a_prime")?;
    positive(b_prime, "b_prime")?;
    positive(e, "e")?;
    // At a = a_prime + e already 4a > e + 1, so b = b_prime there, and
    // larger a only increases the product.
    let mut best: Option<(u64, u64, u64)> = None;
    for a in a_prime..=a_prime.saturating_add(e) {
        let b = b_prime.max((e + 1) / (4 * a) + 1);
        let p = four_ab(a, b)?;
        if best.is_none_or(|(_, _, q)| p < q) {
            best = Some((a, b, p));
        }
    }
    let (a, b, _) = best.expect("nonempty range");
    Ok((a, b))
}

pub fn choose_ab_and_certify(a_prime: u64, b_prime: u64, e: u64) -> Result<WitnessReport, WitnessError> {
    let (a, b) = choose_ab(a_prime, b_prime, e)?;
    let mut r = witness_parameters(a, b)?;
    r.e = Some(e);
    r.no_section_ok = Some(e < r.n - 1);
    Ok(r)
}
