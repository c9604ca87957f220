//! Elements of cyclotomic fields `Q[x] / Phi_d(x)`.
//!
//! Every element carries its conductor. Binary operations on elements of
//! different conductors embed both operands into the field of conductor
//! `lcm(c1, c2)` via `zeta_c = zeta_L^(L/c)`. Results whose value is rational
//! are stored with conductor 1, so rational constants such as `zero()` and
//! `one()` mix freely with any conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;

use super::{Field, Rational, UniPoly};

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|k| n.is_multiple_of(*k)).collect()
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// The `d`-th cyclotomic polynomial, from `x^d - 1 = prod_{e | d} Phi_e(x)`.
pub fn cyclotomic_polynomial(d: u32) -> UniPoly<Rational> {
    assert!(d > 0, "conductor must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, UniPoly<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    let poly = compute_cyclotomic(d);
    cache.lock().unwrap().insert(d, poly.clone());
    poly
}

fn compute_cyclotomic(d: u32) -> UniPoly<Rational> {
    let mut poly = UniPoly::monomial(Rational::one(), d as usize).sub(&UniPoly::one());
    for e in divisors(d) {
        if e < d {
            let (q, r) = poly.div_rem(&cyclotomic_polynomial(e));
            debug_assert!(r.is_zero());
            poly = q;
        }
    }
    poly
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Reduces `poly` modulo `Phi_conductor`.
    pub fn from_poly(conductor: u32, poly: &UniPoly<Rational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let len = phi.degree().unwrap_or(0);
        let r = poly.rem(&phi);
        let coeffs = (0..len).map(|k| r.coeff(k)).collect();
        Cyclotomic { conductor, coeffs }.demoted()
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// The primitive root `zeta_d = exp(2 pi i / d)`, i.e. the class of `x`.
    pub fn zeta(d: u32) -> Self {
        Cyclotomic::from_poly(d, &UniPoly::monomial(Rational::one(), 1))
    }

    /// `zeta_d^k` for any integer `k`.
    pub fn zeta_pow(d: u32, k: i64) -> Self {
        let e = k.rem_euclid(d as i64) as usize;
        Cyclotomic::from_poly(d, &UniPoly::monomial(Rational::one(), e))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coordinates in the power basis `1, zeta, ..., zeta^(phi(d)-1)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    fn as_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coeffs.clone())
    }

    /// Embeds into the field of conductor `target` (a multiple of the current one).
    pub fn promote(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "conductor {target} is not a multiple of {}",
            self.conductor
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut spread = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            spread[k * step] = c.clone();
        }
        let phi = cyclotomic_polynomial(target);
        let len = phi.degree().unwrap_or(0);
        let r = UniPoly::new(spread).rem(&phi);
        Cyclotomic {
            conductor: target,
            coeffs: (0..len).map(|k| r.coeff(k)).collect(),
        }
    }

    fn demoted(self) -> Self {
        if self.conductor > 1 && self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            let c0 = self.coeffs.first().cloned().unwrap_or_else(Rational::zero);
            Cyclotomic::rational(c0)
        } else {
            self
        }
    }

    fn aligned(&self, other: &Self) -> (u32, Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (l, self.promote(l), other.promote(l))
    }

    fn zip_with(self, other: Self, f: impl Fn(Rational, Rational) -> Rational) -> Self {
        let (l, a, b) = self.aligned(&other);
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| f(x, y)).collect();
        Cyclotomic { conductor: l, coeffs }.demoted()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 {
            let c = self.coeffs[0].clone();
            let coeffs = rhs.coeffs.into_iter().map(|x| x * c.clone()).collect();
            return Cyclotomic {
                conductor: rhs.conductor,
                coeffs,
            }
            .demoted();
        }
        if rhs.conductor == 1 {
            return rhs * self;
        }
        let (l, a, b) = self.aligned(&rhs);
        Cyclotomic::from_poly(l, &a.as_poly().mul(&b.as_poly()))
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::rational(Rational::zero())
    }

    fn one() -> Self {
        Cyclotomic::rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.conductor == 1 {
            return self.coeffs[0].inv().map(Cyclotomic::rational);
        }
        let phi = cyclotomic_polynomial(self.conductor);
        let (g, s, _) = self.as_poly().ext_gcd(&phi);
        // Phi_d is irreducible, so any nonzero reduced element is coprime to it.
        debug_assert_eq!(g.degree(), Some(0));
        Some(Cyclotomic::from_poly(self.conductor, &s))
    }

    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::rational(r.clone())
    }

    fn as_rational(&self) -> Option<Rational> {
        (self.conductor == 1).then(|| self.coeffs[0].clone())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if abs != Rational::one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &UniPoly<Rational>) -> Vec<String> {
        p.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(coeffs(&cyclotomic_polynomial(1)), ["-1", "1"]);
        assert_eq!(coeffs(&cyclotomic_polynomial(2)), ["1", "1"]);
        assert_eq!(coeffs(&cyclotomic_polynomial(3)), ["1", "1", "1"]);
        assert_eq!(coeffs(&cyclotomic_polynomial(4)), ["1", "0", "1"]);
        assert_eq!(coeffs(&cyclotomic_polynomial(6)), ["1", "-1", "1"]);
        assert_eq!(coeffs(&cyclotomic_polynomial(12)), ["1", "0", "-1", "0", "1"]);
        for d in 1..=30 {
            assert_eq!(cyclotomic_polynomial(d).degree(), Some(totient(d) as usize));
        }
    }

    #[test]
    fn sixth_root_relations() {
        let z = Cyclotomic::zeta(6);
        assert_eq!(z.coeffs().len(), 2);
        assert_eq!(z.pow(2), z.clone() - Cyclotomic::one());
        assert_eq!(z.pow(3), -Cyclotomic::one());
        assert_eq!(z.pow(6), Cyclotomic::one());
        assert_eq!(z.pow(6).conductor(), 1);
    }

    #[test]
    fn mixed_conductors() {
        // zeta_6^2 is a primitive cube root of unity.
        let w3 = Cyclotomic::zeta(3);
        assert_eq!(Cyclotomic::zeta(6).pow(2), w3);
        let sum = w3.clone() + Cyclotomic::zeta(2);
        assert_eq!(sum.pow(3), (w3 - Cyclotomic::one()).pow(3));
        // zeta_4 * zeta_6 lives in conductor 12
        let p = Cyclotomic::zeta(4) * Cyclotomic::zeta(6);
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::zeta_pow(12, 5));
    }

    #[test]
    fn inverses() {
        let a = Cyclotomic::zeta(6) * Cyclotomic::rational(Rational::from(3)) + Cyclotomic::one();
        let ai = a.inv().unwrap();
        assert_eq!(a * ai, Cyclotomic::one());
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn zeta_two_is_minus_one() {
        assert_eq!(Cyclotomic::zeta(2).as_rational(), Some(Rational::from(-1)));
    }
}
