//! Sparse multivariate polynomials over an exact field.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic. The canonical text form lists terms from the largest
//! monomial down, e.g. `S0^5 - 2/3*S0^2*S1^3 + S1^5`. Coefficient `1` is
//! omitted in front of a monomial, exponent `1` is omitted, and fractions are
//! written `p/q` in lowest terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactAlgError, Field, Rational};

/// Exponent vector with graded lexicographic ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMultiPoly<F> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> SparseMultiPoly<F> {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        SparseMultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: F) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    /// The single variable `vars[index]`.
    pub fn var<S: AsRef<str>>(vars: &[S], index: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[index] = 1;
        Self::monomial(vars, e, F::one()).expect("exponent length matches")
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: Vec<u32>, c: F) -> Result<Self, ExactAlgError> {
        Self::from_terms(vars, [(exps, c)])
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<u32>, F)>,
    ) -> Result<Self, ExactAlgError> {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(ExactAlgError::ExponentLength {
                    expected: vars.len(),
                    got: exps.len(),
                });
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// True if every term has the same total degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Validates the homogeneous flag: returns the common degree or
    /// `NotHomogeneous` listing the distinct term degrees.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>, ExactAlgError> {
        if self.is_homogeneous() {
            Ok(self.degree())
        } else {
            let mut degrees: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
            degrees.sort_unstable();
            degrees.dedup();
            Err(ExactAlgError::NotHomogeneous { degrees })
        }
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    /// Rescales so the leading coefficient is one. Never applied implicitly.
    pub fn normalized(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.vars, F::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseMultiPoly<G> {
        let mut out = SparseMultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Substitutes `x_i -> factors[i] * x_i` for every variable.
    pub fn rescale_variables(&self, factors: &[F]) -> Self {
        assert_eq!(factors.len(), self.vars.len());
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            for (f, &e) in factors.iter().zip(&m.0) {
                for _ in 0..e {
                    coef = coef * f.clone();
                }
            }
            out.add_term(m.clone(), coef);
        }
        out
    }

    /// Divides every exponent by `step` and renames the variables; `None` if
    /// some exponent is not a multiple of `step`. This realises substitutions
    /// such as `T_i = S_i^2` on polynomials that only involve even powers.
    pub fn deflate<S: AsRef<str>>(&self, step: u32, new_vars: &[S]) -> Option<Self> {
        assert!(step > 0);
        assert_eq!(new_vars.len(), self.vars.len());
        let mut out = Self::zero(new_vars);
        for (m, c) in &self.terms {
            if m.0.iter().any(|e| e % step != 0) {
                return None;
            }
            out.add_term(Monomial(m.0.iter().map(|e| e / step).collect()), c.clone());
        }
        Some(out)
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }
}

impl SparseMultiPoly<Rational> {
    /// Parses the canonical text form (see module docs). Whitespace between
    /// tokens is optional; `*` separates coefficient and factors.
    pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Self, ExactAlgError> {
        let err = |msg: String| ExactAlgError::Parse(format!("{msg} in {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && (i == 0 || !compact[..i].ends_with('^')) {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                } else if i != 0 {
                    return Err(err("dangling sign".into()));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("trailing sign".into()));
        }
        pieces.push((neg, cur));

        let mut p = Self::zero(vars);
        for (neg, piece) in pieces {
            let mut coef = Rational::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor".into()));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coef = coef * factor.parse::<Rational>()?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err(format!("bad exponent {e:?}")))?),
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| v.as_ref() == name)
                    .ok_or_else(|| err(format!("unknown variable {name:?}")))?;
                exps[idx] += e;
            }
            if neg {
                coef = -coef;
            }
            p.add_term(Monomial(exps), coef);
        }
        Ok(p)
    }
}

impl<F: Field> fmt::Display for SparseMultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = match c.as_rational() {
                Some(r) if r.is_negative() => (true, Some(r.abs())),
                Some(r) => (false, Some(r)),
                None => (false, None),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let coef = match mag {
                Some(r) => r.to_string(),
                None => c.to_string(),
            };
            if factors.is_empty() {
                write!(f, "{coef}")?;
            } else {
                if coef != "1" {
                    write!(f, "{coef}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Add for &SparseMultiPoly<F> {
    type Output = SparseMultiPoly<F>;
    fn add(self, rhs: &SparseMultiPoly<F>) -> SparseMultiPoly<F> {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &SparseMultiPoly<F> {
    type Output = SparseMultiPoly<F>;
    fn sub(self, rhs: &SparseMultiPoly<F>) -> SparseMultiPoly<F> {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &SparseMultiPoly<F> {
    type Output = SparseMultiPoly<F>;
    fn mul(self, rhs: &SparseMultiPoly<F>) -> SparseMultiPoly<F> {
        self.check_vars(rhs);
        let mut out = SparseMultiPoly::zero(&self.vars);
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.times(mb), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &SparseMultiPoly<F> {
    type Output = SparseMultiPoly<F>;
    fn neg(self) -> SparseMultiPoly<F> {
        self.scale(&-F::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for SparseMultiPoly<F> {
            type Output = SparseMultiPoly<F>;
            fn $m(self, rhs: SparseMultiPoly<F>) -> SparseMultiPoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for SparseMultiPoly<F> {
    type Output = SparseMultiPoly<F>;
    fn neg(self) -> SparseMultiPoly<F> {
        -&self
    }
}
