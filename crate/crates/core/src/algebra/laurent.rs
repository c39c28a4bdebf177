//! Sparse two-variable Laurent polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};

use super::rat::Rat;

/// The variable pair a polynomial is written in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VarPair {
    /// HOMFLYPT variables (v, z).
    VZ,
    /// Dubrovnik/Kauffman variables (a, z).
    AZ,
}

impl VarPair {
    pub fn names(self) -> (&'static str, &'static str) {
        match self {
            VarPair::VZ => ("v", "z"),
            VarPair::AZ => ("a", "z"),
        }
    }
}

impl fmt::Display for VarPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.names();
        write!(f, "({a},{b})")
    }
}

/// Sparse Laurent polynomial in two variables.
///
/// Keys are exponent pairs `(e1, e2)` for the first and second variable.
/// Zero coefficients are never stored; the zero polynomial has an empty map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly2 {
    vars: VarPair,
    terms: BTreeMap<(i64, i64), Rat>,
}

impl LaurentPoly2 {
    pub fn zero(vars: VarPair) -> Self {
        LaurentPoly2 {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarPair) -> Self {
        Self::mono(vars, 0, 0, Rat::from_integer(1.into()))
    }

    /// Single monomial `c * x1^e1 * x2^e2`.
    pub fn mono(vars: VarPair, e1: i64, e2: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e1, e2), c);
        }
        LaurentPoly2 { vars, terms }
    }

    pub fn from_terms<I>(vars: VarPair, it: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), Rat)>,
    {
        let mut p = Self::zero(vars);
        for ((e1, e2), c) in it {
            p.add_term(e1, e2, c);
        }
        p
    }

    pub fn vars(&self) -> VarPair {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> Rat {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree: the largest |exponent| over both variables and all stored
    /// terms. The zero polynomial has degree 0.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|&(e1, e2)| e1.abs().max(e2.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Minimum exponent of the second variable, `None` for the zero polynomial.
    pub fn min_e2(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, e2)| e2).min()
    }

    pub fn max_e2(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, e2)| e2).max()
    }

    /// Coefficient of `x2^e2` as a map `e1 -> Rat`.
    pub fn e2_layer(&self, e2: i64) -> BTreeMap<i64, Rat> {
        self.terms
            .iter()
            .filter(|((_, j), _)| *j == e2)
            .map(|(&(e1, _), c)| (e1, c.clone()))
            .collect()
    }

    pub fn add_term(&mut self, e1: i64, e2: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((e1, e2)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(e1, e2));
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            Err(Error::VarMismatch(self.vars, other.vars))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (&(e1, e2), c) in &other.terms {
            out.add_term(e1, e2, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2 {
            vars: self.vars,
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPoly2 {
            vars: self.vars,
            terms: self.terms.iter().map(|(&k, c)| (k, c * s)).collect(),
        }
    }

    /// Multiply by the monomial `c * x1^e1 * x2^e2`.
    pub fn mul_mono(&self, e1: i64, e2: i64, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPoly2 {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), coef)| ((a + e1, b + e2), coef * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..n {
            out = out.mul(self).expect("same vars");
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (x1, x2) = self.vars.names();
        let mut first = true;
        for (&(e1, e2), c) in &self.terms {
            let mut factors = Vec::new();
            if e1 != 0 {
                factors.push(if e1 == 1 {
                    x1.to_string()
                } else {
                    format!("{x1}^{e1}")
                });
            }
            if e2 != 0 {
                factors.push(if e2 == 1 {
                    x2.to_string()
                } else {
                    format!("{x2}^{e2}")
                });
            }
            let abs = c.abs();
            let show_coeff = !abs.is_one() || factors.is_empty();
            let body = if show_coeff {
                let mut s = abs.to_string();
                if !factors.is_empty() {
                    s.push('*');
                    s.push_str(&factors.join("*"));
                }
                s
            } else {
                factors.join("*")
            };
            if first {
                if c < &Rat::zero() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if c < &Rat::zero() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

use num_traits::One;
use num_traits::Signed;
