use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::Q;

/// Grading of a [`CycleClass`]. The zero class is homogeneous of every
/// codimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    Zero,
    Homogeneous(usize),
    Mixed,
}

/// A formal rational combination of normal-form monomials on `Y^m`.
///
/// Zero coefficients are never stored, so two classes are equal exactly when
/// their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleClass {
    m: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl CycleClass {
    pub fn zero(m: usize) -> Self {
        CycleClass { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(Monomial::one(m), Q::one())
    }

    pub fn monomial(mono: Monomial, coeff: Q) -> Self {
        let mut c = CycleClass::zero(mono.m());
        c.add_term(mono, coeff);
        c
    }

    pub fn constant(m: usize, coeff: Q) -> Self {
        Self::monomial(Monomial::one(m), coeff)
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Result<Self> {
        let mut c = CycleClass::zero(m);
        for (mono, q) in terms {
            if mono.m() != m {
                return Err(Error::FactorMismatch { left: m, right: mono.m() });
            }
            c.add_term(mono, q);
        }
        Ok(c)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Q {
        self.terms.get(mono).cloned().unwrap_or_else(Q::zero)
    }

    pub fn grading(&self) -> Grading {
        let mut codims = self.terms.keys().map(Monomial::codim);
        match codims.next() {
            None => Grading::Zero,
            Some(c) if codims.all(|x| x == c) => Grading::Homogeneous(c),
            Some(_) => Grading::Mixed,
        }
    }

    /// Codimension of a nonzero homogeneous class; `None` for zero.
    pub fn codim(&self) -> Result<Option<usize>> {
        match self.grading() {
            Grading::Zero => Ok(None),
            Grading::Homogeneous(c) => Ok(Some(c)),
            Grading::Mixed => Err(Error::Inhomogeneous),
        }
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Q) {
        debug_assert_eq!(mono.m(), self.m);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &CycleClass, scale: &Q) {
        debug_assert_eq!(self.m, other.m);
        for (mono, q) in &other.terms {
            self.add_term(mono.clone(), q * scale);
        }
    }

    pub fn scale(&self, s: &Q) -> CycleClass {
        let mut out = CycleClass::zero(self.m);
        if s.is_zero() {
            return out;
        }
        for (mono, q) in &self.terms {
            out.terms.insert(mono.clone(), q * s);
        }
        out
    }

    pub fn checked_add(&self, other: &CycleClass) -> Result<CycleClass> {
        if self.m != other.m {
            return Err(Error::FactorMismatch { left: self.m, right: other.m });
        }
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        Ok(out)
    }

    /// Keeps only the part of codimension `c`.
    pub fn graded_part(&self, c: usize) -> CycleClass {
        CycleClass {
            m: self.m,
            terms: self.terms.iter().filter(|(k, _)| k.codim() == c).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Re-indexes factors, see [`Monomial::relabel`].
    pub(crate) fn relabel(&self, new_m: usize, map: &[usize]) -> CycleClass {
        let mut out = CycleClass::zero(new_m);
        for (mono, q) in &self.terms {
            out.add_term(mono.relabel(new_m, map), q.clone());
        }
        out
    }
}

impl Add for &CycleClass {
    type Output = CycleClass;

    /// Panics if the factor counts differ; use [`CycleClass::checked_add`]
    /// for a fallible version.
    fn add(self, rhs: &CycleClass) -> CycleClass {
        self.checked_add(rhs).expect("adding classes on different powers of Y")
    }
}

impl Sub for &CycleClass {
    type Output = CycleClass;

    fn sub(self, rhs: &CycleClass) -> CycleClass {
        assert_eq!(self.m, rhs.m, "subtracting classes on different powers of Y");
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &CycleClass {
    type Output = CycleClass;

    fn neg(self) -> CycleClass {
        self.scale(&-Q::one())
    }
}

/// Formats a rational for the expression grammar (`int ['/' nat]`).
pub(crate) fn fmt_rational(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycleClass {
    /// Prints in the expression grammar accepted by the CLI parser, e.g.
    /// `h_1^2 - 2/3*o_1*h_2 + t_{1,2}`. A leading negative term is written
    /// with an explicit integer coefficient (`-1*h_1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (mono, q)) in self.terms.iter().enumerate() {
            let abs = q.abs();
            let (sep, shown) = match (n, q.is_negative()) {
                (0, _) => ("", q.clone()),
                (_, false) => (" + ", abs),
                (_, true) => (" - ", abs),
            };
            write!(f, "{sep}")?;
            if mono.is_one() {
                write!(f, "{}", fmt_rational(&shown))?;
            } else if shown.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&shown))?;
            }
        }
        Ok(())
    }
}
