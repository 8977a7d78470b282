//! Rewriting of raw generator products into normal form.
//!
//! A raw product is reduced by the rules
//!
//! ```text
//! o_i·o_i → 0                 h_i·o_i → 0              h_i³ → d·o_i
//! τ_{i,j}·o_i → 0             τ_{i,j}·h_i → 0
//! τ_{i,j}·τ_{i,j} → eps2·2b·o_i·o_j
//! τ_{i,j}·τ_{i,k} → eps3·τ_{j,k}·o_i          (j ≠ k)
//! ```
//!
//! until no rule applies. Every rule either kills the product or strictly
//! lowers `#τ + Σ h_exp`, so reduction terminates. The system is confluent;
//! [`Rewriter::normal_form_by`] lets callers pick the redex at every step so
//! that property can be tested.

use num::{BigInt, One, Zero};

use crate::class::CycleClass;
use crate::error::Result;
use crate::monomial::{Factor, Generator, Monomial};
use crate::params::RingParams;
use crate::Q;

/// A formal product `coeff · g_1 · g_2 ⋯` of generators (1-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawProduct {
    pub coeff: Q,
    pub gens: Vec<Generator>,
}

impl RawProduct {
    pub fn new(gens: Vec<Generator>) -> Self {
        RawProduct { coeff: Q::one(), gens }
    }

    pub fn scaled(coeff: Q, gens: Vec<Generator>) -> Self {
        RawProduct { coeff, gens }
    }

    pub fn codim(&self) -> usize {
        self.gens.iter().map(|g| g.codim()).sum()
    }
}

/// A single applicable rewrite step. Pair positions refer to the current
/// list of `τ` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Redex {
    OSquare(usize),
    HTimesO(usize),
    HCube(usize),
    TauTimesO { pair: usize, at: usize },
    TauTimesH { pair: usize, at: usize },
    TauSquare(usize, usize),
    TauShared(usize, usize),
}

#[derive(Clone, Debug)]
struct State {
    coeff: Q,
    h: Vec<u32>,
    o: Vec<u32>,
    taus: Vec<(usize, usize)>,
}

impl State {
    fn redexes(&self) -> Vec<Redex> {
        let mut out = Vec::new();
        for i in 0..self.h.len() {
            if self.o[i] >= 2 {
                out.push(Redex::OSquare(i));
            }
            if self.h[i] >= 1 && self.o[i] >= 1 {
                out.push(Redex::HTimesO(i));
            }
            if self.h[i] >= 3 {
                out.push(Redex::HCube(i));
            }
        }
        for (p, &(i, j)) in self.taus.iter().enumerate() {
            for at in [i, j] {
                if self.o[at] >= 1 {
                    out.push(Redex::TauTimesO { pair: p, at });
                }
                if self.h[at] >= 1 {
                    out.push(Redex::TauTimesH { pair: p, at });
                }
            }
            for (q, &(k, l)) in self.taus.iter().enumerate().skip(p + 1) {
                if (i, j) == (k, l) {
                    out.push(Redex::TauSquare(p, q));
                } else if i == k || i == l || j == k || j == l {
                    out.push(Redex::TauShared(p, q));
                }
            }
        }
        out
    }

    /// Applies one step; returns `false` when the product became zero.
    fn apply(&mut self, redex: Redex, params: &RingParams) -> bool {
        match redex {
            Redex::OSquare(_) | Redex::HTimesO(_) => false,
            Redex::TauTimesO { .. } | Redex::TauTimesH { .. } => false,
            Redex::HCube(i) => {
                self.h[i] -= 3;
                self.o[i] += 1;
                self.coeff *= Q::from_integer(BigInt::from(params.d));
                true
            }
            Redex::TauSquare(p, q) => {
                let (i, j) = self.taus[p];
                self.remove_pairs(p, q);
                self.o[i] += 1;
                self.o[j] += 1;
                let factor = 2 * i64::from(params.b) * params.signs.eps2.value();
                self.coeff *= Q::from_integer(BigInt::from(factor));
                !self.coeff.is_zero()
            }
            Redex::TauShared(p, q) => {
                let (i, j) = self.taus[p];
                let (k, l) = self.taus[q];
                let shared = if i == k || i == l { i } else { j };
                let other_p = if i == shared { j } else { i };
                let other_q = if k == shared { l } else { k };
                self.remove_pairs(p, q);
                self.taus.push((other_p.min(other_q), other_p.max(other_q)));
                self.o[shared] += 1;
                self.coeff *= Q::from_integer(BigInt::from(params.signs.eps3.value()));
                true
            }
        }
    }

    fn remove_pairs(&mut self, p: usize, q: usize) {
        let (lo, hi) = (p.min(q), p.max(q));
        self.taus.remove(hi);
        self.taus.remove(lo);
    }

    fn into_monomial(self) -> (Monomial, Q) {
        let m = self.h.len();
        let mut slots = vec![Factor::ONE; m];
        for i in 0..m {
            debug_assert!(self.h[i] <= 2 && self.o[i] <= 1 && (self.h[i] == 0 || self.o[i] == 0));
            if self.o[i] == 1 {
                slots[i] = Factor::O;
            } else {
                slots[i] = Factor::H(self.h[i] as u8);
            }
        }
        for (i, j) in self.taus {
            slots[i] = Factor::Tau(j as u16);
            slots[j] = Factor::Tau(i as u16);
        }
        (Monomial::from_slots(slots), self.coeff)
    }
}

/// Reduces raw products for a fixed [`RingParams`].
#[derive(Clone, Debug)]
pub struct Rewriter {
    params: RingParams,
}

impl Rewriter {
    pub fn new(params: RingParams) -> Self {
        Rewriter { params }
    }

    pub fn params(&self) -> &RingParams {
        &self.params
    }

    fn initial_state(&self, raw: &RawProduct) -> Result<State> {
        let m = self.params.m;
        let mut st = State { coeff: raw.coeff.clone(), h: vec![0; m], o: vec![0; m], taus: Vec::new() };
        for g in &raw.gens {
            match g.zero_based(m)? {
                Generator::H(i) => st.h[i] += 1,
                Generator::O(i) => st.o[i] += 1,
                Generator::Tau(i, j) => st.taus.push((i, j)),
            }
        }
        Ok(st)
    }

    /// Normal form reducing the first available redex at every step.
    pub fn normal_form(&self, raw: &RawProduct) -> Result<CycleClass> {
        self.normal_form_by(raw, |_| 0)
    }

    /// Normal form where `choose(n)` picks which of the `n` currently
    /// applicable redexes to reduce next (it must return a value `< n`).
    pub fn normal_form_by(&self, raw: &RawProduct, mut choose: impl FnMut(usize) -> usize) -> Result<CycleClass> {
        let m = self.params.m;
        let mut st = self.initial_state(raw)?;
        if st.coeff.is_zero() {
            return Ok(CycleClass::zero(m));
        }
        loop {
            let redexes = st.redexes();
            if redexes.is_empty() {
                let (mono, q) = st.into_monomial();
                return Ok(CycleClass::monomial(mono, q));
            }
            let pick = choose(redexes.len());
            if !st.apply(redexes[pick], &self.params) {
                return Ok(CycleClass::zero(m));
            }
        }
    }
}
