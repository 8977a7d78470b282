use std::collections::BTreeMap;

use num::{One, Zero};

use crate::Q;

/// A rational combination of pure tensors `v_1⊗…⊗v_m` of model basis
/// elements, each pure tensor stored as the list of per-slot basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorClass {
    m: usize,
    terms: BTreeMap<Vec<u8>, Q>,
}

impl TensorClass {
    pub fn zero(m: usize) -> Self {
        TensorClass { m, terms: BTreeMap::new() }
    }

    pub fn pure(slots: Vec<u8>, coeff: Q) -> Self {
        let mut t = TensorClass::zero(slots.len());
        t.add_term(slots, coeff);
        t
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, slots: &[u8]) -> Q {
        self.terms.get(slots).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, slots: Vec<u8>, coeff: Q) {
        debug_assert_eq!(slots.len(), self.m);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(slots).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, q| !q.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &TensorClass, scale: &Q) {
        assert_eq!(self.m, other.m, "tensor classes on different powers");
        for (k, q) in &other.terms {
            self.add_term(k.clone(), q * scale);
        }
    }

    pub fn scale(&self, s: &Q) -> TensorClass {
        let mut out = TensorClass::zero(self.m);
        out.add_scaled(self, s);
        out
    }

    pub fn sum<'a>(m: usize, items: impl IntoIterator<Item = &'a TensorClass>) -> TensorClass {
        let mut out = TensorClass::zero(m);
        for t in items {
            out.add_scaled(t, &Q::one());
        }
        out
    }

    pub(crate) fn to_sparse(&self) -> BTreeMap<Vec<u8>, Q> {
        self.terms.clone()
    }

    /// `λ` with `self = λ·other`, if it exists (`other` nonzero).
    pub fn ratio_to(&self, other: &TensorClass) -> Option<Q> {
        let (key, q) = other.terms.iter().next()?;
        let lambda = self.coeff(key) / q;
        (other.scale(&lambda) == *self).then_some(lambda)
    }
}
