use std::collections::BTreeMap;

use num::{BigInt, Signed};
use serde::Serialize;

use super::model::{CohomologyModel, E6};
use super::span::span_dimensions;
use super::tensor::TensorClass;
use crate::error::{Error, Result};
use crate::matching::perfect_matchings;
use crate::monomial::Generator;
use crate::params::Sign;
use crate::Q;

/// Largest `b` for which the symmetrized sum is evaluated over all of
/// `S_{2b+2}` directly.
pub const SYM_PERMUTATION_MAX_B: u32 = 2;
/// Largest `b` for which it is evaluated at all (via perfect matchings, using
/// that the realized `τ`'s commute).
pub const SYM_MATCHING_MAX_B: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjudicationReport {
    pub b: u32,
    pub eps2: Sign,
    pub eps3: Sign,
    /// `Some(true)` when the symmetrized `τ` sum vanishes in the model,
    /// `None` when `b` is too large to evaluate it.
    pub sym_relation_verified: Option<bool>,
    pub sym_form: String,
    pub m: usize,
    /// `(c, dim V_c)` of the generated subalgebra on `Y^m`.
    pub dims: Vec<(usize, usize)>,
}

/// Reads off the signs of the `τ²` and shared-index relations from the
/// tensor model and checks that the symmetrized `τ` sum vanishes.
pub fn adjudicate_signs(model: &CohomologyModel, dims_m: Option<usize>) -> Result<AdjudicationReport> {
    let b = model.b();
    if b == 0 {
        return Err(Error::Adjudication("needs b >= 1: every τ vanishes when b = 0".into()));
    }
    let eps2 = tau_square_sign(model)?;
    let eps3 = shared_index_sign(model)?;
    let sym_relation_verified = if b <= SYM_MATCHING_MAX_B { Some(symmetrized_sum(model)?.is_zero()) } else { None };
    let m = dims_m.unwrap_or(2);
    let dims = span_dimensions(model, m)?.into_iter().enumerate().collect();
    Ok(AdjudicationReport { b, eps2, eps3, sym_relation_verified, sym_form: "plain-sum".into(), m, dims })
}

fn sign_of(q: &Q) -> Sign {
    if q.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// `τ_{1,2}² = λ·o_1·o_2`; requires `|λ| = 2b`.
fn tau_square_sign(model: &CohomologyModel) -> Result<Sign> {
    let t = model.realize(Generator::Tau(1, 2), 2)?;
    let sq = model.multiply(&t, &t)?;
    let oo = TensorClass::pure(vec![E6, E6], Q::from_integer(1.into()));
    let lambda = sq.ratio_to(&oo).ok_or_else(|| Error::Adjudication("τ² is not a multiple of o⊗o".into()))?;
    let two_b = Q::from_integer(BigInt::from(2 * model.b()));
    if lambda.abs() != two_b {
        return Err(Error::Adjudication(format!("τ² = {lambda}·o⊗o, expected ±{two_b}")));
    }
    Ok(sign_of(&lambda))
}

/// `τ_{1,2}·τ_{1,3} = s·τ_{2,3}·o_1`; requires `|s| = 1`.
fn shared_index_sign(model: &CohomologyModel) -> Result<Sign> {
    let lhs = model.multiply(&model.realize(Generator::Tau(1, 2), 3)?, &model.realize(Generator::Tau(1, 3), 3)?)?;
    let rhs = model.multiply(&model.realize(Generator::Tau(2, 3), 3)?, &model.realize(Generator::O(1), 3)?)?;
    let s = lhs.ratio_to(&rhs).ok_or_else(|| Error::Adjudication("τ_{1,2}τ_{1,3} is not a multiple of τ_{2,3}o_1".into()))?;
    if s.abs() != Q::from_integer(1.into()) {
        return Err(Error::Adjudication(format!("τ_{{1,2}}τ_{{1,3}} = {s}·τ_{{2,3}}o_1")));
    }
    Ok(sign_of(&s))
}

/// `Σ_{σ ∈ S_{2b+2}} Π_k τ_{σ(2k-1), σ(2k)}` on `Y^{2b+2}` in the model.
pub fn symmetrized_sum(model: &CohomologyModel) -> Result<TensorClass> {
    let b = model.b();
    let n = 2 * b as usize + 2;
    let product = |pairs: &mut dyn Iterator<Item = (usize, usize)>| -> Result<TensorClass> {
        let mut acc = model.unit(n);
        for (i, j) in pairs {
            acc = model.multiply(&acc, &model.realize(Generator::Tau(i + 1, j + 1), n)?)?;
        }
        Ok(acc)
    };
    let mut total = TensorClass::zero(n);
    let one = Q::from_integer(1.into());
    if b <= SYM_PERMUTATION_MAX_B {
        // realize(τ_{i,j}) and realize(τ_{j,i}) are the same tensor, so
        // permutations are grouped by their ordered sequence of unordered
        // pairs; the order of the factors is kept
        let mut counts: BTreeMap<Vec<(usize, usize)>, i64> = BTreeMap::new();
        for perm in permutations(n) {
            let key = perm.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
            *counts.entry(key).or_default() += 1;
        }
        for (pairs, count) in counts {
            let p = product(&mut pairs.into_iter())?;
            total.add_scaled(&p, &Q::from_integer(count.into()));
        }
    } else {
        // every matching occurs 2^{b+1}(b+1)! times; the common factor does
        // not affect vanishing
        let items: Vec<usize> = (0..n).collect();
        for matching in perfect_matchings(&items) {
            let p = product(&mut matching.into_iter())?;
            total.add_scaled(&p, &one);
        }
    }
    Ok(total)
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}
