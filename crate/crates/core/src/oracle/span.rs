use num::One;

use super::model::CohomologyModel;
use super::tensor::TensorClass;
use crate::error::{Error, Result};
use crate::linalg::{rank_rational, SparseEchelon};
use crate::Q;

/// Graded bases of the subalgebra of `H*(Y^m)` generated by the realized
/// `h_i`, `o_i`, `τ_{i,j}`, for codimensions `0..=3m`.
///
/// Built by iterated multiplication: `V_0 = ⟨1⟩` and `V_c` is spanned by
/// `g·v` for generators `g` of codimension `k` and `v ∈ V_{c-k}`. Only the
/// tensor model is used, never the rewrite rules.
pub fn span_basis(model: &CohomologyModel, m: usize) -> Result<Vec<Vec<TensorClass>>> {
    if m == 0 {
        return Err(Error::InvalidParams("m must be >= 1".into()));
    }
    let gens: Vec<(usize, TensorClass)> = CohomologyModel::generators(m)
        .into_iter()
        .map(|g| Ok((g.codim(), model.realize(g, m)?)))
        .collect::<Result<_>>()?;
    let top = 3 * m;
    let mut levels: Vec<Vec<TensorClass>> = vec![vec![model.unit(m)]];
    for c in 1..=top {
        let mut ech = SparseEchelon::new();
        let mut basis = Vec::new();
        for (k, g) in &gens {
            if *k > c {
                continue;
            }
            for v in &levels[c - k] {
                let p = model.multiply(g, v)?;
                if ech.insert(p.to_sparse()) {
                    basis.push(p);
                }
            }
        }
        levels.push(basis);
    }
    Ok(levels)
}

pub fn span_dimensions(model: &CohomologyModel, m: usize) -> Result<Vec<usize>> {
    Ok(span_basis(model, m)?.iter().map(Vec::len).collect())
}

pub fn span_dimension(model: &CohomologyModel, m: usize, c: usize) -> Result<usize> {
    if c > 3 * m {
        return Err(Error::CodimOutOfRange { c, max: 3 * m });
    }
    Ok(span_basis(model, m)?[c].len())
}

/// Rank of the linear span of arbitrary tensor classes.
pub fn tensor_rank(classes: &[TensorClass]) -> usize {
    let mut ech = SparseEchelon::new();
    for t in classes {
        ech.insert(t.to_sparse());
    }
    ech.rank()
}

/// Checks Poincaré duality on the generated subalgebra: for every `c` the
/// integration pairing `V_c × V_{3m-c} → Q` is a square nondegenerate
/// matrix.
pub fn poincare_check(model: &CohomologyModel, m: usize) -> Result<bool> {
    let levels = span_basis(model, m)?;
    let top = 3 * m;
    for c in 0..=top {
        let (left, right) = (&levels[c], &levels[top - c]);
        if left.len() != right.len() {
            return Ok(false);
        }
        let mut rows = Vec::with_capacity(left.len());
        for x in left {
            let mut row = Vec::with_capacity(right.len());
            for y in right {
                row.push(model.integrate(&model.multiply(x, y)?));
            }
            rows.push(row);
        }
        if rank_rational(&rows) != left.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Poincaré pairing on `H*(Y)` itself, as a matrix over the model basis.
pub fn slot_pairing(model: &CohomologyModel) -> Vec<Vec<Q>> {
    let n = model.slot_dim() as u8;
    let pure = |x: u8| TensorClass::pure(vec![x], Q::one());
    (0..n)
        .map(|x| (0..n).map(|y| model.integrate(&model.multiply(&pure(x), &pure(y)).expect("same m"))).collect())
        .collect()
}
