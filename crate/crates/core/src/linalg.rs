//! Exact linear algebra: fraction-free rank over the integers and an
//! incremental sparse echelon form over the rationals.

use std::collections::BTreeMap;

use num::{BigInt, Integer, One, Zero};

use crate::Q;

/// Clears denominators of a rational row, returning an integer row spanning
/// the same line.
pub fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. All
/// intermediate divisions are exact.
pub fn rank_fraction_free(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let v = &pivot * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Incrementally built row echelon form of sparse rational vectors indexed by
/// an ordered key. Each stored row has leading coefficient 1 at its pivot
/// and no entries before it.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, Q>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows. The result has no entries at
    /// pivot keys and is the canonical representative of `v` modulo the
    /// span.
    pub fn reduce(&self, mut v: BTreeMap<K, Q>) -> BTreeMap<K, Q> {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(key) = next else { break };
            let factor = v.remove(&key).expect("key present");
            let row = &self.rows[&key];
            for (k, q) in row.iter().skip(1) {
                let entry = v.entry(k.clone()).or_insert_with(Q::zero);
                *entry -= q * &factor;
                if entry.is_zero() {
                    v.remove(k);
                }
            }
            cursor = Some(key);
        }
        v
    }

    /// Adds `v` to the span; returns `true` when it was independent.
    pub fn insert(&mut self, v: BTreeMap<K, Q>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, q)| (k.clone(), q.clone())) else {
            return false;
        };
        let inv = lead.recip();
        let row: BTreeMap<K, Q> = r.into_iter().map(|(k, q)| (k, q * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: BTreeMap<K, Q>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination, or
/// `None` if it is singular.
pub fn invert(matrix: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Q>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rank of a dense rational matrix via [`SparseEchelon`].
pub fn rank_rational(rows: &[Vec<Q>]) -> usize {
    let mut ech = SparseEchelon::new();
    for row in rows {
        let v: BTreeMap<usize, Q> = row.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(|(j, q)| (j, q.clone())).collect();
        ech.insert(v);
    }
    ech.rank()
}
