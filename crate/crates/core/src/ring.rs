//! The presented ring `R*(Y^m)`: products, the degree map, the
//! symmetrization relators and graded dimensions of the quotient.

use std::collections::{BTreeMap, HashMap};

use num::{BigInt, One, Zero};

use crate::class::CycleClass;
use crate::error::{Error, Result};
use crate::linalg::{integer_row, rank_fraction_free, SparseEchelon};
use crate::matching::{partial_matchings, perfect_matchings, subsets};
use crate::monomial::{Factor, Generator, Monomial};
use crate::params::RingParams;
use crate::rewrite::{RawProduct, Rewriter};
use crate::Q;

/// `R*(Y^m)` for fixed [`RingParams`]. Cheap to clone; immutable.
#[derive(Clone, Debug)]
pub struct TautRing {
    params: RingParams,
    rewriter: Rewriter,
}

impl TautRing {
    pub fn new(params: RingParams) -> Self {
        TautRing { params, rewriter: Rewriter::new(params) }
    }

    pub fn params(&self) -> &RingParams {
        &self.params
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    /// The same `d`, `b` and signs on `Y^m`.
    pub fn with_m(&self, m: usize) -> Result<TautRing> {
        Ok(TautRing::new(self.params.with_m(m)?))
    }

    pub fn rewriter(&self) -> &Rewriter {
        &self.rewriter
    }

    pub fn one(&self) -> CycleClass {
        CycleClass::one(self.m())
    }

    pub fn zero(&self) -> CycleClass {
        CycleClass::zero(self.m())
    }

    pub fn constant(&self, q: Q) -> CycleClass {
        CycleClass::constant(self.m(), q)
    }

    pub fn generator(&self, g: Generator) -> Result<CycleClass> {
        self.normal_form(&RawProduct::new(vec![g]))
    }

    pub fn normal_form(&self, raw: &RawProduct) -> Result<CycleClass> {
        self.rewriter.normal_form(raw)
    }

    fn check_m(&self, a: &CycleClass) -> Result<()> {
        if a.m() != self.m() {
            return Err(Error::FactorMismatch { left: self.m(), right: a.m() });
        }
        Ok(())
    }

    /// Product of two classes; every monomial product is routed through the
    /// rewriter.
    pub fn multiply(&self, a: &CycleClass, b: &CycleClass) -> Result<CycleClass> {
        self.check_m(a)?;
        self.check_m(b)?;
        let mut out = self.zero();
        for (ma, qa) in a.terms() {
            let ga = ma.generators();
            for (mb, qb) in b.terms() {
                let mut gens = ga.clone();
                gens.extend(mb.generators());
                let nf = self.normal_form(&RawProduct::scaled(qa * qb, gens))?;
                out.add_scaled(&nf, &Q::one());
            }
        }
        Ok(out)
    }

    pub fn product(&self, factors: &[CycleClass]) -> Result<CycleClass> {
        factors.iter().try_fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn pow(&self, a: &CycleClass, n: u32) -> Result<CycleClass> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// Degree map: coefficient of `o_1⋯o_m` for classes of codimension `3m`,
    /// zero for other homogeneous classes.
    pub fn integrate(&self, a: &CycleClass) -> Result<Q> {
        self.check_m(a)?;
        match a.codim()? {
            Some(c) if c == self.params.max_codim() => Ok(a.coeff(&point_class(self.m()))),
            _ => Ok(Q::zero()),
        }
    }

    /// `Σ_{σ ∈ S_{2b+2}} Π_i τ_{σ(2i-1),σ(2i)}` over the 1-based index set
    /// `set`, i.e. `2^{b+1}(b+1)!` times the sum over perfect matchings of
    /// `set`. The relator itself is not imposed.
    pub fn sym_relator(&self, set: &[usize]) -> Result<CycleClass> {
        let size = self.params.relator_size();
        if self.m() < size {
            return Err(Error::TooFewFactors { m: self.m(), needed: size });
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if set.len() != size || sorted.len() != size {
            return Err(Error::BadIndexSet { expected: size, got: set.to_vec() });
        }
        if let Some(&bad) = sorted.iter().find(|&&i| i == 0 || i > self.m()) {
            return Err(Error::IndexOutOfRange { index: bad, m: self.m() });
        }
        let zero_based: Vec<usize> = sorted.iter().map(|i| i - 1).collect();
        let half = size / 2;
        let multiplicity: BigInt = (1..=half).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k));
        let coeff = Q::from_integer(multiplicity);
        let mut out = self.zero();
        for matching in perfect_matchings(&zero_based) {
            let mut slots = vec![Factor::ONE; self.m()];
            for (i, j) in matching {
                slots[i] = Factor::Tau(j as u16);
                slots[j] = Factor::Tau(i as u16);
            }
            out.add_term(Monomial::from_slots(slots), coeff.clone());
        }
        Ok(out)
    }

    /// All relator index sets (1-based), empty when `m < 2b+2`.
    pub fn relator_sets(&self) -> Vec<Vec<usize>> {
        subsets(self.m(), self.params.relator_size())
            .into_iter()
            .map(|s| s.into_iter().map(|i| i + 1).collect())
            .collect()
    }

    fn check_codim(&self, c: usize) -> Result<()> {
        let max = self.params.max_codim();
        if c > max {
            return Err(Error::CodimOutOfRange { c, max });
        }
        Ok(())
    }

    /// Normal-form monomials of codimension `c`, sorted by the canonical
    /// key (lexicographic on per-factor data with `h^0 < h^1 < h^2 < o < τ`).
    pub fn graded_basis(&self, c: usize) -> Result<Vec<Monomial>> {
        self.check_codim(c)?;
        let m = self.m();
        let mut out = Vec::new();
        for matching in partial_matchings(m) {
            let tau_codim = 3 * matching.len();
            if tau_codim > c {
                continue;
            }
            let mut slots = vec![Factor::ONE; m];
            for &(i, j) in &matching {
                slots[i] = Factor::Tau(j as u16);
                slots[j] = Factor::Tau(i as u16);
            }
            let free: Vec<usize> = (0..m).filter(|&i| slots[i] == Factor::ONE).collect();
            fill_free(&mut slots, &free, c - tau_codim, &mut out);
        }
        out.sort();
        Ok(out)
    }

    /// The relator ideal in codimension `c`: every relator times every
    /// normal monomial of complementary codimension, renormalized.
    pub fn relator_span(&self, c: usize) -> Result<Vec<CycleClass>> {
        self.check_codim(c)?;
        let rel_codim = 3 * (self.params.b as usize + 1);
        if c < rel_codim || self.m() < self.params.relator_size() {
            return Ok(Vec::new());
        }
        let cofactors = self.graded_basis(c - rel_codim)?;
        let mut out = Vec::new();
        for set in self.relator_sets() {
            let rel = self.sym_relator(&set)?;
            for mu in &cofactors {
                let prod = self.multiply(&rel, &CycleClass::monomial(mu.clone(), Q::one()))?;
                if !prod.is_zero() {
                    out.push(prod);
                }
            }
        }
        Ok(out)
    }

    /// Dimension of the codimension-`c` piece of the quotient by the
    /// symmetrization relators, by fraction-free elimination.
    pub fn graded_dimension(&self, c: usize) -> Result<usize> {
        let basis = self.graded_basis(c)?;
        let rank = self.span_rank(&self.relator_span(c)?, &basis);
        Ok(basis.len() - rank)
    }

    /// Graded dimensions for `c = 0..=3m`.
    pub fn graded_dimensions(&self) -> Result<Vec<usize>> {
        (0..=self.params.max_codim()).map(|c| self.graded_dimension(c)).collect()
    }

    /// Dimension of the image in the quotient of the span of `classes`
    /// (all homogeneous of codimension `c`).
    pub fn subspace_dimension(&self, classes: &[CycleClass], c: usize) -> Result<usize> {
        let basis = self.graded_basis(c)?;
        let relators = self.relator_span(c)?;
        let base = self.span_rank(&relators, &basis);
        let mut all = relators;
        all.extend(classes.iter().cloned());
        Ok(self.span_rank(&all, &basis) - base)
    }

    fn span_rank(&self, classes: &[CycleClass], basis: &[Monomial]) -> usize {
        if classes.is_empty() {
            return 0;
        }
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let rows = classes
            .iter()
            .map(|cls| {
                let mut row = vec![Q::zero(); basis.len()];
                for (mono, q) in cls.terms() {
                    row[index[mono]] = q.clone();
                }
                integer_row(&row)
            })
            .collect();
        rank_fraction_free(rows)
    }

    /// Echelon form of the relator ideal in codimension `c`.
    pub fn quotient(&self, c: usize) -> Result<Quotient> {
        let mut echelon = SparseEchelon::new();
        for cls in self.relator_span(c)? {
            echelon.insert(to_sparse(&cls));
        }
        Ok(Quotient { m: self.m(), echelon })
    }

    /// Canonical representative of `a` modulo the relator ideal, computed
    /// degree by degree.
    pub fn reduce(&self, a: &CycleClass) -> Result<CycleClass> {
        self.check_m(a)?;
        if self.m() < self.params.relator_size() {
            return Ok(a.clone());
        }
        let mut codims: Vec<usize> = a.terms().map(|(m, _)| m.codim()).collect();
        codims.sort_unstable();
        codims.dedup();
        let mut out = self.zero();
        for c in codims {
            let part = self.quotient(c)?.reduce(&a.graded_part(c));
            out.add_scaled(&part, &Q::one());
        }
        Ok(out)
    }

    /// Whether `a` vanishes in the quotient.
    pub fn is_zero_in_quotient(&self, a: &CycleClass) -> Result<bool> {
        Ok(self.reduce(a)?.is_zero())
    }

    /// Big diagonal `Δ_{i,j} = Σ_k (1/d) h_i^{3-k} h_j^k + τ_{i,j}` (1-based).
    pub fn diagonal(&self, i: usize, j: usize) -> Result<CycleClass> {
        let inv_d = Q::new(BigInt::one(), BigInt::from(self.params.d));
        let mut out = self.generator(Generator::Tau(i, j))?;
        for k in 0..=3 {
            let mut gens = vec![Generator::H(i); 3 - k];
            gens.extend(std::iter::repeat_n(Generator::H(j), k));
            out.add_scaled(&self.normal_form(&RawProduct::scaled(inv_d.clone(), gens))?, &Q::one());
        }
        Ok(out)
    }
}

/// The relator ideal in one codimension, ready to reduce classes.
#[derive(Clone, Debug)]
pub struct Quotient {
    m: usize,
    echelon: SparseEchelon<Monomial>,
}

impl Quotient {
    pub fn relator_rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn reduce(&self, a: &CycleClass) -> CycleClass {
        let reduced = self.echelon.reduce(to_sparse(a));
        CycleClass::from_terms(self.m, reduced).expect("same factor count")
    }
}

fn to_sparse(a: &CycleClass) -> BTreeMap<Monomial, Q> {
    a.terms().map(|(m, q)| (m.clone(), q.clone())).collect()
}

/// `o_1⋯o_m`.
pub fn point_class(m: usize) -> Monomial {
    Monomial::from_slots(vec![Factor::O; m])
}

/// Assigns `h^0..h^2` or `o` to the free factors so the codimensions add up
/// to `budget`, pushing every completed monomial.
fn fill_free(slots: &mut Vec<Factor>, free: &[usize], budget: usize, out: &mut Vec<Monomial>) {
    let Some((&i, rest)) = free.split_first() else {
        if budget == 0 {
            out.push(Monomial::from_slots(slots.clone()));
        }
        return;
    };
    if budget > 3 * free.len() {
        return;
    }
    for (f, cost) in [(Factor::H(0), 0), (Factor::H(1), 1), (Factor::H(2), 2), (Factor::O, 3)] {
        if cost <= budget {
            slots[i] = f;
            fill_free(slots, rest, budget - cost, out);
        }
    }
    slots[i] = Factor::ONE;
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn ring(d: u32, b: u32, m: usize) -> TautRing {
        TautRing::new(RingParams::new(d, b, m).unwrap())
    }

    fn qi(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    fn gen(r: &TautRing, g: Generator) -> CycleClass {
        r.generator(g).unwrap()
    }

    fn mono(m: usize, h: &[(usize, u8)], o: &[usize], t: &[(usize, usize)]) -> Monomial {
        Monomial::from_parts(m, h, o, t).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(3, 1, 2);
        let (h1, h2) = (gen(&r, H(1)), gen(&r, H(2)));
        let lhs = r.multiply(&(&h1 + &h2), &(&h1 - &h2)).unwrap();
        let rhs = &r.pow(&h1, 2).unwrap() - &r.pow(&h2, 2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn o_times_sum_of_h() {
        let r = ring(3, 1, 2);
        let lhs = r.multiply(&gen(&r, O(1)), &(&gen(&r, H(1)) + &gen(&r, H(2)))).unwrap();
        assert_eq!(lhs, CycleClass::monomial(mono(2, &[(2, 1)], &[1], &[]), qi(1)));
    }

    #[test]
    fn integrate_examples() {
        let r = ring(2, 1, 2);
        assert_eq!(r.integrate(&r.multiply(&gen(&r, O(1)), &gen(&r, O(2))).unwrap()).unwrap(), qi(1));
        let h1_cubed_o2 = r.normal_form(&RawProduct::new(vec![H(1), H(1), H(1), O(2)])).unwrap();
        assert_eq!(r.integrate(&h1_cubed_o2).unwrap(), qi(2));
        let low = r.normal_form(&RawProduct::new(vec![H(1), H(1), O(2)])).unwrap();
        assert_eq!(r.integrate(&low).unwrap(), qi(0));
        let mixed = &gen(&r, H(1)) + &gen(&r, O(1));
        assert_eq!(r.integrate(&mixed), Err(Error::Inhomogeneous));
    }

    #[test]
    fn sym_relator_b1() {
        let r = ring(2, 1, 4);
        let rel = r.sym_relator(&[1, 2, 3, 4]).unwrap();
        let expected = CycleClass::from_terms(
            4,
            [
                (mono(4, &[], &[], &[(1, 2), (3, 4)]), qi(8)),
                (mono(4, &[], &[], &[(1, 3), (2, 4)]), qi(8)),
                (mono(4, &[], &[], &[(1, 4), (2, 3)]), qi(8)),
            ],
        )
        .unwrap();
        assert_eq!(rel, expected);
    }

    #[test]
    fn sym_relator_b0_is_twice_tau() {
        let r = ring(2, 0, 2);
        let rel = r.sym_relator(&[2, 1]).unwrap();
        assert_eq!(rel, gen(&r, Tau(1, 2)).scale(&qi(2)));
    }

    #[test]
    fn sym_relator_errors() {
        assert_eq!(ring(2, 1, 3).sym_relator(&[1, 2, 3]), Err(Error::TooFewFactors { m: 3, needed: 4 }));
        let r = ring(2, 1, 5);
        assert!(matches!(r.sym_relator(&[1, 2, 3]), Err(Error::BadIndexSet { .. })));
        assert!(matches!(r.sym_relator(&[1, 2, 3, 3]), Err(Error::BadIndexSet { .. })));
        assert!(matches!(r.sym_relator(&[1, 2, 3, 6]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn graded_basis_codim3_on_y2() {
        let r = ring(2, 1, 2);
        let basis = r.graded_basis(3).unwrap();
        let expected = {
            let mut v = vec![
                mono(2, &[], &[1], &[]),
                mono(2, &[], &[2], &[]),
                mono(2, &[(1, 2), (2, 1)], &[], &[]),
                mono(2, &[(1, 1), (2, 2)], &[], &[]),
                mono(2, &[], &[], &[(1, 2)]),
            ];
            v.sort();
            v
        };
        assert_eq!(basis, expected);
        assert_eq!(r.graded_basis(0).unwrap(), vec![Monomial::one(2)]);
        assert_eq!(r.graded_basis(6).unwrap(), vec![point_class(2)]);
        assert_eq!(r.graded_basis(7), Err(Error::CodimOutOfRange { c: 7, max: 6 }));
    }

    #[test]
    fn graded_dimensions_y2() {
        assert_eq!(ring(2, 1, 2).graded_dimensions().unwrap(), vec![1, 2, 3, 5, 3, 2, 1]);
    }

    #[test]
    fn pure_tau_span_drops_when_relator_active() {
        let r = ring(7, 1, 4);
        let matchings: Vec<CycleClass> = [[(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]]
            .iter()
            .map(|t| CycleClass::monomial(mono(4, &[], &[], t), qi(1)))
            .collect();
        assert_eq!(r.subspace_dimension(&matchings, 6).unwrap(), 2);
        // without an active relator (b = 2 needs m >= 6) all three survive
        let r2 = ring(7, 2, 4);
        assert_eq!(r2.subspace_dimension(&matchings, 6).unwrap(), 3);
    }

    #[test]
    fn b_zero_matches_pure_h_o_count() {
        for m in 1..=4 {
            let r = ring(3, 0, m);
            for c in 0..=3 * m {
                let pure = r
                    .graded_basis(c)
                    .unwrap()
                    .into_iter()
                    .filter(|mono| mono.tau_pairs().is_empty())
                    .count();
                assert_eq!(r.graded_dimension(c).unwrap(), pure, "m={m} c={c}");
            }
        }
    }

    #[test]
    fn quotient_kills_tau_when_b_zero() {
        let r = ring(2, 0, 3);
        let t = gen(&r, Tau(1, 3));
        assert!(r.is_zero_in_quotient(&t).unwrap());
        let h = gen(&r, H(2));
        assert_eq!(r.reduce(&(&t + &h)).unwrap(), h);
    }

    #[test]
    fn diagonal_terms() {
        let r = ring(4, 2, 2);
        let diag = r.diagonal(1, 2).unwrap();
        let quarter = Q::new(BigInt::from(1), BigInt::from(4));
        let expected = CycleClass::from_terms(
            2,
            [
                (mono(2, &[], &[1], &[]), qi(1)),
                (mono(2, &[], &[2], &[]), qi(1)),
                (mono(2, &[(1, 2), (2, 1)], &[], &[]), quarter.clone()),
                (mono(2, &[(1, 1), (2, 2)], &[], &[]), quarter),
                (mono(2, &[], &[], &[(1, 2)]), qi(1)),
            ],
        )
        .unwrap();
        assert_eq!(diag, expected);
    }
}
