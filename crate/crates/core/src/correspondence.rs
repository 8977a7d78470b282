//! Correspondences between powers of `Y` inside the presented ring:
//! transpose, composition by push-pull, the Chow–Künneth projectors and the
//! multiplicative check on the small diagonal.

use num::{BigInt, One};
use rayon::prelude::*;
use serde::Serialize;

use crate::class::{CycleClass, Grading};
use crate::error::{Error, Result};
use crate::monomial::{Factor, Generator, Monomial};
use crate::params::RingParams;
use crate::rewrite::RawProduct;
use crate::ring::TautRing;
use crate::Q;

/// A homogeneous class on `Y^source × Y^target`; source factors come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence {
    source: usize,
    target: usize,
    class: CycleClass,
}

impl Correspondence {
    pub fn new(source: usize, target: usize, class: CycleClass) -> Result<Self> {
        if class.m() != source + target {
            return Err(Error::FactorMismatch { left: source + target, right: class.m() });
        }
        if class.grading() == Grading::Mixed {
            return Err(Error::Inhomogeneous);
        }
        Ok(Correspondence { source, target, class })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn class(&self) -> &CycleClass {
        &self.class
    }

    /// The diagonal of `Y^k`, `Π_i Δ_{i,k+i}`.
    pub fn identity(ring: &TautRing, k: usize) -> Result<Self> {
        let ring = ring.with_m(2 * k)?;
        let mut acc = ring.one();
        for i in 1..=k {
            acc = ring.multiply(&acc, &ring.diagonal(i, k + i)?)?;
        }
        Correspondence::new(k, k, acc)
    }

    /// Swaps source and target factors.
    pub fn transpose(&self) -> Correspondence {
        let (r, s) = (self.source, self.target);
        let map: Vec<usize> = (0..r).map(|i| s + i).chain(0..s).collect();
        Correspondence { source: s, target: r, class: self.class.relabel(r + s, &map) }
    }

    /// `g ∘ self`: pull both to `Y^{a+b+c}`, multiply, forget the middle.
    pub fn compose(&self, g: &Correspondence, ring: &TautRing) -> Result<Correspondence> {
        if self.target != g.source {
            return Err(Error::ArityMismatch(format!(
                "cannot compose {}→{} with {}→{}",
                self.source, self.target, g.source, g.target
            )));
        }
        let (a, b, c) = (self.source, self.target, g.target);
        let n = a + b + c;
        let big = ring.with_m(n)?;
        let f_up = self.class.relabel(n, &(0..a + b).collect::<Vec<_>>());
        let g_up = g.class.relabel(n, &(a..n).collect::<Vec<_>>());
        let prod = big.multiply(&f_up, &g_up)?;
        let middle: Vec<usize> = (a + 1..=a + b).collect();
        Correspondence::new(a, c, pushforward_forget(&prod, &middle)?)
    }

    pub fn scale(&self, q: &Q) -> Correspondence {
        Correspondence { source: self.source, target: self.target, class: self.class.scale(q) }
    }
}

/// Pushforward along the projection forgetting the factors in `forget`
/// (1-based); the kept factors keep their relative order.
///
/// On a normal monomial each forgotten factor contributes `∫_Y` of its part:
/// `o ↦ 1`, `1, h, h² ↦ 0`. A factor matched by `τ_{i,t}` sends the monomial
/// to 0: by the projection formula it reduces to `(p_i)_*τ`, and
/// `(p_1)_*Δ = 1` while `(p_1)_*((1/d)Σ h^{3-j}×h^j) = (1/d)·∫h³ = 1`, so
/// `(p_1)_*τ = 0`.
pub fn pushforward_forget(a: &CycleClass, forget: &[usize]) -> Result<CycleClass> {
    if a.grading() == Grading::Mixed {
        return Err(Error::Inhomogeneous);
    }
    let m = a.m();
    let mut dropped = vec![false; m];
    for &t in forget {
        if t == 0 || t > m {
            return Err(Error::IndexOutOfRange { index: t, m });
        }
        dropped[t - 1] = true;
    }
    let kept: Vec<usize> = (0..m).filter(|&i| !dropped[i]).collect();
    let mut new_index = vec![usize::MAX; m];
    for (n, &i) in kept.iter().enumerate() {
        new_index[i] = n;
    }
    let mut out = CycleClass::zero(kept.len());
    'terms: for (mono, q) in a.terms() {
        for i in (0..m).filter(|&i| dropped[i]) {
            if mono.factor(i) != Factor::O {
                continue 'terms;
            }
        }
        let slots = kept
            .iter()
            .map(|&i| match mono.factor(i) {
                Factor::Tau(j) => Factor::Tau(new_index[j as usize] as u16),
                f => f,
            })
            .collect();
        out.add_term(Monomial::from_slots(slots), q.clone());
    }
    Ok(out)
}

/// Applies a correspondence `Y → Y` to factor `t` (1-based) of a class on
/// `Y^m`: `(p)_*(γ_{t,new} · a)` with the new factor put back at `t`.
pub fn apply_on_factor(ring: &TautRing, gamma: &Correspondence, a: &CycleClass, t: usize) -> Result<CycleClass> {
    if gamma.source != 1 || gamma.target != 1 {
        return Err(Error::ArityMismatch("factorwise action needs a correspondence Y → Y".into()));
    }
    let m = a.m();
    if t == 0 || t > m {
        return Err(Error::IndexOutOfRange { index: t, m });
    }
    let big = ring.with_m(m + 1)?;
    let a_up = a.relabel(m + 1, &(0..m).collect::<Vec<_>>());
    let g_up = gamma.class.relabel(m + 1, &[t - 1, m]);
    let pushed = pushforward_forget(&big.multiply(&a_up, &g_up)?, &[t])?;
    // kept factors are 1..t-1, t+1..m, new; move the new one back to t
    let map: Vec<usize> = (0..m - 1).map(|i| if i < t - 1 { i } else { i + 1 }).chain([t - 1]).collect();
    Ok(pushed.relabel(m, &map))
}

/// The seven classes `π^0..π^6` on `Y × Y`:
/// `π^{2j} = (1/d)·h_1^{3-j}·h_2^j`, `π^3 = τ_{1,2}`, `π^1 = π^5 = 0`.
#[derive(Clone, Debug)]
pub struct ProjectorSet {
    pub params: RingParams,
    pub pi: [Correspondence; 7],
}

pub fn ck_projectors(params: RingParams) -> Result<ProjectorSet> {
    let ring = TautRing::new(params.with_m(2)?);
    let inv_d = Q::new(BigInt::one(), BigInt::from(params.d));
    let zero = Correspondence::new(1, 1, ring.zero())?;
    let mut pi: [Correspondence; 7] = std::array::from_fn(|_| zero.clone());
    for j in 0..=3usize {
        let mut gens = vec![Generator::H(1); 3 - j];
        gens.extend(std::iter::repeat_n(Generator::H(2), j));
        pi[2 * j] = Correspondence::new(1, 1, ring.normal_form(&RawProduct::scaled(inv_d.clone(), gens))?)?;
    }
    pi[3] = Correspondence::new(1, 1, ring.generator(Generator::Tau(1, 2))?)?;
    Ok(ProjectorSet { params, pi })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CkCheck {
    pub identity: String,
    pub pass: bool,
    /// The nonzero difference of both sides, in the quotient.
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CkReport {
    pub checks: Vec<CkCheck>,
}

impl CkReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CkCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn compare(ring: &TautRing, identity: String, lhs: &CycleClass, rhs: &CycleClass) -> Result<CkCheck> {
    let residual = ring.reduce(&(lhs - rhs))?;
    let pass = residual.is_zero();
    Ok(CkCheck { identity, pass, residual: (!pass).then(|| residual.to_string()) })
}

/// Checks idempotency, orthogonality, completeness and transpose duality
/// exactly, modulo the symmetrization relators.
pub fn verify_ck(ps: &ProjectorSet) -> Result<CkReport> {
    let ring = TautRing::new(ps.params.with_m(2)?);
    let pairs: Vec<(usize, usize)> = (0..7).flat_map(|i| (0..7).map(move |j| (i, j))).collect();
    let mut checks: Vec<CkCheck> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let comp = ps.pi[j].compose(&ps.pi[i], &ring)?;
            if i == j {
                compare(&ring, format!("pi{i}.pi{i} = pi{i}"), comp.class(), ps.pi[i].class())
            } else {
                compare(&ring, format!("pi{i}.pi{j} = 0"), comp.class(), &ring.zero())
            }
        })
        .collect::<Result<_>>()?;
    let mut total = ring.zero();
    for p in &ps.pi {
        total.add_scaled(p.class(), &Q::one());
    }
    checks.push(compare(&ring, "sum pi = diagonal".into(), &total, &ring.diagonal(1, 2)?)?);
    for i in 0..7 {
        checks.push(compare(
            &ring,
            format!("transpose(pi{i}) = pi{}", 6 - i),
            ps.pi[i].transpose().class(),
            ps.pi[6 - i].class(),
        )?);
    }
    Ok(CkReport { checks })
}

/// `Δ_{1,3}·Δ_{2,3}` on `Y³`.
pub fn small_diagonal(ring: &TautRing) -> Result<CycleClass> {
    let ring = ring.with_m(3)?;
    ring.multiply(&ring.diagonal(1, 3)?, &ring.diagonal(2, 3)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MckEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `(ᵗπ^i × ᵗπ^j × π^k)_* Δ^sm`, reduced.
    pub class: CycleClass,
}

impl MckEntry {
    pub fn exempt(&self) -> bool {
        self.i + self.j == self.k
    }
}

#[derive(Clone, Debug)]
pub struct MckTable {
    pub entries: Vec<MckEntry>,
}

impl MckTable {
    /// Entries with `i + j ≠ k` that fail to vanish.
    pub fn violations(&self) -> Vec<&MckEntry> {
        self.entries.iter().filter(|e| !e.exempt() && !e.class.is_zero()).collect()
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> Option<&MckEntry> {
        self.entries.iter().find(|e| (e.i, e.j, e.k) == (i, j, k))
    }
}

/// Evaluates all `7³` entries on the small diagonal, in parallel.
pub fn verify_mck(ps: &ProjectorSet) -> Result<MckTable> {
    let ring = TautRing::new(ps.params.with_m(3)?);
    let sm = small_diagonal(&ring)?;
    let transposed: Vec<Correspondence> = ps.pi.iter().map(Correspondence::transpose).collect();
    let ks: Vec<(usize, CycleClass)> = (0..7)
        .into_par_iter()
        .map(|k| Ok((k, apply_on_factor(&ring, &ps.pi[k], &sm, 3)?)))
        .collect::<Result<_>>()?;
    let jks: Vec<(usize, usize, CycleClass)> = ks
        .par_iter()
        .flat_map_iter(|(k, cls)| (0..7).map(move |j| (j, *k, cls)))
        .map(|(j, k, cls)| Ok((j, k, apply_on_factor(&ring, &transposed[j], cls, 2)?)))
        .collect::<Result<_>>()?;
    let mut entries: Vec<MckEntry> = jks
        .par_iter()
        .flat_map_iter(|(j, k, cls)| (0..7).map(move |i| (i, *j, *k, cls)))
        .map(|(i, j, k, cls)| {
            let class = ring.reduce(&apply_on_factor(&ring, &transposed[i], cls, 1)?)?;
            Ok(MckEntry { i, j, k, class })
        })
        .collect::<Result<_>>()?;
    entries.sort_by_key(|e| (e.i, e.j, e.k));
    Ok(MckTable { entries })
}
