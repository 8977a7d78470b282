use num::{BigInt, One, Zero};
use rand::Rng;

use super::tensor::TensorClass;
use crate::class::CycleClass;
use crate::error::{Error, Result};
use crate::linalg::invert;
use crate::monomial::Generator;
use crate::Q;

/// Basis index of the unit `e0`.
pub const E0: u8 = 0;
/// Basis index of `e2`, the class of `h`.
pub const E2: u8 = 1;
/// Basis index of `e4`, the class of `h²`.
pub const E4: u8 = 2;
/// Basis index of `e6`, the point class `o` (`h³ = d·o`, `∫o = 1`).
pub const E6: u8 = 3;
const ODD_START: u8 = 4;

/// Explicit graded model of `H*(Y)` for a Picard-rank-1 threefold: the even
/// part `e0, e2, e4, e6` with `e2·e4 = d·e6`, and `2b` odd classes of degree
/// 3 whose products are `f_k·f_l = G_{kl}·e6` for an antisymmetric,
/// nondegenerate pairing `G`.
///
/// The standard basis is `a_1, a'_1, …, a_b, a'_b` with `a_k·a'_k = e6`.
#[derive(Clone, Debug)]
pub struct CohomologyModel {
    d: u32,
    b: u32,
    pairing: Vec<Vec<Q>>,
    tau_coeffs: Vec<Vec<Q>>,
    table: Vec<Vec<Option<(u8, Q)>>>,
}

impl CohomologyModel {
    pub fn standard(d: u32, b: u32) -> Self {
        let n = 2 * b as usize;
        let mut g = vec![vec![Q::zero(); n]; n];
        for k in 0..b as usize {
            g[2 * k][2 * k + 1] = Q::one();
            g[2 * k + 1][2 * k] = -Q::one();
        }
        Self::with_pairing(d, b, g).expect("standard symplectic form is valid")
    }

    /// Model whose odd basis is related to the standard one by a random
    /// integer change of basis `M`, i.e. with pairing `Mᵀ Ω M`.
    pub fn random_basis(d: u32, b: u32, rng: &mut impl Rng) -> Self {
        let n = 2 * b as usize;
        let omega = Self::standard(d, b).pairing;
        loop {
            let mat: Vec<Vec<Q>> = (0..n)
                .map(|_| (0..n).map(|_| Q::from_integer(BigInt::from(rng.gen_range(-3i64..=3)))).collect())
                .collect();
            if invert(&mat).is_none() {
                continue;
            }
            let g: Vec<Vec<Q>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut s = Q::zero();
                            for k in 0..n {
                                for l in 0..n {
                                    s += &mat[k][i] * &omega[k][l] * &mat[l][j];
                                }
                            }
                            s
                        })
                        .collect()
                })
                .collect();
            return Self::with_pairing(d, b, g).expect("congruent form stays symplectic");
        }
    }

    pub fn with_pairing(d: u32, b: u32, pairing: Vec<Vec<Q>>) -> Result<Self> {
        let n = 2 * b as usize;
        if d == 0 {
            return Err(Error::InvalidParams("degree d must be >= 1".into()));
        }
        if pairing.len() != n || pairing.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParams(format!("odd pairing must be {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..n {
                if pairing[i][j] != -pairing[j][i].clone() {
                    return Err(Error::InvalidParams("odd pairing must be antisymmetric".into()));
                }
            }
        }
        // τ = Σ c_{kl} f_k⊗f_l must act as the identity on H³ via
        // α ↦ (p_2)_*(τ·p_1^*α); with the Koszul sign of f_k·f_m this
        // forces c = G^{-1}.
        let tau_coeffs = invert(&pairing).ok_or_else(|| Error::InvalidParams("odd pairing is degenerate".into()))?;
        let dim = 4 + n;
        let mut table = vec![vec![None; dim]; dim];
        let dq = Q::from_integer(BigInt::from(d));
        for x in 0..dim {
            table[0][x] = Some((x as u8, Q::one()));
            table[x][0] = Some((x as u8, Q::one()));
        }
        table[E2 as usize][E2 as usize] = Some((E4, Q::one()));
        table[E2 as usize][E4 as usize] = Some((E6, dq.clone()));
        table[E4 as usize][E2 as usize] = Some((E6, dq));
        for k in 0..n {
            for l in 0..n {
                if !pairing[k][l].is_zero() {
                    table[4 + k][4 + l] = Some((E6, pairing[k][l].clone()));
                }
            }
        }
        Ok(CohomologyModel { d, b, pairing, tau_coeffs, table })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn pairing(&self) -> &[Vec<Q>] {
        &self.pairing
    }

    /// Number of basis elements of `H*(Y)`: `4 + 2b`.
    pub fn slot_dim(&self) -> usize {
        4 + 2 * self.b as usize
    }

    pub fn degree(&self, idx: u8) -> u32 {
        match idx {
            E0 => 0,
            E2 => 2,
            E4 => 4,
            E6 => 6,
            _ => 3,
        }
    }

    fn is_odd(idx: u8) -> bool {
        idx >= ODD_START
    }

    pub fn basis_name(&self, idx: u8) -> String {
        match idx {
            E0 => "e0".into(),
            E2 => "e2".into(),
            E4 => "e4".into(),
            E6 => "e6".into(),
            odd => {
                let k = (odd - ODD_START) as usize;
                if k.is_multiple_of(2) {
                    format!("a_{}", k / 2 + 1)
                } else {
                    format!("a'_{}", k / 2 + 1)
                }
            }
        }
    }

    /// Index of the odd basis element `f_k` (0-based `k < 2b`).
    pub fn odd(&self, k: usize) -> u8 {
        assert!(k < 2 * self.b as usize);
        ODD_START + k as u8
    }

    pub fn unit(&self, m: usize) -> TensorClass {
        TensorClass::pure(vec![E0; m], Q::one())
    }

    fn place(&self, m: usize, at: &[(usize, u8)], coeff: Q) -> TensorClass {
        let mut slots = vec![E0; m];
        for &(i, v) in at {
            slots[i] = v;
        }
        TensorClass::pure(slots, coeff)
    }

    /// The tensor realizing one generator of the presentation on `Y^m`.
    pub fn realize(&self, g: Generator, m: usize) -> Result<TensorClass> {
        Ok(match g.zero_based(m)? {
            Generator::H(i) => self.place(m, &[(i, E2)], Q::one()),
            Generator::O(i) => self.place(m, &[(i, E6)], Q::one()),
            Generator::Tau(i, j) => {
                let n = 2 * self.b as usize;
                let mut out = TensorClass::zero(m);
                for k in 0..n {
                    for l in 0..n {
                        let c = &self.tau_coeffs[k][l];
                        if !c.is_zero() {
                            out.add_scaled(&self.place(m, &[(i, self.odd(k)), (j, self.odd(l))], c.clone()), &Q::one());
                        }
                    }
                }
                out
            }
        })
    }

    /// Image of a presented class: each monomial is realized as the product
    /// of its realized generators.
    pub fn realize_class(&self, class: &CycleClass) -> Result<TensorClass> {
        let m = class.m();
        let mut out = TensorClass::zero(m);
        for (mono, q) in class.terms() {
            let mut acc = self.unit(m);
            for g in mono.generators() {
                acc = self.multiply(&acc, &self.realize(g, m)?)?;
            }
            out.add_scaled(&acc, q);
        }
        Ok(out)
    }

    /// Cup product on `H*(Y^m)`: slotwise products with the Koszul sign
    /// `(-1)^{Σ_{i>j} |x_i||y_j|}`.
    pub fn multiply(&self, x: &TensorClass, y: &TensorClass) -> Result<TensorClass> {
        if x.m() != y.m() {
            return Err(Error::FactorMismatch { left: x.m(), right: y.m() });
        }
        let m = x.m();
        let mut out = TensorClass::zero(m);
        for (xs, xq) in x.terms() {
            'pairs: for (ys, yq) in y.terms() {
                let mut slots = Vec::with_capacity(m);
                let mut coeff = xq * yq;
                let mut odd_y_before = 0usize;
                let mut parity = 0usize;
                for i in 0..m {
                    if Self::is_odd(xs[i]) {
                        parity += odd_y_before;
                    }
                    if Self::is_odd(ys[i]) {
                        odd_y_before += 1;
                    }
                    match &self.table[xs[i] as usize][ys[i] as usize] {
                        Some((v, c)) => {
                            slots.push(*v);
                            if !c.is_one() {
                                coeff *= c;
                            }
                        }
                        None => continue 'pairs,
                    }
                }
                if parity % 2 == 1 {
                    coeff = -coeff;
                }
                out.add_term(slots, coeff);
            }
        }
        Ok(out)
    }

    /// Coefficient of `e6⊗…⊗e6`.
    pub fn integrate(&self, x: &TensorClass) -> Q {
        x.coeff(&vec![E6; x.m()])
    }

    /// Action of a correspondence `γ ∈ H*(Y×Y)` on `α ∈ H*(Y)`:
    /// `α ↦ (p_2)_*(γ·p_1^*α)`.
    pub fn apply_correspondence(&self, gamma: &TensorClass, alpha: &TensorClass) -> Result<TensorClass> {
        if gamma.m() != 2 || alpha.m() != 1 {
            return Err(Error::ArityMismatch("need a class on Y×Y acting on a class on Y".into()));
        }
        let mut pulled = TensorClass::zero(2);
        for (s, q) in alpha.terms() {
            pulled.add_term(vec![s[0], E0], q.clone());
        }
        let prod = self.multiply(gamma, &pulled)?;
        let mut out = TensorClass::zero(1);
        for (s, q) in prod.terms() {
            // only e6 in the forgotten slot integrates to something nonzero,
            // and it is even so no sign arises
            if s[0] == E6 {
                out.add_term(vec![s[1]], q.clone());
            }
        }
        Ok(out)
    }

    /// Every generator of the subalgebra on `Y^m`: all `h_i`, `o_i`,
    /// `τ_{i,j}` (1-based, `i < j`).
    pub fn generators(m: usize) -> Vec<Generator> {
        let mut out: Vec<Generator> = (1..=m).map(Generator::H).collect();
        out.extend((1..=m).map(Generator::O));
        for i in 1..=m {
            for j in i + 1..=m {
                out.push(Generator::Tau(i, j));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    #[test]
    fn realize_h_and_o() {
        let model = CohomologyModel::standard(2, 1);
        assert_eq!(model.realize(Generator::H(1), 2).unwrap(), TensorClass::pure(vec![E2, E0], qi(1)));
        assert_eq!(model.realize(Generator::O(1), 1).unwrap(), TensorClass::pure(vec![E6], qi(1)));
        assert!(model.realize(Generator::O(3), 2).is_err());
    }

    #[test]
    fn realize_tau_b1() {
        let model = CohomologyModel::standard(2, 1);
        let (a, a2) = (model.odd(0), model.odd(1));
        let mut expected = TensorClass::pure(vec![a2, a], qi(1));
        expected.add_term(vec![a, a2], qi(-1));
        assert_eq!(model.realize(Generator::Tau(1, 2), 2).unwrap(), expected);
        assert_eq!(model.realize(Generator::Tau(2, 1), 2).unwrap(), expected);
    }

    #[test]
    fn decomposable_product() {
        let model = CohomologyModel::standard(5, 2);
        let x = TensorClass::pure(vec![E2, E0], qi(1));
        let y = TensorClass::pure(vec![E0, E2], qi(1));
        assert_eq!(model.multiply(&x, &y).unwrap(), TensorClass::pure(vec![E2, E2], qi(1)));
    }

    #[test]
    fn tau_square_is_minus_two_b() {
        for b in 1..=3 {
            let model = CohomologyModel::standard(2, b);
            let t = model.realize(Generator::Tau(1, 2), 2).unwrap();
            let sq = model.multiply(&t, &t).unwrap();
            assert_eq!(sq, TensorClass::pure(vec![E6, E6], qi(-2 * i64::from(b))));
        }
    }

    #[test]
    fn tau_times_h_vanishes() {
        let model = CohomologyModel::standard(3, 2);
        let t = model.realize(Generator::Tau(1, 2), 2).unwrap();
        let h = model.realize(Generator::H(1), 2).unwrap();
        assert!(model.multiply(&t, &h).unwrap().is_zero());
    }

    #[test]
    fn tau_acts_as_identity_on_odd_part() {
        let mut rng = rand::thread_rng();
        for model in [CohomologyModel::standard(3, 2), CohomologyModel::random_basis(3, 2, &mut rng)] {
            let t = model.realize(Generator::Tau(1, 2), 2).unwrap();
            for k in 0..4 {
                let alpha = TensorClass::pure(vec![model.odd(k)], qi(1));
                assert_eq!(model.apply_correspondence(&t, &alpha).unwrap(), alpha);
            }
            let even = TensorClass::pure(vec![E2], qi(1));
            assert!(model.apply_correspondence(&t, &even).unwrap().is_zero());
        }
    }

    #[test]
    fn rejects_bad_pairings() {
        assert!(CohomologyModel::with_pairing(1, 1, vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]).is_err());
        assert!(CohomologyModel::with_pairing(1, 1, vec![vec![qi(0), qi(0)], vec![qi(0), qi(0)]]).is_err());
    }
}
