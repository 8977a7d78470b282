//! Formal check that the anti-invariant part of the small diagonal cancels
//! under a covering involution `ι`, given that `(ι,ι,ι)` fixes `Δ^sm`.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::Q;

/// `(g_1, g_2, g_3)` with `true` standing for `ι` and `false` for the
/// identity.
pub type Symbol = [bool; 3];

/// How symbols are identified before summing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identification {
    /// `(g_1,g_2,g_3)·Δ^sm = (ιg_1,ιg_2,ιg_3)·Δ^sm` for every symbol.
    Full,
    /// No identification at all.
    None,
    /// The diagonal orbit identification on mixed symbols only; `(id,id,id)`
    /// and `(ι,ι,ι)` stay apart.
    MixedOnly,
}

/// Sign of `ι` in the projector `(1/2)(Δ ± Γ_ι)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectorSign {
    Minus,
    Plus,
}

/// A formal rational combination of symbols `(g_1,g_2,g_3)·Δ^sm`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionWord {
    terms: BTreeMap<Symbol, Q>,
}

impl InvolutionWord {
    pub fn add(&mut self, s: Symbol, q: Q) {
        let e = self.terms.entry(s).or_insert_with(Q::zero);
        *e += q;
        if e.is_zero() {
            self.terms.remove(&s);
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Symbol, &Q)> {
        self.terms.iter()
    }

    /// Rewrites every symbol to its representative under `ident`.
    pub fn identify(&self, ident: Identification) -> InvolutionWord {
        let mut out = InvolutionWord::default();
        for (s, q) in &self.terms {
            out.add(canonical(*s, ident), q.clone());
        }
        out
    }
}

fn canonical(s: Symbol, ident: Identification) -> Symbol {
    let mixed = !(s[0] == s[1] && s[1] == s[2]);
    let flip = match ident {
        Identification::Full => s[0],
        Identification::None => false,
        Identification::MixedOnly => mixed && s[0],
    };
    if flip {
        [!s[0], !s[1], !s[2]]
    } else {
        s
    }
}

/// Expands `(1/8)(Δ±Γ_ι)∘Δ^sm∘((Δ±Γ_ι)×(Δ±Γ_ι))` into the eight signed
/// symbols, without any identification.
pub fn expand(sign: ProjectorSign) -> InvolutionWord {
    let eighth = Q::new(BigInt::one(), BigInt::from(8));
    let mut w = InvolutionWord::default();
    for bits in 0..8u8 {
        let s = [bits & 4 != 0, bits & 2 != 0, bits & 1 != 0];
        let iotas = s.iter().filter(|&&g| g).count();
        let negative = sign == ProjectorSign::Minus && iotas % 2 == 1;
        w.add(s, if negative { -eighth.clone() } else { eighth.clone() });
    }
    w
}

/// The residual word after imposing `ident`.
pub fn residual(sign: ProjectorSign, ident: Identification) -> InvolutionWord {
    expand(sign).identify(ident)
}

/// Whether the anti-invariant expansion vanishes once `(ι,ι,ι)` is known to
/// fix `Δ^sm`.
pub fn involution_check() -> bool {
    residual(ProjectorSign::Minus, Identification::Full).is_zero()
}
