use std::fmt;

use crate::error::{Error, Result};

/// A generator of the presentation, with 1-based factor indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    H(usize),
    O(usize),
    /// `τ_{i,j}`; symmetric in `i, j`.
    Tau(usize, usize),
}

impl Generator {
    pub fn codim(self) -> usize {
        match self {
            Generator::H(_) => 1,
            Generator::O(_) | Generator::Tau(..) => 3,
        }
    }

    /// Checks indices against `m` and returns the generator with 0-based
    /// indices (and sorted pair for `τ`).
    pub(crate) fn zero_based(self, m: usize) -> Result<Generator> {
        let check = |i: usize| {
            if i == 0 || i > m {
                Err(Error::IndexOutOfRange { index: i, m })
            } else {
                Ok(i - 1)
            }
        };
        Ok(match self {
            Generator::H(i) => Generator::H(check(i)?),
            Generator::O(i) => Generator::O(check(i)?),
            Generator::Tau(i, j) => {
                let (i, j) = (check(i)?, check(j)?);
                if i == j {
                    return Err(Error::SelfPairedTau(i + 1));
                }
                Generator::Tau(i.min(j), i.max(j))
            }
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::H(i) => write!(f, "h_{i}"),
            Generator::O(i) => write!(f, "o_{i}"),
            Generator::Tau(i, j) => write!(f, "t_{{{i},{j}}}"),
        }
    }
}

/// What a normal-form monomial carries on one factor of `Y^m`.
///
/// Ordering is `h^0 < h^1 < h^2 < o < τ`, which makes the derived ordering
/// on [`Monomial`] the canonical key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// `h^a` with `a <= 2`; `H(0)` is the unit.
    H(u8),
    O,
    /// Matched by a `τ` with the given 0-based partner index.
    Tau(u16),
}

impl Factor {
    pub const ONE: Factor = Factor::H(0);
}

/// A normal-form monomial on `Y^m`, stored as one [`Factor`] per factor
/// index.
///
/// The representation enforces the normal form: every index carries at most
/// `h^2`, or a lone `o`, or belongs to exactly one `τ` pair. Codimension is
/// `Σ h_exp + 3·#o + 3·#τ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    slots: Vec<Factor>,
}

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial { slots: vec![Factor::ONE; m] }
    }

    /// Builds a monomial from its parts (1-based indices), validating the
    /// normal-form invariants.
    pub fn from_parts(
        m: usize,
        h_exp: &[(usize, u8)],
        o_flag: &[usize],
        tau_pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let mut slots = vec![Factor::ONE; m];
        let index = |i: usize| {
            if i == 0 || i > m {
                Err(Error::IndexOutOfRange { index: i, m })
            } else {
                Ok(i - 1)
            }
        };
        let not_normal = |what: String| Err(Error::InvalidParams(format!("not a normal monomial: {what}")));
        for &(i, a) in h_exp {
            let i = index(i)?;
            if a > 2 || slots[i] != Factor::ONE {
                return not_normal(format!("h_{}^{a}", i + 1));
            }
            slots[i] = Factor::H(a);
        }
        for &i in o_flag {
            let i = index(i)?;
            if slots[i] != Factor::ONE {
                return not_normal(format!("o_{} on an occupied factor", i + 1));
            }
            slots[i] = Factor::O;
        }
        for &(i, j) in tau_pairs {
            let (i, j) = (index(i)?, index(j)?);
            if i == j {
                return Err(Error::SelfPairedTau(i + 1));
            }
            if slots[i] != Factor::ONE || slots[j] != Factor::ONE {
                return not_normal(format!("t_{{{},{}}} on an occupied factor", i + 1, j + 1));
            }
            slots[i] = Factor::Tau(j as u16);
            slots[j] = Factor::Tau(i as u16);
        }
        Ok(Monomial { slots })
    }

    /// Caller guarantees the slots are consistent (τ partners symmetric).
    pub(crate) fn from_slots(slots: Vec<Factor>) -> Self {
        debug_assert!(slots.iter().enumerate().all(|(i, f)| match *f {
            Factor::Tau(j) => slots.get(j as usize) == Some(&Factor::Tau(i as u16)),
            _ => true,
        }));
        Monomial { slots }
    }

    pub fn m(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Factor] {
        &self.slots
    }

    pub fn factor(&self, i: usize) -> Factor {
        self.slots[i]
    }

    pub fn is_one(&self) -> bool {
        self.slots.iter().all(|f| *f == Factor::ONE)
    }

    pub fn codim(&self) -> usize {
        self.slots
            .iter()
            .enumerate()
            .map(|(i, f)| match *f {
                Factor::H(a) => a as usize,
                Factor::O => 3,
                Factor::Tau(j) if (j as usize) > i => 3,
                Factor::Tau(_) => 0,
            })
            .sum()
    }

    /// Exponent of `h` on factor `i` (1-based).
    pub fn h_exp(&self, i: usize) -> u8 {
        match self.slots[i - 1] {
            Factor::H(a) => a,
            _ => 0,
        }
    }

    /// Whether `o_i` divides the monomial (1-based).
    pub fn has_o(&self, i: usize) -> bool {
        self.slots[i - 1] == Factor::O
    }

    /// The `τ` pairs as sorted 1-based pairs, sorted.
    pub fn tau_pairs(&self) -> Vec<(usize, usize)> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match *f {
                Factor::Tau(j) if (j as usize) > i => Some((i + 1, j as usize + 1)),
                _ => None,
            })
            .collect()
    }

    /// The monomial as a product of generators (1-based, with repetition for
    /// `h` powers).
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for (i, f) in self.slots.iter().enumerate() {
            match *f {
                Factor::H(a) => out.extend(std::iter::repeat_n(Generator::H(i + 1), a as usize)),
                Factor::O => out.push(Generator::O(i + 1)),
                Factor::Tau(j) if (j as usize) > i => out.push(Generator::Tau(i + 1, j as usize + 1)),
                Factor::Tau(_) => {}
            }
        }
        out
    }

    /// Re-indexes the factors: factor `i` (0-based) moves to `map[i]` in a
    /// monomial with `new_m` factors. `map` must be injective; unmapped
    /// target factors carry the unit.
    pub(crate) fn relabel(&self, new_m: usize, map: &[usize]) -> Monomial {
        let mut slots = vec![Factor::ONE; new_m];
        for (i, f) in self.slots.iter().enumerate() {
            slots[map[i]] = match *f {
                Factor::Tau(j) => Factor::Tau(map[j as usize] as u16),
                other => other,
            };
        }
        Monomial { slots }
    }
}

impl fmt::Display for Monomial {
    /// Prints in the expression grammar, e.g. `h_1^2*o_3*t_{2,4}`; the unit
    /// prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, s) in self.slots.iter().enumerate() {
            match *s {
                Factor::H(0) => {}
                Factor::H(1) => parts.push(format!("h_{}", i + 1)),
                Factor::H(a) => parts.push(format!("h_{}^{a}", i + 1)),
                Factor::O => parts.push(format!("o_{}", i + 1)),
                Factor::Tau(j) if (j as usize) > i => parts.push(format!("t_{{{},{}}}", i + 1, j + 1)),
                Factor::Tau(_) => {}
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}
