use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{adjudicate_signs, CohomologyModel};

/// A sign `±1`. Serialized as the integer `1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be +1 or -1, got {other}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// Signs used by the two relations whose sign is convention dependent:
///
/// * `τ_{i,j}·τ_{i,j} → eps2 · 2b · o_i·o_j`
/// * `τ_{i,j}·τ_{i,k} → eps3 · τ_{j,k}·o_i`
///
/// The symmetrization relator is always the plain sum over `S_{2b+2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignConvention {
    pub eps2: Sign,
    pub eps3: Sign,
}

impl SignConvention {
    /// Signs read off from the cohomology tensor model (computed once per
    /// process and memoized).
    pub fn adjudicated() -> Self {
        static ADJUDICATED: OnceLock<SignConvention> = OnceLock::new();
        *ADJUDICATED.get_or_init(|| {
            let model = CohomologyModel::standard(1, 1);
            let report = adjudicate_signs(&model, None)
                .expect("standard b = 1 model must adjudicate");
            SignConvention { eps2: report.eps2, eps3: report.eps3 }
        })
    }

    /// Signs exactly as the relations are usually written: `+2b` and `+1`.
    pub fn literal() -> Self {
        SignConvention { eps2: Sign::Plus, eps3: Sign::Plus }
    }

    /// Stable textual key used for cache keys and certificates.
    pub fn fingerprint(&self) -> String {
        format!("eps2={};eps3={};sym=plain-sum", self.eps2, self.eps3)
    }
}

impl Default for SignConvention {
    fn default() -> Self {
        Self::adjudicated()
    }
}

/// Fixes the ring `R*(Y^m)`: degree `d = ∫h³`, `b = h^{1,2}` (so
/// `dim H³ = 2b`), number of factors `m`, and the sign convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingParams {
    pub d: u32,
    pub b: u32,
    pub m: usize,
    pub signs: SignConvention,
}

impl RingParams {
    pub fn new(d: u32, b: u32, m: usize) -> Result<Self> {
        Self::with_signs(d, b, m, SignConvention::default())
    }

    pub fn with_signs(d: u32, b: u32, m: usize, signs: SignConvention) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParams("degree d must be >= 1".into()));
        }
        if m == 0 {
            return Err(Error::InvalidParams("number of factors m must be >= 1".into()));
        }
        if m > u16::MAX as usize {
            return Err(Error::InvalidParams(format!("m = {m} is too large")));
        }
        Ok(RingParams { d, b, m, signs })
    }

    /// Same `d`, `b` and signs on a different power of `Y`.
    pub fn with_m(&self, m: usize) -> Result<Self> {
        Self::with_signs(self.d, self.b, m, self.signs)
    }

    /// Number of indices in one symmetrization relator, `2b + 2`.
    pub fn relator_size(&self) -> usize {
        2 * self.b as usize + 2
    }

    pub fn max_codim(&self) -> usize {
        3 * self.m
    }
}
