//! Exact computer algebra for the tautological ring `R*(Y^m)` of powers of a
//! Picard-rank-1 Fano threefold `Y`.
//!
//! The ring is presented by generators `h_i`, `o_i`, `τ_{i,j}` modulo
//! cohomological relations; [`ring`] materializes it with canonical normal
//! forms, [`oracle`] is an independent Künneth tensor model of `H*(Y^m)` used
//! to check dimensions and fix sign conventions, and [`correspondence`]
//! implements the correspondence calculus needed to verify the
//! (multiplicative) Chow–Künneth identities.

pub mod class;
pub mod correspondence;
pub mod error;
pub mod involution;
pub mod linalg;
pub mod matching;
pub mod monomial;
pub mod oracle;
pub mod params;
pub mod rewrite;
pub mod ring;

pub use class::{CycleClass, Grading};
pub use correspondence::{Correspondence, ProjectorSet};
pub use error::{Error, Result};
pub use monomial::{Factor, Generator, Monomial};
pub use params::{RingParams, Sign, SignConvention};
pub use rewrite::RawProduct;
pub use ring::TautRing;

/// Exact rational scalars used throughout.
pub type Q = num::BigRational;

/// Version string recorded in certificates and cache entries.
pub const ENGINE_VERSION: &str = concat!("chowtaut-core ", env!("CARGO_PKG_VERSION"));
