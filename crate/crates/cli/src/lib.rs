//! Front-end pieces shared by the `chowtaut` binary and its tests: the Fano
//! catalog, the cycle-expression parser, the dimension cache and the
//! certificate format.

pub mod cache;
pub mod catalog;
pub mod certificate;
pub mod parser;

pub use catalog::{Catalog, FanoRecord, MckStatus};
pub use parser::{parse_expr, ParseError};
