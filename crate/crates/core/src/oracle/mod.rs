//! Independent Künneth tensor model of `H*(Y^m)`, used to check the
//! presentation and to fix its sign conventions.

mod adjudicate;
mod model;
mod span;
mod tensor;

pub use adjudicate::{adjudicate_signs, permutations, symmetrized_sum, AdjudicationReport, SYM_MATCHING_MAX_B, SYM_PERMUTATION_MAX_B};
pub use model::{CohomologyModel, E0, E2, E4, E6};
pub use span::{poincare_check, slot_pairing, span_basis, span_dimension, span_dimensions, tensor_rank};
pub use tensor::TensorClass;
