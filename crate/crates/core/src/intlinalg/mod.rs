//! Exact linear algebra over the integers.
//!
//! Everything above this layer (presentations, hom groups, kernels,
//! isomorphism tests) reduces to Smith normal forms computed here.

mod matrix;
mod snf;

pub use matrix::IntMatrix;
pub use snf::{kernel_generators, smith_normal_form, solve_integer, solve_with, SnfDecomposition};
