//! Exact integer and rational linear algebra.
//!
//! Everything here works over `BigInt` / `BigRational`; there is no floating
//! point anywhere in the crate. The Smith normal form is the workhorse: ranks,
//! cokernels (quotients of `Z^n` by a column span), kernels and lattice bases
//! are all read off from it.

mod matrix;
mod rational;
mod snf;

use thiserror::Error;

pub use matrix::IntegerMatrix;
pub use rational::{
    congruence_diagonal, inertia, rational_decompose, rational_rank, solve_integral,
    solve_rational, RationalVector,
};
pub use snf::{
    cokernel_invariants, column_span_basis, kernel_basis, rank, smith_normal_form, Cokernel,
    SnfResult,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("vector is not in the rational span of the given bases")]
    NotInSpan,
}
