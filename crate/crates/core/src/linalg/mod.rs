//! Exact integer linear algebra: dense and sparse integer matrices, Smith
//! normal form, modular row reduction, linear solving over `Z` and `Z_m`,
//! and quotient-group structure.
//!
//! Nothing here uses floating point. Dense matrices hold arbitrary-precision
//! entries; the modular routines work with machine words since every modulus
//! that occurs is small.

mod abelian;
mod hnf;
mod matrix;
pub mod modp;
mod smith;
mod solve;
mod sparse;

use thiserror::Error;

pub use abelian::AbelianGroup;
pub use hnf::{hnf_rows, reduce_against};
pub use matrix::{IntMatrix, SparseMatrix};
pub use smith::{invariant_factors_dense, smith_normal_form, Smith};
pub use solve::{is_prime, kernel_mod, quotient_group, solve_mod};
pub use sparse::{invariant_factors, rank_over_q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("image column {0} is not in the rational span of the kernel lattice")]
    NotInSpan(usize),
    #[error("image column {0} lies in the rational span but not in the kernel lattice")]
    NotInLattice(usize),
    #[error("invariant factor {0} does not fit in 64 bits")]
    Overflow(String),
}
