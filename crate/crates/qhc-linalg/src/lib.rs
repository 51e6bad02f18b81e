//! Exact linear algebra over prime fields F_p, the rationals Q, and the
//! localized integers Z_(p).
//!
//! Everything is computed exactly: F_p entries as machine-word residues, Q
//! and Z_(p) entries as arbitrary-precision fractions. The crate provides
//! dense matrices, reduced row echelon form and solving over the fields,
//! Smith normal form with tracked unit transforms over Z_(p) (pivoting by
//! p-valuation), and an incremental echelon accumulator for rank, span and
//! lattice-membership queries.

mod domain;
mod echelon;
mod matrix;
mod rref;
mod snf;

pub use domain::{Domain, Scalar};
pub use echelon::{reduced_column_basis, RowEchelon};
pub use matrix::Matrix;
pub use rref::{inverse_field, rank, rref, solve_field, Rref};
pub use snf::{cokernel_invariants, smith_normal_form, CokernelInvariants, SmithForm};

/// Errors from domain construction, parsing, and mismatched operations.
#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unrecognized ring spec {0:?} (expected e.g. \"f2\", \"q\", \"zloc3\")")]
    BadRingSpec(String),
    #[error("cannot parse {0:?} as a scalar of {1}")]
    BadScalar(String, String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}
