//! Concrete families of finite-dimensional algebras from classical and
//! quantum Schur--Weyl duality: symmetric-group algebras, Hecke algebras,
//! tensor space with place-permutation and deformed actions, and the
//! (q-)Schur algebras that arise as tensor-space endomorphism algebras,
//! together with their heredity chains and the Schur functor.

mod hecke;
mod partitions;
mod perm;
mod schur;
mod symmetric;
mod tensor;

pub use hecke::hecke_algebra;
pub use partitions::{partition_label, partitions_in_order, Partition};
pub use perm::{all_permutations, Permutation};
pub use schur::{
    schur_algebra, schur_functor_image, schur_heredity_chain, SchurData,
};
pub use symmetric::symmetric_group_algebra;
pub use tensor::{multi_indices, TensorSpace};

use thiserror::Error;

/// Errors surfaced while building the algebra families.
#[derive(Debug, Error)]
pub enum SchurError {
    #[error("the deformation parameter {0} is not a unit")]
    ParameterNotAUnit(String),
    #[error("need n >= d (got n = {0}, d = {1}) to locate the truncating idempotent")]
    TooFewLetters(usize, usize),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] qhc_algebra::AlgebraError),
    #[error(transparent)]
    Qh(#[from] qhc_qh::QhError),
    #[error(transparent)]
    Linalg(#[from] qhc_linalg::LinalgError),
}

pub type Result<T> = std::result::Result<T, SchurError>;
