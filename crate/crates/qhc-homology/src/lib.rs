//! Homological algebra over finite-rank algebras: free resolutions built
//! degree by degree, Ext and Tor with exact torsion over Z_(p), and
//! projectivity and dimension tests.

mod ext;
mod resolution;
mod tor;

pub use ext::{ext_group, ext_groups, ext_vanishing_prefix, HomologyGroup};
pub use resolution::{
    free_module, global_dimension, is_projective, kernel_representation, projective_dimension,
    AlgebraMatrix, FreeResolution,
};
pub use tor::{tor_group, tor_groups, tor_vanishing_prefix};

use qhc_algebra::AlgebraError;
use qhc_linalg::LinalgError;

#[derive(Debug, thiserror::Error)]
pub enum HomologyError {
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, HomologyError>;
