//! Split heredity chains and the structures they induce: standard modules
//! as chain quotients, costandard modules via the opposite chain, the
//! five-axiom verification protocol, and membership tests for the category
//! of standardly filtered modules.

mod chain;
mod filtration;
mod standard;
#[cfg(test)]
pub(crate) mod test_support;
mod verify;

pub use chain::HeredityChain;
pub use filtration::{has_delta_filtration, FiltrationLayer, FiltrationVerdict};
pub use standard::{
    all_standard_modules, costandard_modules, simple_head, standard_module, StandardModule,
};
pub use verify::{verify_split_qh, AxiomCheck, ChainVerdict};

use qhc_algebra::AlgebraError;
use qhc_homology::HomologyError;
use qhc_linalg::LinalgError;

#[derive(Debug, thiserror::Error)]
pub enum QhError {
    #[error("invalid heredity chain: {0}")]
    BadChain(String),
    #[error("chain index {0} out of range")]
    BadIndex(usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, QhError>;
