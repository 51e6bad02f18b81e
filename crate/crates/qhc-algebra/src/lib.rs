//! Finite-rank associative algebras over exact coefficient domains:
//! structure-constant presentations, finitely generated modules, hom spaces,
//! tensor products, radicals, and idempotent decompositions.

mod algebra;
mod idempotents;
mod json;
mod module;
mod presentation;
mod radical;
mod tensor;
#[cfg(test)]
pub(crate) mod test_support;

pub use algebra::Algebra;
pub use idempotents::{
    center_basis, central_primitive_idempotents, corner_algebra, lift_idempotent,
    primitive_idempotents_by_block, simple_modules,
};
pub use json::{format_vector, parse_vector, AlgebraFile, ChainFile};
pub use module::{
    idempotent_image, image_columns, is_intertwiner, kernel_columns, quotient_representation,
    restricted_representation, submodule_closure, Quotient, Representation,
};
pub use presentation::{
    hom_between, hom_rank, hom_space, present_module, present_submodule, present_with,
    Presentation,
};
pub use radical::{
    algebra_quotient_by_ideal, is_semisimple, radical_basis, radical_of_module, socle_of_module,
};
pub use tensor::{tensor_over_algebra, tensor_with_regular, TensorProduct};

use qhc_linalg::LinalgError;

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("malformed algebra data: {0}")]
    BadStructure(String),
    #[error("unit law fails on basis element {0}")]
    UnitLaw(usize),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("subspace is not stable under the action: {0}")]
    NotInvariant(String),
    #[error("quotient has coefficient torsion: {0}")]
    TorsionQuotient(String),
    #[error("malformed representation data: {0}")]
    BadRepresentation(String),
    #[error("operation requires field coefficients: {0}")]
    FieldOnly(String),
    #[error("splitting failed: {0}")]
    NotSplit(String),
    #[error("serialization: {0}")]
    Format(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
