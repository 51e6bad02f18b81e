//! Standard modules as chain quotients, their costandard duals, and the
//! simple heads of standards.

use qhc_algebra::{
    image_columns, kernel_columns, quotient_representation, restricted_representation, Quotient,
    Representation,
};
use qhc_linalg::{smith_normal_form, solve_field, Matrix, Scalar};

use crate::chain::HeredityChain;
use crate::{QhError, Result};

/// A standard module `Δ(λ)` presented as the image of the weight projective
/// `P(λ) = A·e_λ` in the quotient by the ideal generated by the strictly
/// larger weights, together with the pieces of that presentation.
#[derive(Debug, Clone)]
pub struct StandardModule {
    pub weight: String,
    /// Position in the chain (0 is the largest weight).
    pub index: usize,
    /// `P(λ) = A·e_λ` as a module.
    pub projective: Representation,
    /// Basis of `A·e_λ` as columns in the algebra's coordinates.
    pub projective_basis: Matrix,
    /// Basis of the kernel `C(λ) = J·e_λ` (with `J` the ideal above `λ`) in
    /// the algebra's coordinates.
    pub kernel_basis: Matrix,
    /// The standard module itself.
    pub delta: Representation,
    /// Projection from `P(λ)`-coordinates onto `Δ(λ)`-coordinates.
    pub projection: Matrix,
    /// Image of `e_λ` in `Δ(λ)`: a cyclic generator.
    pub generator: Vec<Scalar>,
}

/// Express `cols` in the (independent) `basis` columns, exactly over either
/// coefficient domain; `None` when some column falls outside the span.
fn express_in(basis: &Matrix, cols: &Matrix) -> Result<Option<Matrix>> {
    if basis.domain().is_field() {
        Ok(solve_field(basis, cols)?)
    } else {
        Ok(smith_normal_form(basis).solve(cols))
    }
}

/// Build `Δ(λᵏ)` for the `k`-th chain weight: quotient of `A·e_λ` by the
/// trace `J·e_λ` of the ideal `J` generated by the strictly larger weights.
/// Over a local ring a torsion quotient is an error: such a chain is not a
/// split heredity chain.
pub fn standard_module(chain: &HeredityChain, k: usize) -> Result<StandardModule> {
    if k >= chain.len() {
        return Err(QhError::BadIndex(k));
    }
    let a = chain.algebra();
    let d = a.domain();
    let e = chain.idempotent(k);
    let right_e = a.right_mult_matrix(e);
    let projective_basis = image_columns(&right_e);
    let regular = Representation::regular(a);
    let projective = restricted_representation(a, &regular, &projective_basis)?;
    let kernel_basis = match chain.ideal_above(k) {
        None => Matrix::zero(d, a.dim(), 0),
        Some(ideal) => image_columns(&right_e.mul(ideal)),
    };
    let kernel_in_p = express_in(&projective_basis, &kernel_basis)?
        .ok_or_else(|| QhError::Internal("ideal trace escapes the weight projective".into()))?;
    let q = quotient_representation(a, &projective, &kernel_in_p)?;
    let e_matrix = Matrix::from_fn(d, a.dim(), 1, |r, _| e[r].clone());
    let e_in_p = express_in(&projective_basis, &e_matrix)?
        .ok_or_else(|| QhError::Internal("idempotent escapes the weight projective".into()))?;
    let generator = q.projection.apply(&e_in_p.column(0));
    Ok(StandardModule {
        weight: chain.weight(k).to_string(),
        index: k,
        projective,
        projective_basis,
        kernel_basis,
        delta: q.representation,
        projection: q.projection,
        generator,
    })
}

/// All standard modules of the chain, largest weight first.
pub fn all_standard_modules(chain: &HeredityChain) -> Result<Vec<StandardModule>> {
    (0..chain.len()).map(|k| standard_module(chain, k)).collect()
}

/// Costandard modules `∇(λ)`, largest weight first: the linear duals of the
/// standard modules of the opposite-algebra chain.
pub fn costandard_modules(chain: &HeredityChain) -> Result<Vec<Representation>> {
    let op = chain.opposite()?;
    (0..chain.len())
        .map(|k| standard_module(&op, k).map(|s| s.delta.dual()))
        .collect()
}

/// The simple head `L(λ) = Δ(λ)/M` over a field, where `M` is the set of
/// vectors annihilated by `e_λ·a` for every basis element `a`. That `M` is
/// the unique maximal submodule follows from `e_λ·Δ(λ)` being spanned by
/// the cyclic generator: a submodule not contained in `M` contains the
/// generator and is everything.
pub fn simple_head(chain: &HeredityChain, standard: &StandardModule) -> Result<Quotient> {
    let a = chain.algebra();
    let d = a.domain();
    if !d.is_field() {
        return Err(QhError::Internal(
            "simple heads are computed over fields; reduce to the residue field first".into(),
        ));
    }
    let e_action = standard.delta.element_action(chain.idempotent(standard.index));
    let mut stacked: Option<Matrix> = None;
    for i in 0..a.dim() {
        let block = e_action.mul(standard.delta.action_of(i));
        stacked = Some(match stacked {
            None => block,
            Some(s) => s.vstack(&block),
        });
    }
    let maximal = kernel_columns(&stacked.expect("algebra has positive rank"))?;
    let q = quotient_representation(a, &standard.delta, &maximal)?;
    if q.representation.dim() == 0 {
        return Err(QhError::Internal(
            "standard module has zero head; the chain idempotent vanishes on it".into(),
        ));
    }
    Ok(q)
}
