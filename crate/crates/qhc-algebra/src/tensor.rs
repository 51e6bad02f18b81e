//! Tensor products `V (x)_A M` of a right module with a left module,
//! presented as a quotient of the plain tensor space by the bilinearity
//! relations `v.a (x) m - v (x) a.m`. Relations need only be spanned over
//! an algebra generating set; over Z_(p) the cokernel can carry torsion,
//! which is reported instead of silently discarded.

use qhc_linalg::{cokernel_invariants, CokernelInvariants, Matrix, RowEchelon, Scalar};

use crate::module::{quotient_representation, Representation};
use crate::{Algebra, AlgebraError};

/// The result of tensoring a right module (of rank `right_rank`, given over
/// the opposite algebra) with a left module (of rank `left_rank`). Pure
/// tensors `v_i (x) m_j` index the ambient coordinate `i * left_rank + j`.
pub struct TensorProduct {
    pub right_rank: usize,
    pub left_rank: usize,
    /// Free rank and torsion of the quotient.
    pub invariants: CokernelInvariants,
    /// Columns spanning the relation sublattice of the ambient tensor space.
    pub relations: Matrix,
    /// `rank x ambient`; sends a pure tensor to quotient coordinates.
    /// Present unless the quotient has torsion.
    pub projection: Option<Matrix>,
    /// `ambient x rank`; a section of the projection.
    pub section: Option<Matrix>,
    /// The quotient as a module over the auxiliary algebra acting on the
    /// right factor's space, when requested and torsion-free.
    pub induced: Option<Representation>,
}

impl TensorProduct {
    pub fn rank(&self) -> usize {
        self.invariants.free_rank
    }

    pub fn ambient_rank(&self) -> usize {
        self.right_rank * self.left_rank
    }

    /// Quotient coordinates of the pure tensor `v (x) m`.
    pub fn pure_tensor(&self, v: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let proj = self
            .projection
            .as_ref()
            .expect("pure tensors need a torsion-free quotient");
        assert_eq!(v.len(), self.right_rank);
        assert_eq!(m.len(), self.left_rank);
        let d = proj.domain();
        let mut amb = vec![d.zero(); self.ambient_rank()];
        for (i, vi) in v.iter().enumerate() {
            if d.is_zero(vi) {
                continue;
            }
            for (j, mj) in m.iter().enumerate() {
                amb[i * self.left_rank + j] = d.mul(vi, mj);
            }
        }
        proj.apply(&amb)
    }
}

/// Tensor `right (x)_A left`. `right` must be a module over
/// `algebra.opposite()` and `left` over `algebra`. When `induce` supplies an
/// auxiliary algebra `B` with a left `B`-action on the right factor's space
/// (commuting with the right `A`-action), the quotient is equipped with the
/// induced `B`-module structure.
pub fn tensor_over_algebra(
    algebra: &Algebra,
    right: &Representation,
    left: &Representation,
    induce: Option<(&Algebra, &Representation)>,
) -> Result<TensorProduct, AlgebraError> {
    let d = algebra.domain();
    let (dv, dm) = (right.dim(), left.dim());
    let width = dv * dm;
    let mut ech = RowEchelon::new(d, width);
    for &g in &algebra.generating_set() {
        let ra = right.action_of(g); // v -> v.a
        let ma = left.action_of(g); // m -> a.m
        for i in 0..dv {
            let vi: Vec<Scalar> = (0..dv).map(|r| ra.get(r, i)).collect();
            for j in 0..dm {
                let mj: Vec<Scalar> = (0..dm).map(|r| ma.get(r, j)).collect();
                let mut rel = vec![d.zero(); width];
                for (k, c) in vi.iter().enumerate() {
                    if !d.is_zero(c) {
                        rel[k * dm + j] = c.clone();
                    }
                }
                for (l, c) in mj.iter().enumerate() {
                    if !d.is_zero(c) {
                        rel[i * dm + l] = d.sub(&rel[i * dm + l], c);
                    }
                }
                ech.insert(&rel);
            }
        }
    }
    let relations = ech.basis_columns();
    let invariants = cokernel_invariants(&relations);
    if !invariants.torsion.is_empty() {
        return Ok(TensorProduct {
            right_rank: dv,
            left_rank: dm,
            invariants,
            relations,
            projection: None,
            section: None,
            induced: None,
        });
    }
    // Torsion-free quotient: reuse the generic machinery on a throwaway
    // one-dimensional algebra so only the linear structure is quotiented.
    let scalars = trivial_algebra(d)?;
    let ambient = Representation::new(&scalars, width, vec![Matrix::identity(d, width)])?;
    let q = quotient_representation(&scalars, &ambient, &relations)?;
    let induced = match induce {
        None => None,
        Some((aux, aux_action)) => {
            assert_eq!(aux_action.dim(), dv, "auxiliary action dimension mismatch");
            let mut action = Vec::with_capacity(aux.dim());
            for b in 0..aux.dim() {
                // b . (v (x) m) = (b.v) (x) m
                let bv = aux_action.action_of(b);
                let mut amb = Matrix::zero(d, width, width);
                for i in 0..dv {
                    for k in 0..dv {
                        let c = bv.get(k, i);
                        if d.is_zero(&c) {
                            continue;
                        }
                        for j in 0..dm {
                            amb.set(k * dm + j, i * dm + j, c.clone());
                        }
                    }
                }
                action.push(q.projection.mul(&amb).mul(&q.section));
            }
            let rep = Representation::new(aux, invariants.free_rank, action)?;
            Some(rep)
        }
    };
    Ok(TensorProduct {
        right_rank: dv,
        left_rank: dm,
        invariants,
        relations,
        projection: Some(q.projection),
        section: Some(q.section),
        induced,
    })
}

/// `V (x)_A A` is canonically `V` itself (`v (x) a -> v.a`); this fast path
/// avoids the ambient-size elimination, which is what makes tensors against
/// the regular module of a large algebra tractable.
pub fn tensor_with_regular(
    algebra: &Algebra,
    right: &Representation,
    induce: Option<(&Algebra, &Representation)>,
) -> Result<TensorProduct, AlgebraError> {
    let d = algebra.domain();
    let dv = right.dim();
    let da = algebra.dim();
    let width = dv * da;
    let mut projection = Matrix::zero(d, dv, width);
    for i in 0..dv {
        for j in 0..da {
            // v_i (x) b_j -> v_i . b_j
            let col = right.action_of(j);
            for r in 0..dv {
                let c = col.get(r, i);
                if !d.is_zero(&c) {
                    projection.set(r, i * da + j, c);
                }
            }
        }
    }
    let mut section = Matrix::zero(d, width, dv);
    for i in 0..dv {
        for (j, uj) in algebra.unit().iter().enumerate() {
            if !d.is_zero(uj) {
                section.set(i * da + j, i, uj.clone());
            }
        }
    }
    debug_assert!(projection.mul(&section).is_identity());
    let induced = match induce {
        None => None,
        Some((aux, aux_action)) => {
            assert_eq!(aux_action.dim(), dv);
            if aux_action.action().len() != aux.dim() {
                return Err(AlgebraError::BadRepresentation(
                    "auxiliary action does not match the auxiliary algebra".into(),
                ));
            }
            Some(aux_action.clone())
        }
    };
    Ok(TensorProduct {
        right_rank: dv,
        left_rank: da,
        invariants: CokernelInvariants { free_rank: dv, torsion: Vec::new() },
        relations: Matrix::zero(d, width, 0),
        projection: Some(projection),
        section: Some(section),
        induced,
    })
}

/// The one-dimensional algebra over `d`, used to borrow quotient plumbing
/// for plain linear subspaces.
fn trivial_algebra(d: qhc_linalg::Domain) -> Result<Algebra, AlgebraError> {
    Algebra::new(d, vec!["1".into()], vec![d.one()], vec![(0, 0, 0, d.one())])
}
