//! Modules over a structure-constant algebra. A module of rank `r` is given
//! by one `r x r` action matrix per algebra basis element, acting on column
//! vectors; right modules are handled as left modules over the opposite
//! algebra throughout.

use qhc_linalg::{
    inverse_field, rref, smith_normal_form, solve_field, Domain, Matrix, RowEchelon, Scalar,
};

use crate::algebra::xorshift;
use crate::{Algebra, AlgebraError};

/// Pair count threshold for exhaustive compatibility checking in
/// [`Representation::verify`]; beyond it a fixed-seed sample is used.
const FULL_COMPAT_LIMIT: usize = 120;
const SAMPLED_PAIRS: usize = 4096;

/// A finitely generated module, presented by its action matrices.
#[derive(Debug, Clone)]
pub struct Representation {
    domain: Domain,
    dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Wrap raw action matrices (one per algebra basis element). Shapes and
    /// domains are validated; module axioms are not — call
    /// [`Representation::verify`].
    pub fn new(
        algebra: &Algebra,
        dim: usize,
        action: Vec<Matrix>,
    ) -> Result<Representation, AlgebraError> {
        if action.len() != algebra.dim() {
            return Err(AlgebraError::BadRepresentation(format!(
                "{} action matrices for an algebra of rank {}",
                action.len(),
                algebra.dim()
            )));
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(AlgebraError::BadRepresentation(format!(
                    "action matrix is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dim,
                    dim
                )));
            }
            if m.domain() != algebra.domain() {
                return Err(AlgebraError::BadRepresentation(
                    "action matrix domain differs from the algebra's".into(),
                ));
            }
        }
        Ok(Representation { domain: algebra.domain(), dim, action })
    }

    pub fn zero_module(algebra: &Algebra) -> Representation {
        let action = vec![Matrix::zero(algebra.domain(), 0, 0); algebra.dim()];
        Representation { domain: algebra.domain(), dim: 0, action }
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: &Algebra) -> Representation {
        let action = (0..algebra.dim())
            .map(|i| algebra.left_mult_matrix(&algebra.basis_vector(i)))
            .collect();
        Representation { domain: algebra.domain(), dim: algebra.dim(), action }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn action_of(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// The action matrix of a general element with coordinates `x`.
    pub fn element_action(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.action.len(), "element coordinate count");
        let d = self.domain;
        let mut out = Matrix::zero(d, self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if d.is_zero(xi) {
                continue;
            }
            out = out.add(&self.action[i].scale(xi));
        }
        out
    }

    pub fn apply_element(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.element_action(x).apply(v)
    }

    /// Check the unit acts as the identity and the action respects products;
    /// exhaustive over all basis pairs up to rank 120, a fixed-seed sample
    /// beyond that.
    pub fn verify(&self, algebra: &Algebra) -> Result<(), AlgebraError> {
        assert_eq!(self.action.len(), algebra.dim());
        if !self.element_action(algebra.unit()).is_identity() {
            return Err(AlgebraError::BadRepresentation(
                "unit does not act as the identity".into(),
            ));
        }
        let n = algebra.dim();
        if n <= FULL_COMPAT_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    self.check_pair(algebra, i, j)?;
                }
            }
        } else {
            let mut state = 0xd1b54a32d192ed03u64 ^ (n as u64) ^ ((self.dim as u64) << 32);
            for _ in 0..SAMPLED_PAIRS {
                let i = (xorshift(&mut state) % n as u64) as usize;
                let j = (xorshift(&mut state) % n as u64) as usize;
                self.check_pair(algebra, i, j)?;
            }
        }
        Ok(())
    }

    fn check_pair(&self, algebra: &Algebra, i: usize, j: usize) -> Result<(), AlgebraError> {
        let d = self.domain;
        let lhs = self.action[i].mul(&self.action[j]);
        let mut rhs = Matrix::zero(d, self.dim, self.dim);
        for (k, c) in algebra.product_basis(i, j) {
            rhs = rhs.add(&self.action[*k as usize].scale(c));
        }
        if lhs != rhs {
            return Err(AlgebraError::BadRepresentation(format!(
                "action incompatible with the product of basis elements {i} and {j}"
            )));
        }
        Ok(())
    }

    /// The same action with coefficients reduced to the residue field;
    /// pairs with [`Algebra::residue_algebra`].
    pub fn residue(&self) -> Result<Representation, AlgebraError> {
        let rd = self.domain.residue_domain()?;
        let action = self
            .action
            .iter()
            .map(|m| m.residue())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Representation { domain: rd, dim: self.dim, action })
    }

    /// The linear dual as a module over the opposite algebra (each action
    /// matrix transposed).
    pub fn dual(&self) -> Representation {
        Representation {
            domain: self.domain,
            dim: self.dim,
            action: self.action.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        assert!(!parts.is_empty(), "direct sum of no modules");
        let domain = parts[0].domain;
        let n = parts[0].action.len();
        let dim = parts.iter().map(|p| p.dim).sum();
        let mut action = Vec::with_capacity(n);
        for i in 0..n {
            let mut m = Matrix::zero(domain, dim, dim);
            let mut off = 0;
            for p in parts {
                assert_eq!(p.action.len(), n, "direct sum over different algebras");
                for r in 0..p.dim {
                    for c in 0..p.dim {
                        let v = p.action[i].get(r, c);
                        if !domain.is_zero(&v) {
                            m.set(off + r, off + c, v);
                        }
                    }
                }
                off += p.dim;
            }
            action.push(m);
        }
        Representation { domain, dim, action }
    }
}

/// Columns spanning the smallest submodule (over Z_(p): sublattice stable
/// under the action) containing the seed vectors. Closure runs over the
/// algebra's generating set; vectors are re-enqueued whenever the
/// accumulated span grows, which over Z_(p) includes pure valuation
/// refinements.
pub fn submodule_closure(
    algebra: &Algebra,
    ambient: &Representation,
    seeds: &[Vec<Scalar>],
) -> Matrix {
    let gens = algebra.generating_set();
    let gen_actions: Vec<&Matrix> = gens.iter().map(|&g| ambient.action_of(g)).collect();
    let mut ech = RowEchelon::new(ambient.domain(), ambient.dim());
    let mut work: Vec<Vec<Scalar>> = seeds.to_vec();
    while let Some(v) = work.pop() {
        if !ech.insert(&v) {
            continue;
        }
        for ga in &gen_actions {
            work.push(ga.apply(&v));
        }
    }
    ech.basis_columns()
}

/// The action restricted to the span of the given independent columns.
/// Over Z_(p) the columns must span an invariant *lattice* (close it with
/// [`submodule_closure`] first); a vector escaping the lattice is reported
/// as `NotInvariant`.
pub fn restricted_representation(
    algebra: &Algebra,
    ambient: &Representation,
    basis: &Matrix,
) -> Result<Representation, AlgebraError> {
    assert_eq!(basis.rows(), ambient.dim(), "basis height mismatch");
    let d = ambient.domain();
    let sub_dim = basis.cols();
    let mut action = Vec::with_capacity(algebra.dim());
    let snf = if d.is_field() { None } else { Some(smith_normal_form(basis)) };
    for i in 0..algebra.dim() {
        let mapped = ambient.action_of(i).mul(basis);
        let expressed = match &snf {
            None => solve_field(basis, &mapped)?,
            Some(s) => s.solve(&mapped),
        };
        match expressed {
            Some(m) => action.push(m),
            None => {
                return Err(AlgebraError::NotInvariant(format!(
                    "basis element {i} maps outside the given span"
                )))
            }
        }
    }
    Ok(Representation { domain: d, dim: sub_dim, action })
}

/// A quotient module together with the projection from the ambient module
/// and a section splitting it.
pub struct Quotient {
    pub representation: Representation,
    /// `quotient_dim x ambient_dim`; kills the subspace.
    pub projection: Matrix,
    /// `ambient_dim x quotient_dim`; `projection * section = id`.
    pub section: Matrix,
}

/// Quotient of `ambient` by the span of the `subspace` columns. The span
/// must be invariant under the algebra's generating set; over Z_(p) the
/// quotient must be torsion-free (the subspace saturated), otherwise
/// `TorsionQuotient` is returned.
pub fn quotient_representation(
    algebra: &Algebra,
    ambient: &Representation,
    subspace: &Matrix,
) -> Result<Quotient, AlgebraError> {
    let d = ambient.domain();
    let n = ambient.dim();
    assert_eq!(subspace.rows(), n, "subspace height mismatch");
    // Invariance under generators implies invariance under the whole algebra.
    let mut ech = RowEchelon::new(d, n);
    ech.insert_columns(subspace);
    for &g in &algebra.generating_set() {
        for j in 0..subspace.cols() {
            let col: Vec<Scalar> = (0..n).map(|r| subspace.get(r, j)).collect();
            let moved = ambient.action_of(g).apply(&col);
            if !ech.contains(&moved) {
                return Err(AlgebraError::NotInvariant(format!(
                    "generator {g} moves column {j} outside the subspace"
                )));
            }
        }
    }
    let snf = smith_normal_form(subspace);
    let r = snf.factors().len();
    if snf.factors().iter().any(|f| !d.is_unit(f)) {
        return Err(AlgebraError::TorsionQuotient(format!(
            "invariant factors {:?} are not all units",
            snf.factors().iter().map(|f| d.format_scalar(f)).collect::<Vec<_>>()
        )));
    }
    // In coordinates y = u*x the subspace becomes the span of the first r
    // unit vectors; the last n - r coordinates present the quotient.
    let u_inv = if d.is_field() {
        inverse_field(&snf.u)?.expect("transform matrix is invertible")
    } else {
        smith_normal_form(&snf.u)
            .inverse()
            .expect("transform matrix is unimodular")
    };
    let rows: Vec<usize> = (r..n).collect();
    let projection = snf.u.select_rows(&rows);
    let section = u_inv.select_columns(&rows);
    debug_assert!(projection.mul(&section).is_identity());
    debug_assert!(projection.mul(subspace).is_zero());
    let action = (0..algebra.dim())
        .map(|i| projection.mul(ambient.action_of(i)).mul(&section))
        .collect();
    Ok(Quotient {
        representation: Representation { domain: d, dim: n - r, action },
        projection,
        section,
    })
}

/// Does `m` intertwine the two actions (`m . source = target . m` on every
/// basis element)?
pub fn is_intertwiner(
    algebra: &Algebra,
    source: &Representation,
    target: &Representation,
    m: &Matrix,
) -> bool {
    assert_eq!(m.cols(), source.dim());
    assert_eq!(m.rows(), target.dim());
    (0..algebra.dim()).all(|i| m.mul(source.action_of(i)) == target.action_of(i).mul(m))
}

/// Kernel of a matrix as columns; exact and, over Z_(p), saturated.
pub fn kernel_columns(m: &Matrix) -> Result<Matrix, AlgebraError> {
    if m.domain().is_field() {
        Ok(rref(m)?.kernel)
    } else {
        Ok(smith_normal_form(m).kernel())
    }
}

/// Columns spanning the image of `m`: a basis over a field, a lattice basis
/// of the column span over Z_(p).
pub fn image_columns(m: &Matrix) -> Matrix {
    let mut ech = RowEchelon::new(m.domain(), m.rows());
    ech.insert_columns(m);
    ech.basis_columns()
}

/// Columns spanning `e . M` for an idempotent `e`; over Z_(p) this image
/// lattice is the exact direct summand cut out by `e`.
pub fn idempotent_image(
    algebra: &Algebra,
    module: &Representation,
    e: &[Scalar],
) -> Result<Matrix, AlgebraError> {
    if !algebra.is_idempotent(e) {
        return Err(AlgebraError::NotIdempotent);
    }
    Ok(image_columns(&module.element_action(e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::group_algebra_order2;

    fn f2s2() -> Algebra {
        group_algebra_order2("f2")
    }

    fn zs2() -> Algebra {
        group_algebra_order2("zloc2")
    }

    #[test]
    fn regular_representation_verifies() {
        let a = f2s2();
        let reg = Representation::regular(&a);
        reg.verify(&a).unwrap();
        assert_eq!(reg.dim(), 2);
        let dual = reg.dual();
        dual.verify(&a.opposite()).unwrap();
    }

    #[test]
    fn broken_action_is_rejected() {
        let a = f2s2();
        let f2 = a.domain();
        // s acts as identity but 1 + s should then act as 0... make s act as
        // the 2x2 nilpotent Jordan block: s^2 = 1 fails.
        let nil = Matrix::parse(f2, &[vec!["0", "1"], vec!["0", "0"]]).unwrap();
        let rep =
            Representation::new(&a, 2, vec![Matrix::identity(f2, 2), nil]).unwrap();
        assert!(matches!(
            rep.verify(&a),
            Err(AlgebraError::BadRepresentation(_))
        ));
    }

    #[test]
    fn closure_finds_the_sign_sublattice() {
        // Over Z_(2), the element 1 + s spans an invariant rank-1 lattice in
        // the regular module.
        let a = zs2();
        let z2 = a.domain();
        let reg = Representation::regular(&a);
        let seed = vec![z2.one(), z2.one()];
        let basis = submodule_closure(&a, &reg, &[seed]);
        assert_eq!(basis.cols(), 1);
        let sub = restricted_representation(&a, &reg, &basis).unwrap();
        sub.verify(&a).unwrap();
        // s fixes the vector 1 + s.
        assert!(sub.action_of(1).is_identity());
    }

    #[test]
    fn quotient_by_sign_sublattice() {
        let a = zs2();
        let z2 = a.domain();
        let reg = Representation::regular(&a);
        let sub = submodule_closure(&a, &reg, &[vec![z2.one(), z2.one()]]);
        let q = quotient_representation(&a, &reg, &sub).unwrap();
        q.representation.verify(&a).unwrap();
        assert_eq!(q.representation.dim(), 1);
        // In the quotient A/(1+s), s acts as -1.
        assert_eq!(
            q.representation.action_of(1).get(0, 0),
            z2.from_integer(-1)
        );
        // Projection and section compose to the identity.
        assert!(q.projection.mul(&q.section).is_identity());
    }

    #[test]
    fn torsion_quotient_is_detected() {
        let a = zs2();
        let z2 = a.domain();
        let reg = Representation::regular(&a);
        // 2 * (1 + s) spans an invariant lattice with torsion quotient.
        let doubled = Matrix::parse(z2, &[vec!["2"], vec!["2"]]).unwrap();
        assert!(matches!(
            quotient_representation(&a, &reg, &doubled),
            Err(AlgebraError::TorsionQuotient(_))
        ));
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let a = f2s2();
        let f2 = a.domain();
        let reg = Representation::regular(&a);
        // span{1} is not invariant: s * 1 = s.
        let line = Matrix::parse(f2, &[vec!["1"], vec!["0"]]).unwrap();
        assert!(matches!(
            quotient_representation(&a, &reg, &line),
            Err(AlgebraError::NotInvariant(_))
        ));
        assert!(matches!(
            restricted_representation(&a, &reg, &line),
            Err(AlgebraError::NotInvariant(_))
        ));
    }

    #[test]
    fn idempotent_image_of_unit_is_everything() {
        let a = f2s2();
        let reg = Representation::regular(&a);
        let img = idempotent_image(&a, &reg, a.unit()).unwrap();
        assert_eq!(img.cols(), 2);
        let s = a.basis_vector(1);
        assert!(matches!(
            idempotent_image(&a, &reg, &s),
            Err(AlgebraError::NotIdempotent)
        ));
    }

    #[test]
    fn intertwiner_check() {
        let a = f2s2();
        let f2 = a.domain();
        let reg = Representation::regular(&a);
        // Right multiplication by any element commutes with left
        // multiplication: take right multiplication by s.
        let r_s = a.right_mult_matrix(&a.basis_vector(1));
        assert!(is_intertwiner(&a, &reg, &reg, &r_s));
        // The swap matrix is left multiplication by s, which does NOT
        // commute with itself... it does. Use a projection instead.
        let proj = Matrix::parse(f2, &[vec!["1", "0"], vec!["0", "0"]]).unwrap();
        assert!(!is_intertwiner(&a, &reg, &reg, &proj));
    }
}
