//! The (q-)Schur algebra as the endomorphism algebra of tensor space over
//! the Hecke algebra, with its canonical basis, weight idempotents,
//! heredity chain, and the Schur functor to the Hecke side.

use qhc_algebra::{Algebra, Representation};
use qhc_linalg::{
    reduced_column_basis, rref, smith_normal_form, solve_field, Domain, Matrix, Scalar,
};
use qhc_qh::HeredityChain;

use crate::partitions::{partition_label, partitions_in_order};
use crate::tensor::{multi_indices, tensor_space, TensorSpace};
use crate::{Result, SchurError};

/// A Schur algebra with the data the rest of the toolkit consumes.
pub struct SchurData {
    pub n: usize,
    pub d: usize,
    pub u: Scalar,
    /// Tensor space with its right Hecke-module structure.
    pub tensor: TensorSpace,
    /// The endomorphism algebra of tensor space, in its canonical basis.
    pub algebra: Algebra,
    /// The endomorphism matrix of each algebra basis element.
    pub basis_matrices: Vec<Matrix>,
    /// Tensor space as a left module over `algebra`.
    pub module: Representation,
    /// The idempotent projecting onto the weight space of content
    /// (1, ..., 1, 0, ...); its corner algebra is the Hecke algebra.
    pub idempotent: Vec<Scalar>,
    /// Images of the Hecke basis elements under the corner isomorphism
    /// onto e A e, in algebra coordinates.
    pub corner_images: Vec<Vec<Scalar>>,
    /// Weight labels and idempotents of the heredity chain, most dominant
    /// partition first.
    pub chain_weights: Vec<String>,
    pub chain_idempotents: Vec<Vec<Scalar>>,
}

/// Build the Schur algebra for `n` rows and tensor degree `d` over the
/// given domain; `u = 1` gives the classical algebra. Requires `n >= d`
/// so that the truncating idempotent exists.
pub fn schur_algebra(n: usize, d: usize, domain: Domain, u: &Scalar) -> Result<SchurData> {
    if n < d {
        return Err(SchurError::TooFewLetters(n, d));
    }
    let tensor = tensor_space(n, d, domain, u)?;
    let nd = tensor.rank();
    let classical = *u == domain.one();
    let basis_matrices = if classical {
        orbit_basis(n, d, domain)
    } else {
        solved_commutant_basis(&tensor)?
    };
    let labels: Vec<String> = basis_matrices
        .iter()
        .map(|m| basis_label(n, d, m))
        .collect();
    // Structure constants: expand each pairwise product over the basis.
    // Because the basis is fully reduced, the coefficient of the k-th
    // element can be read off at its pivot entry; the expansion is then
    // checked exactly.
    let pivots: Vec<(usize, usize)> = basis_matrices.iter().map(first_entry).collect();
    let mut products = Vec::new();
    for (i, a) in basis_matrices.iter().enumerate() {
        for (j, b) in basis_matrices.iter().enumerate() {
            let p = a.mul(b);
            let mut remainder = p.clone();
            for (k, &(r, c)) in pivots.iter().enumerate() {
                let coeff = remainder.get(r, c);
                if !domain.is_zero(&coeff) {
                    remainder = remainder.sub(&basis_matrices[k].scale(&coeff));
                    products.push((i, j, k, coeff));
                }
            }
            if !remainder.is_zero() {
                return Err(SchurError::Internal(
                    "a product of basis endomorphisms escapes the basis span".into(),
                ));
            }
        }
    }
    let unit_coords = expand_over_basis(&basis_matrices, &pivots, &Matrix::identity(domain, nd))?;
    let algebra = Algebra::new(domain, labels, unit_coords, products)?;
    algebra.verify()?;
    let module = Representation::new(&algebra, nd, basis_matrices.clone())?;
    module.verify(&algebra)?;
    // Weight idempotents: the projector onto the span of the multi-indices
    // of a given content commutes with the action, which preserves content.
    let indices = multi_indices(n, d);
    let content_projector = |content: &[usize]| -> Matrix {
        let mut m = Matrix::zero(domain, nd, nd);
        for (k, i) in indices.iter().enumerate() {
            let mut c = vec![0usize; n];
            for &x in i {
                c[x] += 1;
            }
            if c.as_slice() == content {
                m.set(k, k, domain.one());
            }
        }
        m
    };
    let mut omega = vec![0usize; n];
    for x in 0..d {
        omega[x] = 1;
    }
    let idempotent = expand_over_basis(&basis_matrices, &pivots, &content_projector(&omega))?;
    let partitions = partitions_in_order(n, d);
    let chain_weights: Vec<String> = partitions.iter().map(|p| partition_label(p)).collect();
    let chain_idempotents: Vec<Vec<Scalar>> = partitions
        .iter()
        .map(|p| {
            let mut content = p.clone();
            content.resize(n, 0);
            expand_over_basis(&basis_matrices, &pivots, &content_projector(&content))
        })
        .collect::<Result<_>>()?;
    let corner_images = corner_isomorphism(&tensor, &basis_matrices, &pivots, &idempotent)?;
    Ok(SchurData {
        n,
        d,
        u: u.clone(),
        tensor,
        algebra,
        basis_matrices,
        module,
        idempotent,
        corner_images,
        chain_weights,
        chain_idempotents,
    })
}

/// The classical basis: orbit indicator matrices of pairs of multi-indices
/// under simultaneous place permutation, ordered by first entry in
/// row-major order. These are 0/1 matrices with disjoint supports and are
/// already fully reduced.
fn orbit_basis(n: usize, d: usize, domain: Domain) -> Vec<Matrix> {
    let indices = multi_indices(n, d);
    let nd = indices.len();
    let position = |i: &[usize]| i.iter().fold(0usize, |acc, &x| acc * n + x);
    let mut seen = vec![false; nd * nd];
    let mut out = Vec::new();
    for r in 0..nd {
        for c in 0..nd {
            if seen[r * nd + c] {
                continue;
            }
            // Trace the diagonal orbit of the pair (r, c).
            let mut m = Matrix::zero(domain, nd, nd);
            let mut stack = vec![(r, c)];
            while let Some((a, b)) = stack.pop() {
                if seen[a * nd + b] {
                    continue;
                }
                seen[a * nd + b] = true;
                m.set(a, b, domain.one());
                for t in 0..d.saturating_sub(1) {
                    let mut ia = indices[a].clone();
                    let mut ib = indices[b].clone();
                    ia.swap(t, t + 1);
                    ib.swap(t, t + 1);
                    stack.push((position(&ia), position(&ib)));
                }
            }
            out.push(m);
        }
    }
    out
}

/// The commutant basis for a deformed action, found by solving the linear
/// system [X, action of each generator] = 0 and reducing the solution
/// space to its canonical basis.
fn solved_commutant_basis(tensor: &TensorSpace) -> Result<Vec<Matrix>> {
    let domain = tensor.module.domain();
    let nd = tensor.rank();
    let perms = crate::perm::all_permutations(tensor.d);
    let generators: Vec<&Matrix> = (0..tensor.d.saturating_sub(1))
        .map(|t| {
            let s = crate::perm::Permutation::transposition(tensor.d, t);
            let idx = perms.iter().position(|p| *p == s).expect("simple reflection");
            &tensor.right_action[idx]
        })
        .collect();
    if generators.is_empty() {
        // Degree one: every endomorphism commutes.
        return Ok((0..nd * nd)
            .map(|k| {
                Matrix::from_fn(domain, nd, nd, |r, c| {
                    if r * nd + c == k { domain.one() } else { domain.zero() }
                })
            })
            .collect());
    }
    // Unknown X as a vectorized nd x nd matrix, row-major.
    let rows = generators.len() * nd * nd;
    let mut system = Matrix::zero(domain, rows, nd * nd);
    for (g, m) in generators.iter().enumerate() {
        // (X M - M X)_{a b} = sum_c X_{a c} M_{c b} - M_{a c} X_{c b}.
        for a in 0..nd {
            for b in 0..nd {
                let row = g * nd * nd + a * nd + b;
                for c in 0..nd {
                    let plus = m.get(c, b);
                    if !domain.is_zero(&plus) {
                        let col = a * nd + c;
                        let cur = system.get(row, col);
                        system.set(row, col, domain.add(&cur, &plus));
                    }
                    let minus = m.get(a, c);
                    if !domain.is_zero(&minus) {
                        let col = c * nd + b;
                        let cur = system.get(row, col);
                        system.set(row, col, domain.sub(&cur, &minus));
                    }
                }
            }
        }
    }
    let kernel = if domain.is_field() {
        rref(&system)?.kernel
    } else {
        smith_normal_form(&system).kernel()
    };
    let basis = reduced_column_basis(&kernel)?;
    Ok((0..basis.cols())
        .map(|k| {
            Matrix::from_fn(domain, nd, nd, |r, c| basis.get(r * nd + c, k))
        })
        .collect())
}

/// The first nonzero entry of a matrix in row-major order.
fn first_entry(m: &Matrix) -> (usize, usize) {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m.entry_is_zero(r, c) {
                return (r, c);
            }
        }
    }
    panic!("zero basis matrix");
}

/// Name a basis element by the multi-index pair at its leading entry,
/// e.g. "x12.21" for the element supported on the orbit of ((1,2),(2,1)).
fn basis_label(n: usize, d: usize, m: &Matrix) -> String {
    let indices = multi_indices(n, d);
    let (r, c) = first_entry(m);
    let fmt = |i: &[usize]| -> String { i.iter().map(|x| (x + 1).to_string()).collect() };
    format!("x{}.{}", fmt(&indices[r]), fmt(&indices[c]))
}

/// Coordinates of an endomorphism in the reduced basis, verified exactly.
fn expand_over_basis(
    basis: &[Matrix],
    pivots: &[(usize, usize)],
    target: &Matrix,
) -> Result<Vec<Scalar>> {
    let domain = target.domain();
    let mut coords = vec![domain.zero(); basis.len()];
    let mut remainder = target.clone();
    for (k, &(r, c)) in pivots.iter().enumerate() {
        let coeff = remainder.get(r, c);
        if !domain.is_zero(&coeff) {
            remainder = remainder.sub(&basis[k].scale(&coeff));
            coords[k] = coeff;
        }
    }
    if !remainder.is_zero() {
        return Err(SchurError::Internal(
            "an intertwiner escapes the basis span".into(),
        ));
    }
    Ok(coords)
}

/// The isomorphism from the Hecke algebra onto the corner e A e: T_sigma
/// goes to the endomorphism that is zero off the top weight space and acts
/// there as left multiplication by T_sigma under the identification of the
/// weight space with the regular Hecke module.
fn corner_isomorphism(
    tensor: &TensorSpace,
    basis: &[Matrix],
    pivots: &[(usize, usize)],
    idempotent: &[Scalar],
) -> Result<Vec<Vec<Scalar>>> {
    let domain = tensor.module.domain();
    let nd = tensor.rank();
    let h_dim = tensor.hecke.dim();
    // The weight space as the image of e_omega under the Hecke action:
    // psi(T_sigma) = e_omega * T_sigma, an isomorphism H -> e V.
    let omega_position = {
        let indices = multi_indices(tensor.n, tensor.d);
        indices
            .iter()
            .position(|i| i.iter().enumerate().all(|(t, &x)| x == t))
            .expect("n >= d")
    };
    let mut psi = Matrix::zero(domain, nd, h_dim);
    for s in 0..h_dim {
        let mut v = vec![domain.zero(); nd];
        v[omega_position] = domain.one();
        let image = tensor.act(&v, s);
        for (r, x) in image.into_iter().enumerate() {
            psi.set(r, s, x);
        }
    }
    // Rows of the weight space: where the idempotent projector is one.
    let weight_rows: Vec<usize> = {
        let proj = element_matrix(basis, idempotent);
        (0..nd).filter(|&r| !proj.entry_is_zero(r, r)).collect()
    };
    if weight_rows.len() != h_dim {
        return Err(SchurError::Internal(
            "the top weight space does not match the Hecke rank".into(),
        ));
    }
    let psi_square = psi.select_rows(&weight_rows);
    let psi_inverse = invert(&psi_square)?;
    let mut images = Vec::new();
    for s in 0..h_dim {
        // X = psi . (left multiplication by T_sigma) . psi^{-1} on the
        // weight space, zero elsewhere.
        let left = tensor.hecke.left_mult_matrix(&tensor.hecke.basis_vector(s));
        let block = psi.mul(&left).mul(&psi_inverse);
        let mut x = Matrix::zero(domain, nd, nd);
        for (j, &col) in weight_rows.iter().enumerate() {
            for r in 0..nd {
                let v = block.get(r, j);
                if !domain.is_zero(&v) {
                    x.set(r, col, v);
                }
            }
        }
        images.push(expand_over_basis(basis, pivots, &x)?);
    }
    Ok(images)
}

/// Invert a square matrix over a field or over Z_(p) (unit determinant
/// required there).
fn invert(m: &Matrix) -> Result<Matrix> {
    let inverse = if m.domain().is_field() {
        qhc_linalg::inverse_field(m)?
    } else {
        smith_normal_form(m).inverse()
    };
    inverse.ok_or_else(|| {
        SchurError::Internal("expected an invertible weight-space pairing".into())
    })
}

/// Assemble the matrix of an algebra element from its coordinates.
fn element_matrix(basis: &[Matrix], coords: &[Scalar]) -> Matrix {
    let domain = basis[0].domain();
    let mut out = Matrix::zero(domain, basis[0].rows(), basis[0].cols());
    for (m, c) in basis.iter().zip(coords) {
        if !domain.is_zero(c) {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// The heredity chain of a Schur algebra: weights are the partitions of d
/// with at most n parts, most dominant first, each with its weight-space
/// projector as idempotent.
pub fn schur_heredity_chain(data: &SchurData) -> Result<HeredityChain> {
    Ok(HeredityChain::new(
        data.algebra.clone(),
        data.chain_weights.clone(),
        data.chain_idempotents.clone(),
    )?)
}

/// The Schur functor: send a module M over the Schur algebra to e M with
/// the Hecke algebra acting through the corner isomorphism. Weyl modules
/// go to the cell (dual Specht) modules.
pub fn schur_functor_image(data: &SchurData, m: &Representation) -> Result<Representation> {
    let domain = m.domain();
    let e_action = m.element_action(&data.idempotent);
    let basis = qhc_algebra::image_columns(&e_action);
    let r = basis.cols();
    let mut action = Vec::new();
    for coords in &data.corner_images {
        let act = m.element_action(coords);
        let moved = act.mul(&basis);
        let solved = if domain.is_field() {
            solve_field(&basis, &moved)?
        } else {
            smith_normal_form(&basis).solve(&moved)
        };
        let y = solved.ok_or_else(|| {
            SchurError::Internal("the corner action does not preserve the image".into())
        })?;
        action.push(y);
    }
    let image = Representation::new(&data.tensor.hecke, r, action)?;
    image.verify(&data.tensor.hecke)?;
    Ok(image)
}
