//! The d-fold tensor power of a free rank-n module, as a right module over
//! the Hecke algebra on d letters: basis indexed by multi-indices, simple
//! reflections acting by a deformation of place permutation.

use qhc_algebra::Representation;
use qhc_linalg::{Domain, Matrix, Scalar};

use crate::hecke_algebra;
use crate::perm::all_permutations;
use crate::Result;

/// Multi-indices (i_1, ..., i_d) with letters in {0, ..., n-1}, enumerated
/// in lexicographic (row-major) order.
pub fn multi_indices(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|i| {
                (0..n).map(move |x| {
                    let mut j = i.clone();
                    j.push(x);
                    j
                })
            })
            .collect();
    }
    out
}

/// Tensor space together with the algebra acting on it from the right.
///
/// The simple reflection at place t sends a basis vector e_i to e_{i s}
/// when i_t < i_{t+1}, to u e_i when i_t = i_{t+1}, and to
/// (u - u^{-1}) e_i + e_{i s} when i_t > i_{t+1}; at u = 1 these are
/// exactly the place permutations.
pub struct TensorSpace {
    pub n: usize,
    pub d: usize,
    pub u: Scalar,
    /// The Hecke algebra on d letters (the group algebra when u = 1).
    pub hecke: qhc_algebra::Algebra,
    /// Matrix of the right action of each Hecke basis element; the matrix
    /// for T_sigma sends a column vector v to v * T_sigma.
    pub right_action: Vec<Matrix>,
    /// The same data packaged as a left module over the opposite algebra.
    pub module: Representation,
}

/// Build tensor space over the given coefficient domain; `u` must be a
/// unit of the domain.
pub fn tensor_space(n: usize, d: usize, domain: Domain, u: &Scalar) -> Result<TensorSpace> {
    assert!(n >= 1 && d >= 1);
    let hecke = hecke_algebra(d, domain, u)?;
    let u_inv = domain.inv(u).expect("checked by the Hecke constructor");
    let shrink = domain.sub(u, &u_inv);
    let indices = multi_indices(n, d);
    let rank = indices.len();
    let position = |i: &[usize]| {
        i.iter().fold(0usize, |acc, &x| acc * n + x)
    };
    // Action of each simple reflection.
    let mut generator_action = Vec::new();
    for t in 0..d.saturating_sub(1) {
        let mut m = Matrix::zero(domain, rank, rank);
        for (col, i) in indices.iter().enumerate() {
            let mut swapped = i.clone();
            swapped.swap(t, t + 1);
            let target = position(&swapped);
            if i[t] < i[t + 1] {
                m.set(target, col, domain.one());
            } else if i[t] == i[t + 1] {
                m.set(col, col, u.clone());
            } else {
                m.set(col, col, shrink.clone());
                m.set(target, col, domain.one());
            }
        }
        generator_action.push(m);
    }
    // Extend along reduced words: acting by T_sigma = T_{t_1} ... T_{t_k}
    // on the right applies the generator matrices left-multiplied in
    // reverse word order.
    let perms = all_permutations(d);
    let right_action: Vec<Matrix> = perms
        .iter()
        .map(|p| {
            let mut m = Matrix::identity(domain, rank);
            for &t in &p.reduced_word() {
                m = generator_action[t].mul(&m);
            }
            m
        })
        .collect();
    let module = Representation::new(&hecke.opposite(), rank, right_action.clone())?;
    module.verify(&hecke.opposite())?;
    Ok(TensorSpace {
        n,
        d,
        u: u.clone(),
        hecke,
        right_action,
        module,
    })
}

impl TensorSpace {
    pub fn rank(&self) -> usize {
        self.right_action.first().map_or(0, |m| m.rows())
    }

    /// Apply T_sigma (by basis index) to a vector on the right.
    pub fn act(&self, v: &[Scalar], sigma: usize) -> Vec<Scalar> {
        self.right_action[sigma].apply(v)
    }
}
