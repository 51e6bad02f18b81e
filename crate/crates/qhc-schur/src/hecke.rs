//! The Hecke algebra of the symmetric group: basis T_sigma indexed by
//! permutations, multiplication defined by the two-case relation for a
//! product with a simple reflection and extended along reduced words.

use qhc_algebra::Algebra;
use qhc_linalg::{Domain, Scalar};

use crate::perm::{all_permutations, Permutation};
use crate::{Result, SchurError};

/// The Hecke algebra on `d` letters with deformation parameter `u`, which
/// must be a unit. For a basis element T_x and a simple reflection s,
/// T_x T_s is T_{xs} when the length grows and (u - u^{-1}) T_x + T_{xs}
/// when it shrinks; at u = 1 this is the group algebra with basis relabeled.
pub fn hecke_algebra(d: usize, domain: Domain, u: &Scalar) -> Result<Algebra> {
    assert!(d >= 1);
    let u_inv = domain
        .inv(u)
        .ok_or_else(|| SchurError::ParameterNotAUnit(domain.format_scalar(u)))?;
    let shrink = domain.sub(u, &u_inv);
    let perms = all_permutations(d);
    let index = |p: &Permutation| {
        perms.iter().position(|q| q == p).expect("closed under composition")
    };
    // T_x T_{s_t} expanded over the basis, for every x and generator t.
    let by_generator: Vec<Vec<Vec<(usize, Scalar)>>> = perms
        .iter()
        .map(|p| {
            (0..d.saturating_sub(1))
                .map(|t| {
                    let s = Permutation::transposition(d, t);
                    let ps = p.compose(&s);
                    if ps.length() > p.length() {
                        vec![(index(&ps), domain.one())]
                    } else {
                        vec![(index(p), shrink.clone()), (index(&ps), domain.one())]
                    }
                })
                .collect()
        })
        .collect();
    let labels: Vec<String> = perms.iter().map(|p| format!("T{}", p.label())).collect();
    let mut unit = vec![domain.zero(); perms.len()];
    unit[0] = domain.one();
    let mut products = Vec::new();
    for (i, _) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let mut coords = vec![domain.zero(); perms.len()];
            coords[i] = domain.one();
            for &t in &q.reduced_word() {
                let mut next = vec![domain.zero(); perms.len()];
                for (x, c) in coords.iter().enumerate() {
                    if domain.is_zero(c) {
                        continue;
                    }
                    for (y, f) in &by_generator[x][t] {
                        next[*y] = domain.add(&next[*y], &domain.mul(c, f));
                    }
                }
                coords = next;
            }
            for (k, c) in coords.into_iter().enumerate() {
                if !domain.is_zero(&c) {
                    products.push((i, j, k, c));
                }
            }
        }
    }
    let algebra = Algebra::new(domain, labels, unit, products)?;
    algebra.verify()?;
    Ok(algebra)
}
