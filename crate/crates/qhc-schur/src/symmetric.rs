//! The symmetric-group algebra on d letters: basis indexed by permutations
//! in one-line order, products given by composition.

use qhc_algebra::Algebra;
use qhc_linalg::Domain;

use crate::perm::all_permutations;
use crate::Result;

/// The group algebra of the symmetric group on `d` letters.
pub fn symmetric_group_algebra(d: usize, domain: Domain) -> Result<Algebra> {
    assert!(d >= 1);
    let perms = all_permutations(d);
    let index = |p: &crate::Permutation| {
        perms.iter().position(|q| q == p).expect("closed under composition")
    };
    let labels: Vec<String> = perms.iter().map(|p| p.label()).collect();
    let mut unit = vec![domain.zero(); perms.len()];
    unit[0] = domain.one();
    let mut products = Vec::new();
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            products.push((i, j, index(&p.compose(q)), domain.one()));
        }
    }
    let algebra = Algebra::new(domain, labels, unit, products)?;
    algebra.verify()?;
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qhc_algebra::center_basis;

    #[test]
    fn one_letter_gives_the_coefficient_ring() {
        let a = symmetric_group_algebra(1, Domain::parse("q").unwrap()).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.unit(), &[a.domain().one()]);
    }

    #[test]
    fn the_transposition_squares_to_one() {
        let f2 = Domain::parse("f2").unwrap();
        let a = symmetric_group_algebra(2, f2).unwrap();
        assert_eq!(a.dim(), 2);
        let s = a.basis_vector(1);
        assert_eq!(a.multiply(&s, &s), a.unit().to_vec());
    }

    #[test]
    fn the_center_on_three_letters_has_one_class_sum_per_class() {
        let f3 = Domain::parse("f3").unwrap();
        let a = symmetric_group_algebra(3, f3).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(center_basis(&a).unwrap().cols(), 3);
    }
}
