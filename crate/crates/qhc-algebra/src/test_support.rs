//! Small hand-built algebras shared across the unit tests.

use qhc_linalg::Domain;

use crate::Algebra;

/// Group algebra of the order-2 group: basis {1, s} with s^2 = 1.
pub(crate) fn group_algebra_order2(spec: &str) -> Algebra {
    let d = Domain::parse(spec).unwrap();
    let one = d.one();
    Algebra::new(
        d,
        vec!["1".into(), "s".into()],
        vec![one.clone(), d.zero()],
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one.clone()),
            (1, 1, 0, one),
        ],
    )
    .unwrap()
}

/// Group algebra of all permutations of three points, built from explicit
/// permutation composition. Basis labels are the one-line notations.
pub(crate) fn sym3_algebra(spec: &str) -> Algebra {
    let d = Domain::parse(spec).unwrap();
    let compose = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let gens = [[1, 0, 2], [0, 2, 1]];
    let mut elems: Vec<[usize; 3]> = vec![[0, 1, 2]];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let e = compose(g, elems[i]);
            if !elems.contains(&e) {
                elems.push(e);
            }
        }
        i += 1;
    }
    assert_eq!(elems.len(), 6);
    let labels = elems.iter().map(|e| format!("{}{}{}", e[0], e[1], e[2])).collect();
    let mut unit = vec![d.zero(); 6];
    unit[0] = d.one();
    let mut products = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let c = compose(*a, *b);
            let k = elems.iter().position(|e| *e == c).unwrap();
            products.push((i, j, k, d.one()));
        }
    }
    let alg = Algebra::new(d, labels, unit, products).unwrap();
    alg.verify().unwrap();
    alg
}

/// Upper triangular 2x2 matrices: basis {e11, e22, e12}.
pub(crate) fn upper_triangular_2(spec: &str) -> Algebra {
    let d = Domain::parse(spec).unwrap();
    let one = d.one();
    let a = Algebra::new(
        d,
        vec!["e11".into(), "e22".into(), "e12".into()],
        vec![one.clone(), one.clone(), d.zero()],
        vec![
            (0, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (0, 2, 2, one.clone()),
            (2, 1, 2, one.clone()),
        ],
    )
    .unwrap();
    a.verify().unwrap();
    a
}
