//! Small hand-built algebras shared across the unit tests.

use qhc_algebra::Algebra;
use qhc_linalg::Domain;

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

/// Path algebra of the round-trip quiver on two vertices (arrows a: 1 -> 2
/// and b: 2 -> 1) modulo the relation a.b = 0. Basis {e1, e2, a, b, ba};
/// products compose right-to-left.
pub(crate) fn round_trip_quiver(spec: &str) -> Algebra {
    let d = Domain::parse(spec).unwrap();
    let one = d.one();
    let a = Algebra::new(
        d,
        vec!["e1".into(), "e2".into(), "a".into(), "b".into(), "ba".into()],
        vec![one.clone(), one.clone(), d.zero(), d.zero(), d.zero()],
        vec![
            (0, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (2, 0, 2, one.clone()),
            (1, 2, 2, one.clone()),
            (3, 1, 3, one.clone()),
            (0, 3, 3, one.clone()),
            (3, 2, 4, one.clone()),
            (4, 0, 4, one.clone()),
            (0, 4, 4, one.clone()),
        ],
    )
    .unwrap();
    a.verify().unwrap();
    a
}
