//! Randomized structural checks for the exact linear algebra kernel: rank
//! plus nullity, Smith form invariants against a determinantal-divisor
//! oracle, solve round trips, and agreement between the eager and
//! incremental elimination paths.

use proptest::prelude::*;
use qhc_linalg::{
    cokernel_invariants, rank, rref, smith_normal_form, Domain, Matrix, RowEchelon, Scalar,
};

// --- helpers -------------------------------------------------------------

fn int_matrix(domain: Domain, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_fn(domain, rows, cols, |r, c| {
        domain.from_integer(entries[r * cols + c])
    })
}

/// p-valuation of the gcd of all k x k minors, computed from the raw integer
/// entries. `None` when every k x k minor vanishes.
fn minor_gcd_valuation(entries: &[i64], rows: usize, cols: usize, k: usize, p: u64) -> Option<u64> {
    fn det(entries: &[i64], cols: usize, rs: &[usize], cs: &[usize]) -> i128 {
        match rs.len() {
            1 => entries[rs[0] * cols + cs[0]] as i128,
            n => {
                let mut acc: i128 = 0;
                let sub_rows = &rs[1..];
                for (j, &c) in cs.iter().enumerate() {
                    let a = entries[rs[0] * cols + c] as i128;
                    if a == 0 {
                        continue;
                    }
                    let rest: Vec<usize> =
                        cs.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &x)| x).collect();
                    let minor = det(entries, cols, sub_rows, &rest);
                    let term = a * minor;
                    acc += if j % 2 == 0 { term } else { -term };
                }
                let _ = n;
                acc
            }
        }
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..=n.saturating_sub(k) {
            for mut rest in subsets(n - first - 1, k - 1) {
                for x in rest.iter_mut() {
                    *x += first + 1;
                }
                let mut s = vec![first];
                s.append(&mut rest);
                out.push(s);
            }
        }
        out
    }
    let mut best: Option<u64> = None;
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let d = det(entries, cols, &rs, &cs);
            if d != 0 {
                let mut v = 0u64;
                let mut d = d.unsigned_abs();
                while d % p as u128 == 0 {
                    d /= p as u128;
                    v += 1;
                }
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
    }
    best
}

// --- properties ----------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_width(
        rows in 1usize..6,
        cols in 1usize..6,
        seed in proptest::collection::vec(-9i64..10, 36),
        spec in prop_oneof![Just("f2"), Just("f3"), Just("f5"), Just("q")],
    ) {
        let domain = Domain::parse(spec).unwrap();
        let m = int_matrix(domain, rows, cols, &seed);
        let r = rref(&m).unwrap();
        prop_assert_eq!(r.rank + r.kernel.cols(), cols);
        prop_assert!(m.mul(&r.kernel).is_zero());
        prop_assert_eq!(r.image.cols(), r.rank);
    }

    #[test]
    fn smith_form_matches_determinantal_divisors(
        rows in 1usize..5,
        cols in 1usize..5,
        seed in proptest::collection::vec(-9i64..10, 25),
        p in prop_oneof![Just(2u64), Just(3u64)],
    ) {
        let domain = Domain::localized_integers(p).unwrap();
        let m = int_matrix(domain, rows, cols, &seed);
        let snf = smith_normal_form(&m);
        snf.verify().unwrap();
        let factors = snf.factors();
        // Product of the first k invariant factors equals the gcd of the
        // k x k minors, up to a unit — so their p-valuations agree.
        for k in 1..=3.min(rows.min(cols)) {
            let oracle = minor_gcd_valuation(&seed[..rows * cols], rows, cols, k, p);
            match oracle {
                None => prop_assert!(factors.len() < k),
                Some(v) => {
                    prop_assert!(factors.len() >= k);
                    let sum: u64 = factors[..k]
                        .iter()
                        .map(|f| domain.valuation(f).unwrap())
                        .sum();
                    prop_assert_eq!(sum, v);
                }
            }
        }
    }

    #[test]
    fn solve_round_trip_over_localized_integers(
        n in 1usize..5,
        k in 1usize..4,
        a_seed in proptest::collection::vec(-9i64..10, 25),
        x_seed in proptest::collection::vec(-9i64..10, 20),
    ) {
        let domain = Domain::localized_integers(2).unwrap();
        let a = int_matrix(domain, n, n, &a_seed);
        let x = int_matrix(domain, n, k, &x_seed);
        let b = a.mul(&x);
        let snf = smith_normal_form(&a);
        let solved = snf.solve(&b).expect("constructed system is solvable");
        prop_assert_eq!(a.mul(&solved), b);
    }

    #[test]
    fn split_injectivity_has_a_retraction(
        n in 2usize..6,
        k in 1usize..4,
        seed in proptest::collection::vec(-9i64..10, 30),
    ) {
        let k = k.min(n);
        let domain = Domain::localized_integers(2).unwrap();
        let m = int_matrix(domain, n, k, &seed);
        let snf = smith_normal_form(&m);
        if snf.is_split_injective() {
            let r = snf.retraction().unwrap();
            prop_assert!(r.mul(&m).is_identity());
            // Scaling by p kills splitness but keeps injectivity.
            let two = domain.from_integer(2);
            let m2 = m.scale(&two);
            let snf2 = smith_normal_form(&m2);
            prop_assert_eq!(snf2.rank(), k);
            prop_assert!(!snf2.is_split_injective());
        } else {
            prop_assert!(snf.retraction().is_none());
        }
    }

    #[test]
    fn incremental_echelon_agrees_with_eager_rank(
        rows in 1usize..6,
        cols in 1usize..6,
        seed in proptest::collection::vec(-9i64..10, 36),
        spec in prop_oneof![Just("f2"), Just("f5"), Just("q")],
    ) {
        let domain = Domain::parse(spec).unwrap();
        let m = int_matrix(domain, rows, cols, &seed);
        let mut ech = RowEchelon::new(domain, rows);
        ech.insert_columns(&m);
        prop_assert_eq!(ech.rank(), rank(&m).unwrap());
        for j in 0..cols {
            let col: Vec<Scalar> = (0..rows).map(|r| m.get(r, j)).collect();
            prop_assert!(ech.contains(&col));
        }
    }

    #[test]
    fn cokernel_rank_drops_by_matrix_rank(
        rows in 1usize..5,
        cols in 1usize..5,
        seed in proptest::collection::vec(-9i64..10, 25),
    ) {
        let domain = Domain::localized_integers(3).unwrap();
        let m = int_matrix(domain, rows, cols, &seed);
        let inv = cokernel_invariants(&m);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(inv.free_rank, rows - snf.rank());
        // Torsion factors divide one another in order.
        for w in inv.torsion.windows(2) {
            let va = domain.valuation(&w[0]).unwrap();
            let vb = domain.valuation(&w[1]).unwrap();
            prop_assert!(va <= vb);
        }
    }
}
