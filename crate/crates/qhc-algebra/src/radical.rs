//! Jacobson radicals over exact fields. In characteristic zero the radical
//! is the kernel of the regular trace form. In characteristic p the trace
//! form only gives an upper bound, so the radical is cut out by the
//! p-power trace conditions tr((xy)^(p^i)) = 0 mod p^(i+1), evaluated on
//! integer lifts, one refinement step per power of p up to the algebra
//! rank. Over prime fields these conditions are genuinely linear, because
//! the Frobenius twist is trivial there.

use qhc_linalg::{Domain, Matrix, RowEchelon};

use crate::module::{kernel_columns, Representation};
use crate::{Algebra, AlgebraError};

/// Columns spanning the Jacobson radical. Field coefficients only; over
/// Z_(p) reduce to the residue field first.
pub fn radical_basis(algebra: &Algebra) -> Result<Matrix, AlgebraError> {
    match algebra.domain() {
        Domain::Rationals => radical_char_zero(algebra),
        Domain::PrimeField(p) => radical_char_p(algebra, p),
        d => Err(AlgebraError::FieldOnly(format!(
            "radical over {d} is not defined; use the residue field"
        ))),
    }
}

pub fn is_semisimple(algebra: &Algebra) -> Result<bool, AlgebraError> {
    Ok(radical_basis(algebra)?.cols() == 0)
}

fn radical_char_zero(algebra: &Algebra) -> Result<Matrix, AlgebraError> {
    let d = algebra.domain();
    let n = algebra.dim();
    let left: Vec<Matrix> =
        (0..n).map(|i| algebra.left_mult_matrix(&algebra.basis_vector(i))).collect();
    let gram = Matrix::from_fn(d, n, n, |i, j| {
        let prod = left[i].mul(&left[j]);
        let mut t = d.zero();
        for k in 0..n {
            t = d.add(&t, &prod.get(k, k));
        }
        t
    });
    Ok(kernel_columns(&gram)?)
}

fn radical_char_p(algebra: &Algebra, p: u64) -> Result<Matrix, AlgebraError> {
    let n = algebra.dim();
    let fp = algebra.domain();
    // Integer lifts of the left regular representation, entries in 0..p.
    let left_int: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let m = algebra.left_mult_matrix(&algebra.basis_vector(i));
            let mut flat = vec![0u64; n * n];
            for r in 0..n {
                for c in 0..n {
                    flat[r * n + c] = scalar_lift(&m.get(r, c), p);
                }
            }
            flat
        })
        .collect();

    // Refine the whole algebra by one trace condition per power of p. Every
    // step keeps the radical inside the cut subspace, so the first cut that
    // is a nilpotent ideal IS the radical (a nilpotent ideal can never be
    // strictly larger).
    let mut basis = Matrix::identity(fp, n);
    let mut p_power = 1u64; // p^i
    for _step in 0..40 {
        if is_nilpotent_ideal(algebra, &basis)? {
            return Ok(basis);
        }
        let dim = basis.cols();
        let modulus = p_power
            .checked_mul(p)
            .expect("modulus fits in u64 at desk scale");
        // Integer-lifted regular matrices of the current basis vectors,
        // reduced mod p^(i+1).
        let lifted: Vec<Vec<u64>> = (0..dim)
            .map(|j| {
                let mut acc = vec![0u64; n * n];
                for r in 0..n {
                    let coeff = scalar_lift(&basis.get(r, j), p);
                    if coeff == 0 {
                        continue;
                    }
                    for (a, b) in acc.iter_mut().zip(&left_int[r]) {
                        *a = (*a + coeff * b) % modulus;
                    }
                }
                acc
            })
            .collect();
        let mut constraint = Matrix::zero(fp, dim, dim);
        for (row, y) in lifted.iter().enumerate() {
            for (col, x) in lifted.iter().enumerate() {
                let prod = mat_mul_mod(x, y, n, modulus);
                let pow = mat_pow_mod(&prod, n, p_power, modulus);
                let mut trace = 0u64;
                for k in 0..n {
                    trace = (trace + pow[k * n + k]) % modulus;
                }
                assert!(
                    trace % p_power == 0,
                    "trace condition must be divisible by the previous modulus"
                );
                constraint.set(row, col, fp.from_integer(((trace / p_power) % p) as i64));
            }
        }
        let kernel = kernel_columns(&constraint)?;
        basis = basis.mul(&kernel);
        p_power = p_power.saturating_mul(p);
    }
    Err(AlgebraError::Linalg(qhc_linalg::LinalgError::Internal(
        "radical iteration did not stabilize on a nilpotent ideal".into(),
    )))
}

/// Is the span of the columns a two-sided ideal with some power zero?
fn is_nilpotent_ideal(algebra: &Algebra, basis: &Matrix) -> Result<bool, AlgebraError> {
    let d = algebra.domain();
    let n = algebra.dim();
    if basis.cols() == 0 {
        return Ok(true);
    }
    let cols: Vec<Vec<_>> =
        (0..basis.cols()).map(|j| (0..n).map(|r| basis.get(r, j)).collect()).collect();
    let mut ech = RowEchelon::new(d, n);
    ech.insert_columns(basis);
    for i in 0..n {
        let b = algebra.basis_vector(i);
        for v in &cols {
            if !ech.contains(&algebra.multiply(&b, v)) || !ech.contains(&algebra.multiply(v, &b)) {
                return Ok(false);
            }
        }
    }
    // Power the ideal: V^(k+1) = V^k . V shrinks strictly until zero for a
    // nilpotent ideal, and stalls at a nonzero space otherwise.
    let mut power: Vec<Vec<_>> = cols.clone();
    loop {
        let mut next_ech = RowEchelon::new(d, n);
        for w in &power {
            for v in &cols {
                next_ech.insert(&algebra.multiply(w, v));
            }
        }
        if next_ech.rank() == 0 {
            return Ok(true);
        }
        if next_ech.rank() >= power.len() {
            return Ok(false);
        }
        let m = next_ech.basis_columns();
        power = (0..m.cols()).map(|j| (0..n).map(|r| m.get(r, j)).collect()).collect();
    }
}

fn scalar_lift(s: &qhc_linalg::Scalar, p: u64) -> u64 {
    match s {
        qhc_linalg::Scalar::Fp(v) => *v % p,
        _ => unreachable!("prime-field scalar expected"),
    }
}

fn mat_mul_mod(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + aik * b[k * n + j]) % m;
            }
        }
    }
    out
}

fn mat_pow_mod(a: &[u64], n: usize, mut e: u64, m: u64) -> Vec<u64> {
    let mut result = vec![0u64; n * n];
    for i in 0..n {
        result[i * n + i] = 1 % m;
    }
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul_mod(&result, &base, n, m);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul_mod(&base, &base, n, m);
        }
    }
    result
}

/// Columns spanning `rad(A) . M` inside the module's coordinate space.
pub fn radical_of_module(
    module: &Representation,
    radical: &Matrix,
) -> Result<Matrix, AlgebraError> {
    let d = module.domain();
    let mut ech = RowEchelon::new(d, module.dim());
    for j in 0..radical.cols() {
        let r: Vec<_> = (0..radical.rows()).map(|i| radical.get(i, j)).collect();
        let act = module.element_action(&r);
        ech.insert_columns(&act);
    }
    Ok(ech.basis_columns())
}

/// Columns spanning the socle: the elements killed by the whole radical,
/// which is the largest semisimple submodule.
pub fn socle_of_module(
    module: &Representation,
    radical: &Matrix,
) -> Result<Matrix, AlgebraError> {
    let d = module.domain();
    if radical.cols() == 0 {
        return Ok(Matrix::identity(d, module.dim()));
    }
    let mut stacked: Option<Matrix> = None;
    for j in 0..radical.cols() {
        let r: Vec<_> = (0..radical.rows()).map(|i| radical.get(i, j)).collect();
        let act = module.element_action(&r);
        stacked = Some(match stacked {
            None => act,
            Some(s) => s.vstack(&act),
        });
    }
    kernel_columns(&stacked.unwrap())
}

/// Quotient of the algebra by a two-sided ideal spanned by the given
/// columns, together with the projection and a section. The span must be
/// stable under multiplication on both sides.
pub fn algebra_quotient_by_ideal(
    algebra: &Algebra,
    ideal: &Matrix,
) -> Result<(Algebra, Matrix, Matrix), AlgebraError> {
    let d = algebra.domain();
    let n = algebra.dim();
    assert_eq!(ideal.rows(), n, "ideal height mismatch");
    // Two-sided invariance under the generating set.
    let mut ech = RowEchelon::new(d, n);
    ech.insert_columns(ideal);
    for &g in &algebra.generating_set() {
        let lg = algebra.left_mult_matrix(&algebra.basis_vector(g));
        let rg = algebra.right_mult_matrix(&algebra.basis_vector(g));
        for j in 0..ideal.cols() {
            let col: Vec<_> = (0..n).map(|r| ideal.get(r, j)).collect();
            if !ech.contains(&lg.apply(&col)) || !ech.contains(&rg.apply(&col)) {
                return Err(AlgebraError::NotInvariant(
                    "span is not a two-sided ideal".into(),
                ));
            }
        }
    }
    let reg = Representation::regular(algebra);
    let q = crate::module::quotient_representation(algebra, &reg, ideal)?;
    let m = q.representation.dim();
    let labels: Vec<String> = (0..m).map(|i| format!("q{i}")).collect();
    let unit = q.projection.apply(algebra.unit());
    let mut products = Vec::new();
    for i in 0..m {
        for j in 0..m {
            // Multiply representatives, then project.
            let xi = q.section.column(i);
            let xj = q.section.column(j);
            let prod = q.projection.apply(&algebra.multiply(&xi, &xj));
            for (k, c) in prod.iter().enumerate() {
                if !d.is_zero(c) {
                    products.push((i, j, k, c.clone()));
                }
            }
        }
    }
    let quot = Algebra::new(d, labels, unit, products)?;
    quot.verify()?;
    Ok((quot, q.projection, q.section))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{group_algebra_order2, sym3_algebra};
    use qhc_linalg::Scalar;

    #[test]
    fn radical_of_modular_group_algebra_of_order_two() {
        let a = group_algebra_order2("f2");
        let rad = radical_basis(&a).unwrap();
        assert_eq!(rad.cols(), 1);
        // The radical is spanned by 1 + s.
        let d = a.domain();
        let col: Vec<Scalar> = (0..2).map(|r| rad.get(r, 0)).collect();
        assert_eq!(col, vec![d.one(), d.one()]);
        assert!(!is_semisimple(&a).unwrap());
    }

    #[test]
    fn semisimple_group_algebra_has_zero_radical() {
        let a = group_algebra_order2("f5");
        assert_eq!(radical_basis(&a).unwrap().cols(), 0);
        assert!(is_semisimple(&a).unwrap());
        let b = group_algebra_order2("f3");
        assert!(is_semisimple(&b).unwrap());
    }

    #[test]
    fn radical_of_sym3_in_characteristic_two() {
        let a = sym3_algebra("f2");
        let rad = radical_basis(&a).unwrap();
        assert_eq!(rad.cols(), 1);
        // Spanned by the sum of all group elements.
        let d = a.domain();
        let col: Vec<Scalar> = (0..6).map(|r| rad.get(r, 0)).collect();
        assert_eq!(col, vec![d.one(); 6]);
    }

    #[test]
    fn radical_of_sym3_in_characteristic_three() {
        let a = sym3_algebra("f3");
        let rad = radical_basis(&a).unwrap();
        // A/rad has the trivial and sign characters only (the 2-dimensional
        // simple does not survive reduction mod 3): radical dimension 4.
        assert_eq!(rad.cols(), 4);
        // The radical squares into a smaller space but is nonzero.
        let d = a.domain();
        let r0: Vec<Scalar> = (0..6).map(|r| rad.get(r, 0)).collect();
        let sq = a.multiply(&r0, &r0);
        let reg = Representation::regular(&a);
        let rad_m = radical_of_module(&reg, &rad).unwrap();
        assert_eq!(rad_m.cols(), 4);
        let mut ech = RowEchelon::new(d, 6);
        ech.insert_columns(&rad);
        assert!(ech.contains(&sq));
    }

    #[test]
    fn full_matrix_algebra_mod_two_is_semisimple() {
        // Important regression: the plain trace form on 2x2 matrices over
        // F_2 is identically zero, so only the higher p-power conditions
        // certify that the radical vanishes.
        let d = Domain::parse("f2").unwrap();
        let one = d.one();
        let idx = |r: usize, c: usize| r * 2 + c; // e_rc
        let mut products = Vec::new();
        for r in 0..2 {
            for c in 0..2 {
                for c2 in 0..2 {
                    // e_rc * e_cc2 = e_rc2
                    products.push((idx(r, c), idx(c, c2), idx(r, c2), one.clone()));
                }
            }
        }
        let a = Algebra::new(
            d,
            vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
            vec![one.clone(), d.zero(), d.zero(), one.clone()],
            products,
        )
        .unwrap();
        a.verify().unwrap();
        assert_eq!(radical_basis(&a).unwrap().cols(), 0);
    }

    #[test]
    fn triangular_matrices_over_the_rationals() {
        let q = Domain::Rationals;
        let one = q.one();
        let a = Algebra::new(
            q,
            vec!["e11".into(), "e22".into(), "e12".into()],
            vec![one.clone(), one.clone(), q.zero()],
            vec![
                (0, 0, 0, one.clone()),
                (1, 1, 1, one.clone()),
                (0, 2, 2, one.clone()),
                (2, 1, 2, one.clone()),
            ],
        )
        .unwrap();
        let rad = radical_basis(&a).unwrap();
        assert_eq!(rad.cols(), 1);
        let col: Vec<Scalar> = (0..3).map(|r| rad.get(r, 0)).collect();
        assert_eq!(col, vec![q.zero(), q.zero(), q.one()]);
    }

    #[test]
    fn socle_and_radical_of_the_regular_module() {
        let a = group_algebra_order2("f2");
        let reg = Representation::regular(&a);
        let rad = radical_basis(&a).unwrap();
        let rad_m = radical_of_module(&reg, &rad).unwrap();
        let soc = socle_of_module(&reg, &rad).unwrap();
        // For this self-injective algebra both are the line through 1 + s.
        assert_eq!(rad_m.cols(), 1);
        assert_eq!(soc.cols(), 1);
        let d = a.domain();
        let socv: Vec<Scalar> = (0..2).map(|r| soc.get(r, 0)).collect();
        assert_eq!(socv, vec![d.one(), d.one()]);
    }

    #[test]
    fn quotient_by_the_radical_is_semisimple() {
        let a = sym3_algebra("f2");
        let rad = radical_basis(&a).unwrap();
        let (quot, proj, _section) = algebra_quotient_by_ideal(&a, &rad).unwrap();
        assert_eq!(quot.dim(), 5);
        assert!(is_semisimple(&quot).unwrap());
        assert_eq!(proj.rows(), 5);
        // A line that is not an ideal is rejected.
        let d = a.domain();
        let mut line = Matrix::zero(d, 6, 1);
        line.set(1, 0, d.one());
        assert!(matches!(
            algebra_quotient_by_ideal(&a, &line),
            Err(AlgebraError::NotInvariant(_))
        ));
    }
}
