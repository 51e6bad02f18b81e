//! Smith normal form over the supported domains. Over Z_(p) (a discrete
//! valuation ring) pivots are chosen by minimal p-valuation, so the invariant
//! factors come out as powers of p; over a field the form is diag(1,...,1,0).
//! Unit factors are normalized to 1 and non-unit factors to exact prime
//! powers, with the units folded into the transforms.

use crate::domain::{Domain, Scalar};
use crate::matrix::Matrix;
use crate::LinalgError;

/// Invertible transforms `u * a * v = d` with `d` diagonal and divisibility
/// `d_1 | d_2 | ...` along the diagonal.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub d: Matrix,
    pub u: Matrix,
    pub v: Matrix,
    /// Determinants of the transforms, tracked during elimination; both are
    /// units of the domain.
    pub det_u: Scalar,
    pub det_v: Scalar,
    source: Matrix,
}

/// The isomorphism class of a cokernel over Z_(p): a free part and a list of
/// prime-power torsion factors. Over a field torsion is always empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CokernelInvariants {
    pub free_rank: usize,
    /// Non-unit invariant factors, as normalized prime powers, in divisibility
    /// order.
    pub torsion: Vec<Scalar>,
}

impl CokernelInvariants {
    /// The cokernel vanishes exactly when there is neither free part nor
    /// torsion.
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Smith normal form of `m`.
pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let domain = m.domain();
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = Matrix::identity(domain, rows);
    let mut v = Matrix::identity(domain, cols);
    let mut det_u = domain.one();
    let mut det_v = domain.one();

    let steps = rows.min(cols);
    for k in 0..steps {
        // Deterministic pivot: minimal valuation, ties broken row-major.
        let mut pivot: Option<(u64, usize, usize)> = None;
        for r in k..rows {
            for c in k..cols {
                let e = d.get(r, c);
                if let Some(val) = domain.valuation(&e) {
                    if pivot.map_or(true, |(pv, _, _)| val < pv) {
                        pivot = Some((val, r, c));
                    }
                }
            }
        }
        let Some((_, pr, pc)) = pivot else {
            break; // remaining block is zero
        };
        if pr != k {
            swap_rows(&mut d, k, pr);
            swap_rows(&mut u, k, pr);
            det_u = domain.neg(&det_u);
        }
        if pc != k {
            swap_cols(&mut d, k, pc);
            swap_cols(&mut v, k, pc);
            det_v = domain.neg(&det_v);
        }
        // Normalize the pivot to 1 (unit) or p^e by a unit row scaling.
        let piv = d.get(k, k);
        let target = match domain.valuation(&piv) {
            Some(e) => domain.prime_power(e),
            None => unreachable!("pivot is nonzero"),
        };
        let unit = domain
            .exact_div(&target, &piv)
            .expect("pivot divided by its unit part is a unit");
        if unit != domain.one() {
            scale_row(&mut d, k, &unit, &domain);
            scale_row(&mut u, k, &unit, &domain);
            det_u = domain.mul(&det_u, &unit);
        }
        let piv = d.get(k, k);
        // Clear the pivot column with row operations...
        for r in 0..rows {
            if r == k || d.entry_is_zero(r, k) {
                continue;
            }
            let q = domain
                .exact_div(&d.get(r, k), &piv)
                .expect("minimal-valuation pivot divides every entry");
            row_axpy(&mut d, r, k, &domain.neg(&q), &domain);
            row_axpy(&mut u, r, k, &domain.neg(&q), &domain);
        }
        // ...and the pivot row with column operations.
        for c in 0..cols {
            if c == k || d.entry_is_zero(k, c) {
                continue;
            }
            let q = domain
                .exact_div(&d.get(k, c), &piv)
                .expect("minimal-valuation pivot divides every entry");
            col_axpy(&mut d, c, k, &domain.neg(&q), &domain);
            col_axpy(&mut v, c, k, &domain.neg(&q), &domain);
        }
    }
    SmithForm { d, u, v, det_u, det_v, source: m.clone() }
}

impl SmithForm {
    /// Nonzero diagonal entries in divisibility order.
    pub fn factors(&self) -> Vec<Scalar> {
        let domain = self.d.domain();
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.get(i, i))
            .filter(|s| !domain.is_zero(s))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.factors().len()
    }

    /// Check `u * a * v = d`, unit transform determinants, diagonal shape and
    /// divisibility. Quadratic-cost spot check for large matrices (full
    /// product on everything up to 64 columns, sampled columns beyond).
    pub fn verify(&self) -> Result<(), LinalgError> {
        let domain = self.d.domain();
        let fail = |msg: &str| Err(LinalgError::Internal(format!("smith form: {msg}")));
        if !domain.is_unit(&self.det_u) || !domain.is_unit(&self.det_v) {
            return fail("transform determinant is not a unit");
        }
        for r in 0..self.d.rows() {
            for c in 0..self.d.cols() {
                if r != c && !self.d.entry_is_zero(r, c) {
                    return fail("off-diagonal entry");
                }
            }
        }
        let factors = self.factors();
        for w in factors.windows(2) {
            let va = domain.valuation(&w[0]).unwrap();
            let vb = domain.valuation(&w[1]).unwrap();
            if va > vb {
                return fail("divisibility violated");
            }
        }
        for f in &factors {
            let e = domain.valuation(f).unwrap();
            if *f != domain.prime_power(e) {
                return fail("factor not normalized");
            }
        }
        // Zero diagonal entries must come after all nonzero ones.
        let n = self.d.rows().min(self.d.cols());
        let mut seen_zero = false;
        for i in 0..n {
            if self.d.entry_is_zero(i, i) {
                seen_zero = true;
            } else if seen_zero {
                return fail("zero factor precedes nonzero factor");
            }
        }
        let cols_to_check: Vec<usize> = if self.source.cols() <= 64 {
            (0..self.source.cols()).collect()
        } else {
            // Deterministic sample: endpoints plus a spread.
            let c = self.source.cols();
            (0..8).map(|i| i * (c - 1) / 7).collect()
        };
        for j in cols_to_check {
            let vj = Matrix::from_fn(domain, self.v.rows(), 1, |r, _| self.v.get(r, j));
            let lhs = self.u.mul(&self.source.mul(&vj));
            let rhs = Matrix::from_fn(domain, self.d.rows(), 1, |r, _| self.d.get(r, j));
            if lhs != rhs {
                return fail("u * a * v differs from d");
            }
        }
        Ok(())
    }

    /// Kernel basis of the source matrix as columns; over Z_(p) this basis
    /// spans a saturated (pure) free submodule.
    pub fn kernel(&self) -> Matrix {
        let rank = self.rank();
        let idx: Vec<usize> = (rank..self.v.cols()).collect();
        self.v.select_columns(&idx)
    }

    /// Solve `a * x = b` exactly; `None` when no solution exists over the
    /// domain (including divisibility failures over Z_(p)).
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        let domain = self.d.domain();
        assert_eq!(b.rows(), self.source.rows(), "shape mismatch");
        let ub = self.u.mul(b);
        let n = self.d.rows().min(self.d.cols());
        let mut y = Matrix::zero(domain, self.source.cols(), b.cols());
        for j in 0..b.cols() {
            for r in 0..self.source.rows() {
                let rhs = ub.get(r, j);
                if r >= n || self.d.entry_is_zero(r, r) {
                    if !domain.is_zero(&rhs) {
                        return None;
                    }
                    continue;
                }
                let piv = self.d.get(r, r);
                let q = domain.exact_div(&rhs, &piv)?;
                y.set(r, j, q);
            }
        }
        Some(self.v.mul(&y))
    }

    /// Inverse of a square source matrix; `None` unless all invariant factors
    /// are units.
    pub fn inverse(&self) -> Option<Matrix> {
        let domain = self.d.domain();
        if !self.source.is_square() || self.rank() < self.source.rows() {
            return None;
        }
        let n = self.source.rows();
        let mut dinv = Matrix::zero(domain, n, n);
        for i in 0..n {
            dinv.set(i, i, domain.inv(&self.d.get(i, i))?);
        }
        Some(self.v.mul(&dinv).mul(&self.u))
    }

    /// True when the source is split injective: full column rank with all
    /// invariant factors units, i.e. a direct summand embedding.
    pub fn is_split_injective(&self) -> bool {
        let domain = self.d.domain();
        self.rank() == self.source.cols()
            && self.factors().iter().all(|f| domain.is_unit(f))
    }

    /// A retraction `r` with `r * a = id` when the source is split injective.
    pub fn retraction(&self) -> Option<Matrix> {
        if !self.is_split_injective() {
            return None;
        }
        let domain = self.d.domain();
        let (rows, cols) = (self.source.rows(), self.source.cols());
        let mut dplus = Matrix::zero(domain, cols, rows);
        for i in 0..cols {
            dplus.set(i, i, domain.inv(&self.d.get(i, i))?);
        }
        Some(self.v.mul(&dplus).mul(&self.u))
    }
}

/// Cokernel invariants of `m` as a map into the free module of rank
/// `m.rows()`.
pub fn cokernel_invariants(m: &Matrix) -> CokernelInvariants {
    let snf = smith_normal_form(m);
    let domain = m.domain();
    let factors = snf.factors();
    CokernelInvariants {
        free_rank: m.rows() - factors.len(),
        torsion: factors.into_iter().filter(|f| !domain.is_unit(f)).collect(),
    }
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    for c in 0..m.cols() {
        let x = m.get(a, c);
        let y = m.get(b, c);
        m.set(a, c, y);
        m.set(b, c, x);
    }
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    for r in 0..m.rows() {
        let x = m.get(r, a);
        let y = m.get(r, b);
        m.set(r, a, y);
        m.set(r, b, x);
    }
}

fn scale_row(m: &mut Matrix, r: usize, s: &Scalar, domain: &Domain) {
    for c in 0..m.cols() {
        if !m.entry_is_zero(r, c) {
            let v = domain.mul(&m.get(r, c), s);
            m.set(r, c, v);
        }
    }
}

/// row_r += q * row_k
fn row_axpy(m: &mut Matrix, r: usize, k: usize, q: &Scalar, domain: &Domain) {
    for c in 0..m.cols() {
        if !m.entry_is_zero(k, c) {
            let v = domain.add(&m.get(r, c), &domain.mul(q, &m.get(k, c)));
            m.set(r, c, v);
        }
    }
}

/// col_c += q * col_k
fn col_axpy(m: &mut Matrix, c: usize, k: usize, q: &Scalar, domain: &Domain) {
    for r in 0..m.rows() {
        if !m.entry_is_zero(r, k) {
            let v = domain.add(&m.get(r, c), &domain.mul(q, &m.get(r, k)));
            m.set(r, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> Domain {
        Domain::parse("zloc2").unwrap()
    }

    /// diag(2,3) over Z_(2): 3 is a unit, so the invariant factors are (1, 2).
    #[test]
    fn diag_2_3_over_z2() {
        let m = Matrix::parse(z2(), &[vec!["2", "0"], vec!["0", "3"]]).unwrap();
        let snf = smith_normal_form(&m);
        snf.verify().unwrap();
        let d = z2();
        let f: Vec<String> = snf.factors().iter().map(|s| d.format_scalar(s)).collect();
        assert_eq!(f, vec!["1", "2"]);
    }

    /// [[2,4],[6,8]] over Z_(2) has invariant factors (2, 4): gcd of entries
    /// is 2, determinant is -8 with valuation 3.
    #[test]
    fn two_four_six_eight_over_z2() {
        let m = Matrix::parse(z2(), &[vec!["2", "4"], vec!["6", "8"]]).unwrap();
        let snf = smith_normal_form(&m);
        snf.verify().unwrap();
        let d = z2();
        let f: Vec<String> = snf.factors().iter().map(|s| d.format_scalar(s)).collect();
        assert_eq!(f, vec!["2", "4"]);
    }

    /// diag(1,4) into Z_(2)^3: cokernel is free of rank 1 plus Z/4 torsion.
    #[test]
    fn cokernel_of_diag_1_4_into_rank_3() {
        let m = Matrix::parse(z2(), &[
            vec!["1", "0"],
            vec!["0", "4"],
            vec!["0", "0"],
        ])
        .unwrap();
        let inv = cokernel_invariants(&m);
        assert_eq!(inv.free_rank, 1);
        let d = z2();
        let t: Vec<String> = inv.torsion.iter().map(|s| d.format_scalar(s)).collect();
        assert_eq!(t, vec!["4"]);
        assert!(!inv.is_zero());
    }

    #[test]
    fn zero_cokernel_iff_unimodular_square() {
        let m = Matrix::parse(z2(), &[vec!["1", "2"], vec!["0", "3"]]).unwrap();
        let inv = cokernel_invariants(&m);
        assert!(inv.is_zero());
        let snf = smith_normal_form(&m);
        let minv = snf.inverse().unwrap();
        assert!(m.mul(&minv).is_identity());
    }

    #[test]
    fn solve_respects_integrality() {
        let m = Matrix::parse(z2(), &[vec!["2"]]).unwrap();
        let snf = smith_normal_form(&m);
        // 2x = 2 solvable, 2x = 1 not (1/2 is not 2-integral).
        let b_ok = Matrix::parse(z2(), &[vec!["2"]]).unwrap();
        let b_bad = Matrix::parse(z2(), &[vec!["1"]]).unwrap();
        let x = snf.solve(&b_ok).unwrap();
        assert_eq!(m.mul(&x), b_ok);
        assert!(snf.solve(&b_bad).is_none());
    }

    #[test]
    fn split_injective_retraction() {
        // Columns (1,0,1) and (0,3,1) over Z_(2): unit pivots, split.
        let m = Matrix::parse(z2(), &[
            vec!["1", "0"],
            vec!["0", "3"],
            vec!["1", "1"],
        ])
        .unwrap();
        let snf = smith_normal_form(&m);
        assert!(snf.is_split_injective());
        let r = snf.retraction().unwrap();
        assert!(r.mul(&m).is_identity());
        // Scaling a column by 2 destroys splitness but not injectivity.
        let m2 = Matrix::parse(z2(), &[
            vec!["2", "0"],
            vec!["0", "3"],
            vec!["2", "1"],
        ])
        .unwrap();
        let snf2 = smith_normal_form(&m2);
        assert_eq!(snf2.rank(), 2);
        assert!(!snf2.is_split_injective());
        assert!(snf2.retraction().is_none());
    }

    /// Smith form over a field degenerates to diag(1,...,1,0,...).
    #[test]
    fn field_smith_form() {
        let f5 = Domain::parse("f5").unwrap();
        let m = Matrix::parse(f5, &[vec!["2", "4"], vec!["1", "2"]]).unwrap();
        let snf = smith_normal_form(&m);
        snf.verify().unwrap();
        assert_eq!(snf.rank(), 1);
        assert_eq!(snf.factors(), vec![f5.one()]);
    }

    #[test]
    fn kernel_is_annihilated_and_saturated() {
        let m = Matrix::parse(z2(), &[vec!["2", "4"], vec!["1", "2"]]).unwrap();
        let snf = smith_normal_form(&m);
        let k = snf.kernel();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        // Saturated: the kernel generator has a unit coordinate.
        let d = z2();
        assert!((0..2).any(|r| d.is_unit(&k.get(r, 0))));
    }
}
