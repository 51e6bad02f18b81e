//! Incremental row-echelon accumulator for span and membership queries.
//!
//! Over a field this is plain Gaussian elimination. Over Z_(p) each pivot is
//! kept at the minimal p-valuation seen so far in its column (inserting a
//! vector with a smaller valuation swaps it into the pivot slot), so the
//! stored rows generate exactly the Z_(p)-lattice spanned by everything
//! inserted, and membership is decided by forward exact-division reduction.

use crate::domain::{Domain, Scalar};
use crate::matrix::Matrix;
use crate::LinalgError;

/// A growing echelon basis. Rows are kept with strictly increasing leading
/// columns; leading entries are normalized to p^e (1 over a field).
#[derive(Debug, Clone)]
pub struct RowEchelon {
    domain: Domain,
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(domain: Domain, width: usize) -> RowEchelon {
        RowEchelon { domain, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of independent rows accumulated so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading columns of the stored rows, strictly increasing.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Add `v` to the span. Returns true when the accumulated span grew:
    /// either the rank went up, or (over Z_(p)) a vector of smaller
    /// valuation refined a pivot without changing the rank. A false return
    /// means `v` was already contained.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let domain = self.domain;
        let mut cur: Vec<Scalar> = v.to_vec();
        let mut refined = false;
        loop {
            let Some(lead) = cur.iter().position(|s| !domain.is_zero(s)) else {
                return refined;
            };
            match self.pivots.binary_search(&lead) {
                Ok(i) => {
                    let e_row = domain.valuation(&self.rows[i][lead]).unwrap();
                    let e_cur = domain.valuation(&cur[lead]).unwrap();
                    if e_cur < e_row {
                        normalize(&domain, &mut cur, lead);
                        std::mem::swap(&mut self.rows[i], &mut cur);
                        refined = true;
                    }
                    let q = domain
                        .exact_div(&cur[lead], &self.rows[i][lead])
                        .expect("pivot valuation is minimal in its column");
                    let nq = domain.neg(&q);
                    axpy(&domain, &mut cur, &nq, &self.rows[i]);
                    debug_assert!(domain.is_zero(&cur[lead]));
                }
                Err(i) => {
                    normalize(&domain, &mut cur, lead);
                    self.rows.insert(i, cur);
                    self.pivots.insert(i, lead);
                    return true;
                }
            }
        }
    }

    /// Insert every column of `m` (as a vector of length `m.rows()`).
    pub fn insert_columns(&mut self, m: &Matrix) {
        assert_eq!(m.rows(), self.width, "column height mismatch");
        for j in 0..m.cols() {
            let col: Vec<Scalar> = (0..m.rows()).map(|r| m.get(r, j)).collect();
            self.insert(&col);
        }
    }

    /// Residual of `v` after forward reduction against the stored rows. Zero
    /// exactly when `v` lies in the accumulated span (over Z_(p): the
    /// lattice).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let domain = self.domain;
        let mut cur: Vec<Scalar> = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if domain.is_zero(&cur[p]) {
                continue;
            }
            // Over Z_(p) the division can fail (valuation too small); the
            // entry is then left in place and witnesses non-membership.
            if let Some(q) = domain.exact_div(&cur[p], &self.rows[i][p]) {
                let nq = domain.neg(&q);
                axpy(&domain, &mut cur, &nq, &self.rows[i]);
            }
        }
        cur
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let domain = self.domain;
        self.reduce(v).iter().all(|s| domain.is_zero(s))
    }

    /// The stored rows as a rank x width matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.domain, self.rows.len(), self.width, |r, c| {
            self.rows[r][c].clone()
        })
    }

    /// The stored rows transposed into a width x rank matrix, i.e. a basis of
    /// the span as column vectors.
    pub fn basis_columns(&self) -> Matrix {
        Matrix::from_fn(self.domain, self.width, self.rows.len(), |r, c| {
            self.rows[c][r].clone()
        })
    }
}

/// The unique fully reduced column basis of the column span of `m`:
/// columns ordered by pivot row, every pivot equal to one, and every other
/// entry in a pivot row cleared. Only unit entries qualify as pivots, so
/// over Z_(p) the pivot profile agrees with the profile of the span
/// reduced mod p; as a consequence, two matrices have the same column span
/// exactly when their reduced bases coincide entrywise, and for a
/// saturated lattice the basis commutes with reduction mod p. Fails if
/// columns remain that contain no unit entry, which over Z_(p) means the
/// span is not saturated.
pub fn reduced_column_basis(m: &Matrix) -> Result<Matrix, LinalgError> {
    let d = m.domain();
    let mut cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|c| m.column(c)).collect();
    cols.retain(|c| c.iter().any(|x| !d.is_zero(x)));
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for r in 0..m.rows() {
        let Some(j) = cols.iter().position(|col| d.is_unit(&col[r])) else {
            continue;
        };
        let mut col = cols.swap_remove(j);
        let inv = d.inv(&col[r]).expect("unit entry is invertible");
        if inv != d.one() {
            for x in col.iter_mut() {
                if !d.is_zero(x) {
                    *x = d.mul(x, &inv);
                }
            }
        }
        for other in cols.iter_mut().chain(basis.iter_mut()) {
            if d.is_zero(&other[r]) {
                continue;
            }
            let f = d.neg(&other[r]);
            axpy(&d, other, &f, &col);
        }
        cols.retain(|c| c.iter().any(|x| !d.is_zero(x)));
        basis.push(col);
    }
    if !cols.is_empty() {
        return Err(LinalgError::Internal(format!(
            "{} columns without a unit entry remain; the column span is not saturated",
            cols.len()
        )));
    }
    Ok(Matrix::from_fn(d, m.rows(), basis.len(), |r, c| {
        basis[c][r].clone()
    }))
}

/// Scale the row by a unit so its entry at `lead` becomes p^e (1 over a
/// field).
fn normalize(domain: &Domain, row: &mut [Scalar], lead: usize) {
    let e = domain.valuation(&row[lead]).unwrap();
    let target = domain.prime_power(e);
    let unit = domain
        .exact_div(&target, &row[lead])
        .expect("entry divided by its unit part");
    if unit != domain.one() {
        for s in row.iter_mut() {
            if !domain.is_zero(s) {
                *s = domain.mul(s, &unit);
            }
        }
    }
}

/// row += q * other
fn axpy(domain: &Domain, row: &mut [Scalar], q: &Scalar, other: &[Scalar]) {
    for (s, o) in row.iter_mut().zip(other) {
        if !domain.is_zero(o) {
            *s = domain.add(s, &domain.mul(q, o));
        }
    }
}
