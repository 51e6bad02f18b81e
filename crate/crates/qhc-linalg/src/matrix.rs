//! Dense matrices over a [`Domain`], stored row-major. Prime-field entries
//! live in machine words; Q and Z_(p) entries are big rationals. All entries
//! of one matrix belong to one domain, checked at the boundaries.

use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

use crate::domain::{Domain, Scalar};
use crate::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Store {
    Fp(Vec<u64>),
    Big(Vec<BigRational>),
}

/// A dense `rows x cols` matrix over an exact coefficient domain, acting on
/// column vectors: `m: R^cols -> R^rows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    domain: Domain,
    rows: usize,
    cols: usize,
    pub(crate) store: Store,
}

impl Matrix {
    pub fn zero(domain: Domain, rows: usize, cols: usize) -> Matrix {
        let store = match domain {
            Domain::PrimeField(_) => Store::Fp(vec![0; rows * cols]),
            _ => Store::Big(vec![BigRational::zero(); rows * cols]),
        };
        Matrix { domain, rows, cols, store }
    }

    pub fn identity(domain: Domain, n: usize) -> Matrix {
        let mut m = Matrix::zero(domain, n, n);
        for i in 0..n {
            m.set(i, i, domain.one());
        }
        m
    }

    pub fn from_fn(
        domain: Domain,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zero(domain, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_rows(domain: Domain, data: &[Vec<Scalar>]) -> Matrix {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix::from_fn(domain, rows, cols, |r, c| data[r][c].clone())
    }

    /// Build from a sparse entry list; unspecified entries are zero.
    pub fn from_entries<I>(domain: Domain, rows: usize, cols: usize, entries: I) -> Matrix
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut m = Matrix::zero(domain, rows, cols);
        for (r, c, s) in entries {
            m.set(r, c, s);
        }
        m
    }

    /// Parse every entry of a string table with the domain's scalar parser.
    pub fn parse(domain: Domain, data: &[Vec<&str>]) -> Result<Matrix, LinalgError> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut m = Matrix::zero(domain, rows, cols);
        for (r, row) in data.iter().enumerate() {
            assert!(row.len() == cols, "ragged rows");
            for (c, text) in row.iter().enumerate() {
                m.set(r, c, domain.parse_scalar(text)?);
            }
        }
        Ok(m)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match &self.store {
            Store::Fp(d) => Scalar::Fp(d[r * self.cols + c]),
            Store::Big(d) => Scalar::Big(d[r * self.cols + c].clone()),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert!(self.domain.contains(&s), "scalar not in matrix domain");
        match (&mut self.store, s) {
            (Store::Fp(d), Scalar::Fp(v)) => d[r * self.cols + c] = v,
            (Store::Big(d), Scalar::Big(v)) => d[r * self.cols + c] = v,
            _ => unreachable!("contains() checked the variant"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Fp(d) => d.iter().all(|&v| v == 0),
            Store::Big(d) => d.iter().all(Zero::is_zero),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.domain, self.rows)
    }

    pub fn entry_is_zero(&self, r: usize, c: usize) -> bool {
        match &self.store {
            Store::Fp(d) => d[r * self.cols + c] == 0,
            Store::Big(d) => d[r * self.cols + c].is_zero(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |d, a, b| d.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |d, a, b| d.sub(a, b))
    }

    fn zip(
        &self,
        other: &Matrix,
        f: impl Fn(&Domain, &Scalar, &Scalar) -> Scalar,
    ) -> Matrix {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        Matrix::from_fn(self.domain, self.rows, self.cols, |r, c| {
            f(&self.domain, &self.get(r, c), &other.get(r, c))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.domain, self.rows, self.cols, |r, c| {
            self.domain.neg(&self.get(r, c))
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.domain, self.rows, self.cols, |r, c| {
            self.domain.mul(&self.get(r, c), s)
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let (n, k, m) = (self.rows, self.cols, other.cols);
        match (&self.store, &other.store) {
            (Store::Fp(a), Store::Fp(b)) => {
                let p = self.domain.residue_characteristic() as u128;
                let mut out = vec![0u64; n * m];
                for i in 0..n {
                    for l in 0..k {
                        let al = a[i * k + l];
                        if al == 0 {
                            continue;
                        }
                        let al = al as u128;
                        let lhs = &b[l * m..(l + 1) * m];
                        let dst = &mut out[i * m..(i + 1) * m];
                        for (o, &bv) in dst.iter_mut().zip(lhs) {
                            *o = ((*o as u128 + al * bv as u128) % p) as u64;
                        }
                    }
                }
                Matrix { domain: self.domain, rows: n, cols: m, store: Store::Fp(out) }
            }
            (Store::Big(a), Store::Big(b)) => {
                let mut out = vec![BigRational::zero(); n * m];
                for i in 0..n {
                    for l in 0..k {
                        let al = &a[i * k + l];
                        if al.is_zero() {
                            continue;
                        }
                        for j in 0..m {
                            let bv = &b[l * m + j];
                            if !bv.is_zero() {
                                out[i * m + j] += al * bv;
                            }
                        }
                    }
                }
                Matrix { domain: self.domain, rows: n, cols: m, store: Store::Big(out) }
            }
            _ => unreachable!("stores agree when domains agree"),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.domain, self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Stack side by side: `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        assert_eq!(self.rows, other.rows, "row mismatch");
        Matrix::from_fn(self.domain, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    /// Stack on top of each other: `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        assert_eq!(self.cols, other.cols, "column mismatch");
        Matrix::from_fn(self.domain, self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c)
            } else {
                other.get(r - self.rows, c)
            }
        })
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.domain, self.rows, idx.len(), |r, c| self.get(r, idx[c]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.domain, idx.len(), self.cols, |r, c| self.get(idx[r], c))
    }

    /// Apply `m` to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.domain.zero();
                for c in 0..self.cols {
                    if !self.entry_is_zero(r, c) && !self.domain.is_zero(&v[c]) {
                        acc = self.domain.add(&acc, &self.domain.mul(&self.get(r, c), &v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// When this matrix is a permutation matrix, the map `column -> row` of
    /// its nonzero entries; `None` otherwise.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut perm = vec![usize::MAX; n];
        let mut seen_row = vec![false; n];
        for c in 0..n {
            let mut hit = None;
            for r in 0..n {
                if !self.entry_is_zero(r, c) {
                    if hit.is_some() || self.get(r, c) != self.domain.one() {
                        return None;
                    }
                    hit = Some(r);
                }
            }
            let r = hit?;
            if seen_row[r] {
                return None;
            }
            seen_row[r] = true;
            perm[c] = r;
        }
        Some(perm)
    }

    /// Entrywise reduction of a Z_(p) (or F_p) matrix to the residue field.
    pub fn residue(&self) -> Result<Matrix, LinalgError> {
        let rd = self.domain.residue_domain()?;
        let mut out = Matrix::zero(rd, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.domain.residue(&self.get(r, c))?);
            }
        }
        Ok(out)
    }

    /// Reinterpret an F_p or Z_(p)-integral matrix inside a target domain
    /// with the same characteristic data (used for lifting F_p tables to
    /// Z_(p) is *not* supported; this only moves Q <-> Z_(p) when legal).
    pub fn into_domain(&self, target: Domain) -> Result<Matrix, LinalgError> {
        if target == self.domain {
            return Ok(self.clone());
        }
        let mut out = Matrix::zero(target, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let s = self.get(r, c);
                if !target.contains(&s) {
                    return Err(LinalgError::DomainMismatch(format!(
                        "entry {} does not lie in {}",
                        self.domain.format_scalar(&s),
                        target
                    )));
                }
                out.set(r, c, s);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.domain.format_scalar(&self.get(r, c)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_hand_computation_mod_2() {
        let f2 = Domain::parse("f2").unwrap();
        let a = Matrix::parse(f2, &[vec!["1", "1"], vec!["0", "1"]]).unwrap();
        let b = Matrix::parse(f2, &[vec!["1", "0"], vec!["1", "1"]]).unwrap();
        let ab = a.mul(&b);
        // [[1,1],[0,1]] * [[1,0],[1,1]] = [[2,1],[1,1]] = [[0,1],[1,1]] mod 2
        let expect = Matrix::parse(f2, &[vec!["0", "1"], vec!["1", "1"]]).unwrap();
        assert_eq!(ab, expect);
    }

    #[test]
    fn rational_product_is_exact() {
        let q = Domain::Rationals;
        let a = Matrix::parse(q, &[vec!["1/2", "1/3"]]).unwrap();
        let b = Matrix::parse(q, &[vec!["2"], vec!["3"]]).unwrap();
        let ab = a.mul(&b);
        assert_eq!(ab.get(0, 0), q.parse_scalar("2").unwrap());
    }

    #[test]
    fn permutation_detection() {
        let f3 = Domain::parse("f3").unwrap();
        let p = Matrix::parse(f3, &[
            vec!["0", "1", "0"],
            vec!["0", "0", "1"],
            vec!["1", "0", "0"],
        ])
        .unwrap();
        assert_eq!(p.as_permutation(), Some(vec![2, 0, 1]));
        let np = Matrix::parse(f3, &[vec!["1", "1"], vec!["0", "1"]]).unwrap();
        assert_eq!(np.as_permutation(), None);
    }

    #[test]
    fn residue_of_localized_matrix() {
        let z3 = Domain::parse("zloc3").unwrap();
        let m = Matrix::parse(z3, &[vec!["7/2", "6"]]).unwrap();
        let r = m.residue().unwrap();
        assert_eq!(r.get(0, 0), Scalar::Fp(2));
        assert_eq!(r.get(0, 1), Scalar::Fp(0));
    }
}
