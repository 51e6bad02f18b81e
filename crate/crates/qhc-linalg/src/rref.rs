//! Reduced row echelon form over fields, with rank, kernel basis, and image
//! basis. Rejects non-field domains: elimination over Z_(p) loses integral
//! structure, so those matrices go through the Smith normal form instead.

use num_rational::BigRational;
use num_traits::Zero;

use crate::domain::{Domain, Scalar};
use crate::matrix::{Matrix, Store};
use crate::LinalgError;

/// The result of Gauss-Jordan elimination over a field.
#[derive(Debug, Clone)]
pub struct Rref {
    /// The reduced matrix: unit pivots, cleared above and below.
    pub reduced: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
    /// Kernel basis as columns: `cols x nullity`, one basis vector per free
    /// column, exact.
    pub kernel: Matrix,
    /// Image basis as columns: the pivot columns of the *original* matrix,
    /// `rows x rank`.
    pub image: Matrix,
}

/// Reduced row echelon form of `m`. Errors with a domain mismatch for Z_(p).
pub fn rref(m: &Matrix) -> Result<Rref, LinalgError> {
    if !m.domain().is_field() {
        return Err(LinalgError::DomainMismatch(format!(
            "row reduction needs a field, got {}",
            m.domain()
        )));
    }
    let (reduced, pivots) = match (&m.store, m.domain()) {
        (Store::Fp(_), Domain::PrimeField(p)) => reduce_fp(m, p),
        _ => reduce_big(m),
    };
    let rank = pivots.len();
    let domain = m.domain();
    let (rows, cols) = (m.rows(), m.cols());
    let _ = rows;

    // Kernel: one basis vector per free column f, with 1 at f and the negated
    // reduced entries at the pivot columns.
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    let free: Vec<usize> = (0..cols).filter(|c| pivot_set[*c].is_none()).collect();
    let mut kernel = Matrix::zero(domain, cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        kernel.set(f, k, domain.one());
        for (row, &col) in pivots.iter().enumerate() {
            let entry = reduced.get(row, f);
            if !domain.is_zero(&entry) {
                kernel.set(col, k, domain.neg(&entry));
            }
        }
    }
    let image = m.select_columns(&pivots);
    Ok(Rref { reduced, rank, pivots, kernel, image })
}

/// Rank of a matrix over a field.
pub fn rank(m: &Matrix) -> Result<usize, LinalgError> {
    Ok(rref(m)?.rank)
}

/// Solve `a * x = b` for a matrix `x` over a field; `None` when inconsistent.
pub fn solve_field(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
    assert_eq!(a.rows(), b.rows(), "shape mismatch");
    let aug = a.hstack(b);
    let r = rref(&aug)?;
    // Any pivot landing in the b-part means inconsistency.
    if r.pivots.iter().any(|&c| c >= a.cols()) {
        return Ok(None);
    }
    let domain = a.domain();
    let mut x = Matrix::zero(domain, a.cols(), b.cols());
    for (row, &col) in r.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(col, j, r.reduced.get(row, a.cols() + j));
        }
    }
    Ok(Some(x))
}

/// Inverse of a square matrix over a field; `None` when singular.
pub fn inverse_field(m: &Matrix) -> Result<Option<Matrix>, LinalgError> {
    if !m.is_square() {
        return Ok(None);
    }
    let id = Matrix::identity(m.domain(), m.rows());
    let r = rref(&m.hstack(&id))?;
    if r.rank < m.rows() || r.pivots.iter().copied().take(m.rows()).ne(0..m.rows()) {
        return Ok(None);
    }
    let idx: Vec<usize> = (m.cols()..2 * m.cols()).collect();
    Ok(Some(r.reduced.select_columns(&idx)))
}

fn reduce_fp(m: &Matrix, p: u64) -> (Matrix, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data = match &m.store {
        Store::Fp(d) => d.clone(),
        _ => unreachable!(),
    };
    let pp = p as u128;
    let inv = |a: u64| -> u64 {
        // Fermat inverse; p is prime.
        let mut acc = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * base as u128) % pp) as u64;
            }
            base = ((base as u128 * base as u128) % pp) as u64;
            e >>= 1;
        }
        acc
    };
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pr != row {
            for c in 0..cols {
                data.swap(row * cols + c, pr * cols + c);
            }
        }
        let piv_inv = inv(data[row * cols + col]);
        for c in col..cols {
            data[row * cols + c] =
                ((data[row * cols + c] as u128 * piv_inv as u128) % pp) as u64;
        }
        for r in 0..rows {
            if r == row {
                continue;
            }
            let factor = data[r * cols + col];
            if factor == 0 {
                continue;
            }
            let f = (p - factor) as u128;
            for c in col..cols {
                let add = (f * data[row * cols + c] as u128) % pp;
                data[r * cols + c] = ((data[r * cols + c] as u128 + add) % pp) as u64;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (
        Matrix::from_entries(
            m.domain(),
            rows,
            cols,
            data.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| {
                (i / cols, i % cols, Scalar::Fp(v))
            }),
        ),
        pivots,
    )
}

fn reduce_big(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data: Vec<BigRational> = match &m.store {
        Store::Big(d) => d.clone(),
        _ => unreachable!(),
    };
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| !data[r * cols + col].is_zero()) else {
            continue;
        };
        if pr != row {
            for c in 0..cols {
                data.swap(row * cols + c, pr * cols + c);
            }
        }
        let piv = data[row * cols + col].clone();
        for c in col..cols {
            if !data[row * cols + c].is_zero() {
                let v = &data[row * cols + c] / &piv;
                data[row * cols + c] = v;
            }
        }
        for r in 0..rows {
            if r == row {
                continue;
            }
            let factor = data[r * cols + col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..cols {
                if !data[row * cols + c].is_zero() {
                    let sub = &factor * &data[row * cols + c];
                    data[r * cols + c] -= sub;
                }
            }
            // The pivot column entry is exactly cleared.
            data[r * cols + col] = BigRational::zero();
        }
        pivots.push(col);
        row += 1;
    }
    let domain = m.domain();
    (
        Matrix::from_entries(
            domain,
            rows,
            cols,
            data.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i / cols, i % cols, Scalar::Big(v))),
        ),
        pivots,
    )
}
