//! Finite-rank associative unital algebras presented by structure constants
//! over an exact coefficient domain. Products are stored sparsely: only
//! basis pairs with a nonzero product appear in the table, which keeps
//! endomorphism-algebra tables compact (most pairs multiply to zero there).

use std::collections::BTreeMap;

use qhc_linalg::{Domain, Matrix, RowEchelon, Scalar};

use crate::AlgebraError;

/// Basis size above which associativity is checked on a deterministic random
/// sample of triples instead of exhaustively (cubic cost).
const FULL_ASSOCIATIVITY_LIMIT: usize = 120;
const SAMPLED_TRIPLES: usize = 4096;

/// An associative unital algebra, free of finite rank over its domain, with
/// multiplication given by structure constants on a labeled basis.
#[derive(Debug, Clone)]
pub struct Algebra {
    domain: Domain,
    labels: Vec<String>,
    unit: Vec<Scalar>,
    /// `(i, j) -> ` sparse coordinates of `b_i * b_j`; absent key means zero.
    table: BTreeMap<(u32, u32), Vec<(u32, Scalar)>>,
}

impl Algebra {
    /// Build an algebra from structure-constant quadruples
    /// `(i, j, k, c)` meaning `b_i * b_j` has coefficient `c` on `b_k`.
    /// Duplicate `(i, j, k)` entries are rejected; zero coefficients are
    /// dropped. Unit laws and associativity are NOT checked here; call
    /// [`Algebra::verify`].
    pub fn new(
        domain: Domain,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        products: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::BadStructure("empty basis".into()));
        }
        {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != dim {
                return Err(AlgebraError::BadStructure("duplicate basis labels".into()));
            }
        }
        if unit.len() != dim {
            return Err(AlgebraError::BadStructure(format!(
                "unit vector has length {} but the basis has {} elements",
                unit.len(),
                dim
            )));
        }
        for s in &unit {
            if !domain.contains(s) {
                return Err(AlgebraError::BadStructure("unit coefficient outside domain".into()));
            }
        }
        let mut table: BTreeMap<(u32, u32), Vec<(u32, Scalar)>> = BTreeMap::new();
        for (i, j, k, c) in products {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::BadStructure(format!(
                    "index ({i}, {j}, {k}) out of range for rank {dim}"
                )));
            }
            if !domain.contains(&c) {
                return Err(AlgebraError::BadStructure(format!(
                    "coefficient at ({i}, {j}, {k}) outside domain"
                )));
            }
            if domain.is_zero(&c) {
                continue;
            }
            let entry = table.entry((i as u32, j as u32)).or_default();
            if entry.iter().any(|(k2, _)| *k2 == k as u32) {
                return Err(AlgebraError::BadStructure(format!(
                    "duplicate structure constant at ({i}, {j}, {k})"
                )));
            }
            entry.push((k as u32, c));
        }
        for v in table.values_mut() {
            v.sort_by_key(|(k, _)| *k);
        }
        Ok(Algebra { domain, labels, unit, table })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coordinates of the multiplicative unit.
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Sparse coordinates of `b_i * b_j` (empty slice when the product is
    /// zero).
    pub fn product_basis(&self, i: usize, j: usize) -> &[(u32, Scalar)] {
        self.table
            .get(&(i as u32, j as u32))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub(crate) fn table(&self) -> &BTreeMap<(u32, u32), Vec<(u32, Scalar)>> {
        &self.table
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.domain.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[i] = self.domain.one();
        v
    }

    /// Product of two elements in basis coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        let d = self.domain;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if d.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if d.is_zero(yj) {
                    continue;
                }
                let xy = d.mul(xi, yj);
                for (k, c) in self.product_basis(i, j) {
                    let k = *k as usize;
                    out[k] = d.add(&out[k], &d.mul(&xy, c));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` (columns: `x * b_j`).
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim());
        let d = self.domain;
        let n = self.dim();
        let mut m = Matrix::zero(d, n, n);
        for (i, xi) in x.iter().enumerate() {
            if d.is_zero(xi) {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.product_basis(i, j) {
                    let k = *k as usize;
                    let v = d.add(&m.get(k, j), &d.mul(xi, c));
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `x` (columns: `b_j * x`).
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim());
        let d = self.domain;
        let n = self.dim();
        let mut m = Matrix::zero(d, n, n);
        for (l, xl) in x.iter().enumerate() {
            if d.is_zero(xl) {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.product_basis(j, l) {
                    let k = *k as usize;
                    let v = d.add(&m.get(k, j), &d.mul(xl, c));
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    pub fn is_idempotent(&self, x: &[Scalar]) -> bool {
        self.multiply(x, x) == x
    }

    /// Check unit laws on every basis element and associativity on all basis
    /// triples (exhaustive up to rank 120, a fixed-seed random sample of
    /// triples beyond that).
    pub fn verify(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for j in 0..n {
            let ej = self.basis_vector(j);
            if self.multiply(&self.unit, &ej) != ej || self.multiply(&ej, &self.unit) != ej {
                return Err(AlgebraError::UnitLaw(j));
            }
        }
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        self.check_triple(i, j, k)?;
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let i = (xorshift(&mut state) % n as u64) as usize;
                let j = (xorshift(&mut state) % n as u64) as usize;
                let k = (xorshift(&mut state) % n as u64) as usize;
                self.check_triple(i, j, k)?;
            }
        }
        Ok(())
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<(), AlgebraError> {
        let d = self.domain;
        // (b_i b_j) b_k via the sparse table only.
        let mut left: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (l, c) in self.product_basis(i, j) {
            for (m, c2) in self.product_basis(*l as usize, k) {
                let add = d.mul(c, c2);
                let e = left.entry(*m).or_insert_with(|| d.zero());
                *e = d.add(e, &add);
            }
        }
        let mut right: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (l, c) in self.product_basis(j, k) {
            for (m, c2) in self.product_basis(i, *l as usize) {
                let add = d.mul(c, c2);
                let e = right.entry(*m).or_insert_with(|| d.zero());
                *e = d.add(e, &add);
            }
        }
        left.retain(|_, v| !d.is_zero(v));
        right.retain(|_, v| !d.is_zero(v));
        if left != right {
            return Err(AlgebraError::NotAssociative(i, j, k));
        }
        Ok(())
    }

    /// The opposite algebra: same basis, products reversed.
    pub fn opposite(&self) -> Algebra {
        let mut table = BTreeMap::new();
        for ((i, j), v) in &self.table {
            table.insert((*j, *i), v.clone());
        }
        Algebra {
            domain: self.domain,
            labels: self.labels.clone(),
            unit: self.unit.clone(),
            table,
        }
    }

    /// The same presentation with coefficients reduced to the residue field.
    /// Identity on prime fields; an error over the rationals.
    pub fn residue_algebra(&self) -> Result<Algebra, AlgebraError> {
        let rd = self.domain.residue_domain()?;
        let unit = self
            .unit
            .iter()
            .map(|s| self.domain.residue(s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut products = Vec::new();
        for ((i, j), v) in &self.table {
            for (k, c) in v {
                products.push((
                    *i as usize,
                    *j as usize,
                    *k as usize,
                    self.domain.residue(c)?,
                ));
            }
        }
        Algebra::new(rd, self.labels.clone(), unit, products)
    }

    /// A small set of basis indices that generate the algebra as a unital
    /// algebra, found greedily. Over Z_(p) generation is decided in the
    /// residue field, which suffices for exact closures downstream.
    pub fn generating_set(&self) -> Vec<usize> {
        let field_alg = if self.domain.is_field() {
            self.clone()
        } else {
            self.residue_algebra()
                .expect("localized integers have a residue field")
        };
        let d = field_alg.domain;
        let n = field_alg.dim();
        let mut gens: Vec<usize> = Vec::new();
        let mut ech = RowEchelon::new(d, n);
        let mut spanning: Vec<Vec<Scalar>> = Vec::new();
        if ech.insert(&field_alg.unit) {
            spanning.push(field_alg.unit.clone());
        }
        for cand in 0..n {
            let e = field_alg.basis_vector(cand);
            if ech.contains(&e) {
                continue;
            }
            gens.push(cand);
            // Close the span under left multiplication by every generator:
            // seed with the new generator and its products with the old span.
            let mut work: Vec<Vec<Scalar>> = vec![e];
            let g_elt = field_alg.basis_vector(cand);
            for s in &spanning {
                work.push(field_alg.multiply(&g_elt, s));
            }
            while let Some(v) = work.pop() {
                if !ech.insert(&v) {
                    continue;
                }
                for &g in &gens {
                    work.push(field_alg.multiply(&field_alg.basis_vector(g), &v));
                }
                spanning.push(v);
            }
        }
        gens
    }
}

pub(crate) fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}
