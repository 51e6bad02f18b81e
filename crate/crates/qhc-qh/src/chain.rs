//! Heredity chains: a strictly ordered weight list, one idempotent per
//! weight, and the ladder of two-sided ideals the idempotents generate.

use qhc_algebra::{format_vector, parse_vector, Algebra, ChainFile};
use qhc_linalg::{Matrix, RowEchelon, Scalar};

use crate::{QhError, Result};

/// A candidate split heredity chain on an algebra: weights listed from the
/// largest downwards, with an idempotent attached to each weight. The
/// induced ideal ladder accumulates the idempotents from the top, so the
/// ideal at position `k` is generated by the idempotents of the `k + 1`
/// largest weights; the ladder must be strictly increasing and exhaust the
/// algebra.
#[derive(Debug, Clone)]
pub struct HeredityChain {
    algebra: Algebra,
    weights: Vec<String>,
    idempotents: Vec<Vec<Scalar>>,
    /// `ideals[k]` is a lattice basis of the two-sided ideal generated by
    /// `idempotents[0..=k]`, as columns in the algebra's coordinates.
    ideals: Vec<Matrix>,
    /// Whether the ladder exhausts the algebra. Prefixes of a chain are
    /// legitimate truncations and need not be complete.
    complete: bool,
}

impl HeredityChain {
    /// Validate weights and idempotents and build the ideal ladder, which
    /// must end at the whole algebra.
    pub fn new(
        algebra: Algebra,
        weights: Vec<String>,
        idempotents: Vec<Vec<Scalar>>,
    ) -> Result<HeredityChain> {
        Self::build(algebra, weights, idempotents, true)
    }

    fn build(
        algebra: Algebra,
        weights: Vec<String>,
        idempotents: Vec<Vec<Scalar>>,
        require_complete: bool,
    ) -> Result<HeredityChain> {
        if weights.is_empty() {
            return Err(QhError::BadChain("no weights".into()));
        }
        if weights.len() != idempotents.len() {
            return Err(QhError::BadChain(format!(
                "{} weights but {} idempotents",
                weights.len(),
                idempotents.len()
            )));
        }
        for (i, w) in weights.iter().enumerate() {
            if weights[..i].contains(w) {
                return Err(QhError::BadChain(format!("repeated weight {w:?}")));
            }
        }
        let n = algebra.dim();
        for (k, e) in idempotents.iter().enumerate() {
            if e.len() != n {
                return Err(QhError::BadChain(format!(
                    "idempotent for weight {:?} has {} coordinates, expected {n}",
                    weights[k],
                    e.len()
                )));
            }
            if !algebra.is_idempotent(e) {
                return Err(QhError::BadChain(format!(
                    "element attached to weight {:?} is not idempotent",
                    weights[k]
                )));
            }
        }
        let mut ideals: Vec<Matrix> = Vec::with_capacity(weights.len());
        for (k, e) in idempotents.iter().enumerate() {
            let mut seeds: Vec<Vec<Scalar>> = vec![e.clone()];
            if let Some(prev) = ideals.last() {
                for j in 0..prev.cols() {
                    seeds.push(prev.column(j));
                }
            }
            let ideal = two_sided_ideal(&algebra, &seeds);
            let prev_rank = ideals.last().map(|m| m.cols()).unwrap_or(0);
            if ideal.cols() <= prev_rank {
                return Err(QhError::BadChain(format!(
                    "ideal ladder does not grow at weight {:?}",
                    weights[k]
                )));
            }
            ideals.push(ideal);
        }
        let top = ideals.last().expect("at least one weight");
        let mut ech = RowEchelon::new(algebra.domain(), n);
        ech.insert_columns(top);
        let complete = ech.contains(algebra.unit());
        if require_complete && !complete {
            return Err(QhError::BadChain(
                "the idempotents do not generate the algebra as an ideal".into(),
            ));
        }
        Ok(HeredityChain { algebra, weights, idempotents, ideals, complete })
    }

    /// Does the ideal ladder exhaust the algebra? False only for proper
    /// prefixes of a chain.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Rebuild a chain from its serialized form.
    pub fn from_chain_file(algebra: &Algebra, file: &ChainFile) -> Result<HeredityChain> {
        let d = algebra.domain();
        let idempotents = file
            .idempotents
            .iter()
            .map(|coords| parse_vector(d, coords))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        HeredityChain::new(algebra.clone(), file.weights.clone(), idempotents)
    }

    /// Serialize the weight labels and idempotent coordinates.
    pub fn to_chain_file(&self) -> ChainFile {
        let d = self.algebra.domain();
        ChainFile {
            weights: self.weights.clone(),
            idempotents: self.idempotents.iter().map(|e| format_vector(d, e)).collect(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Number of weights.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weight labels, largest first.
    pub fn weights(&self) -> &[String] {
        &self.weights
    }

    pub fn weight(&self, k: usize) -> &str {
        &self.weights[k]
    }

    pub fn index_of(&self, weight: &str) -> Option<usize> {
        self.weights.iter().position(|w| w == weight)
    }

    pub fn idempotent(&self, k: usize) -> &[Scalar] {
        &self.idempotents[k]
    }

    /// Lattice basis of the two-sided ideal generated by the idempotents of
    /// the `k + 1` largest weights.
    pub fn ideal_through(&self, k: usize) -> &Matrix {
        &self.ideals[k]
    }

    /// The ideal generated by the weights strictly above position `k`;
    /// `None` at the top of the chain.
    pub fn ideal_above(&self, k: usize) -> Option<&Matrix> {
        if k == 0 {
            None
        } else {
            Some(&self.ideals[k - 1])
        }
    }

    /// The sub-chain consisting of the `len` largest weights; the ideal
    /// ladder is shared, not recomputed.
    pub fn prefix(&self, len: usize) -> HeredityChain {
        assert!(len >= 1 && len <= self.len(), "prefix length out of range");
        HeredityChain {
            algebra: self.algebra.clone(),
            weights: self.weights[..len].to_vec(),
            idempotents: self.idempotents[..len].to_vec(),
            ideals: self.ideals[..len].to_vec(),
            complete: len == self.len() && self.complete,
        }
    }

    /// The same weights and idempotents over the opposite algebra. The
    /// two-sided ideal spans coincide, but they are recomputed so the stored
    /// lattice bases are consistent with the opposite multiplication.
    pub fn opposite(&self) -> Result<HeredityChain> {
        HeredityChain::build(
            self.algebra.opposite(),
            self.weights.clone(),
            self.idempotents.clone(),
            self.complete,
        )
    }

    /// The chain with all coefficients reduced to the residue field.
    pub fn residue(&self) -> Result<HeredityChain> {
        let algebra = self.algebra.residue_algebra()?;
        let d = self.algebra.domain();
        let idempotents = self
            .idempotents
            .iter()
            .map(|e| e.iter().map(|s| d.residue(s)).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()?;
        HeredityChain::build(algebra, self.weights.clone(), idempotents, self.complete)
    }

    /// Are the chain idempotents pairwise orthogonal? Not required in
    /// general, but constructions that provide it (weight idempotents) can
    /// be checked for it.
    pub fn pairwise_orthogonal(&self) -> bool {
        let d = self.algebra.domain();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i == j {
                    continue;
                }
                let p = self.algebra.multiply(&self.idempotents[i], &self.idempotents[j]);
                if p.iter().any(|s| !d.is_zero(s)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Lattice basis of the two-sided ideal generated by the seed vectors:
/// closure under left and right multiplication by the algebra's generating
/// set, re-enqueueing whenever the accumulated lattice grows.
fn two_sided_ideal(algebra: &Algebra, seeds: &[Vec<Scalar>]) -> Matrix {
    let gens = algebra.generating_set();
    let mut mats: Vec<Matrix> = Vec::with_capacity(2 * gens.len());
    for &g in &gens {
        let b = algebra.basis_vector(g);
        mats.push(algebra.left_mult_matrix(&b));
        mats.push(algebra.right_mult_matrix(&b));
    }
    let mut ech = RowEchelon::new(algebra.domain(), algebra.dim());
    let mut work: Vec<Vec<Scalar>> = seeds.to_vec();
    while let Some(v) = work.pop() {
        if !ech.insert(&v) {
            continue;
        }
        for m in &mats {
            work.push(m.apply(&v));
        }
    }
    ech.basis_columns()
}
