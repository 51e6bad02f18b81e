//! On-disk JSON format for algebras. Field order is fixed by the struct
//! declarations below so that serialization is deterministic; coefficients
//! are strings to keep rational and p-local values exact.

use std::path::Path;

use serde::{Deserialize, Serialize};

use qhc_linalg::{Domain, Scalar};

use crate::{Algebra, AlgebraError};

/// Serialized algebra: ring spec, rank, basis labels, unit coordinates, and
/// sparse structure constants `[i, j, k, coeff]` (coefficient of basis
/// element `k` in the product `b_i * b_j`). An optional chain block records
/// a weight poset and idempotent coordinates for layered algebras.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub ring: String,
    pub rank: usize,
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainFile>,
}

/// Weight labels in decreasing order together with the coordinates of one
/// idempotent per weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFile {
    pub weights: Vec<String>,
    pub idempotents: Vec<Vec<String>>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra, chain: Option<ChainFile>) -> AlgebraFile {
        let d = a.domain();
        let mut mult = Vec::new();
        for ((i, j), v) in a.table() {
            for (k, c) in v {
                mult.push((*i as usize, *j as usize, *k as usize, d.format_scalar(c)));
            }
        }
        AlgebraFile {
            ring: d.spec_string(),
            rank: a.dim(),
            labels: a.labels().to_vec(),
            unit: a.unit().iter().map(|s| d.format_scalar(s)).collect(),
            mult,
            chain,
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra, AlgebraError> {
        let d = Domain::parse(&self.ring).map_err(AlgebraError::Linalg)?;
        if self.labels.len() != self.rank {
            return Err(AlgebraError::Format(format!(
                "rank {} disagrees with {} labels",
                self.rank,
                self.labels.len()
            )));
        }
        let unit = parse_vector(d, &self.unit)?;
        let mut products = Vec::new();
        for (i, j, k, c) in &self.mult {
            let c = d.parse_scalar(c).map_err(AlgebraError::Linalg)?;
            products.push((*i, *j, *k, c));
        }
        Algebra::new(d, self.labels.clone(), unit, products)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra serialization");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<AlgebraFile, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Format(e.to_string()))
    }

    pub fn write_file(&self, path: &Path) -> Result<(), AlgebraError> {
        std::fs::write(path, self.to_json()).map_err(|e| AlgebraError::Format(e.to_string()))
    }

    pub fn read_file(path: &Path) -> Result<AlgebraFile, AlgebraError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| AlgebraError::Format(e.to_string()))?;
        AlgebraFile::from_json(&text)
    }
}

pub fn parse_vector(d: Domain, coords: &[String]) -> Result<Vec<Scalar>, AlgebraError> {
    coords
        .iter()
        .map(|s| d.parse_scalar(s).map_err(AlgebraError::Linalg))
        .collect()
}

pub fn format_vector(d: Domain, coords: &[Scalar]) -> Vec<String> {
    coords.iter().map(|s| d.format_scalar(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qhc_linalg::Domain;

    fn sample() -> Algebra {
        let f2 = Domain::parse("f2").unwrap();
        let one = f2.one();
        Algebra::new(
            f2,
            vec!["1".into(), "s".into()],
            vec![one.clone(), f2.zero()],
            vec![
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 0, one),
            ],
        )
        .unwrap()
    }

    #[test]
    fn round_trip_preserves_bytes() {
        let a = sample();
        let chain = ChainFile {
            weights: vec!["top".into(), "bottom".into()],
            idempotents: vec![vec!["1".into(), "0".into()], vec!["0".into(), "1".into()]],
        };
        let file = AlgebraFile::from_algebra(&a, Some(chain));
        let text = file.to_json();
        let parsed = AlgebraFile::from_json(&text).unwrap();
        assert_eq!(parsed.to_json(), text);
        let b = parsed.to_algebra().unwrap();
        b.verify().unwrap();
        assert_eq!(b.dim(), a.dim());
        assert_eq!(b.labels(), a.labels());
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(a.product_basis(i, j), b.product_basis(i, j));
            }
        }
    }

    #[test]
    fn rejects_rank_mismatch() {
        let text = r#"{"ring":"f2","rank":3,"labels":["1","s"],"unit":["1","0"],"mult":[]}"#;
        let file = AlgebraFile::from_json(text).unwrap();
        assert!(matches!(file.to_algebra(), Err(AlgebraError::Format(_))));
    }

    #[test]
    fn chain_block_survives_round_trip() {
        let a = sample();
        let file = AlgebraFile::from_algebra(&a, None);
        assert!(!file.to_json().contains("chain"));
        let chain = ChainFile {
            weights: vec!["w".into()],
            idempotents: vec![vec!["1".into(), "0".into()]],
        };
        let file2 = AlgebraFile::from_algebra(&a, Some(chain.clone()));
        let parsed = AlgebraFile::from_json(&file2.to_json()).unwrap();
        assert_eq!(parsed.chain, Some(chain));
    }
}
