//! Permutations of {1, ..., d} in one-line notation, with the utilities the
//! algebra constructions need: composition, inversion counts, reduced words,
//! and the canonical enumeration that indexes group and Hecke bases.

use itertools::Itertools;

/// A permutation stored as its one-line notation with 0-based images:
/// `images[t]` is the image of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Permutation {
        Permutation { images: (0..d).collect() }
    }

    /// The simple transposition swapping `t` and `t + 1` (0-based).
    pub fn transposition(d: usize, t: usize) -> Permutation {
        assert!(t + 1 < d);
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(t, t + 1);
        Permutation { images }
    }

    pub fn from_images(images: Vec<usize>) -> Permutation {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, t: usize) -> usize {
        self.images[t]
    }

    /// Function composition: `(self.compose(other))(t) = self(other(t))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&t| self.images[t]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (t, &x) in self.images.iter().enumerate() {
            images[x] = t;
        }
        Permutation { images }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for a in 0..self.degree() {
            for b in a + 1..self.degree() {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word: generator indices `t` such that the product of the
    /// simple transpositions `s_t`, taken left to right, equals `self`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Sort the one-line notation by adjacent swaps; each swap that
        // repairs a descent contributes one generator. Right-multiplying
        // self by s_t swaps positions t, t + 1, so undoing the sort from
        // the identity spells the word in reverse.
        let mut w = self.images.clone();
        let mut word = Vec::new();
        loop {
            let Some(t) = (0..w.len().saturating_sub(1)).find(|&t| w[t] > w[t + 1]) else {
                break;
            };
            w.swap(t, t + 1);
            word.push(t);
        }
        word.reverse();
        word
    }

    /// One-line notation with 1-based letters, e.g. "231".
    pub fn label(&self) -> String {
        self.images.iter().map(|x| (x + 1).to_string()).collect()
    }
}

/// All permutations of degree `d` in lexicographic order of their one-line
/// notation; the identity comes first. This order indexes every basis.
pub fn all_permutations(d: usize) -> Vec<Permutation> {
    (0..d)
        .permutations(d)
        .map(Permutation::from_images)
        .collect()
}
