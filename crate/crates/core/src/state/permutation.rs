use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A relabeling of qubits `1..=n`.
///
/// Applied to a state, qubit `q` is moved to position `image(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QubitPermutation {
    // zero-based images
    images: Vec<usize>,
}

impl QubitPermutation {
    pub fn identity(n: usize) -> Self {
        QubitPermutation {
            images: (0..n).collect(),
        }
    }

    /// From one-based images: qubit `q` goes to `images[q - 1]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &label in images {
            if label == 0 || label > n || seen[label - 1] {
                return Err(Error::domain(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[label - 1] = true;
            zero_based.push(label - 1);
        }
        Ok(QubitPermutation { images: zero_based })
    }

    /// The transposition `(i, j)` on `n` qubits; `i == j` gives the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::domain(format!(
                "transposition ({i},{j}) out of range for {n} qubits"
            )));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        QubitPermutation { images }
    }

    /// A random permutation that leaves qubit `fixed` in place.
    pub fn random_fixing<R: Rng + ?Sized>(n: usize, fixed: usize, rng: &mut R) -> Self {
        let mut others: Vec<usize> = (0..n).filter(|&q| q != fixed - 1).collect();
        let mut targets = others.clone();
        targets.shuffle(rng);
        let mut images = vec![fixed - 1; n];
        for (q, t) in others.drain(..).zip(targets) {
            images[q] = t;
        }
        QubitPermutation { images }
    }

    /// Every permutation of `n` qubits, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<QubitPermutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..n).collect();
        loop {
            out.push(QubitPermutation {
                images: images.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| images[i - 1] < images[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| images[j] > images[i - 1]).unwrap();
            images.swap(i - 1, j);
            images[i..].reverse();
        }
        out
    }

    /// Every permutation of `n` qubits that fixes qubit `fixed`.
    pub fn all_fixing(n: usize, fixed: usize) -> Vec<QubitPermutation> {
        Self::all(n)
            .into_iter()
            .filter(|p| p.images[fixed - 1] == fixed - 1)
            .collect()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// One-based image of one-based qubit `q`.
    pub fn image(&self, q: usize) -> usize {
        self.images[q - 1] + 1
    }

    pub(crate) fn images_zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (q, &t) in self.images.iter().enumerate() {
            inv[t] = q;
        }
        QubitPermutation { images: inv }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &QubitPermutation) -> Self {
        assert_eq!(
            self.n(),
            first.n(),
            "composing permutations of different sizes"
        );
        QubitPermutation {
            images: first.images.iter().map(|&q| self.images[q]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(q, &t)| q == t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_images_validates() {
        assert!(QubitPermutation::from_images(&[2, 1, 3]).is_ok());
        assert!(QubitPermutation::from_images(&[2, 2, 3]).is_err());
        assert!(QubitPermutation::from_images(&[0, 1]).is_err());
        assert!(QubitPermutation::from_images(&[1, 4, 2]).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(QubitPermutation::all(4).len(), 24);
        assert_eq!(QubitPermutation::all(5).len(), 120);
        let fixing = QubitPermutation::all_fixing(5, 1);
        assert_eq!(fixing.len(), 24);
        assert!(fixing.iter().all(|p| p.image(1) == 1));
    }

    #[test]
    fn inverse_and_composition() {
        let p = QubitPermutation::from_images(&[3, 1, 4, 2]).unwrap();
        assert!(p.after(&p.inverse()).is_identity());
        assert!(p.inverse().after(&p).is_identity());
        let t = QubitPermutation::transposition(4, 1, 3).unwrap();
        let composed = t.after(&p);
        for q in 1..=4 {
            assert_eq!(composed.image(q), t.image(p.image(q)));
        }
    }

    #[test]
    fn random_fixing_fixes() {
        let mut rng = crate::state::random::rng_from_seed(3);
        for _ in 0..20 {
            let p = QubitPermutation::random_fixing(7, 4, &mut rng);
            assert_eq!(p.image(4), 4);
            assert!(QubitPermutation::from_images(
                &(1..=7).map(|q| p.image(q)).collect::<Vec<_>>()
            )
            .is_ok());
        }
    }
}
