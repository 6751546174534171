//! Permutations of strand positions.
//!
//! A [`Permutation`] records where the strand entering at each top position
//! leaves the braid. Positions are zero-based internally and one-based in
//! every textual rendering.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS);
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// The transposition of positions `i` and `i + 1` (one-based `i`), the
    /// image of the Artin generator of that index.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(
            i >= 1 && i < n,
            "transposition index {i} out of range for {n}"
        );
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The half-twist permutation `p -> n + 1 - p`.
    pub fn reversal(n: usize) -> Self {
        assert!(n <= MAX_STRANDS);
        Permutation {
            images: (0..n as u8).rev().collect(),
        }
    }

    /// Builds a permutation from one-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return Err(Error::IndexOutOfRange {
                index: n as i64,
                n: MAX_STRANDS,
            });
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::Parse {
                    token: img.to_string(),
                    reason: "not a bijection on 1..n".into(),
                });
            }
            seen[img - 1] = true;
            out.push((img - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [u8] {
        &mut self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Zero-based image of zero-based position `p`.
    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    /// One-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// The permutation of the braid `self` followed by `other` (stacked
    /// below it): position `p` goes to `other(self(p))`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *x as usize + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_swaps_neighbours() {
        let t = Permutation::transposition(3, 1);
        assert_eq!(t.images(), vec![2, 1, 3]);
        assert!(t.then(&t).is_identity());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(&[1, 1, 3]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = Permutation::from_images(&[3, 1, 4, 2]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(Permutation::reversal(4).to_string(), "4 3 2 1");
    }
}
