use std::fmt;

use super::MAX_DIM;
use crate::error::{Error, Result};

/// A subset `A ⊆ {1, ..., n}` stored as a bitmask, bit `i-1` for `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_DIM });
            }
            mask |= 1 << (i - 1);
        }
        Ok(Subset(mask))
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << (i - 1))
    }

    pub fn pair(i: usize, j: usize) -> Self {
        Subset((1 << (i - 1)) | (1 << (j - 1)))
    }

    /// `[l] = {1, ..., l}`.
    pub fn prefix(l: usize) -> Self {
        Subset(((1u64 << l) - 1) as u32)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn fits(self, n: usize) -> bool {
        self.max_index() <= n
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=32usize).filter(move |i| mask & (1 << (i - 1)) != 0)
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn difference(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: Subset) -> Subset {
        Subset(self.0 ^ o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | (1 << (i - 1)))
    }

    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << (i - 1)))
    }

    /// Every subset of `[n]` in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..(1u32 << n)).map(Subset)
    }

    /// Every 2-subset `{i < j}` of `self`, lexicographic.
    pub fn pairs(self) -> Vec<(usize, usize)> {
        let idx: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                out.push((i, j));
            }
        }
        out
    }

    /// Image under `i -> perm[i-1]`.
    pub fn permuted(self, perm: &[usize]) -> Subset {
        Subset(self.iter().fold(0, |m, i| m | (1 << (perm[i - 1] - 1))))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
