//! Basis blades of the negative-signature Clifford algebra.

use std::cmp::Ordering;
use std::fmt;

use super::MAX_DIM;
use crate::error::{Error, Result};

/// A product `e_{i1} ... e_{im}` with `i1 < ... < im`, stored as a bitmask
/// (bit `i-1` set for `e_i`). The empty mask is the algebra unit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(i: usize) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&i));
        Blade(1 << (i - 1))
    }

    /// Canonical blade from an index list. Repeated or unordered indices are
    /// rejected; use [`clifford_product_of`] to multiply arbitrary words.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_DIM });
            }
            if i <= last {
                return Err(Error::Structure(format!(
                    "blade indices must be strictly increasing: {indices:?}"
                )));
            }
            last = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    /// Highest generator index used, 0 for the unit.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=32usize).filter(move |i| mask & (1 << (i - 1)) != 0)
    }

    /// Every blade over `n` generators, in canonical order.
    pub fn all(n: usize) -> Vec<Blade> {
        let mut out: Vec<Blade> = (0..(1u32 << n)).map(Blade).collect();
        out.sort();
        out
    }

    pub fn fits(self, n: usize) -> bool {
        self.max_index() <= n
    }

    /// Image under the generator relabelling `e_i -> e_{perm[i-1]}`,
    /// re-canonicalized. Returns the reordering sign.
    pub fn permuted(self, perm: &[usize]) -> (i32, Blade) {
        let mut sign = 1;
        let mut acc = Blade::UNIT;
        for i in self.indices() {
            let (s, b) = blade_mul(acc, Blade::generator(perm[i - 1]));
            sign *= s;
            acc = b;
        }
        (sign, acc)
    }

    /// Canonical serialization: space separated indices, empty for the unit.
    pub fn to_index_string(self) -> String {
        self.indices()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Geometric product of two blades under `{e_i, e_j} = -2 delta_ij`.
///
/// The sign collects one factor `-1` per transposition needed to sort the
/// concatenated word and one per contracted pair `e_i e_i = -1`.
pub fn blade_mul(a: Blade, b: Blade) -> (i32, Blade) {
    let mut swaps = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        // generators of `a` with a larger index must hop over e_j
        swaps += (a.0 >> (j + 1)).count_ones();
    }
    swaps += (a.0 & b.0).count_ones();
    let sign = if swaps % 2 == 0 { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// Checked version of [`blade_mul`] for blades declared over dimension `n`.
pub fn blade_mul_in(n: usize, a: Blade, b: Blade) -> Result<(i32, Blade)> {
    for x in [a, b] {
        if !x.fits(n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.max_index(),
            });
        }
    }
    Ok(blade_mul(a, b))
}

/// Product of an arbitrary word of generators, e.g. `[2, 1]` for `e2 e1`.
pub fn clifford_product_of(word: &[usize]) -> (i32, Blade) {
    word.iter().fold((1, Blade::UNIT), |(s, acc), &i| {
        let (t, b) = blade_mul(acc, Blade::generator(i));
        (s * t, b)
    })
}

impl Ord for Blade {
    /// Lexicographic order of the sorted index sequences: `1 < e1 < e1e2 < e2`.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (ia, ib) = (a.trailing_zeros(), b.trailing_zeros());
            if ia != ib {
                return ia.cmp(&ib);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
