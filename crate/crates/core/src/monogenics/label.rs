use std::fmt;

use serde::Serialize;

use crate::algebra::Blade;
use crate::error::{Error, Result};

/// `j = (j_1, ..., j_{n-1})`; the degree is `k = j_1 + ... + j_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidMultiIndex("empty multi-index".into()));
        }
        Ok(MultiIndex(entries))
    }

    /// Label for `n` variables and degree `k` from `(j_1, ..., j_{n-2})`;
    /// the last entry is `k - sum`.
    pub fn from_head(n: usize, k: u32, head: &[u32]) -> Result<Self> {
        if head.len() + 2 != n {
            return Err(Error::InvalidMultiIndex(format!(
                "expected {} free entries for n = {n}, got {}",
                n.saturating_sub(2),
                head.len()
            )));
        }
        let sum: u32 = head.iter().sum();
        if sum > k {
            return Err(Error::InvalidMultiIndex(format!("{head:?} sums past k = {k}")));
        }
        let mut v = head.to_vec();
        v.push(k - sum);
        Ok(MultiIndex(v))
    }

    /// Every label for `n` variables at degree `k`, lexicographic.
    pub fn all(n: usize, k: u32) -> Vec<MultiIndex> {
        fn rec(slots: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if slots == 1 {
                cur.push(left);
                out.push(MultiIndex(cur.clone()));
                cur.pop();
                return;
            }
            for a in 0..=left {
                cur.push(a);
                rec(slots - 1, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n - 1, k, &mut Vec::new(), &mut out);
        out
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Number of variables this label belongs to.
    pub fn n(&self) -> usize {
        self.0.len() + 1
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `j_i`, 1-based.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `|j_l| = j_1 + ... + j_l`.
    pub fn partial_sum(&self, l: usize) -> u32 {
        self.0[..l].iter().sum()
    }

    /// `j + sign * h_l` where `h_l` has `+1` at position `l` and `-1` at
    /// `l + 1`; `None` if an entry would turn negative.
    pub fn step(&self, l: usize, sign: i32) -> Option<MultiIndex> {
        let mut v = self.0.clone();
        let (up, down) = if sign > 0 { (l, l + 1) } else { (l + 1, l) };
        v[down - 1] = v[down - 1].checked_sub(1)?;
        v[up - 1] += 1;
        Some(MultiIndex(v))
    }

    /// Space separated entries, as used in CSV exports.
    pub fn to_field(&self) -> String {
        self.0.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// A multi-index together with the basis blade `v_s`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisLabel {
    pub index: MultiIndex,
    pub s: Blade,
}

impl BasisLabel {
    pub fn new(index: MultiIndex, s: Blade) -> Self {
        BasisLabel { index, s }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::binomial;

    #[test]
    fn enumeration_counts() {
        for n in 2..=5 {
            for k in 0..=4u32 {
                let all = MultiIndex::all(n, k);
                assert_eq!(all.len() as u64, binomial((n as u64) + k as u64 - 2, k as u64));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|j| j.degree() == k && j.n() == n));
            }
        }
        assert_eq!(MultiIndex::all(3, 2).len(), 3);
    }

    #[test]
    fn steps_and_sums() {
        let j = MultiIndex::from_head(4, 3, &[1, 0]).unwrap();
        assert_eq!(j.entries(), &[1, 0, 2]);
        assert_eq!(j.partial_sum(2), 1);
        assert_eq!(j.step(2, 1).unwrap().entries(), &[1, 1, 1]);
        assert_eq!(j.step(2, -1), None);
        assert_eq!(j.step(1, -1).unwrap().entries(), &[0, 1, 2]);
        assert!(MultiIndex::from_head(4, 1, &[1, 1]).is_err());
        assert!(MultiIndex::from_head(4, 1, &[1]).is_err());
    }
}
