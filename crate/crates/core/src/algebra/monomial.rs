use std::fmt;

use super::MAX_DIM;
use crate::error::{Error, Result};

/// `x_1^{a_1} ... x_n^{a_n}`. Exponents are packed in a fixed array so the
/// type is `Copy` and derived ordering is lexicographic on `(a_1, ..., a_n)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u8; MAX_DIM],
    n: u8,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        debug_assert!(n <= MAX_DIM);
        Monomial {
            exps: [0; MAX_DIM],
            n: n as u8,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.is_empty() || exps.len() > MAX_DIM {
            return Err(Error::UnsupportedDimension(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (slot, &a) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(a).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(m)
    }

    /// `x_i`, 1-based.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i - 1] = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.n as usize]
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1] as u32
    }

    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&a| a as u32).sum()
    }

    pub fn with_exponent(mut self, i: usize, a: u32) -> Result<Self> {
        self.exps[i - 1] = u8::try_from(a).map_err(|_| Error::ExponentOverflow)?;
        Ok(self)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(out)
    }

    /// True when every exponent is even.
    pub fn is_even(&self) -> bool {
        self.exponents().iter().all(|a| a % 2 == 0)
    }

    /// Moves the exponent of `x_i` to position `perm[i-1]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = Monomial::one(self.dim());
        for (i, &a) in self.exponents().iter().enumerate() {
            out.exps[perm[i] - 1] = a;
        }
        out
    }

    /// Every monomial of total degree `k` in `n` variables, lexicographic.
    pub fn all_of_degree(n: usize, k: u32) -> Vec<Monomial> {
        fn rec(pos: usize, n: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if pos + 1 == n {
                cur.exps[pos] = left as u8;
                out.push(*cur);
                return;
            }
            for a in 0..=left {
                cur.exps[pos] = a as u8;
                rec(pos + 1, n, left - a, cur, out);
            }
            cur.exps[pos] = 0;
        }
        let mut out = Vec::new();
        let mut cur = Monomial::one(n);
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    /// `a1,...,an` as used by the canonical text format.
    pub fn to_csv(&self) -> String {
        self.exponents()
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &a) in self.exponents().iter().enumerate() {
            match a {
                0 => continue,
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, a)?,
            }
            any = true;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::binomial;

    #[test]
    fn enumerates_lexicographically() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len() as u64, binomial(4, 2));
        let mut sorted = ms.clone();
        sorted.sort();
        assert_eq!(ms, sorted);
        assert!(ms.iter().all(|m| m.degree() == 2));
    }

    #[test]
    fn permutation_moves_exponents() {
        let m = Monomial::from_exponents(&[2, 0, 1]).unwrap();
        // cycle 1->2->3->1
        assert_eq!(m.permuted(&[2, 3, 1]).exponents(), &[1, 2, 0]);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::from_exponents(&[1, 0, 3]).unwrap().to_string(), "x1x3^3");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }
}
