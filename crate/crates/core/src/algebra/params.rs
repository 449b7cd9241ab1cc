use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::rational::Rational;
use super::subset::Subset;
use super::MAX_DIM;
use crate::error::{Error, Result};

/// The dimension `n` and the Dunkl parameters `mu_1, ..., mu_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParameterSet {
    n: usize,
    mu: Vec<Rational>,
}

impl ParameterSet {
    /// Validated constructor: `n >= 3` and every `mu_i > 0`.
    pub fn new(mu: Vec<Rational>) -> Result<Self> {
        if mu.len() < 3 {
            return Err(Error::InvalidParameters(format!(
                "need n >= 3, got n = {}",
                mu.len()
            )));
        }
        if let Some((i, m)) = mu.iter().enumerate().find(|(_, m)| !m.is_positive()) {
            return Err(Error::InvalidParameters(format!(
                "mu_{} = {m} must be positive",
                i + 1
            )));
        }
        Self::general(mu)
    }

    /// Any dimension up to `MAX_DIM` with non-negative parameters. Used for
    /// low-dimensional building blocks (the CK tower starts at two
    /// variables) and for the `mu = 0` harmonic-analysis sanity checks.
    pub fn general(mu: Vec<Rational>) -> Result<Self> {
        if mu.is_empty() || mu.len() > MAX_DIM {
            return Err(Error::UnsupportedDimension(mu.len()));
        }
        if let Some((i, m)) = mu.iter().enumerate().find(|(_, m)| m.signum() < 0) {
            return Err(Error::InvalidParameters(format!(
                "mu_{} = {m} must be non-negative",
                i + 1
            )));
        }
        Ok(ParameterSet { n: mu.len(), mu })
    }

    pub fn from_strs(items: &[&str]) -> Result<Self> {
        let mu = items
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Rational>>>()?;
        Self::new(mu)
    }

    /// Parameters with numerators and denominators uniform in `1..=20`.
    pub fn sample(n: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mu = (0..n)
            .map(|_| {
                let p: i64 = rng.gen_range(1..=20);
                let q: i64 = rng.gen_range(1..=20);
                Rational::new(p, q)
            })
            .collect();
        Self::new(mu)
    }

    /// `count` parameter sets drawn from consecutive seeds.
    pub fn sample_many(n: usize, seed: u64, count: usize) -> Result<Vec<Self>> {
        (0..count as u64).map(|i| Self::sample(n, seed.wrapping_add(i))).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &[Rational] {
        &self.mu
    }

    /// `mu_i`, 1-based.
    pub fn mu_i(&self, i: usize) -> &Rational {
        &self.mu[i - 1]
    }

    /// `gamma_A = |A|/2 + sum_{i in A} mu_i`.
    pub fn gamma(&self, a: Subset) -> Rational {
        let half = Rational::new(a.len() as i64, 2);
        a.iter().fold(half, |acc, i| &acc + self.mu_i(i))
    }

    /// First `m` parameters, for building blocks in fewer variables.
    pub fn truncated(&self, m: usize) -> Result<Self> {
        Self::general(self.mu[..m].to_vec())
    }

    /// Parameters following the relabelling `x_i -> x_{perm[i-1]}`: the new
    /// parameter at position `perm[i-1]` is the old `mu_i`.
    pub fn relabelled(&self, perm: &[usize]) -> Result<Self> {
        super::poly::check_permutation(perm, self.n)?;
        let mut mu = vec![Rational::ZERO; self.n];
        for (i, m) in self.mu.iter().enumerate() {
            mu[perm[i] - 1] = m.clone();
        }
        Ok(ParameterSet { n: self.n, mu })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.mu.iter().map(|m| m.to_string()).collect()
    }
}
