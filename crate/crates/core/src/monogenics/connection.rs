//! Overlaps between the sector basis and its image under the cyclic
//! relabelling `pi = (1 2 ... n)`.
//!
//! `pi` maps `M_k` built with the parameters `mu'_i = mu_{pi(i)}` onto
//! `M_k` for `mu`. Applied to the unit sector it lands in the unit sector
//! again, so the permuted basis at fixed `s` is
//! `Phi_{j'} = pi(Psi'_{j'} e_1^{j'_1}) v_s`, a joint eigenvector of the
//! relabelled chain `Gamma_{pi([l])}`.

use super::ck::sector_basis;
use super::inner::gram;
use super::label::MultiIndex;
use super::verify::{eigenvalue, SUITE};
use crate::algebra::{Blade, ParameterSet, RationalMatrix, SpinorPolynomial, Subset};
use crate::checks::{finish_tally, RelationCheck, Tally};
use crate::error::Result;
use crate::operators::{Evaluator, Realization, RealizationKind};

/// `pi(i) = i + 1`, `pi(n) = 1`, as the relabelling array.
pub fn cyclic_permutation(n: usize) -> Vec<usize> {
    (1..=n).map(|i| i % n + 1).collect()
}

pub fn inverse_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p - 1] = i + 1;
    }
    inv
}

/// Simultaneous relabelling of variables and generators; the parameter
/// side is handled by building the input with the relabelled parameters.
pub fn permute_basis(p: &SpinorPolynomial, perm: &[usize]) -> Result<SpinorPolynomial> {
    p.permuted(perm)
}

#[derive(Clone, Debug)]
pub struct ConnectionData {
    pub n: usize,
    pub k: u32,
    pub s: Blade,
    pub labels: Vec<MultiIndex>,
    /// `O[j][j'] = <Psi_j v_s, Phi_{j'} v_s>`.
    pub overlaps: RationalMatrix,
    pub gram_psi: RationalMatrix,
    pub gram_phi: RationalMatrix,
    /// `C = G^{-1} O`, so that `Phi_{j'} = sum_j C[j][j'] Psi_j`.
    pub coefficients: RationalMatrix,
    pub psi: Vec<SpinorPolynomial>,
    pub phi: Vec<SpinorPolynomial>,
}

pub fn connection_matrix(params: &ParameterSet, k: u32, s: Blade) -> Result<ConnectionData> {
    let n = params.n();
    let perm = cyclic_permutation(n);
    let shifted = params.relabelled(&inverse_permutation(&perm))?;
    let mut labels = Vec::new();
    let mut phi = Vec::new();
    for (j, p) in sector_basis(&shifted, k, Blade::UNIT)? {
        labels.push(j);
        phi.push(permute_basis(&p, &perm)?.clifford_right(s)?);
    }
    let psi: Vec<SpinorPolynomial> = sector_basis(params, k, s)?.into_iter().map(|(_, p)| p).collect();
    let gram_psi = gram(params, &psi)?;
    let gram_phi = gram(params, &phi)?;
    let mut overlaps = RationalMatrix::zeros(psi.len(), phi.len());
    for (a, p) in psi.iter().enumerate() {
        for (b, f) in phi.iter().enumerate() {
            overlaps.set(a, b, super::inner::inner_product(params, p, f)?);
        }
    }
    let coefficients = gram_psi.inverse()?.mul(&overlaps)?;
    Ok(ConnectionData {
        n,
        k,
        s,
        labels,
        overlaps,
        gram_psi,
        gram_phi,
        coefficients,
        psi,
        phi,
    })
}

impl ConnectionData {
    /// `C^T G C`, to be compared with `G'`.
    pub fn weighted_gram(&self) -> Result<RationalMatrix> {
        self.coefficients
            .transpose()
            .mul(&self.gram_psi)?
            .mul(&self.coefficients)
    }

    /// Overlap CSV: header `j_row,j_col,numerator,denominator`.
    pub fn overlaps_csv(&self) -> String {
        let mut out = String::from("j_row,j_col,numerator,denominator\n");
        for (a, ja) in self.labels.iter().enumerate() {
            for (b, jb) in self.labels.iter().enumerate() {
                let v = self.overlaps.get(a, b);
                out.push_str(&format!("{},{},{},{}\n", ja.to_field(), jb.to_field(), v.numer(), v.denom()));
            }
        }
        out
    }

    /// Gram diagonals: `j,psi_num,psi_den,phi_num,phi_den`.
    pub fn gram_csv(&self) -> String {
        let mut out = String::from("j,psi_numerator,psi_denominator,phi_numerator,phi_denominator\n");
        for (a, j) in self.labels.iter().enumerate() {
            let (g, h) = (self.gram_psi.get(a, a), self.gram_phi.get(a, a));
            out.push_str(&format!("{},{},{},{},{}\n", j.to_field(), g.numer(), g.denom(), h.numer(), h.denom()));
        }
        out
    }
}

/// `C^T G C = G'` with both Gram matrices diagonal, and each `Phi_{j'}`
/// a joint eigenvector of `Gamma_{pi([l])}` with the relabelled spectrum.
/// Since `G` is positive definite, the Gram identity also certifies that
/// every `Phi_{j'}` lies in the span of the `Psi_j`.
pub fn verify_connection(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    finish_tally(SUITE, "connection unitarity", params, || {
        let mut t = Tally::new(SUITE, "connection unitarity", params)
            .k_max(k)
            .realization(RealizationKind::Clifford);
        let data = connection_matrix(params, k, s)?;
        let w = data.weighted_gram()?;
        t.compare(|| format!("C^T G C at k={k}, s={s}"), &format!("{w:?}"), &format!("{:?}", data.gram_phi));
        t.record(|| "G diagonal".into(), format!("{:?}", data.gram_psi), "diagonal", data.gram_psi.is_diagonal());
        t.record(|| "G' diagonal".into(), format!("{:?}", data.gram_phi), "diagonal", data.gram_phi.is_diagonal());
        let n = params.n();
        let perm = cyclic_permutation(n);
        let shifted = params.relabelled(&inverse_permutation(&perm))?;
        let real = Realization::clifford(params.clone());
        let mut ev = Evaluator::new();
        for l in 2..=n {
            let chain = Subset::prefix(l).permuted(&perm);
            let g = real.gamma(chain);
            for (j, f) in data.labels.iter().zip(&data.phi) {
                let got = ev.apply(&g, f)?;
                let lambda = eigenvalue(&shifted, j, l);
                t.compare(|| format!("G{chain} Phi_{j}, lambda = {lambda}"), &got, &f.scale(&lambda));
            }
        }
        Ok(t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn permutation_examples() {
        let x1e1 = SpinorPolynomial::from_parts(&[1, 0], Blade::generator(1), Rational::ONE).unwrap();
        let x2e2 = SpinorPolynomial::from_parts(&[0, 1], Blade::generator(2), Rational::ONE).unwrap();
        assert_eq!(permute_basis(&x1e1, &[2, 1]).unwrap(), x2e2);
        assert_eq!(permute_basis(&x1e1, &[1, 2]).unwrap(), x1e1);
        let e12 = SpinorPolynomial::blade(2, Blade::from_mask(3));
        assert_eq!(permute_basis(&e12, &[2, 1]).unwrap(), -&e12);
        assert_eq!(cyclic_permutation(3), vec![2, 3, 1]);
        assert_eq!(inverse_permutation(&[2, 3, 1]), vec![3, 1, 2]);
    }

    #[test]
    fn degree_zero_is_trivial() {
        let p = ParameterSet::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap();
        let d = connection_matrix(&p, 0, Blade::generator(2)).unwrap();
        assert_eq!(d.overlaps.rows(), 1);
        assert_eq!(*d.overlaps.get(0, 0), Rational::ONE);
        assert_eq!(d.overlaps_csv(), "j_row,j_col,numerator,denominator\n0 0,0 0,1,1\n");
    }

    #[test]
    fn unitarity_small() {
        let p = ParameterSet::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap();
        for k in 0..=3 {
            for s in [Blade::UNIT, Blade::generator(3)] {
                let row = verify_connection(&p, k, s);
                assert!(row.passed(), "{k} {s} {:?}", row.witness);
            }
        }
        let p4 = ParameterSet::new(vec![q(1, 2), q(2, 3), q(1, 5), q(3, 7)]).unwrap();
        for k in 0..=2 {
            let row = verify_connection(&p4, k, Blade::UNIT);
            assert!(row.passed(), "n=4 {k} {:?}", row.witness);
        }
    }
}
