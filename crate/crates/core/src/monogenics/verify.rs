//! Report-row checks for the monogenic basis.

use super::ck::{basis, basis_psi};
use super::explicit::explicit_psi;
use super::inner::gram;
use super::label::{BasisLabel, MultiIndex};
use crate::algebra::rational::{binomial, pochhammer};
use crate::algebra::{Blade, ParameterSet, Rational, RationalMatrix, SpinorPolynomial, Subset};
use crate::checks::{finish_tally, RelationCheck, Tally};
use crate::operators::clifford::{dirac_d, position_x};
use crate::operators::{Evaluator, OperatorExpr, Realization, RealizationKind};

pub const SUITE: &str = "monogenics";

fn sign(e: u32) -> Rational {
    if e % 2 == 0 {
        Rational::ONE
    } else {
        -Rational::ONE
    }
}

/// `lambda_l(j) = (-1)^{|j_{l-1}|} (|j_{l-1}| + gamma_{[l]} - 1/2)` for
/// `1 <= l <= n`; `lambda_1 = mu_1`.
pub fn eigenvalue(params: &ParameterSet, j: &MultiIndex, l: usize) -> Rational {
    let s = j.partial_sum(l - 1);
    sign(s) * (&Rational::from(s) + &(params.gamma(Subset::prefix(l)) - Rational::new(1, 2)))
}

fn clifford_tally(name: impl Into<String>, params: &ParameterSet, k: u32) -> Tally {
    Tally::new(SUITE, name, params)
        .k_max(k)
        .realization(RealizationKind::Clifford)
}

/// `D_{[n]} Psi = 0` for every label and blade at degree `k`.
pub fn verify_kernel(params: &ParameterSet, k: u32) -> RelationCheck {
    finish_tally(SUITE, "kernel of D", params, || {
        let mut t = clifford_tally("kernel of D", params, k);
        let d = dirac_d(params, Subset::prefix(params.n()));
        let mut ev = Evaluator::new();
        for s in Blade::all(params.n()) {
            for (j, psi) in basis(params, k, s)? {
                let out = ev.apply(&d, &psi)?;
                t.compare(|| format!("D Psi_{j} v_{s}"), &out, &SpinorPolynomial::zero(params.n()));
                let deg = psi.homogeneous_degree();
                t.record(|| format!("degree of Psi_{j} v_{s}"), format!("{deg:?}"), k, deg == Some(k));
            }
        }
        Ok(t)
    })
}

/// Label count `C(n+k-2, k)` and full rank at fixed `s`.
pub fn verify_count_rank(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    finish_tally(SUITE, "label count and rank", params, || {
        let mut t = clifford_tally("label count and rank", params, k);
        let fs: Vec<_> = basis(params, k, s)?.into_iter().map(|(_, p)| p).collect();
        let want = binomial(params.n() as u64 + k as u64 - 2, k as u64) as usize;
        t.compare(|| format!("count at k={k}, s={s}"), &fs.len(), &want);
        let rank = RationalMatrix::from_polynomials(&fs).rank();
        t.compare(|| format!("rank at k={k}, s={s}"), &rank, &want);
        Ok(t)
    })
}

/// Exact ratio `a / b` when `a` is a scalar multiple of `b`.
pub fn proportionality(a: &SpinorPolynomial, b: &SpinorPolynomial) -> Option<Rational> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let ((m, bl), cb) = b.terms().next()?;
    let r = a.coefficient(m, *bl) / cb.clone();
    (b.scale(&r) == *a).then_some(r)
}

/// Tower and Jacobi constructions agree term by term.
pub fn verify_cross_formula(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    finish_tally(SUITE, "tower equals Jacobi form", params, || {
        let mut t = clifford_tally("tower equals Jacobi form", params, k);
        for j in MultiIndex::all(params.n(), k) {
            let label = BasisLabel::new(j.clone(), s);
            let tower = basis_psi(params, &label)?;
            let closed = explicit_psi(params, &label)?;
            if tower == closed {
                t.record(String::new, "", "", true);
            } else {
                let ratio = proportionality(&closed, &tower)
                    .map(|r| format!("ratio {r}"))
                    .unwrap_or_else(|| "not proportional".into());
                t.record(|| format!("Psi_{j} v_{s}: {ratio}"), closed, tower, false);
            }
        }
        Ok(t)
    })
}

/// `Gamma_{[l]} Psi_j v_s = lambda_l(j) Psi_j v_s`.
pub fn verify_eigenvalues(params: &ParameterSet, label: &BasisLabel, l: usize) -> RelationCheck {
    let name = format!("eigenvalue of G[{l}]");
    finish_tally(SUITE, name.clone(), params, || {
        let real = Realization::clifford(params.clone());
        let mut t = clifford_tally(name, params, label.index.degree());
        let psi = basis_psi(params, &label)?;
        let mut ev = Evaluator::new();
        let got = ev.apply(&real.gamma(Subset::prefix(l)), &psi)?;
        let lambda = eigenvalue(params, &label.index, l);
        let want = psi.scale(&lambda);
        let j = &label.index;
        t.compare(|| format!("Psi_{j} v_{}, lambda = {lambda}", label.s), &got, &want);
        Ok(t)
    })
}

/// Every `l in 2..=n` and every label at degree `k` with `s = 1`.
pub fn verify_eigenvalue_grid(params: &ParameterSet, k: u32) -> RelationCheck {
    finish_tally(SUITE, "joint eigenvalues", params, || {
        let real = Realization::clifford(params.clone());
        let mut t = clifford_tally("joint eigenvalues", params, k);
        let mut ev = Evaluator::new();
        let gammas: Vec<_> = (2..=params.n()).map(|l| real.gamma(Subset::prefix(l))).collect();
        for (j, psi) in basis(params, k, Blade::UNIT)? {
            for (g, l) in gammas.iter().zip(2..) {
                let got = ev.apply(g, &psi)?;
                let lambda = eigenvalue(params, &j, l);
                t.compare(|| format!("G[{l}] Psi_{j}, lambda = {lambda}"), &got, &psi.scale(&lambda));
            }
        }
        Ok(t)
    })
}

fn falling(top: u32, count: u32) -> Rational {
    (0..count).map(|i| Rational::from(top - i)).product()
}

/// The four power actions of `D = D_{[n]}` on `x^a M_l`, with
/// `x = x_{[n]}`, for monogenics `M_l` of degree `l`.
pub fn verify_lemma13(params: &ParameterSet, l: u32, j: u32, k: u32) -> RelationCheck {
    let name = format!("power actions l={l} j={j} k={k}");
    finish_tally(SUITE, name.clone(), params, || {
        let n = params.n();
        let mut t = clifford_tally(name, params, l + 2 * k + 1);
        let d = dirac_d(params, Subset::prefix(n));
        let x = position_x(Subset::prefix(n));
        let g = params.gamma(Subset::prefix(n));
        let base = &(&Rational::from(k - j + l) + &g);
        let two = |e: u32| Rational::from(1i64 << e);
        // k! / (k-j)!, and k! / (k-j-1)! which vanishes for j = k
        let f0 = falling(k, j);
        let f1 = if j < k { falling(k, j + 1) } else { Rational::ZERO };
        let cases: [(&str, u32, u32, Rational, i64); 4] = [
            ("D^2j x^2k", 2 * j, 2 * k, two(2 * j) * f0.clone() * pochhammer(base, j), (2 * k - 2 * j) as i64),
            ("D^2j+1 x^2k", 2 * j + 1, 2 * k, -(two(2 * j + 1) * f1 * pochhammer(base, j)), 2 * k as i64 - 2 * j as i64 - 1),
            (
                "D^2j x^2k+1",
                2 * j,
                2 * k + 1,
                two(2 * j) * f0.clone() * pochhammer(&(base + &Rational::ONE), j),
                (2 * k - 2 * j + 1) as i64,
            ),
            ("D^2j+1 x^2k+1", 2 * j + 1, 2 * k + 1, -(two(2 * j + 1) * f0 * pochhammer(base, j + 1)), (2 * k - 2 * j) as i64),
        ];
        let mut ev = Evaluator::new();
        for s in [Blade::UNIT, Blade::generator(1), Blade::from_mask((1 << n) - 1)] {
            for (jj, m) in basis(params, l, s)? {
                let mut xs = vec![m.clone()];
                for _ in 0..2 * k + 1 {
                    let next = ev.apply(&x, xs.last().unwrap())?;
                    xs.push(next);
                }
                for (label, dp, xp, coeff, rest) in &cases {
                    let mut lhs = xs[*xp as usize].clone();
                    for _ in 0..*dp {
                        lhs = ev.apply(&d, &lhs)?;
                    }
                    let rhs = if *rest < 0 {
                        SpinorPolynomial::zero(n)
                    } else {
                        xs[*rest as usize].scale(coeff)
                    };
                    t.compare(|| format!("{label} M_{l} at Psi_{jj} v_{s}"), &lhs, &rhs);
                }
            }
        }
        Ok(t)
    })
}

/// Rank of `{x^i Psi_j v_s : i + |j| = k}` equals `dim P_k ⊗ Cl_n`.
pub fn fischer_decompose(params: &ParameterSet, k: u32) -> RelationCheck {
    finish_tally(SUITE, "Fischer decomposition", params, || {
        let n = params.n();
        let mut t = clifford_tally("Fischer decomposition", params, k);
        let x = position_x(Subset::prefix(n));
        let mut ev = Evaluator::new();
        let mut all = Vec::new();
        for s in Blade::all(n) {
            for i in 0..=k {
                for (_, mut p) in basis(params, k - i, s)? {
                    for _ in 0..i {
                        p = ev.apply(&x, &p)?;
                    }
                    all.push(p);
                }
            }
        }
        let want = binomial(n as u64 + k as u64 - 1, k as u64) as usize * (1 << n);
        let rank = RationalMatrix::from_polynomials(&all).rank();
        t.compare(|| format!("rank at k={k}"), &rank, &want);
        t.compare(|| format!("spanning set size at k={k}"), &all.len(), &want);
        Ok(t)
    })
}

/// Gram matrix at fixed `(k, s)` is diagonal with positive diagonal.
pub fn verify_orthogonality(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    finish_tally(SUITE, "orthogonality", params, || {
        let mut t = clifford_tally("orthogonality", params, k);
        let labelled = basis(params, k, s)?;
        let fs: Vec<_> = labelled.iter().map(|(_, p)| p.clone()).collect();
        let g = gram(params, &fs)?;
        for a in 0..fs.len() {
            for b in 0..fs.len() {
                let v = g.get(a, b);
                let ok = if a == b { v.is_positive() } else { v.is_zero() };
                let (ja, jb) = (&labelled[a].0, &labelled[b].0);
                t.record(|| format!("<Psi_{ja}, Psi_{jb}> at s={s}"), v, if a == b { "> 0" } else { "0" }, ok);
            }
        }
        Ok(t)
    })
}

/// For `n = 3`, `omega_3 = 2 mu_3 Gamma_{[3]} + 2 mu_1 mu_2` acts on
/// `M_k` as `2 mu_3 (-1)^k (k + gamma_{[3]} - 1/2) + 2 mu_1 mu_2`.
pub fn verify_omega_scalar(params: &ParameterSet, k: u32) -> RelationCheck {
    finish_tally(SUITE, "omega_3 on monogenics", params, || {
        let mut t = clifford_tally("omega_3 on monogenics", params, k);
        if params.n() != 3 {
            return Ok(t);
        }
        let real = Realization::clifford(params.clone());
        let (m1, m2, m3) = (params.mu_i(1), params.mu_i(2), params.mu_i(3));
        let two = Rational::from(2);
        let omega = real.gamma(Subset::prefix(3)).scaled(&two * m3) + OperatorExpr::scalar(&(&two * m1) * m2);
        let g = params.gamma(Subset::prefix(3));
        let want = &(&(&two * m3) * &(sign(k) * (&Rational::from(k) + &(g - Rational::new(1, 2))))) + &(&(&two * m1) * m2);
        let mut ev = Evaluator::new();
        for s in Blade::all(3) {
            for (j, psi) in basis(params, k, s)? {
                let got = ev.apply(&omega, &psi)?;
                t.compare(|| format!("omega_3 Psi_{j} v_{s}"), &got, &psi.scale(&want));
            }
        }
        Ok(t)
    })
}

/// All monogenic rows for degrees `0..=k_max`.
pub fn monogenic_suite(params: &ParameterSet, k_max: u32) -> Vec<RelationCheck> {
    let mut rows = Vec::new();
    for k in 0..=k_max {
        rows.push(verify_kernel(params, k));
        for s in [Blade::UNIT, Blade::from_mask((1 << params.n()) - 1)] {
            rows.push(verify_count_rank(params, k, s));
            rows.push(verify_cross_formula(params, k, s));
            rows.push(verify_orthogonality(params, k, s));
        }
        rows.push(verify_eigenvalue_grid(params, k));
        if params.n() == 3 {
            rows.push(verify_omega_scalar(params, k));
            rows.push(fischer_decompose(params, k));
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn assert_rows(rows: &[RelationCheck]) {
        for r in rows {
            assert!(r.passed(), "{} {:?} {:?}", r.name, r.witness, r.detail);
        }
    }

    #[test]
    fn suite_n3() {
        let p = ParameterSet::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap();
        assert_rows(&monogenic_suite(&p, 3));
    }

    #[test]
    fn suite_n4() {
        let p = ParameterSet::new(vec![q(1, 2), q(2, 3), q(1, 5), q(3, 7)]).unwrap();
        assert_rows(&monogenic_suite(&p, 2));
    }

    #[test]
    fn power_actions() {
        let p = ParameterSet::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap();
        for l in 0..=2 {
            for k in 0..=2 {
                for j in 0..=k {
                    assert_rows(&[verify_lemma13(&p, l, j, k)]);
                }
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let p = ParameterSet::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap();
        let j = MultiIndex::new(vec![1, 0]).unwrap();
        assert_eq!(eigenvalue(&p, &j, 2), -(q(1, 2) + q(1, 3) + q(3, 2)));
        assert_eq!(eigenvalue(&p, &j, 1), q(1, 2));
        assert!(verify_eigenvalues(&p, &BasisLabel::new(j, Blade::UNIT), 2).passed());
    }

    #[test]
    fn mismatch_is_reported_with_ratio() {
        let a = SpinorPolynomial::from_parts(&[1, 0, 0], Blade::UNIT, q(3, 1)).unwrap();
        let b = SpinorPolynomial::from_parts(&[1, 0, 0], Blade::UNIT, q(2, 1)).unwrap();
        assert_eq!(proportionality(&a, &b), Some(q(3, 2)));
        assert_eq!(proportionality(&a, &SpinorPolynomial::one(3)), None);
    }
}
