//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

use dunkl_core::algebra::{Blade, Monomial, ParameterSet, Rational, Subset};
use dunkl_core::monogenics::{connection_matrix, inner_product, moment, sector_basis, MultiIndex};
use dunkl_core::operators::clifford::gamma;
use dunkl_core::operators::Evaluator;
use quadrature::double_exponential::integrate;

/// Unnormalized weighted integral of `x^exps` over the positive quadrant
/// of the circle. Even moments are symmetric under every sign flip, so
/// normalizing against the constant removes the reduction to a quadrant.
pub fn circle(mu: &[f64], exps: &[u32]) -> f64 {
    let f = |t: f64| {
        let (c, s) = (t.cos(), t.sin());
        c.powf(2.0 * mu[0] + exps[0] as f64) * s.powf(2.0 * mu[1] + exps[1] as f64)
    };
    integrate(f, 0.0, FRAC_PI_2, 1e-14).integral
}

/// Same on the positive octant of the 2-sphere, `x3 = cos t`,
/// `(x1, x2) = sin t (cos p, sin p)`, `dσ = sin t dt dp`.
pub fn sphere(mu: &[f64], exps: &[u32]) -> f64 {
    let a: Vec<f64> = (0..3).map(|i| 2.0 * mu[i] + exps[i] as f64).collect();
    let inner = |t: f64| {
        let g = |p: f64| p.cos().powf(a[0]) * p.sin().powf(a[1]);
        let phi = integrate(g, 0.0, FRAC_PI_2, 1e-14).integral;
        t.sin().powf(a[0] + a[1] + 1.0) * t.cos().powf(a[2]) * phi
    };
    integrate(inner, 0.0, FRAC_PI_2, 1e-14).integral
}

/// Largest deviation between the closed-form moments of `x^{2c}`,
/// `|c| <= max_half`, and the quadrature values, for `n = 2` or `3`.
pub fn moment_deviation(params: &ParameterSet, max_half: u32) -> f64 {
    let n = params.n();
    let integral: fn(&[f64], &[u32]) -> f64 = if n == 2 { circle } else { sphere };
    let mu: Vec<f64> = params.mu().iter().map(Rational::to_f64).collect();
    let norm = integral(&mu, &vec![0; n]);
    let mut worst = 0.0f64;
    for half in 0..=max_half {
        for m in Monomial::all_of_degree(n, half) {
            let exps: Vec<u32> = m.exponents().iter().map(|&c| 2 * c as u32).collect();
            let exact = moment(params, &Monomial::from_exponents(&exps).unwrap()).to_f64();
            worst = worst.max((exact - integral(&mu, &exps) / norm).abs());
        }
    }
    worst
}

/// Matrix of `Gamma_{23}` on the sector basis at degree `k`, `n = 3`:
/// `Gamma_{23} Psi_j = sum_i m[i][j] Psi_i`. Coefficients come from the
/// Gram projection and the expansion is checked exactly.
pub fn gamma23_matrix(params: &ParameterSet, k: u32) -> (Vec<MultiIndex>, Vec<Vec<Rational>>) {
    let basis = sector_basis(params, k, Blade::UNIT).unwrap();
    let g = gamma(params, Subset::pair(2, 3));
    let mut ev = Evaluator::new();
    let d = basis.len();
    let mut m = vec![vec![Rational::ZERO; d]; d];
    for (c, (_, psi)) in basis.iter().enumerate() {
        let image = ev.apply(&g, psi).unwrap();
        let mut rebuilt = image.scale(&Rational::ZERO);
        for (r, (_, target)) in basis.iter().enumerate() {
            let coeff = inner_product(params, &image, target).unwrap() / inner_product(params, target, target).unwrap();
            rebuilt.add_scaled(&coeff, target);
            m[r][c] = coeff;
        }
        assert_eq!(rebuilt, image, "Gamma_23 leaves the span at column {c}");
    }
    (basis.into_iter().map(|(j, _)| j).collect(), m)
}

pub fn is_tridiagonal(m: &[Vec<Rational>]) -> bool {
    (0..m.len()).all(|r| (0..m.len()).all(|c| r.abs_diff(c) <= 1 || m[r][c] == Rational::ZERO))
}

/// Eigenvectors of a tridiagonal matrix by the three-term recurrence
/// `m[r][r-1] v[r-1] + m[r][r] v[r] + m[r][r+1] v[r+1] = theta v[r]`
/// with `v[0] = 1`. Rows whose superdiagonal vanishes must close the
/// recurrence exactly, otherwise `None`.
pub fn recurrence_vector(m: &[Vec<Rational>], theta: &Rational) -> Option<Vec<Rational>> {
    let d = m.len();
    let mut v = vec![Rational::ONE];
    for r in 0..d {
        let mut acc = &(theta - &m[r][r]) * &v[r];
        if r > 0 {
            acc = &acc - &(&m[r][r - 1] * &v[r - 1]);
        }
        if r + 1 == d {
            return (acc == Rational::ZERO).then_some(v);
        }
        if m[r][r + 1] == Rational::ZERO {
            return None;
        }
        v.push(acc / m[r][r + 1].clone());
    }
    Some(v)
}

/// The spectrum of `Gamma_{23}` that the permuted basis diagonalizes:
/// `(-1)^{j'_1} (j'_1 + mu_2 + mu_3 + 1/2)`.
pub fn gamma23_eigenvalue(params: &ParameterSet, j1: u32) -> Rational {
    let v = &(&Rational::from(j1 as i64) + params.mu_i(2)) + &(params.mu_i(3) + &Rational::new(1, 2));
    if j1 % 2 == 0 {
        v
    } else {
        -v
    }
}

/// True when `a = c b` for a single nonzero `c`.
pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let Some(p) = b.iter().position(|x| *x != Rational::ZERO) else {
        return false;
    };
    if a[p] == Rational::ZERO {
        return false;
    }
    let c = a[p].clone() / b[p].clone();
    a.iter().zip(b).all(|(x, y)| *x == &c * y)
}

/// Compares every column of the exported connection matrix at `(n=3, k)`
/// with the recurrence eigenvector for its eigenvalue. Returns the first
/// mismatch as text.
pub fn connection_against_recurrence(params: &ParameterSet, k: u32) -> Result<usize, String> {
    let (labels, m) = gamma23_matrix(params, k);
    if !is_tridiagonal(&m) {
        return Err(format!("Gamma_23 not tridiagonal at k={k}"));
    }
    let data = connection_matrix(params, k, Blade::UNIT).map_err(|e| e.to_string())?;
    if data.labels != labels {
        return Err("label order differs".into());
    }
    for (col, jp) in data.labels.iter().enumerate() {
        let theta = gamma23_eigenvalue(params, jp.get(1));
        let v = recurrence_vector(&m, &theta).ok_or_else(|| format!("{theta} is not an eigenvalue at k={k}"))?;
        let column: Vec<Rational> = (0..labels.len()).map(|r| data.coefficients.get(r, col).clone()).collect();
        if !proportional(&column, &v) {
            return Err(format!("column {jp} at k={k}: {column:?} vs recurrence {v:?}"));
        }
    }
    Ok(labels.len())
}
