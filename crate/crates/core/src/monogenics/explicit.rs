//! Closed-form basis functions as products of Jacobi factors.

use super::jacobi::jacobi_homogenized;
use super::label::BasisLabel;
use crate::algebra::rational::{factorial, pochhammer};
use crate::algebra::{Blade, Monomial, ParameterSet, Rational, SpinorPolynomial, Subset};
use crate::error::{Error, Result};

fn var_sq(n: usize, i: usize) -> SpinorPolynomial {
    SpinorPolynomial::basis_element(n, Monomial::one(n).with_exponent(i, 2).unwrap(), Blade::UNIT)
}

/// `|x_{[l]}|^2`.
fn norm2(n: usize, l: usize) -> SpinorPolynomial {
    let mut out = SpinorPolynomial::zero(n);
    for i in 1..=l {
        out.add_scaled(&Rational::ONE, &var_sq(n, i));
    }
    out
}

/// `e_i x_i`.
fn ex(n: usize, i: usize) -> SpinorPolynomial {
    SpinorPolynomial::basis_element(n, Monomial::variable(n, i), Blade::generator(i))
}

/// `x_{[l]} = sum_{i <= l} e_i x_i` as an element of `P ⊗ Cl_n`.
fn vector(n: usize, l: usize) -> SpinorPolynomial {
    let mut out = SpinorPolynomial::zero(n);
    for i in Subset::prefix(l).iter() {
        out.add_scaled(&Rational::ONE, &ex(n, i));
    }
    out
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn positive(x: Rational, what: &str) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::VanishingDenominator(what.to_string()));
    }
    Ok(x)
}

/// `(u, v)` for level `l`: `u = x_l^2 - |x_{[l-1]}|^2`, `v = |x_{[l]}|^2`.
fn uv(n: usize, l: usize) -> (SpinorPolynomial, SpinorPolynomial) {
    (&var_sq(n, l) - &norm2(n, l - 1), norm2(n, l))
}

/// Starting factor in `x_1, x_2` for `j_1`.
fn m_factor(params: &ParameterSet, j1: u32) -> Result<SpinorPolynomial> {
    let n = params.n();
    let (mu1, mu2) = (params.mu_i(1), params.mu_i(2));
    let beta = j1 / 2;
    let (u, v) = uv(n, 2);
    let a2 = mu2 + &half();
    let sign = if beta % 2 == 0 { Rational::ONE } else { -Rational::ONE };
    let pref = sign * factorial(beta) * positive(pochhammer(&a2, beta), "(mu_2 + 1/2)_b")?.recip()?;
    let e21x21 = {
        // e2 e1 x2 x1
        let (s, b) = crate::algebra::blade::clifford_product_of(&[2, 1]);
        SpinorPolynomial::term(
            n,
            Monomial::one(n).with_exponent(1, 1)?.with_exponent(2, 1)?,
            b,
            Rational::from(s),
        )
    };
    let b = beta as i64;
    let out = if j1 % 2 == 0 {
        let main = jacobi_homogenized(b, &(mu1 - &half()), &(mu2 - &half()))?.substitute(&u, &v)?;
        let tail = jacobi_homogenized(b - 1, &(mu1 + &half()), &(mu2 + &half()))?.substitute(&u, &v)?;
        &main - &e21x21.mul(&tail)?
    } else {
        let x1 = SpinorPolynomial::basis_element(n, Monomial::variable(n, 1), Blade::UNIT);
        let main = jacobi_homogenized(b, &(mu1 + &half()), &(mu2 - &half()))?.substitute(&u, &v)?;
        let ratio = (&Rational::from(beta) + &(mu1 + &half())) / (&Rational::from(beta) + &a2);
        let e21x2 = {
            let (s, bl) = crate::algebra::blade::clifford_product_of(&[2, 1]);
            SpinorPolynomial::term(n, Monomial::variable(n, 2), bl, Rational::from(s))
        };
        let tail = jacobi_homogenized(b, &(mu1 - &half()), &(mu2 + &half()))?.substitute(&u, &v)?;
        let mut acc = x1.mul(&main)?;
        acc.add_scaled(&ratio, &e21x2.mul(&tail)?);
        acc
    };
    Ok(out.scale(&pref))
}

/// Level-`l` factor for `j_{l-1}` with `a = |j_{l-2}| + gamma_{[l-1]}`.
fn q_factor(params: &ParameterSet, l: usize, jl: u32, a: &Rational) -> Result<SpinorPolynomial> {
    let n = params.n();
    let mul = params.mu_i(l);
    let beta = jl / 2;
    let b = beta as i64;
    let al = mul + &half();
    let pref = factorial(beta) * positive(pochhammer(&al, beta), "(mu_l + 1/2)_b")?.recip()?;
    let (u, v) = uv(n, l);
    let xv = vector(n, l - 1);
    let elxl = ex(n, l);
    let one = Rational::ONE;
    let out = if jl % 2 == 0 {
        let main = jacobi_homogenized(b, &(a - &one), &(mul - &half()))?.substitute(&u, &v)?;
        let tail = jacobi_homogenized(b - 1, a, &(mul + &half()))?.substitute(&u, &v)?;
        &main - &elxl.mul(&xv)?.mul(&tail)?
    } else {
        let main = jacobi_homogenized(b, a, &(mul - &half()))?.substitute(&u, &v)?;
        let ratio = (&Rational::from(beta) + a) / (&Rational::from(beta) + &al);
        let tail = jacobi_homogenized(b, &(a - &one), &(mul + &half()))?.substitute(&u, &v)?;
        let mut acc = xv.mul(&main)?;
        acc.add_scaled(&-ratio, &elxl.mul(&tail)?);
        acc
    };
    Ok(out.scale(&pref))
}

/// `Q_n ... Q_3 m_{j_1} v_s` from the Jacobi formula.
pub fn explicit_psi(params: &ParameterSet, label: &BasisLabel) -> Result<SpinorPolynomial> {
    let n = params.n();
    if label.index.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: label.index.n() });
    }
    let j = &label.index;
    let mut acc = m_factor(params, j.get(1))?;
    for l in 3..=n {
        let a = &Rational::from(j.partial_sum(l - 2)) + &params.gamma(Subset::prefix(l - 1));
        acc = q_factor(params, l, j.get(l - 1), &a)?.mul(&acc)?;
    }
    acc.clifford_right(label.s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenics::ck::basis_psi;
    use crate::monogenics::label::MultiIndex;

    #[test]
    fn matches_tower_small() {
        let p = ParameterSet::new(vec![Rational::new(1, 2), Rational::new(1, 3), Rational::new(1, 4)]).unwrap();
        for k in 0..=3 {
            for j in MultiIndex::all(3, k) {
                let label = BasisLabel::new(j.clone(), Blade::UNIT);
                let a = basis_psi(&p, &label).unwrap();
                let b = explicit_psi(&p, &label).unwrap();
                assert_eq!(a, b, "{j}");
            }
        }
    }
}
