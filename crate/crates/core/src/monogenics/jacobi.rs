//! Jacobi polynomials in homogenized form.

use std::collections::BTreeMap;

use crate::algebra::rational::{factorial, pochhammer};
use crate::algebra::{Rational, SpinorPolynomial};
use crate::error::{Error, Result};

/// A polynomial `sum c_{ab} u^a v^b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bivariate {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl Bivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.coeffs.get(&(a, b)).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.coeffs.iter()
    }

    fn add(&mut self, a: u32, b: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((a, b)).or_insert(Rational::ZERO);
        *e += &c;
        if e.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .map(|(&(a, b), c)| &(c * &u.pow(a)) * &v.pow(b))
            .sum()
    }

    /// Substitutes polynomials for `u` and `v`.
    pub fn substitute(&self, u: &SpinorPolynomial, v: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        let mut acc = SpinorPolynomial::zero(u.dim());
        for (&(a, b), c) in &self.coeffs {
            let t = u.pow(a)?.mul(&v.pow(b)?)?;
            acc.add_scaled(c, &t);
        }
        Ok(acc)
    }
}

/// `v^m P_m^{(alpha, beta)}(u / v)` from the terminating series
/// `P_m(x) = (alpha+1)_m / m! sum_r (-m)_r (m+alpha+beta+1)_r / ((alpha+1)_r r!) ((1-x)/2)^r`
/// with `(1 - x)/2 -> (v - u)/(2v)`. `m = -1` gives zero.
pub fn jacobi_homogenized(m: i64, alpha: &Rational, beta: &Rational) -> Result<Bivariate> {
    if m < 0 {
        return Ok(Bivariate::zero());
    }
    let m = m as u32;
    let a1 = alpha + &Rational::ONE;
    let lead = pochhammer(&a1, m).checked_div(&factorial(m))?;
    let top = &(&Rational::from(m) + alpha) + &(beta + &Rational::ONE);
    let mut out = Bivariate::zero();
    for r in 0..=m {
        let den = pochhammer(&a1, r) * factorial(r);
        if den.is_zero() {
            return Err(Error::VanishingDenominator(format!(
                "(alpha+1)_{r} with alpha = {alpha}"
            )));
        }
        let c = &(&lead * &pochhammer(&-Rational::from(m), r)) * &pochhammer(&top, r);
        let c = c.checked_div(&den)?;
        // ((v - u)/2)^r v^{m-r} = 2^{-r} sum_i C(r,i) (-u)^i v^{r-i} v^{m-r}
        let scale = &c * &Rational::new(1, 1 << r);
        for i in 0..=r {
            let b = Rational::from(crate::algebra::rational::binomial(r as u64, i as u64) as i64);
            let sign = if i % 2 == 0 { Rational::ONE } else { -Rational::ONE };
            out.add(i, m - i, &(&scale * &b) * &sign);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    /// Three-term recurrence for `P_m^{(a,b)}(x)`, an independent route.
    fn jacobi_recurrence(m: u32, a: &Rational, b: &Rational, x: &Rational) -> Rational {
        let one = Rational::ONE;
        let two = q(2, 1);
        let mut p0 = one.clone();
        if m == 0 {
            return p0;
        }
        let mut p1 = &(&(&(a + b) + &two) * x) / &two + (a - b) / two.clone();
        for k in 2..=m {
            let k = Rational::from(k);
            let s = &(a + b) + &(&two * &k);
            let c1 = &(&(&two * &k) * &(&(&k + a) + b)) * &(&s - &two);
            let c2 = &(&s - &one) * &(&(a * a) - &(b * b));
            let c3 = &(&(&s - &one) * &s) * &(&s - &two);
            let c4 = &(&(&two * &(&(&k + a) - &one)) * &(&(&k + b) - &one)) * &s;
            let p2 = &(&(&c2 + &(&c3 * x)) * &p1) - &(&c4 * &p0);
            let p2 = &p2 / &c1;
            p0 = p1;
            p1 = p2;
        }
        p1
    }

    #[test]
    fn low_degree_examples() {
        let a = q(1, 3);
        let b = q(3, 4);
        let p0 = jacobi_homogenized(0, &a, &b).unwrap();
        assert_eq!(p0.eval(&q(5, 7), &q(2, 1)), Rational::ONE);
        let p1 = jacobi_homogenized(1, &a, &b).unwrap();
        assert_eq!(p1.coeff(1, 0), &(&(&a + &b) + &q(2, 1)) / &q(2, 1));
        assert_eq!(p1.coeff(0, 1), &(&a - &b) / &q(2, 1));
        let leg = jacobi_homogenized(2, &Rational::ZERO, &Rational::ZERO).unwrap();
        assert_eq!(leg.coeff(2, 0), q(3, 2));
        assert_eq!(leg.coeff(0, 2), q(-1, 2));
        assert_eq!(leg.coeff(1, 1), Rational::ZERO);
        assert!(jacobi_homogenized(-1, &a, &b).unwrap().is_zero());
    }

    #[test]
    fn matches_recurrence() {
        for (a, b) in [(q(1, 2), q(-1, 3)), (q(7, 3), q(5, 2)), (q(0, 1), q(0, 1))] {
            for m in 0..7 {
                let h = jacobi_homogenized(m, &a, &b).unwrap();
                for x in [q(1, 3), q(-2, 5), q(3, 1)] {
                    assert_eq!(h.eval(&x, &Rational::ONE), jacobi_recurrence(m as u32, &a, &b, &x));
                }
                // homogeneous of degree m
                assert!(h.terms().all(|(&(i, j), _)| i + j == m as u32));
            }
        }
    }

    #[test]
    fn vanishing_denominator_is_rejected() {
        assert!(matches!(
            jacobi_homogenized(3, &q(-2, 1), &q(1, 1)),
            Err(Error::VanishingDenominator(_))
        ));
    }
}
