//! Sphere moments for the weight `prod |x_i|^{2 mu_i}` and the induced
//! inner product on `P ⊗ Cl_n`.

use crate::algebra::{pochhammer, Monomial, ParameterSet, Rational, RationalMatrix, SpinorPolynomial, Subset};
use crate::error::{Error, Result};

/// Normalized sphere moment of `x^m`: zero if some exponent is odd, else
/// `prod_i (mu_i + 1/2)_{c_i} / (gamma_{[n]})_{|c|}` with `m = 2c`.
pub fn moment(params: &ParameterSet, m: &Monomial) -> Rational {
    if !m.is_even() {
        return Rational::ZERO;
    }
    let half = Rational::new(1, 2);
    let mut num = Rational::ONE;
    let mut total = 0;
    for i in 1..=params.n() {
        let c = m.exponent(i) / 2;
        total += c;
        num *= &pochhammer(&(params.mu_i(i) + &half), c);
    }
    num / pochhammer(&params.gamma(Subset::prefix(params.n())), total)
}

/// `<p, q>` with orthonormal blades.
pub fn inner_product(params: &ParameterSet, p: &SpinorPolynomial, q: &SpinorPolynomial) -> Result<Rational> {
    for x in [p, q] {
        if x.dim() != params.n() {
            return Err(Error::DimensionMismatch { expected: params.n(), found: x.dim() });
        }
        if !x.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    if let (Some(a), Some(b)) = (p.homogeneous_degree(), q.homogeneous_degree()) {
        if a != b {
            return Err(Error::DegreeMismatch(a, b));
        }
    }
    let mut acc = Rational::ZERO;
    for ((m1, b1), c1) in p.terms() {
        for ((m2, b2), c2) in q.terms() {
            if b1 != b2 {
                continue;
            }
            let w = moment(params, &m1.mul(m2)?);
            if !w.is_zero() {
                acc += &(&(c1 * c2) * &w);
            }
        }
    }
    Ok(acc)
}

/// `G_{ab} = <f_a, f_b>`.
pub fn gram(params: &ParameterSet, fs: &[SpinorPolynomial]) -> Result<RationalMatrix> {
    let mut g = RationalMatrix::zeros(fs.len(), fs.len());
    for a in 0..fs.len() {
        for b in a..fs.len() {
            let v = inner_product(params, &fs[a], &fs[b])?;
            g.set(b, a, v.clone());
            g.set(a, b, v);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Blade;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn circle_moments() {
        let p = ParameterSet::general(vec![Rational::ZERO, Rational::ZERO]).unwrap();
        let m = |a, b| Monomial::from_exponents(&[a, b]).unwrap();
        assert_eq!(moment(&p, &m(0, 0)), Rational::ONE);
        assert_eq!(moment(&p, &m(2, 0)), q(1, 2));
        assert_eq!(moment(&p, &m(2, 2)), q(1, 8));
        assert_eq!(moment(&p, &m(1, 1)), Rational::ZERO);
    }

    #[test]
    fn degree_zero_blades_orthonormal() {
        let p = ParameterSet::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap();
        for a in Blade::all(3) {
            for b in Blade::all(3) {
                let v = inner_product(&p, &SpinorPolynomial::blade(3, a), &SpinorPolynomial::blade(3, b)).unwrap();
                assert_eq!(v, if a == b { Rational::ONE } else { Rational::ZERO });
            }
        }
        let x1 = SpinorPolynomial::from_parts(&[1, 0, 0], Blade::UNIT, Rational::ONE).unwrap();
        assert_eq!(
            inner_product(&p, &x1, &SpinorPolynomial::one(3)),
            Err(Error::DegreeMismatch(1, 0))
        );
    }

    fn poly_strategy() -> impl Strategy<Value = SpinorPolynomial> {
        proptest::collection::vec((0u32..3, 0u32..8, -5i64..=5), 1..6).prop_map(|items| {
            let mut p = SpinorPolynomial::zero(3);
            for (a, blade, c) in items {
                let m = Monomial::from_exponents(&[a, 2 - a, 0]).unwrap();
                p.add_term(m, Blade::from_mask(blade), Rational::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn left_generators_are_skew(p in poly_strategy(), r in poly_strategy(), i in 1usize..=3) {
            let params = ParameterSet::new(vec![q(1, 2), q(2, 3), q(3, 4)]).unwrap();
            let e = Blade::generator(i);
            let lhs = inner_product(&params, &p.clifford_left(e).unwrap(), &r).unwrap();
            let rhs = inner_product(&params, &p, &r.clifford_left(e).unwrap()).unwrap();
            prop_assert_eq!(lhs, -rhs);
        }

        #[test]
        fn symmetric_and_positive(p in poly_strategy(), r in poly_strategy()) {
            let params = ParameterSet::new(vec![q(1, 5), q(7, 3), q(1, 1)]).unwrap();
            prop_assert_eq!(inner_product(&params, &p, &r).unwrap(), inner_product(&params, &r, &p).unwrap());
            if !p.is_zero() {
                prop_assert!(inner_product(&params, &p, &p).unwrap().is_positive());
            }
        }
    }
}
