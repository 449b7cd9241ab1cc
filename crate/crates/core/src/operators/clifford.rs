//! Named operators of the Clifford realization.

use super::expr::{commutator, OperatorExpr};
use crate::algebra::{Blade, ParameterSet, Rational, Subset};

/// `T_i = ∂_i + mu_i (1 - r_i) / x_i`.
pub fn dunkl_t(params: &ParameterSet, i: usize) -> OperatorExpr {
    let mu = params.mu_i(i).clone();
    if mu.is_zero() {
        return OperatorExpr::Partial(i);
    }
    OperatorExpr::Partial(i) + OperatorExpr::ReflectionQuotient(i).scaled(mu)
}

fn e(i: usize) -> OperatorExpr {
    OperatorExpr::CliffordLeft(Blade::generator(i))
}

/// `D_A = sum_{i in A} e_i T_i`.
pub fn dirac_d(params: &ParameterSet, a: Subset) -> OperatorExpr {
    OperatorExpr::sum(a.iter().map(|i| e(i) * dunkl_t(params, i)))
}

/// `x_A = sum_{i in A} e_i x_i`.
pub fn position_x(a: Subset) -> OperatorExpr {
    OperatorExpr::sum(a.iter().map(|i| e(i) * OperatorExpr::MulCoord(i)))
}

pub fn euler(a: Subset) -> OperatorExpr {
    OperatorExpr::sum(a.iter().map(|i| OperatorExpr::MulCoord(i) * OperatorExpr::Partial(i)))
}

/// `E_A + gamma_A`.
pub fn euler_shifted(params: &ParameterSet, a: Subset) -> OperatorExpr {
    euler(a) + OperatorExpr::scalar(params.gamma(a))
}

pub fn laplace(params: &ParameterSet, a: Subset) -> OperatorExpr {
    OperatorExpr::sum(a.iter().map(|i| dunkl_t(params, i).square()))
}

pub fn norm2(a: Subset) -> OperatorExpr {
    OperatorExpr::sum(a.iter().map(|i| OperatorExpr::MulCoord(i).square()))
}

/// `prod_{i in A} r_i`.
pub fn reflections(a: Subset) -> OperatorExpr {
    OperatorExpr::product(a.iter().map(OperatorExpr::Reflect))
}

/// `S_A = ([x_A, D_A] - 1) / 2`.
pub fn scasimir(params: &ParameterSet, a: Subset) -> OperatorExpr {
    let half = Rational::new(1, 2);
    (commutator(&position_x(a), &dirac_d(params, a)) - OperatorExpr::Identity).scaled(half)
}

/// `Gamma_A = S_A prod_{i in A} r_i`, as a memoizable named node.
pub fn gamma(params: &ParameterSet, a: Subset) -> OperatorExpr {
    OperatorExpr::named(format!("G{a}"), scasimir(params, a) * reflections(a))
}

/// `M_ij = e_i e_j (x_i T_j - x_j T_i)`.
pub fn m_ij(params: &ParameterSet, i: usize, j: usize) -> OperatorExpr {
    let inner = OperatorExpr::MulCoord(i) * dunkl_t(params, j)
        - OperatorExpr::MulCoord(j) * dunkl_t(params, i);
    e(i) * e(j) * inner
}

/// `(sum_{i<j in A} M_ij + (|A|-1)/2 + sum_{k in A} mu_k r_k) prod_{i in A} r_i`.
pub fn gamma_explicit(params: &ParameterSet, a: Subset) -> OperatorExpr {
    let mut terms: Vec<OperatorExpr> = a.pairs().into_iter().map(|(i, j)| m_ij(params, i, j)).collect();
    terms.push(OperatorExpr::scalar(Rational::new(a.len() as i64 - 1, 2)));
    for k in a.iter() {
        terms.push(OperatorExpr::Reflect(k).scaled(params.mu_i(k).clone()));
    }
    OperatorExpr::sum(terms) * reflections(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, SpinorPolynomial};

    fn params() -> ParameterSet {
        ParameterSet::from_strs(&["1/2", "1/3", "1/4"]).unwrap()
    }

    fn mono(exps: &[u32], blade: Blade) -> SpinorPolynomial {
        SpinorPolynomial::basis_element(exps.len(), Monomial::from_exponents(exps).unwrap(), blade)
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn dunkl_examples() {
        let p = params();
        let t1 = dunkl_t(&p, 1);
        // 1 + 2 mu_1 = 2
        assert_eq!(t1.apply(&mono(&[1, 0, 0], Blade::UNIT)).unwrap(), mono(&[0, 0, 0], Blade::UNIT).scale(&q(2, 1)));
        assert_eq!(t1.apply(&mono(&[2, 0, 0], Blade::UNIT)).unwrap(), mono(&[1, 0, 0], Blade::UNIT).scale(&q(2, 1)));
        assert!(t1.apply(&mono(&[0, 1, 0], Blade::UNIT)).unwrap().is_zero());
        // x1^3: 3 x1^2 + 2 mu_1 x1^2
        assert_eq!(t1.apply(&mono(&[3, 0, 0], Blade::UNIT)).unwrap(), mono(&[2, 0, 0], Blade::UNIT).scale(&q(4, 1)));
    }

    #[test]
    fn dirac_and_position_examples() {
        let p = params();
        assert_eq!(
            dirac_d(&p, Subset::singleton(1)).apply(&mono(&[1, 0, 0], Blade::UNIT)).unwrap(),
            mono(&[0, 0, 0], Blade::generator(1)).scale(&q(2, 1))
        );
        let one = SpinorPolynomial::one(3);
        assert_eq!(
            position_x(Subset::prefix(2)).apply(&one).unwrap(),
            &mono(&[1, 0, 0], Blade::generator(1)) + &mono(&[0, 1, 0], Blade::generator(2))
        );
        assert!(dirac_d(&p, Subset::EMPTY).apply(&mono(&[1, 2, 0], Blade::UNIT)).unwrap().is_zero());
    }

    #[test]
    fn euler_laplace_norm_examples() {
        let p = params();
        let m = mono(&[1, 2, 0], Blade::UNIT);
        assert_eq!(euler(Subset::prefix(2)).apply(&m).unwrap(), m.scale(&q(3, 1)));
        // T1^2 x1^2 = T1 (2 x1) = 2 (1 + 2 mu_1)
        assert_eq!(
            laplace(&p, Subset::singleton(1)).apply(&mono(&[2, 0, 0], Blade::UNIT)).unwrap(),
            SpinorPolynomial::one(3).scale(&q(4, 1))
        );
        assert_eq!(
            norm2(Subset::prefix(2)).apply(&SpinorPolynomial::one(3)).unwrap(),
            &mono(&[2, 0, 0], Blade::UNIT) + &mono(&[0, 2, 0], Blade::UNIT)
        );
    }

    #[test]
    fn scasimir_and_gamma_on_constants() {
        let p = params();
        let one = SpinorPolynomial::one(3);
        assert_eq!(scasimir(&p, Subset::EMPTY).apply(&one).unwrap(), one.scale(&q(-1, 2)));
        // S_{1} 1 = (x1 e1 e1 T1 (1) - e1 T1 (e1 x1) - 1)/2 = ((1 + 2 mu_1) - 1)/2 = mu_1
        assert_eq!(scasimir(&p, Subset::singleton(1)).apply(&one).unwrap(), one.scale(&q(1, 2)));
        // S_{12} 1 = gamma_{[2]} - 1/2 = mu_1 + mu_2 + 1/2
        assert_eq!(scasimir(&p, Subset::prefix(2)).apply(&one).unwrap(), one.scale(&q(4, 3)));
        assert_eq!(gamma(&p, Subset::EMPTY).apply(&one).unwrap(), one.scale(&q(-1, 2)));
        assert_eq!(gamma(&p, Subset::prefix(2)).apply(&one).unwrap(), one.scale(&q(4, 3)));
        let m = mono(&[1, 2, 1], Blade::from_mask(0b101));
        for k in 1..=3 {
            assert_eq!(gamma(&p, Subset::singleton(k)).apply(&m).unwrap(), m.scale(p.mu_i(k)));
        }
    }

    #[test]
    fn m12_example() {
        let p = params();
        let out = m_ij(&p, 1, 2).apply(&mono(&[1, 0, 0], Blade::UNIT)).unwrap();
        assert_eq!(out, mono(&[0, 1, 0], Blade::from_mask(0b11)).scale(&q(-2, 1)));
        let empty = gamma_explicit(&p, Subset::EMPTY);
        let m = mono(&[2, 0, 1], Blade::generator(3));
        assert_eq!(empty.apply(&m).unwrap(), m.scale(&q(-1, 2)));
    }
}
