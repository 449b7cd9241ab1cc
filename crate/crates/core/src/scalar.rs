//! The Clifford-free realization: `D = sum T_i R_i`, `X = sum x_i R_i`
//! with `R_i = r_{i+1} ... r_n`.
//!
//! The intermediate operators are `D_A = sum_{i in A} T_i R_i`. The source
//! writes the summand as `D_i R_i` without defining `D_i`; it is read here
//! as the Dunkl operator `T_i`.

use crate::algebra::{ParameterSet, Rational, SpinorPolynomial, Subset};
use crate::operators::clifford::{dunkl_t, reflections};
use crate::operators::{commutator, OperatorExpr};

/// Scalar polynomials are spinor polynomials supported on the unit blade.
pub type ScalarPolynomial = SpinorPolynomial;

pub fn is_scalar(p: &SpinorPolynomial) -> bool {
    p.terms().all(|((_, b), _)| b.is_unit())
}

/// `R_i = prod_{j=i+1}^{n} r_j`.
pub fn reflection_tail(n: usize, i: usize) -> OperatorExpr {
    let mask = Subset::prefix(n).difference(Subset::prefix(i));
    reflections(mask)
}

pub fn scalar_d(params: &ParameterSet, a: Subset) -> OperatorExpr {
    let n = params.n();
    OperatorExpr::sum(a.iter().map(|i| dunkl_t(params, i) * reflection_tail(n, i)))
}

pub fn scalar_x(params: &ParameterSet, a: Subset) -> OperatorExpr {
    let n = params.n();
    OperatorExpr::sum(a.iter().map(|i| OperatorExpr::MulCoord(i) * reflection_tail(n, i)))
}

/// `S_A = ([D_A, X_A] - 1)/2`.
pub fn scalar_scasimir(params: &ParameterSet, a: Subset) -> OperatorExpr {
    (commutator(&scalar_d(params, a), &scalar_x(params, a)) - OperatorExpr::Identity)
        .scaled(Rational::new(1, 2))
}

pub fn scalar_gamma(params: &ParameterSet, a: Subset) -> OperatorExpr {
    OperatorExpr::named(format!("sG{a}"), scalar_scasimir(params, a) * reflections(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Blade, Monomial};
    use crate::operators::operators_equal_on_degree_with;
    use crate::operators::{Evaluator, TestSpace};

    #[test]
    fn squares_have_positive_sign() {
        let p = ParameterSet::from_strs(&["1/2", "1/3", "1/4"]).unwrap();
        let full = Subset::prefix(3);
        let lap = crate::operators::clifford::laplace(&p, full);
        let out = operators_equal_on_degree_with(
            &mut Evaluator::new(),
            &scalar_d(&p, full).square(),
            &lap,
            3,
            4,
            TestSpace::Scalar,
        )
        .unwrap();
        assert!(out.equal);
        let x2 = scalar_x(&p, full).square().apply(&SpinorPolynomial::one(3)).unwrap();
        let norm = crate::operators::clifford::norm2(full).apply(&SpinorPolynomial::one(3)).unwrap();
        assert_eq!(x2, norm);
        assert!(is_scalar(&x2));
    }

    #[test]
    fn d1_on_x1_in_two_variables() {
        let p = ParameterSet::general(vec![Rational::new(1, 2), Rational::new(1, 3)]).unwrap();
        let x1 = SpinorPolynomial::basis_element(2, Monomial::variable(2, 1), Blade::UNIT);
        let out = scalar_d(&p, Subset::singleton(1)).apply(&x1).unwrap();
        assert_eq!(out, SpinorPolynomial::one(2).scale(&Rational::from(2)));
    }

    #[test]
    fn gamma_of_empty_set() {
        let p = ParameterSet::from_strs(&["1/2", "1/3", "1/4"]).unwrap();
        let m = SpinorPolynomial::from_parts(&[1, 0, 2], Blade::UNIT, Rational::ONE).unwrap();
        assert_eq!(scalar_gamma(&p, Subset::EMPTY).apply(&m).unwrap(), m.scale(&Rational::new(-1, 2)));
    }
}
