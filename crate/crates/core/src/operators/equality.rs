//! Deciding operator identities by evaluation on graded bases.

use serde::Serialize;

use super::expr::{Evaluator, OperatorExpr};
use crate::algebra::poly::graded_terms;
use crate::algebra::SpinorPolynomial;
use crate::error::Result;

/// Which basis a check is run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TestSpace {
    /// Every `monomial ⊗ blade`.
    Full,
    /// Monomials on the unit blade only.
    Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub input: SpinorPolynomial,
    pub lhs: SpinorPolynomial,
    pub rhs: SpinorPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityOutcome {
    pub equal: bool,
    pub witness: Option<Witness>,
    /// Number of basis elements compared.
    pub checked: usize,
}

pub fn test_basis(n: usize, k: u32, space: TestSpace) -> Vec<SpinorPolynomial> {
    graded_terms(n, k, space == TestSpace::Full)
        .into_iter()
        .map(|(m, b)| SpinorPolynomial::basis_element(n, m, b))
        .collect()
}

/// Compares both operators on the degree-`k` basis. Returns the first basis
/// element where they differ.
pub fn equal_on_component(
    ev: &mut Evaluator,
    op1: &OperatorExpr,
    op2: &OperatorExpr,
    n: usize,
    k: u32,
    space: TestSpace,
) -> Result<(usize, Option<Witness>)> {
    let basis = test_basis(n, k, space);
    for input in &basis {
        let lhs = ev.apply(op1, input)?;
        let rhs = ev.apply(op2, input)?;
        if lhs != rhs {
            return Ok((
                basis.len(),
                Some(Witness {
                    input: input.clone(),
                    lhs,
                    rhs,
                }),
            ));
        }
    }
    Ok((basis.len(), None))
}

pub fn operators_equal_on_degree_with(
    ev: &mut Evaluator,
    op1: &OperatorExpr,
    op2: &OperatorExpr,
    n: usize,
    k_max: u32,
    space: TestSpace,
) -> Result<EqualityOutcome> {
    let mut checked = 0;
    for k in 0..=k_max {
        let (count, witness) = equal_on_component(ev, op1, op2, n, k, space)?;
        checked += count;
        if witness.is_some() {
            return Ok(EqualityOutcome {
                equal: false,
                witness,
                checked,
            });
        }
    }
    Ok(EqualityOutcome {
        equal: true,
        witness: None,
        checked,
    })
}

/// Equality on `P_{<=k_max} ⊗ Cl_n`; by linearity, agreement on the graded
/// bases is agreement on the whole space.
pub fn operators_equal_on_degree(
    op1: &OperatorExpr,
    op2: &OperatorExpr,
    n: usize,
    k_max: u32,
) -> Result<EqualityOutcome> {
    operators_equal_on_degree_with(&mut Evaluator::new(), op1, op2, n, k_max, TestSpace::Full)
}
