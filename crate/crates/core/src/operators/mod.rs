//! Linear operators on spinor polynomials.

pub mod clifford;
pub mod equality;
pub mod expr;
pub mod osp;
pub mod realization;

pub use equality::{
    equal_on_component, operators_equal_on_degree, operators_equal_on_degree_with, test_basis,
    EqualityOutcome, TestSpace, Witness,
};
pub use expr::{anticommutator, commutator, Evaluator, NamedOp, OperatorExpr};
pub use realization::{Realization, RealizationKind};
