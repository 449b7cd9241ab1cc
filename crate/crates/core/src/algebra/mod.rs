//! Exact scalars, Clifford blades, spinor-valued polynomials and dense
//! rational linear algebra.

pub mod blade;
pub mod matrix;
pub mod monomial;
pub mod params;
pub mod poly;
pub mod rational;
pub mod subset;

/// Largest supported number of variables.
pub const MAX_DIM: usize = 8;

pub use blade::{blade_mul, Blade};
pub use matrix::RationalMatrix;
pub use monomial::Monomial;
pub use params::ParameterSet;
pub use poly::{basis_of_graded_component, SpinorPolynomial};
pub use rational::{pochhammer, Rational};
pub use subset::Subset;
