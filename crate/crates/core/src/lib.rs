//! Exact symbolic engine for the `Z_2^n` Dirac-Dunkl operator: operator
//! calculus on Clifford-valued polynomials, verification of the higher rank
//! Bannai-Ito symmetry algebra, and the explicit basis of Dunkl monogenics.

pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod checks;
pub mod operators;
pub mod scalar;
pub mod bi_algebra;
pub mod monogenics;
pub mod ladder;
pub mod runner;
