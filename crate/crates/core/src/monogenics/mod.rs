//! Dunkl monogenics: the tower basis, its closed form, the inner product
//! and connection coefficients between bases.

pub mod ck;
pub mod connection;
pub mod explicit;
pub mod inner;
pub mod jacobi;
pub mod label;
pub mod verify;

pub use ck::{basis, basis_psi, ck_extend, sector_basis, sector_psi};
pub use connection::{connection_matrix, permute_basis, verify_connection, ConnectionData};
pub use explicit::explicit_psi;
pub use inner::{gram, inner_product, moment};
pub use jacobi::{jacobi_homogenized, Bivariate};
pub use label::{BasisLabel, MultiIndex};
