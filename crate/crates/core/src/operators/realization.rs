//! The two realizations of the spherical operators behind one interface.

use serde::Serialize;

use super::clifford;
use super::equality::TestSpace;
use super::expr::{commutator, OperatorExpr};
use crate::algebra::{ParameterSet, Rational, Subset};
use crate::scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RealizationKind {
    /// `D_A = sum e_i T_i`, `x_A = sum e_i x_i` acting on `P ⊗ Cl_n`.
    Clifford,
    /// `D_A = sum T_i R_i`, `X_A = sum x_i R_i` with `R_i = prod_{j>i} r_j`.
    Scalar,
}

impl RealizationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RealizationKind::Clifford => "clifford",
            RealizationKind::Scalar => "scalar",
        }
    }
}

/// A parameter set together with the operators of one realization. The
/// `Gamma_A` for every subset are built once and shared, so an evaluator
/// reused across checks keeps their cached action.
pub struct Realization {
    kind: RealizationKind,
    params: ParameterSet,
    gammas: Vec<OperatorExpr>,
}

impl Realization {
    pub fn new(kind: RealizationKind, params: ParameterSet) -> Self {
        let n = params.n();
        let gammas = Subset::all(n)
            .map(|a| match kind {
                RealizationKind::Clifford => clifford::gamma(&params, a),
                RealizationKind::Scalar => scalar::scalar_gamma(&params, a),
            })
            .collect();
        Realization {
            kind,
            params,
            gammas,
        }
    }

    pub fn clifford(params: ParameterSet) -> Self {
        Self::new(RealizationKind::Clifford, params)
    }

    pub fn scalar(params: ParameterSet) -> Self {
        Self::new(RealizationKind::Scalar, params)
    }

    pub fn kind(&self) -> RealizationKind {
        self.kind
    }

    pub fn params(&self) -> &ParameterSet {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn test_space(&self) -> TestSpace {
        match self.kind {
            RealizationKind::Clifford => TestSpace::Full,
            RealizationKind::Scalar => TestSpace::Scalar,
        }
    }

    /// `eps` with `D_A^2 = eps Delta_A` and `X_A^2 = eps ||x_A||^2`.
    pub fn square_sign(&self) -> Rational {
        match self.kind {
            RealizationKind::Clifford => -Rational::ONE,
            RealizationKind::Scalar => Rational::ONE,
        }
    }

    pub fn dirac(&self, a: Subset) -> OperatorExpr {
        match self.kind {
            RealizationKind::Clifford => clifford::dirac_d(&self.params, a),
            RealizationKind::Scalar => scalar::scalar_d(&self.params, a),
        }
    }

    pub fn position(&self, a: Subset) -> OperatorExpr {
        match self.kind {
            RealizationKind::Clifford => clifford::position_x(a),
            RealizationKind::Scalar => scalar::scalar_x(&self.params, a),
        }
    }

    pub fn laplace(&self, a: Subset) -> OperatorExpr {
        clifford::laplace(&self.params, a)
    }

    pub fn norm2(&self, a: Subset) -> OperatorExpr {
        clifford::norm2(a)
    }

    pub fn euler_shifted(&self, a: Subset) -> OperatorExpr {
        clifford::euler_shifted(&self.params, a)
    }

    /// The sCasimir: `([x_A, D_A] - 1)/2` for Clifford, `([D_A, X_A] - 1)/2`
    /// for the scalar model.
    pub fn scasimir(&self, a: Subset) -> OperatorExpr {
        match self.kind {
            RealizationKind::Clifford => clifford::scasimir(&self.params, a),
            RealizationKind::Scalar => scalar::scalar_scasimir(&self.params, a),
        }
    }

    /// Shared `Gamma_A`.
    pub fn gamma(&self, a: Subset) -> OperatorExpr {
        self.gammas[a.mask() as usize].clone()
    }

    /// `mu_i`, 1-based.
    pub fn mu(&self, i: usize) -> &Rational {
        self.params.mu_i(i)
    }

    pub fn full(&self) -> Subset {
        Subset::prefix(self.n())
    }

    pub fn convention(&self) -> &'static str {
        match self.kind {
            RealizationKind::Clifford => "S_A = ([x_A, D_A] - 1)/2",
            RealizationKind::Scalar => "S_A = ([D_A, X_A] - 1)/2",
        }
    }

    /// `[Gamma_A, op]`, convenience for symmetry checks.
    pub fn gamma_commutator(&self, a: Subset, op: &OperatorExpr) -> OperatorExpr {
        commutator(&self.gamma(a), op)
    }
}
