//! The osp(1|2) relations, sCasimir anticommutation and the basic symmetry
//! statements, generated for either realization.

use super::expr::{anticommutator, commutator, OperatorExpr};
use super::realization::{Realization, RealizationKind};
use crate::algebra::{Rational, Subset};
use crate::checks::Identity;

fn q(a: i64) -> Rational {
    Rational::from(a)
}

/// The ten relations of the osp(1|2) realization generated by `D_A` and
/// `x_A`. The three anticommutators carry the realization's square sign.
pub fn osp_relations(real: &Realization, a: Subset) -> Vec<Identity> {
    let eps = real.square_sign();
    let d = real.dirac(a);
    let x = real.position(a);
    let lap = real.laplace(a);
    let r2 = real.norm2(a);
    let eg = real.euler_shifted(a);
    let two_eps = &eps * &q(2);
    let rel = |name: &str, lhs: OperatorExpr, rhs: OperatorExpr| Identity::new(name, vec![a], lhs, rhs);
    vec![
        rel("{x,x} = 2eps|x|^2", anticommutator(&x, &x), r2.scaled(two_eps.clone())),
        rel("{D,D} = 2eps Lap", anticommutator(&d, &d), lap.scaled(two_eps.clone())),
        rel("{x,D} = 2eps(E+g)", anticommutator(&x, &d), eg.scaled(two_eps)),
        rel("[D,E+g] = D", commutator(&d, &eg), d.clone()),
        rel("[D,|x|^2] = 2x", commutator(&d, &r2), x.scaled(q(2))),
        rel("[E+g,x] = x", commutator(&eg, &x), x.clone()),
        rel("[Lap,x] = 2D", commutator(&lap, &x), d.scaled(q(2))),
        rel("[Lap,E+g] = 2Lap", commutator(&lap, &eg), lap.scaled(q(2))),
        rel("[Lap,|x|^2] = 4(E+g)", commutator(&lap, &r2), eg.scaled(q(4))),
        rel("[E+g,|x|^2] = 2|x|^2", commutator(&eg, &r2), r2.scaled(q(2))),
    ]
}

/// `D_A^2 = eps Delta_A` and `X_A^2 = eps ||x_A||^2`.
pub fn square_factorizations(real: &Realization, a: Subset) -> Vec<Identity> {
    let eps = real.square_sign();
    vec![
        Identity::new("D^2 = eps Lap", vec![a], real.dirac(a).square(), real.laplace(a).scaled(eps.clone())),
        Identity::new("x^2 = eps |x|^2", vec![a], real.position(a).square(), real.norm2(a).scaled(eps)),
    ]
}

/// `{S_A, D_A} = {S_A, x_A} = 0`.
pub fn scasimir_anticommutation(real: &Realization, a: Subset) -> Vec<Identity> {
    let s = real.scasimir(a);
    vec![
        Identity::new("{S,D} = 0", vec![a], anticommutator(&s, &real.dirac(a)), OperatorExpr::zero()),
        Identity::new("{S,x} = 0", vec![a], anticommutator(&s, &real.position(a)), OperatorExpr::zero()),
    ]
}

/// Symmetry of `Gamma_A`. For the Clifford model: commutation with the
/// full `D`, `x` and `Gamma_[n]`; for the scalar model: with `D_A`, `X_A`.
pub fn gamma_symmetries(real: &Realization, a: Subset) -> Vec<Identity> {
    let g = real.gamma(a);
    let zero = OperatorExpr::zero;
    match real.kind() {
        RealizationKind::Clifford => {
            let full = real.full();
            vec![
                Identity::new("[G_A,D] = 0", vec![a], commutator(&g, &real.dirac(full)), zero()),
                Identity::new("[G_A,x] = 0", vec![a], commutator(&g, &real.position(full)), zero()),
                Identity::new("[G_A,G_[n]] = 0", vec![a], commutator(&g, &real.gamma(full)), zero()),
            ]
        }
        RealizationKind::Scalar => vec![
            Identity::new("[G_A,D_A] = 0", vec![a], commutator(&g, &real.dirac(a)), zero()),
            Identity::new("[G_A,X_A] = 0", vec![a], commutator(&g, &real.position(a)), zero()),
        ],
    }
}
