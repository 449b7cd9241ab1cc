//! The higher rank Bannai-Ito structure of the `Gamma_A`: anticommutation
//! relations, generation by pairs, Abelian subalgebras, Casimirs and the
//! rank-one reduction.

use std::collections::HashMap;

use crate::algebra::poly::check_permutation;
use crate::algebra::{ParameterSet, Rational, Subset};
use crate::checks::{check_identity, Identity, RelationCheck, Status, WitnessRecord};
use crate::error::{Error, Result};
use crate::operators::{
    anticommutator, clifford, commutator, test_basis, Evaluator, OperatorExpr, Realization,
};

pub const SUITE: &str = "bi";

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

/// Both sides of `{G_A, G_B} = G_{AΔB} + 2 G_{A∩B} G_{A∪B} + 2 G_{A\B} G_{B\A}`.
/// With `flip_last` the sign of the final term is reversed; this is the
/// negative control used by the runner.
pub fn bi_relation(real: &Realization, a: Subset, b: Subset, flip_last: bool) -> Identity {
    let g = |s: Subset| real.gamma(s);
    let last = (g(a.difference(b)) * g(b.difference(a))).scaled(q(if flip_last { -2 } else { 2 }, 1));
    let rhs = g(a.symmetric_difference(b))
        + (g(a.intersection(b)) * g(a.union(b))).scaled(q(2, 1))
        + last;
    let name = if flip_last { "bannai-ito (flipped)" } else { "bannai-ito" };
    Identity::new(name, vec![a, b], anticommutator(&g(a), &g(b)), rhs)
}

pub fn verify_bi_relation(ev: &mut Evaluator, real: &Realization, a: Subset, b: Subset, k_max: u32) -> RelationCheck {
    check_identity(ev, real, SUITE, &bi_relation(real, a, b, false), k_max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pick {
    Lowest,
    Highest,
}

impl Pick {
    fn from(self, s: Subset) -> usize {
        match self {
            Pick::Lowest => s.iter().next().expect("nonempty"),
            Pick::Highest => s.max_index(),
        }
    }
}

/// How the generating-set recursion splits `A = C ∪ D` with `|D| = 2` and
/// `C ∩ D = {k}`: `removed` selects `d`, so that `C = A \ {d}`, and `pivot`
/// selects `k` from `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainChoice {
    pub removed: Pick,
    pub pivot: Pick,
}

impl ChainChoice {
    pub const ALL: [ChainChoice; 4] = [
        ChainChoice { removed: Pick::Highest, pivot: Pick::Highest },
        ChainChoice { removed: Pick::Highest, pivot: Pick::Lowest },
        ChainChoice { removed: Pick::Lowest, pivot: Pick::Highest },
        ChainChoice { removed: Pick::Lowest, pivot: Pick::Lowest },
    ];
}

/// `Gamma_A` expressed through the `Gamma_B` with `|B| <= 2` only, via
/// `G_{C∪D} = ({G_C, G_D} - G_{CΔD} - 2 G_{C\{k}} G_{D\{k}}) / (2 mu_k)`.
pub fn gamma_via_pairs(real: &Realization, a: Subset, choice: ChainChoice) -> Result<OperatorExpr> {
    let mut memo = HashMap::new();
    via_pairs_rec(real, a, choice, &mut memo)
}

fn via_pairs_rec(
    real: &Realization,
    a: Subset,
    choice: ChainChoice,
    memo: &mut HashMap<Subset, OperatorExpr>,
) -> Result<OperatorExpr> {
    if a.len() <= 2 {
        return Ok(real.gamma(a));
    }
    if let Some(op) = memo.get(&a) {
        return Ok(op.clone());
    }
    let d = choice.removed.from(a);
    let c = a.remove(d);
    let k = choice.pivot.from(c);
    let mu_k = real.mu(k);
    if mu_k.is_zero() {
        return Err(Error::ZeroPivot(k));
    }
    let pair = Subset::pair(k, d);
    let gc = via_pairs_rec(real, c, choice, memo)?;
    let sym = via_pairs_rec(real, a.remove(k), choice, memo)?;
    let c_rest = via_pairs_rec(real, c.remove(k), choice, memo)?;
    let body = anticommutator(&gc, &real.gamma(pair))
        - sym
        - c_rest.scaled(&q(2, 1) * real.mu(d));
    let scale = (&q(2, 1) * mu_k).recip()?;
    let op = OperatorExpr::named(format!("GP{a}"), body.scaled(scale));
    memo.insert(a, op.clone());
    Ok(op)
}

/// The generators `Gamma_{pi[2]}, ..., Gamma_{pi[n-1]}` of `pi Y_n`.
pub fn abelian_generators(n: usize, perm: &[usize]) -> Vec<Subset> {
    (2..n).map(|l| Subset::prefix(l).permuted(perm)).collect()
}

/// Every commutator among the generators of `pi Y_n` vanishes.
pub fn verify_abelian_subalgebra(ev: &mut Evaluator, real: &Realization, perm: &[usize], k_max: u32) -> RelationCheck {
    let n = real.n();
    if let Err(e) = check_permutation(perm, n) {
        return RelationCheck::error(SUITE, "abelian subalgebra", real.params(), e);
    }
    let gens = abelian_generators(n, perm);
    let mut ids = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            ids.push(Identity::new(
                "[G_A,G_B] = 0",
                vec![a, b],
                commutator(&real.gamma(a), &real.gamma(b)),
                OperatorExpr::zero(),
            ));
        }
    }
    let name = format!("abelian subalgebra {perm:?}");
    let mut row = check_all(ev, real, SUITE, &name, ids, k_max);
    row.subsets = gens;
    row
}

/// Runs several identities and folds them into a single row.
pub fn check_all(
    ev: &mut Evaluator,
    real: &Realization,
    suite: &str,
    name: &str,
    ids: Vec<Identity>,
    k_max: u32,
) -> RelationCheck {
    let mut checked = 0;
    let mut subsets = Vec::new();
    for id in &ids {
        let row = check_identity(ev, real, suite, id, k_max);
        checked += row.checked;
        subsets.extend(id.subsets.iter().copied());
        if !row.passed() {
            return RelationCheck {
                name: name.to_string(),
                checked,
                detail: Some(format!("failing part: {} on {:?}", id.name, id.subsets)),
                ..row
            };
        }
    }
    subsets.sort();
    subsets.dedup();
    RelationCheck {
        suite: suite.to_string(),
        name: name.to_string(),
        realization: Some(real.kind()),
        n: real.n(),
        mu: real.params().to_strings(),
        subsets,
        k_max: Some(k_max),
        status: Status::Pass,
        checked,
        witness: None,
        detail: None,
    }
}

/// `Q_A = sum_{{i,j} ⊂ A} Gamma_{ij}^2`.
pub fn casimir_q(real: &Realization, a: Subset) -> OperatorExpr {
    OperatorExpr::sum(a.pairs().into_iter().map(|(i, j)| real.gamma(Subset::pair(i, j)).square()))
}

/// `C_A = sum_{{i,j} ⊂ A} Gamma_{ij} Gamma_{A\{i,j}} - (|A|-2) sum_i mu_i Gamma_{A\{i}}`.
pub fn casimir_c(real: &Realization, a: Subset) -> OperatorExpr {
    let pairs = a.pairs().into_iter().map(|(i, j)| {
        let p = Subset::pair(i, j);
        real.gamma(p) * real.gamma(a.difference(p))
    });
    let factor = Rational::from(a.len() as i64 - 2);
    let singles = a
        .iter()
        .map(|i| real.gamma(a.remove(i)).scaled(-(&factor * real.mu(i))));
    OperatorExpr::sum(pairs.chain(singles))
}

/// `Q_A = Gamma_A^2 + (|A|-2) sum mu_i^2 - (|A|-1)(|A|-2)/8`.
pub fn casimir_q_value(real: &Realization, a: Subset) -> Identity {
    let m = a.len() as i64;
    let sum_sq: Rational = a.iter().map(|i| real.mu(i) * real.mu(i)).sum();
    let c = &(&Rational::from(m - 2) * &sum_sq) - &q((m - 1) * (m - 2), 8);
    Identity::new(
        "Q_A value",
        vec![a],
        casimir_q(real, a),
        real.gamma(a).square() + OperatorExpr::scalar(c),
    )
}

/// `C_A = |A|(|A|-3)/4 Gamma_A`.
pub fn casimir_c_value(real: &Realization, a: Subset) -> Identity {
    let m = a.len() as i64;
    Identity::new("C_A value", vec![a], casimir_c(real, a), real.gamma(a).scaled(q(m * (m - 3), 4)))
}

/// `[Q_A, Gamma_B] = 0` and `[C_A, Gamma_B] = 0`.
pub fn casimir_commutations(real: &Realization, a: Subset, b: Subset) -> Vec<Identity> {
    let g = real.gamma(b);
    vec![
        Identity::new("[Q_A,G_B] = 0", vec![a, b], commutator(&casimir_q(real, a), &g), OperatorExpr::zero()),
        Identity::new("[C_A,G_B] = 0", vec![a, b], commutator(&casimir_c(real, a), &g), OperatorExpr::zero()),
    ]
}

/// The three cyclic relations `{K_1, K_2} = K_3 + omega_3` etc. for `n = 3`,
/// with `K_3 = G_12`, `K_1 = G_23`, `K_2 = G_13` and
/// `omega_i = 2 mu_i G_[3] + 2 mu_j mu_k`.
pub fn rank_one_relations(real: &Realization) -> Result<Vec<Identity>> {
    if real.n() != 3 {
        return Err(Error::InvalidConfig("rank-one reduction needs n = 3".into()));
    }
    let k = |i: usize| match i {
        1 => real.gamma(Subset::pair(2, 3)),
        2 => real.gamma(Subset::pair(1, 3)),
        _ => real.gamma(Subset::pair(1, 2)),
    };
    let omega = |i: usize, j: usize, l: usize| {
        real.gamma(Subset::prefix(3)).scaled(&q(2, 1) * real.mu(i))
            + OperatorExpr::scalar(&(&q(2, 1) * real.mu(j)) * real.mu(l))
    };
    Ok([(1, 2, 3), (2, 3, 1), (3, 1, 2)]
        .into_iter()
        .map(|(a, b, c)| {
            Identity::new(
                format!("{{K{a},K{b}}} = K{c} + w{c}"),
                vec![],
                anticommutator(&k(a), &k(b)),
                k(c) + omega(c, a, b),
            )
        })
        .collect())
}

/// `G_{l+1,l+2}^2 + G_{[l+2]\{l+1}}^2 =
///  G_[l+2]^2 - G_[l+1]^2 + G_[l]^2 + G_{l+2}^2 + G_{l+1}^2 - 1/4`.
pub fn square_sum_identity(real: &Realization, l: usize) -> Identity {
    let g = |s: Subset| real.gamma(s);
    let lhs = g(Subset::pair(l + 1, l + 2)).square() + g(Subset::prefix(l + 2).remove(l + 1)).square();
    let rhs = OperatorExpr::sum([
        g(Subset::prefix(l + 2)).square(),
        -g(Subset::prefix(l + 1)).square(),
        g(Subset::prefix(l)).square(),
        g(Subset::singleton(l + 2)).square(),
        g(Subset::singleton(l + 1)).square(),
        OperatorExpr::scalar(q(-1, 4)),
    ]);
    Identity::new(format!("square sum l={l}"), vec![], lhs, rhs)
}

/// Checks that relabelling coordinates, generators and parameters by
/// `perm` carries the Clifford `Gamma_A` to `Gamma_{perm(A)}`:
/// `P Gamma_A^{mu} p = Gamma_{perm(A)}^{perm mu} P p` on every basis element.
pub fn verify_permutation_equivariance(
    ev: &mut Evaluator,
    params: &ParameterSet,
    perm: &[usize],
    a: Subset,
    k_max: u32,
) -> RelationCheck {
    let name = format!("permutation equivariance {perm:?}");
    let mut run = || -> Result<(usize, Option<WitnessRecord>)> {
        let moved = params.relabelled(perm)?;
        let g = clifford::gamma(params, a);
        let gp = clifford::gamma(&moved, a.permuted(perm));
        let mut checked = 0;
        for k in 0..=k_max {
            for e in test_basis(params.n(), k, crate::operators::TestSpace::Full) {
                checked += 1;
                let lhs = ev.apply(&g, &e)?.permuted(perm)?;
                let rhs = ev.apply(&gp, &e.permuted(perm)?)?;
                if lhs != rhs {
                    return Ok((
                        checked,
                        Some(WitnessRecord {
                            input: e.to_string(),
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        }),
                    ));
                }
            }
        }
        Ok((checked, None))
    };
    match run() {
        Ok((checked, witness)) => RelationCheck {
            suite: SUITE.to_string(),
            name,
            realization: Some(crate::operators::RealizationKind::Clifford),
            n: params.n(),
            mu: params.to_strings(),
            subsets: vec![a],
            k_max: Some(k_max),
            status: if witness.is_none() { Status::Pass } else { Status::Fail },
            checked,
            witness,
            detail: None,
        },
        Err(e) => RelationCheck::error(SUITE, name, params, e),
    }
}
