//! Raising and lowering operators `K_l^±` built from the `Gamma_A`, their
//! covariance, square factorization and action on the sector basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::algebra::{Blade, ParameterSet, Rational, SpinorPolynomial, Subset};
use crate::bi_algebra::{check_all, square_sum_identity};
use crate::checks::{finish_tally, Identity, RelationCheck, Tally};
use crate::error::{Error, Result};
use crate::monogenics::inner::inner_product;
use crate::monogenics::verify::eigenvalue;
use crate::monogenics::{sector_basis, MultiIndex};
use crate::operators::{anticommutator, commutator, Evaluator, OperatorExpr, Realization, RealizationKind};

pub const SUITE: &str = "ladder";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LadderStep {
    pub l: usize,
    /// `+1` or `-1`.
    pub sign: i32,
}

impl LadderStep {
    pub fn new(n: usize, l: usize, sign: i32) -> Result<Self> {
        if l == 0 || l + 2 > n {
            return Err(Error::IndexOutOfRange { index: l, n: n.saturating_sub(2) });
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidConfig(format!("ladder sign must be +1 or -1, got {sign}")));
        }
        Ok(LadderStep { l, sign })
    }

    /// Every step for `n` variables, `l` ascending, `+` before `-`.
    pub fn all(n: usize) -> Vec<LadderStep> {
        (1..=n.saturating_sub(2))
            .flat_map(|l| [LadderStep { l, sign: 1 }, LadderStep { l, sign: -1 }])
            .collect()
    }

    pub fn sign_str(&self) -> &'static str {
        if self.sign > 0 {
            "+"
        } else {
            "-"
        }
    }

    fn pm(&self) -> Rational {
        Rational::from(self.sign)
    }
}

impl fmt::Display for LadderStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{}{}", self.l, self.sign_str())
    }
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// `(A, B)` with
/// `A = (G_{l+1,l+2} ± G_{[l+2]\{l+1}})(G_{[l+1]} ∓ 1/2)` and
/// `B = -(G_{l+2} ± G_{[l+2]})(G_{[l]} ± G_{l+1})`.
pub fn ladder_parts(real: &Realization, step: LadderStep) -> (OperatorExpr, OperatorExpr) {
    let g = |s: Subset| real.gamma(s);
    let l = step.l;
    let pm = step.pm();
    let a = (g(Subset::pair(l + 1, l + 2)) + g(Subset::prefix(l + 2).remove(l + 1)).scaled(pm.clone()))
        * (g(Subset::prefix(l + 1)) + OperatorExpr::scalar(-(&pm * &half())));
    let b = -((g(Subset::singleton(l + 2)) + g(Subset::prefix(l + 2)).scaled(pm.clone()))
        * (g(Subset::prefix(l)) + g(Subset::singleton(l + 1)).scaled(pm)));
    (a, b)
}

pub fn ladder_k(real: &Realization, step: LadderStep) -> OperatorExpr {
    let (a, b) = ladder_parts(real, step);
    OperatorExpr::named(format!("{step}"), a + b)
}

/// `[K, G_[j]] = 0` for `j != l+1`, `{K, G_[l+1]} = ±K`.
pub fn covariance_identity(real: &Realization, step: LadderStep, j: usize) -> Identity {
    let k = ladder_k(real, step);
    let g = real.gamma(Subset::prefix(j));
    if j == step.l + 1 {
        Identity::new(
            format!("{step} anticommutes with G[{j}]"),
            vec![Subset::prefix(j)],
            anticommutator(&k, &g),
            k.scaled(step.pm()),
        )
    } else {
        Identity::new(
            format!("{step} commutes with G[{j}]"),
            vec![Subset::prefix(j)],
            commutator(&k, &g),
            OperatorExpr::zero(),
        )
    }
}

pub fn verify_covariance(ev: &mut Evaluator, real: &Realization, step: LadderStep, j: usize, k_max: u32) -> RelationCheck {
    crate::checks::check_identity(ev, real, SUITE, &covariance_identity(real, step, j), k_max)
}

/// `K^2` against its four linear factors in the `Gamma`s.
pub fn square_factorization(real: &Realization, step: LadderStep) -> Identity {
    let g = |s: Subset| real.gamma(s);
    let l = step.l;
    let pm = step.pm();
    let h = &pm * &half();
    let top = g(Subset::prefix(l + 2)) + g(Subset::singleton(l + 2)).scaled(pm.clone());
    let bottom = g(Subset::prefix(l)) + g(Subset::singleton(l + 1)).scaled(pm.clone());
    let mid = g(Subset::prefix(l + 1));
    let factors = [
        top.clone() - mid.clone() + OperatorExpr::scalar(h.clone()),
        top + mid.clone() - OperatorExpr::scalar(h.clone()),
        bottom.clone() - mid.clone() + OperatorExpr::scalar(h.clone()),
        bottom + mid - OperatorExpr::scalar(h),
    ];
    Identity::new(
        format!("{step} square factorization"),
        vec![],
        ladder_k(real, step).square(),
        OperatorExpr::product(factors),
    )
}

pub fn verify_square_factorization(ev: &mut Evaluator, real: &Realization, step: LadderStep, k_max: u32) -> RelationCheck {
    crate::checks::check_identity(ev, real, SUITE, &square_factorization(real, step), k_max)
}

/// `alpha_±^l(j)`, the eigenvalue of `K^2` on `Psi_j`.
pub fn alpha_coeff(params: &ParameterSet, step: LadderStep, j: &MultiIndex) -> Rational {
    let l = step.l;
    let lam = |i: usize| eigenvalue(params, j, i);
    let pm = step.pm();
    let h = &pm * &half();
    let (a, b, c) = (lam(l), lam(l + 1), lam(l + 2));
    let m1 = &pm * params.mu_i(l + 1);
    let m2 = &pm * params.mu_i(l + 2);
    let f1 = &(&(&c - &b) + &m2) + &h;
    let f2 = &(&(&c + &b) + &m2) - &h;
    let f3 = &(&(&a - &b) + &m1) + &h;
    let f4 = &(&(&a + &b) + &m1) - &h;
    f1 * f2 * f3 * f4
}

/// The four vanishing cases as listed alongside the coefficient formula:
/// `j_{l+1} = 0` with `|j_l|` even (odd) gives `alpha_- = 0`
/// (`alpha_+ = 0`); `j_l = 0` with `|j_{l+1}|` even (odd) gives
/// `alpha_+ = 0` (`alpha_- = 0`).
pub fn alpha_vanishes_listed(step: LadderStep, j: &MultiIndex) -> bool {
    let l = step.l;
    let even = |s: u32| s % 2 == 0;
    let minus = step.sign < 0;
    (j.get(l + 1) == 0 && even(j.partial_sum(l)) == minus) || (j.get(l) == 0 && even(j.partial_sum(l + 1)) != minus)
}

/// Vanishing keyed on the predicted target: `alpha = 0` exactly when the
/// target leaves the simplex. This differs from the listed cases when
/// `j_l = 0`: the parity that matters there is that of `|j_l|`.
pub fn alpha_vanishes_by_target(step: LadderStep, j: &MultiIndex) -> bool {
    predicted_target(step, j).is_none()
}

/// Predicted target: `j ± h_l` when `|j_l|` is odd, `j ∓ h_l` when even.
/// For `l = n-2` the step `h_{n-2}` with `j_{n-1} = k - sum` is the same
/// as adding the last free-entry unit vector.
pub fn predicted_target(step: LadderStep, j: &MultiIndex) -> Option<MultiIndex> {
    let odd = j.partial_sum(step.l) % 2 == 1;
    let dir = if odd { step.sign } else { -step.sign };
    j.step(step.l, dir)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderAction {
    pub step: LadderStep,
    pub from: MultiIndex,
    /// Labels with a nonzero coefficient in `K Psi_from`, with the exact
    /// coefficients from Gram projection.
    pub image: Vec<(MultiIndex, Rational)>,
}

impl LadderAction {
    pub fn is_zero(&self) -> bool {
        self.image.is_empty()
    }
}

/// Applies every `K_l^±` to every sector basis function at `(k, s)` and
/// expands the result in the same basis. Errors if an image leaves the span.
pub fn ladder_actions(params: &ParameterSet, k: u32, s: Blade) -> Result<Vec<LadderAction>> {
    let real = Realization::clifford(params.clone());
    let basis = sector_basis(params, k, s)?;
    let norms: Vec<Rational> = basis
        .iter()
        .map(|(_, p)| inner_product(params, p, p))
        .collect::<Result<_>>()?;
    let mut ev = Evaluator::new();
    let mut out = Vec::new();
    for step in LadderStep::all(params.n()) {
        let op = ladder_k(&real, step);
        for (j, psi) in &basis {
            let img = ev.apply(&op, psi)?;
            let mut image = Vec::new();
            let mut rebuilt = SpinorPolynomial::zero(params.n());
            for ((i, phi), norm) in basis.iter().zip(&norms) {
                let c = inner_product(params, phi, &img)? / norm.clone();
                if !c.is_zero() {
                    rebuilt.add_scaled(&c, phi);
                    image.push((i.clone(), c));
                }
            }
            if rebuilt != img {
                return Err(Error::Structure(format!("{step} Psi_{j} leaves the sector span")));
            }
            out.push(LadderAction { step, from: j.clone(), image });
        }
    }
    Ok(out)
}

fn lookup<'a>(actions: &'a [LadderAction], step: LadderStep, from: &MultiIndex) -> Option<&'a LadderAction> {
    actions.iter().find(|a| a.step == step && &a.from == from)
}

/// Single-target shape at the predicted label, `K Psi_j = 0` exactly when
/// `alpha = 0`, and `c c' = alpha` for the round trip.
pub fn verify_ladder_action(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    let name = format!("ladder action s={s}");
    finish_tally(SUITE, name.clone(), params, || {
        let mut t = Tally::new(SUITE, name, params).k_max(k).realization(RealizationKind::Clifford);
        let actions = ladder_actions(params, k, s)?;
        for act in &actions {
            let (step, j) = (act.step, &act.from);
            let alpha = alpha_coeff(params, step, j);
            let target = predicted_target(step, j);
            let shown = || format!("{:?}", act.image);
            match act.image.as_slice() {
                [] => {
                    t.record(|| format!("{step} Psi_{j} = 0"), &alpha, "0", alpha.is_zero());
                }
                [(to, c)] => {
                    let ok_target = Some(to) == target.as_ref();
                    t.record(|| format!("{step} Psi_{j} target"), to, format!("{target:?}"), ok_target);
                    t.record(|| format!("{step} Psi_{j} nonzero alpha"), &alpha, "nonzero", !alpha.is_zero());
                    let back = lookup(&actions, step, to)
                        .and_then(|b| b.image.iter().find(|(i, _)| i == j))
                        .map(|(_, c2)| c * c2)
                        .unwrap_or(Rational::ZERO);
                    t.compare(|| format!("{step} round trip at {j}"), &back, &alpha);
                }
                _ => t.record(|| format!("{step} Psi_{j}"), shown(), "a single target", false),
            }
        }
        Ok(t)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaClaim {
    /// `alpha = 0` exactly in the listed cases.
    ListedVanishing,
    /// `alpha = 0` exactly when the predicted target leaves the simplex.
    TargetVanishing,
    /// `alpha >= 0`, as stated with the coefficient formula.
    NonNegative,
    /// `alpha <= 0`, as forced by skew-adjointness of `K`.
    NonPositive,
}

impl AlphaClaim {
    pub const ALL: [AlphaClaim; 4] = [
        AlphaClaim::ListedVanishing,
        AlphaClaim::TargetVanishing,
        AlphaClaim::NonNegative,
        AlphaClaim::NonPositive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlphaClaim::ListedVanishing => "alpha zero iff listed case",
            AlphaClaim::TargetVanishing => "alpha zero iff target leaves simplex",
            AlphaClaim::NonNegative => "alpha non-negative",
            AlphaClaim::NonPositive => "alpha non-positive",
        }
    }

    fn holds(self, step: LadderStep, j: &MultiIndex, alpha: &Rational) -> (bool, String) {
        match self {
            AlphaClaim::ListedVanishing => {
                let want = alpha_vanishes_listed(step, j);
                (alpha.is_zero() == want, if want { "0 (listed case)" } else { "nonzero (not listed)" }.into())
            }
            AlphaClaim::TargetVanishing => {
                let want = alpha_vanishes_by_target(step, j);
                (alpha.is_zero() == want, if want { "0 (target outside)" } else { "nonzero (target inside)" }.into())
            }
            AlphaClaim::NonNegative => (alpha.signum() >= 0, ">= 0".into()),
            AlphaClaim::NonPositive => (alpha.signum() <= 0, "<= 0".into()),
        }
    }
}

/// Checks a statement about `alpha_±^l(j)` over every step and label of
/// degree `k`. Pure arithmetic on the eigenvalues.
pub fn verify_alpha_claim(params: &ParameterSet, k: u32, claim: AlphaClaim) -> RelationCheck {
    let mut t = Tally::new(SUITE, claim.name(), params).k_max(k);
    for step in LadderStep::all(params.n()) {
        for j in MultiIndex::all(params.n(), k) {
            let alpha = alpha_coeff(params, step, &j);
            let (ok, want) = claim.holds(step, &j, &alpha);
            t.record(|| format!("{step} at {j}"), &alpha, want, ok);
        }
    }
    t.finish()
}

/// `<K f, g> = -<f, K g>` on the sector basis.
pub fn verify_skew_adjoint(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    let name = format!("K skew-adjoint s={s}");
    finish_tally(SUITE, name.clone(), params, || {
        let mut t = Tally::new(SUITE, name, params).k_max(k).realization(RealizationKind::Clifford);
        let real = Realization::clifford(params.clone());
        let mut ev = Evaluator::new();
        let basis = sector_basis(params, k, s)?;
        for step in LadderStep::all(params.n()) {
            let op = ladder_k(&real, step);
            let images: Vec<SpinorPolynomial> = basis.iter().map(|(_, p)| ev.apply(&op, p)).collect::<Result<_>>()?;
            for (a, (ja, fa)) in basis.iter().enumerate() {
                for (b, (jb, fb)) in basis.iter().enumerate() {
                    let lhs = inner_product(params, &images[a], fb)?;
                    let rhs = -inner_product(params, fa, &images[b])?;
                    t.compare(|| format!("{step} on ({ja}, {jb})"), &lhs, &rhs);
                }
            }
        }
        Ok(t)
    })
}

/// `K^2 Psi_j = alpha(j) Psi_j` by direct operator application.
pub fn verify_spectral_values(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    finish_tally(SUITE, "square eigenvalues", params, || {
        let mut t = Tally::new(SUITE, "square eigenvalues", params).k_max(k).realization(RealizationKind::Clifford);
        let real = Realization::clifford(params.clone());
        let mut ev = Evaluator::new();
        let basis = sector_basis(params, k, s)?;
        for step in LadderStep::all(params.n()) {
            let sq = ladder_k(&real, step).square();
            for (j, psi) in &basis {
                let got = ev.apply(&sq, psi)?;
                let alpha = alpha_coeff(params, step, j);
                t.compare(|| format!("{step}^2 Psi_{j}, alpha = {alpha}"), &got, &psi.scale(&alpha));
            }
        }
        Ok(t)
    })
}

/// Every label reachable from every other along nonzero ladder actions.
pub fn verify_irreducibility(params: &ParameterSet, k: u32, s: Blade) -> RelationCheck {
    let name = format!("irreducibility s={s}");
    finish_tally(SUITE, name.clone(), params, || {
        let mut t = Tally::new(SUITE, name, params).k_max(k).realization(RealizationKind::Clifford);
        let actions = ladder_actions(params, k, s)?;
        let labels = MultiIndex::all(params.n(), k);
        let mut edges: BTreeMap<&MultiIndex, BTreeSet<&MultiIndex>> = BTreeMap::new();
        for a in &actions {
            for (to, _) in &a.image {
                edges.entry(&a.from).or_default().insert(to);
            }
        }
        let reach = |start: &MultiIndex| {
            let mut seen = BTreeSet::from([start.clone()]);
            let mut stack = vec![start.clone()];
            while let Some(v) = stack.pop() {
                for w in edges.get(&v).into_iter().flatten() {
                    if seen.insert((*w).clone()) {
                        stack.push((*w).clone());
                    }
                }
            }
            seen.len()
        };
        for j in &labels {
            let r = reach(j);
            t.compare(|| format!("labels reachable from {j}"), &r, &labels.len());
        }
        Ok(t)
    })
}

/// `P = e_1 e_2 r_1 r_2`.
pub fn diagnostic_p() -> OperatorExpr {
    OperatorExpr::CliffordLeft(Blade::from_mask(0b11)) * OperatorExpr::Reflect(1) * OperatorExpr::Reflect(2)
}

/// `[P, Gamma_[l]] = 0` for `l = 1..=n`.
pub fn verify_p_commutes(ev: &mut Evaluator, real: &Realization, k_max: u32) -> RelationCheck {
    let p = diagnostic_p();
    let ids = (1..=real.n())
        .map(|l| {
            let g = real.gamma(Subset::prefix(l));
            Identity::new(format!("P commutes with G[{l}]"), vec![Subset::prefix(l)], commutator(&p, &g), OperatorExpr::zero())
        })
        .collect();
    check_all(ev, real, SUITE, "P commutes with chain", ids, k_max)
}

/// `ell,sign,j_from,j_to,coeff_num,coeff_den`; zero actions get an empty
/// target and coefficient 0/1.
pub fn ladder_csv(actions: &[LadderAction]) -> String {
    let mut out = String::from("ell,sign,j_from,j_to,coeff_num,coeff_den\n");
    for a in actions {
        if a.image.is_empty() {
            out.push_str(&format!("{},{},{},,0,1\n", a.step.l, a.step.sign_str(), a.from.to_field()));
        }
        for (to, c) in &a.image {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                a.step.l,
                a.step.sign_str(),
                a.from.to_field(),
                to.to_field(),
                c.numer(),
                c.denom()
            ));
        }
    }
    out
}

/// Operator-level rows: covariance, factorization and the square-sum
/// identity, in either realization.
pub fn operator_suite(ev: &mut Evaluator, real: &Realization, k_max: u32) -> Vec<RelationCheck> {
    let mut rows = Vec::new();
    for step in LadderStep::all(real.n()) {
        let ids = (1..=real.n()).map(|j| covariance_identity(real, step, j)).collect();
        rows.push(check_all(ev, real, SUITE, &format!("{step} covariance"), ids, k_max));
        rows.push(crate::checks::check_identity(ev, real, SUITE, &square_factorization(real, step), k_max));
        if step.sign > 0 {
            rows.push(crate::checks::check_identity(ev, real, SUITE, &square_sum_identity(real, step.l), k_max));
        }
    }
    rows
}

/// Basis-level rows at degrees `0..=k_max` for the unit sector and the
/// top blade.
pub fn action_suite(params: &ParameterSet, k_max: u32) -> Vec<RelationCheck> {
    (0..=k_max).flat_map(|k| action_suite_at(params, k)).collect()
}

/// The basis-level rows at a single degree.
pub fn action_suite_at(params: &ParameterSet, k: u32) -> Vec<RelationCheck> {
    let mut rows = Vec::new();
    for s in [Blade::UNIT, Blade::from_mask((1 << params.n()) - 1)] {
        rows.push(verify_ladder_action(params, k, s));
        rows.push(verify_irreducibility(params, k, s));
    }
    rows.push(verify_spectral_values(params, k, Blade::UNIT));
    rows.push(verify_skew_adjoint(params, k, Blade::UNIT));
    for claim in AlphaClaim::ALL {
        rows.push(verify_alpha_claim(params, k, claim));
    }
    rows
}
