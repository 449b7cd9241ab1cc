//! Batch runner: configuration, parallel execution of the verification
//! suites, the JSON report and the file exports.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Blade, ParameterSet, Rational, Subset};
use crate::bi_algebra::{self, ChainChoice};
use crate::checks::{check_identity, Identity, RelationCheck, Status};
use crate::error::{Error, Result};
use crate::ladder;
use crate::monogenics::{self, connection_matrix, verify_connection};
use crate::operators::osp;
use crate::operators::{Evaluator, OperatorExpr, Realization, RealizationKind};

pub const SCHEMA_VERSION: u32 = 1;

/// Where the parameter sets come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuSpec {
    Explicit(Vec<Rational>),
    Random(u64),
}

impl FromStr for MuSpec {
    type Err = Error;

    /// `p/q,p/q,...` or `random:<seed>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(seed) = s.strip_prefix("random:") {
            let seed = seed
                .trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad seed {seed:?}: {e}")))?;
            return Ok(MuSpec::Random(seed));
        }
        let mu = s
            .split(',')
            .map(|x| x.trim().parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        Ok(MuSpec::Explicit(mu))
    }
}

impl fmt::Display for MuSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuSpec::Random(seed) => write!(f, "random:{seed}"),
            MuSpec::Explicit(mu) => {
                let items: Vec<String> = mu.iter().map(|m| m.to_fraction_string()).collect();
                write!(f, "{}", items.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Osp,
    Bi,
    Casimir,
    Monogenics,
    Ladder,
    Scalar,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Osp, Suite::Bi, Suite::Casimir, Suite::Monogenics, Suite::Ladder, Suite::Scalar];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Osp => "osp",
            Suite::Bi => "bi",
            Suite::Casimir => "casimir",
            Suite::Monogenics => "monogenics",
            Suite::Ladder => "ladder",
            Suite::Scalar => "scalar",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RealizationChoice {
    Clifford,
    Scalar,
    Both,
}

impl RealizationChoice {
    pub fn kinds(self) -> Vec<RealizationKind> {
        match self {
            RealizationChoice::Clifford => vec![RealizationKind::Clifford],
            RealizationChoice::Scalar => vec![RealizationKind::Scalar],
            RealizationChoice::Both => vec![RealizationKind::Clifford, RealizationKind::Scalar],
        }
    }
}

impl FromStr for RealizationChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "clifford" => Ok(RealizationChoice::Clifford),
            "scalar" => Ok(RealizationChoice::Scalar),
            "both" => Ok(RealizationChoice::Both),
            other => Err(Error::Parse(format!("unknown realization {other:?}"))),
        }
    }
}

/// Degree caps. `clifford` and `scalar` bound the operator test spaces,
/// `basis` bounds the monogenic, connection and ladder-action checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KCaps {
    pub clifford: u32,
    pub scalar: u32,
    pub basis: u32,
}

impl KCaps {
    pub fn default_for(n: usize) -> Self {
        let clifford = match n {
            0..=3 => 4,
            4 => 3,
            _ => 2,
        };
        let basis = match n {
            0..=3 => 3,
            4 => 2,
            _ => 1,
        };
        KCaps { clifford, scalar: clifford + 1, basis }
    }

    pub fn uniform(k: u32) -> Self {
        KCaps { clifford: k, scalar: k, basis: k }
    }

    fn operator(&self, kind: RealizationKind) -> u32 {
        match kind {
            RealizationKind::Clifford => self.clifford,
            RealizationKind::Scalar => self.scalar,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub mu: MuSpec,
    /// Number of parameter sets drawn for a random spec.
    pub parameter_sets: usize,
    pub k_caps: KCaps,
    pub suites: Vec<Suite>,
    pub realization: RealizationChoice,
    pub out: Option<PathBuf>,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    /// Flips the sign of the last term of every Bannai-Ito relation.
    pub inject_fault: bool,
}

impl RunConfig {
    pub fn new(n: usize) -> Self {
        RunConfig {
            n,
            mu: MuSpec::Random(1),
            parameter_sets: 3,
            k_caps: KCaps::default_for(n),
            suites: Suite::ALL.to_vec(),
            realization: RealizationChoice::Both,
            out: None,
            jobs: 0,
            inject_fault: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidConfig(format!("n must be at least 3, got {}", self.n)));
        }
        if self.n > crate::algebra::MAX_DIM {
            return Err(Error::UnsupportedDimension(self.n));
        }
        if self.suites.is_empty() {
            return Err(Error::InvalidConfig("no suite selected".into()));
        }
        if self.inject_fault && !self.suites.contains(&Suite::Bi) {
            return Err(Error::InvalidConfig("--inject-fault needs the bi suite".into()));
        }
        if let MuSpec::Random(_) = self.mu {
            if self.parameter_sets == 0 {
                return Err(Error::InvalidConfig("at least one parameter set is needed".into()));
            }
        }
        self.parameter_sets().map(|_| ())
    }

    /// The parameter sets the run uses, in order.
    pub fn parameter_sets(&self) -> Result<Vec<ParameterSet>> {
        match &self.mu {
            MuSpec::Explicit(mu) => {
                if mu.len() != self.n {
                    return Err(Error::DimensionMismatch {
                        expected: self.n,
                        found: mu.len(),
                    });
                }
                Ok(vec![ParameterSet::new(mu.clone())?])
            }
            MuSpec::Random(seed) => ParameterSet::sample_many(self.n, *seed, self.parameter_sets),
        }
    }

    fn selected(&self, s: Suite) -> bool {
        self.suites.contains(&s)
    }
}

/// Echo of everything that determines the rows. The worker count and
/// output directory are left out so reports compare equal across them.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub mu: String,
    pub parameter_sets: Vec<Vec<String>>,
    pub k_caps: KCaps,
    pub suites: Vec<Suite>,
    pub realizations: Vec<RealizationKind>,
    pub inject_fault: bool,
    pub conventions: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub task: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub rows: Vec<RelationCheck>,
    /// Wall-clock time per task. Not part of the JSON report, which must be
    /// byte-stable; [`VerificationReport::timings_json`] renders it.
    #[serde(skip)]
    pub timings: Vec<Timing>,
    #[serde(skip)]
    pub total_seconds: f64,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn timings_json(&self) -> String {
        let doc = serde_json::json!({ "total_seconds": self.total_seconds, "tasks": self.timings });
        let mut s = serde_json::to_string_pretty(&doc).expect("timings serialize");
        s.push('\n');
        s
    }

    /// Writes `report.json` and `timings.json` into `dir`.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let report = dir.join("report.json");
        let timings = dir.join("timings.json");
        fs::write(&report, self.to_json())?;
        fs::write(&timings, self.timings_json())?;
        Ok(vec![report, timings])
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

type TaskFn = Box<dyn Fn() -> Vec<RelationCheck> + Send + Sync>;

struct Task {
    label: String,
    run: TaskFn,
}

fn task(label: String, run: impl Fn() -> Vec<RelationCheck> + Send + Sync + 'static) -> Task {
    Task { label, run: Box::new(run) }
}

fn nonempty_subsets(n: usize) -> Vec<Subset> {
    Subset::all(n).filter(|a| !a.is_empty()).collect()
}

fn osp_rows(real: &Realization, k: u32) -> Vec<RelationCheck> {
    let mut ev = Evaluator::new();
    let mut rows = Vec::new();
    for a in Subset::all(real.n()) {
        let sets = [
            ("osp(1|2) relations", osp::osp_relations(real, a)),
            ("square factorization", osp::square_factorizations(real, a)),
            ("scasimir anticommutation", osp::scasimir_anticommutation(real, a)),
            ("gamma symmetries", osp::gamma_symmetries(real, a)),
        ];
        for (name, ids) in sets {
            rows.push(bi_algebra::check_all(&mut ev, real, "osp", name, ids, k));
        }
    }
    rows
}

fn bi_rows_for(real: &Realization, a: Subset, k: u32, flip: bool) -> Vec<RelationCheck> {
    let mut ev = Evaluator::new();
    Subset::all(real.n())
        .map(|b| check_identity(&mut ev, real, bi_algebra::SUITE, &bi_algebra::bi_relation(real, a, b, flip), k))
        .collect()
}

fn bi_structure_rows(real: &Realization, k: u32) -> Vec<RelationCheck> {
    let n = real.n();
    let mut ev = Evaluator::new();
    let mut rows = Vec::new();
    let identity: Vec<usize> = (1..=n).collect();
    let reversed: Vec<usize> = (1..=n).rev().collect();
    for perm in [identity, reversed] {
        rows.push(bi_algebra::verify_abelian_subalgebra(&mut ev, real, &perm, k));
    }
    for a in nonempty_subsets(n).into_iter().filter(|a| a.len() >= 3) {
        for choice in ChainChoice::ALL {
            let name = format!("generated by pairs removed={:?} pivot={:?}", choice.removed, choice.pivot);
            match bi_algebra::gamma_via_pairs(real, a, choice) {
                Ok(op) => {
                    let id = Identity::new(name, vec![a], op, real.gamma(a));
                    rows.push(check_identity(&mut ev, real, bi_algebra::SUITE, &id, k));
                }
                Err(e) => rows.push(RelationCheck::error(bi_algebra::SUITE, name, real.params(), e).with_realization(real.kind())),
            }
        }
    }
    if real.kind() == RealizationKind::Clifford {
        let cycle = monogenics::connection::cyclic_permutation(n);
        for a in nonempty_subsets(n) {
            rows.push(bi_algebra::verify_permutation_equivariance(&mut ev, real.params(), &cycle, a, k));
        }
    }
    rows
}

fn casimir_rows(real: &Realization, k: u32) -> Vec<RelationCheck> {
    let n = real.n();
    let mut ev = Evaluator::new();
    let mut rows = Vec::new();
    let full = Subset::prefix(n);
    for a in nonempty_subsets(n) {
        let name = "casimirs commute with gamma";
        rows.push(bi_algebra::check_all(&mut ev, real, "casimir", name, bi_algebra::casimir_commutations(real, full, a), k));
        if a.len() >= 2 {
            for id in [bi_algebra::casimir_q_value(real, a), bi_algebra::casimir_c_value(real, a)] {
                rows.push(check_identity(&mut ev, real, "casimir", &id, k));
            }
        }
        if a.len() == 3 {
            let id = Identity::new("C_A vanishes for |A| = 3", vec![a], bi_algebra::casimir_c(real, a), OperatorExpr::zero());
            rows.push(check_identity(&mut ev, real, "casimir", &id, k));
        }
    }
    if n == 3 {
        match bi_algebra::rank_one_relations(real) {
            Ok(ids) => {
                for id in ids {
                    rows.push(check_identity(&mut ev, real, "casimir", &id, k));
                }
            }
            Err(e) => rows.push(RelationCheck::error("casimir", "rank-one reduction", real.params(), e)),
        }
    }
    rows
}

/// Rows specific to the scalar model: the printed `+` signs of the
/// factorization and the degenerate `Gamma_∅ = -1/2`.
fn scalar_rows(real: &Realization, k: u32) -> Vec<RelationCheck> {
    let n = real.n();
    let mut ev = Evaluator::new();
    let full = Subset::prefix(n);
    let ids = [
        Identity::new("D^2 = +Lap", vec![full], real.dirac(full).square(), real.laplace(full)),
        Identity::new("X^2 = +|x|^2", vec![full], real.position(full).square(), real.norm2(full)),
        Identity::new(
            "Gamma of empty set = -1/2",
            vec![Subset::EMPTY],
            real.gamma(Subset::EMPTY),
            OperatorExpr::scalar(Rational::new(-1, 2)),
        ),
    ];
    ids.iter().map(|id| check_identity(&mut ev, real, "scalar", id, k)).collect()
}

fn tag_clifford(mut rows: Vec<RelationCheck>) -> Vec<RelationCheck> {
    for r in &mut rows {
        r.realization.get_or_insert(RealizationKind::Clifford);
    }
    rows
}

fn build_tasks(config: &RunConfig, sets: &[ParameterSet]) -> Vec<Task> {
    let mut tasks = Vec::new();
    let n = config.n;
    let caps = config.k_caps;
    let kinds = config.realization.kinds();
    let top = Blade::from_mask((1 << n) - 1);
    for (pi, params) in sets.iter().enumerate() {
        for &kind in &kinds {
            let k = caps.operator(kind);
            let tag = |s: &str| format!("set{pi} {} {s}", kind.as_str());
            if config.selected(Suite::Osp) {
                let p = params.clone();
                tasks.push(task(tag("osp"), move || osp_rows(&Realization::new(kind, p.clone()), k)));
            }
            if config.selected(Suite::Bi) {
                let flip = config.inject_fault;
                for a in Subset::all(n) {
                    let p = params.clone();
                    tasks.push(task(tag(&format!("bi {a:?}")), move || {
                        bi_rows_for(&Realization::new(kind, p.clone()), a, k, flip)
                    }));
                }
                let p = params.clone();
                tasks.push(task(tag("bi structure"), move || bi_structure_rows(&Realization::new(kind, p.clone()), k)));
            }
            if config.selected(Suite::Casimir) {
                let p = params.clone();
                tasks.push(task(tag("casimir"), move || casimir_rows(&Realization::new(kind, p.clone()), k)));
            }
            if config.selected(Suite::Ladder) {
                let p = params.clone();
                tasks.push(task(tag("ladder operators"), move || {
                    let r = Realization::new(kind, p.clone());
                    let mut ev = Evaluator::new();
                    let mut rows = ladder::operator_suite(&mut ev, &r, k);
                    if r.kind() == RealizationKind::Clifford {
                        rows.push(ladder::verify_p_commutes(&mut ev, &r, k));
                    }
                    rows
                }));
            }
            if config.selected(Suite::Scalar) && kind == RealizationKind::Scalar {
                let p = params.clone();
                tasks.push(task(tag("scalar"), move || scalar_rows(&Realization::new(kind, p.clone()), k)));
            }
        }
        if !kinds.contains(&RealizationKind::Clifford) {
            continue;
        }
        let kb = caps.basis;
        let tag = |s: &str| format!("set{pi} clifford {s}");
        if config.selected(Suite::Monogenics) {
            for k in 0..=kb {
                let p = params.clone();
                tasks.push(task(tag(&format!("monogenics k={k}")), move || tag_clifford(monogenic_rows(&p, k))));
                for s in [Blade::UNIT, top] {
                    let p = params.clone();
                    tasks.push(task(tag(&format!("connection k={k} s={s}")), move || {
                        tag_clifford(vec![verify_connection(&p, k, s)])
                    }));
                }
            }
            if n == 3 {
                for l in 0..=2u32 {
                    let p = params.clone();
                    tasks.push(task(tag(&format!("power actions l={l}")), move || {
                        let mut rows = Vec::new();
                        for k in 0..=2 {
                            for j in 0..=k {
                                rows.push(monogenics::verify::verify_lemma13(&p, l, j, k));
                            }
                        }
                        tag_clifford(rows)
                    }));
                }
            }
        }
        if config.selected(Suite::Ladder) {
            for k in 0..=kb {
                let p = params.clone();
                tasks.push(task(tag(&format!("ladder actions k={k}")), move || {
                    tag_clifford(ladder::action_suite_at(&p, k))
                }));
            }
        }
    }
    tasks
}

/// The monogenic rows at a single degree.
fn monogenic_rows(params: &ParameterSet, k: u32) -> Vec<RelationCheck> {
    use monogenics::verify::*;
    let top = Blade::from_mask((1 << params.n()) - 1);
    let mut rows = vec![verify_kernel(params, k)];
    for s in [Blade::UNIT, top] {
        rows.push(verify_count_rank(params, k, s));
        rows.push(verify_cross_formula(params, k, s));
        rows.push(verify_orthogonality(params, k, s));
    }
    rows.push(verify_eigenvalue_grid(params, k));
    if params.n() == 3 {
        rows.push(verify_omega_scalar(params, k));
        rows.push(fischer_decompose(params, k));
    }
    rows
}

fn conventions(kinds: &[RealizationKind], n: usize) -> BTreeMap<String, String> {
    let p = ParameterSet::new(vec![Rational::ONE; n]).expect("unit parameters are valid");
    kinds
        .iter()
        .map(|&k| (k.as_str().to_string(), Realization::new(k, p.clone()).convention().to_string()))
        .collect()
}

/// Runs every selected suite. Tasks run on a worker pool and are merged
/// back in construction order, so the rows do not depend on `jobs`.
pub fn run_suite(config: &RunConfig) -> Result<VerificationReport> {
    config.validate()?;
    let sets = config.parameter_sets()?;
    let tasks = build_tasks(config, &sets);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let start = Instant::now();
    let results: Vec<(Vec<RelationCheck>, f64)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| {
                let t0 = Instant::now();
                let rows = (t.run)();
                (rows, t0.elapsed().as_secs_f64())
            })
            .collect()
    });
    let total_seconds = start.elapsed().as_secs_f64();
    let mut rows = Vec::new();
    let mut timings = Vec::new();
    for (t, (r, secs)) in tasks.iter().zip(results) {
        rows.extend(r);
        timings.push(Timing {
            task: t.label.clone(),
            seconds: secs,
        });
    }
    let mut summary = Summary {
        total: rows.len(),
        ..Summary::default()
    };
    for r in &rows {
        match r.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Error => summary.errors += 1,
        }
    }
    let kinds = config.realization.kinds();
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    let report = VerificationReport {
        schema_version: SCHEMA_VERSION,
        config: ConfigEcho {
            n: config.n,
            mu: config.mu.to_string(),
            parameter_sets: sets.iter().map(|p| p.to_strings()).collect(),
            k_caps: config.k_caps,
            suites,
            realizations: kinds.clone(),
            inject_fault: config.inject_fault,
            conventions: conventions(&kinds, config.n),
        },
        summary,
        rows,
        timings,
        total_seconds,
    };
    if let Some(dir) = &config.out {
        report.write(dir)?;
    }
    Ok(report)
}

/// File-name form of a blade: `unit` or the indices joined by `_`.
pub fn blade_tag(s: Blade) -> String {
    if s.is_unit() {
        "unit".to_string()
    } else {
        s.indices().map(|i| i.to_string()).collect::<Vec<_>>().join("_")
    }
}

/// Basis file text: a comment header, then per label a `# j = ...` line
/// followed by the canonical term lines and a blank line.
pub fn basis_file(params: &ParameterSet, k: u32, s: Blade, sector: bool) -> Result<String> {
    let basis = if sector {
        monogenics::sector_basis(params, k, s)?
    } else {
        monogenics::basis(params, k, s)?
    };
    let mut out = format!(
        "# n = {} k = {} s = {} mu = {}\n",
        params.n(),
        k,
        s,
        params.to_strings().join(",")
    );
    for (j, p) in basis {
        out.push_str(&format!("# j = {}\n", j.to_field()));
        out.push_str(&p.to_canonical_string());
        out.push('\n');
    }
    Ok(out)
}

/// One basis file per `(k, s)` for `k <= k_max` and every blade `s`.
pub fn export_basis(params: &ParameterSet, k_max: u32, sector: bool, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let n = params.n();
    let mut paths = Vec::new();
    for k in 0..=k_max {
        for s in Blade::all(n) {
            let path = dir.join(format!("basis_n{n}_k{k}_s{}.txt", blade_tag(s)));
            fs::write(&path, basis_file(params, k, s, sector)?)?;
            paths.push(path);
        }
    }
    Ok(paths)
}

/// Ladder coefficients per degree. The coefficients do not depend on the
/// right factor `v_s`, so only the unit sector is written.
pub fn export_ladder(params: &ParameterSet, k_max: u32, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let n = params.n();
    let mut paths = Vec::new();
    for k in 0..=k_max {
        let actions = ladder::ladder_actions(params, k, Blade::UNIT)?;
        let path = dir.join(format!("ladder_n{n}_k{k}.csv"));
        fs::write(&path, ladder::ladder_csv(&actions))?;
        paths.push(path);
    }
    Ok(paths)
}

/// Overlap matrix and Gram sidecar per degree, unit sector.
pub fn export_connection(params: &ParameterSet, k_max: u32, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let n = params.n();
    let mut paths = Vec::new();
    for k in 0..=k_max {
        let data = connection_matrix(params, k, Blade::UNIT)?;
        let main = dir.join(format!("connection_n{n}_k{k}.csv"));
        let gram = dir.join(format!("connection_n{n}_k{k}_gram.csv"));
        fs::write(&main, data.overlaps_csv())?;
        fs::write(&gram, data.gram_csv())?;
        paths.push(main);
        paths.push(gram);
    }
    Ok(paths)
}

/// All exports for the first parameter set of `config`, written to its
/// output directory.
pub fn export_artifacts(config: &RunConfig) -> Result<Vec<PathBuf>> {
    config.validate()?;
    let dir = config
        .out
        .clone()
        .ok_or_else(|| Error::InvalidConfig("export needs an output directory".into()))?;
    let params = config.parameter_sets()?.remove(0);
    let k = config.k_caps.basis;
    let mut paths = export_basis(&params, k, false, &dir)?;
    paths.extend(export_ladder(&params, k, &dir)?);
    paths.extend(export_connection(&params, k, &dir)?);
    Ok(paths)
}
