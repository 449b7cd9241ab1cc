//! Identity checks and the report rows they produce.

use serde::Serialize;

use crate::algebra::{ParameterSet, Subset};
use crate::operators::{
    operators_equal_on_degree_with, Evaluator, OperatorExpr, Realization, RealizationKind,
    TestSpace, Witness,
};

/// A claimed operator identity `lhs = rhs`.
pub struct Identity {
    pub name: String,
    pub subsets: Vec<Subset>,
    pub lhs: OperatorExpr,
    pub rhs: OperatorExpr,
}

impl Identity {
    pub fn new(name: impl Into<String>, subsets: Vec<Subset>, lhs: OperatorExpr, rhs: OperatorExpr) -> Self {
        Identity {
            name: name.into(),
            subsets,
            lhs,
            rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Counterexample data. For operator identities `input` is the offending
/// basis element; for scalar checks it describes the case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        WitnessRecord {
            input: w.input.to_string(),
            lhs: w.lhs.to_string(),
            rhs: w.rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub suite: String,
    pub name: String,
    pub realization: Option<RealizationKind>,
    pub n: usize,
    pub mu: Vec<String>,
    pub subsets: Vec<Subset>,
    pub k_max: Option<u32>,
    pub status: Status,
    /// Number of basis elements or cases examined.
    pub checked: usize,
    pub witness: Option<WitnessRecord>,
    pub detail: Option<String>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// A non-operator check: `observed == expected` on the given case.
    pub fn scalar(
        suite: &str,
        name: impl Into<String>,
        params: &ParameterSet,
        realization: Option<RealizationKind>,
        case: impl Into<String>,
        observed: impl ToString,
        expected: impl ToString,
        ok: bool,
    ) -> Self {
        RelationCheck {
            suite: suite.to_string(),
            name: name.into(),
            realization,
            n: params.n(),
            mu: params.to_strings(),
            subsets: Vec::new(),
            k_max: None,
            status: if ok { Status::Pass } else { Status::Fail },
            checked: 1,
            witness: (!ok).then(|| WitnessRecord {
                input: case.into(),
                lhs: observed.to_string(),
                rhs: expected.to_string(),
            }),
            detail: None,
        }
    }

    pub fn error(suite: &str, name: impl Into<String>, params: &ParameterSet, err: impl ToString) -> Self {
        let msg = err.to_string();
        RelationCheck {
            suite: suite.to_string(),
            name: name.into(),
            realization: None,
            n: params.n(),
            mu: params.to_strings(),
            subsets: Vec::new(),
            k_max: None,
            status: Status::Error,
            checked: 0,
            witness: Some(WitnessRecord {
                input: String::new(),
                lhs: msg.clone(),
                rhs: String::new(),
            }),
            detail: Some(msg),
        }
    }

    pub fn with_realization(mut self, kind: RealizationKind) -> Self {
        self.realization = Some(kind);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Decides an identity on `P_{<=k_max}` in the realization's test space.
pub fn check_identity(
    ev: &mut Evaluator,
    real: &Realization,
    suite: &str,
    id: &Identity,
    k_max: u32,
) -> RelationCheck {
    check_identity_on(ev, real, suite, id, k_max, real.test_space())
}

pub fn check_identity_on(
    ev: &mut Evaluator,
    real: &Realization,
    suite: &str,
    id: &Identity,
    k_max: u32,
    space: TestSpace,
) -> RelationCheck {
    let base = RelationCheck {
        suite: suite.to_string(),
        name: id.name.clone(),
        realization: Some(real.kind()),
        n: real.n(),
        mu: real.params().to_strings(),
        subsets: id.subsets.clone(),
        k_max: Some(k_max),
        status: Status::Pass,
        checked: 0,
        witness: None,
        detail: None,
    };
    match operators_equal_on_degree_with(ev, &id.lhs, &id.rhs, real.n(), k_max, space) {
        Ok(out) => RelationCheck {
            status: if out.equal { Status::Pass } else { Status::Fail },
            checked: out.checked,
            witness: out.witness.as_ref().map(WitnessRecord::from),
            detail: (!out.equal).then(|| format!("lhs = {}", id.lhs.render())),
            ..base
        },
        Err(e) => RelationCheck {
            status: Status::Error,
            witness: Some(WitnessRecord {
                input: String::new(),
                lhs: e.to_string(),
                rhs: String::new(),
            }),
            detail: Some(e.to_string()),
            ..base
        },
    }
}

/// Accumulates many exact case comparisons into one report row, keeping the
/// first mismatch as the witness.
pub struct Tally {
    row: RelationCheck,
}

impl Tally {
    pub fn new(suite: &str, name: impl Into<String>, params: &ParameterSet) -> Self {
        let mut row = RelationCheck::scalar(suite, name, params, None, "", "", "", true);
        row.checked = 0;
        Tally { row }
    }

    pub fn record(&mut self, case: impl FnOnce() -> String, observed: impl ToString, expected: impl ToString, ok: bool) {
        self.row.checked += 1;
        if !ok && self.row.witness.is_none() {
            self.row.status = Status::Fail;
            self.row.witness = Some(WitnessRecord {
                input: case(),
                lhs: observed.to_string(),
                rhs: expected.to_string(),
            });
        }
    }

    /// Records `observed == expected`.
    pub fn compare<T: PartialEq + ToString>(&mut self, case: impl FnOnce() -> String, observed: &T, expected: &T) {
        let ok = observed == expected;
        if ok {
            self.record(String::new, "", "", true);
        } else {
            self.record(case, observed.to_string(), expected.to_string(), false);
        }
    }

    pub fn k_max(mut self, k: u32) -> Self {
        self.row.k_max = Some(k);
        self
    }

    pub fn realization(mut self, kind: RealizationKind) -> Self {
        self.row.realization = Some(kind);
        self
    }

    pub fn subsets(mut self, subsets: Vec<Subset>) -> Self {
        self.row.subsets = subsets;
        self
    }

    pub fn failed(&self) -> bool {
        !self.row.passed()
    }

    pub fn finish(self) -> RelationCheck {
        self.row
    }
}

/// Collapses a fallible tally into a row, turning errors into error rows.
pub fn finish_tally(
    suite: &str,
    name: impl Into<String>,
    params: &ParameterSet,
    run: impl FnOnce() -> crate::Result<Tally>,
) -> RelationCheck {
    let name = name.into();
    match run() {
        Ok(t) => t.finish(),
        Err(e) => RelationCheck::error(suite, name, params, e),
    }
}
