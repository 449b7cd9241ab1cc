//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. The engine is driven through `dunkl-core` and, for
//! the determinism check, through the C ABI as well.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::ffi::{CStr, CString};
use std::process::ExitCode;
use std::ptr;
use std::time::Instant;

use dunkl_core::algebra::ParameterSet;
use dunkl_core::checks::RelationCheck;
use dunkl_core::operators::RealizationKind;
use dunkl_core::runner::{run_suite, KCaps, MuSpec, RunConfig, Suite, VerificationReport};
use dunkl_ffi::{dunkl_run_suite_json, dunkl_string_free, DunklStatus};

struct Outcome {
    ok: bool,
    detail: String,
}

/// Rows of `report` in `suite` whose name satisfies `pick`. A selection
/// that matches nothing counts as a failure.
fn select<'a>(
    report: &'a VerificationReport,
    suite: &str,
    pick: impl Fn(&RelationCheck) -> bool,
) -> Vec<&'a RelationCheck> {
    report.rows.iter().filter(|r| r.suite == suite && pick(r)).collect()
}

fn judge(label: &str, rows: &[&RelationCheck], expected_count: Option<usize>) -> Outcome {
    let failing: Vec<&&RelationCheck> = rows.iter().filter(|r| !r.passed()).collect();
    let count_ok = expected_count.map_or(!rows.is_empty(), |c| rows.len() == c);
    let mut detail = format!("{label}: {}/{} rows pass", rows.len() - failing.len(), rows.len());
    if let Some(c) = expected_count {
        if rows.len() != c {
            detail.push_str(&format!(" (expected {c} rows)"));
        }
    }
    if let Some(f) = failing.first() {
        let w = f.witness.as_ref().map(|w| format!("{} -> {} vs {}", w.input, w.lhs, w.rhs)).unwrap_or_default();
        detail.push_str(&format!("; first failure n={} mu={:?} {}: {w}", f.n, f.mu, f.name));
    }
    Outcome {
        ok: count_ok && failing.is_empty(),
        detail,
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        ok: parts.iter().all(|p| p.ok),
        detail: parts.into_iter().map(|p| p.detail).collect::<Vec<_>>().join(" | "),
    }
}

fn both_n<'a>(reports: &'a [VerificationReport; 2], f: impl Fn(&'a VerificationReport) -> Outcome) -> Outcome {
    all(reports.iter().map(f).collect())
}

fn is(name: &'static str) -> impl Fn(&RelationCheck) -> bool {
    move |r| r.name == name
}

fn kind(r: &RelationCheck, k: RealizationKind) -> bool {
    r.realization == Some(k)
}

fn c1(rep: &[VerificationReport; 2]) -> Outcome {
    both_n(rep, |r| {
        let rows = select(r, "osp", |x| x.name == "osp(1|2) relations" && kind(x, RealizationKind::Clifford));
        let expected = r.config.parameter_sets.len() << r.config.n;
        judge(&format!("n={} ten osp relations, every A", r.config.n), &rows, Some(expected))
    })
}

fn c2(rep: &[VerificationReport; 2]) -> Outcome {
    both_n(rep, |r| {
        let mut rows = select(r, "osp", is("square factorization"));
        rows.extend(select(r, "scalar", |x| x.name.starts_with("D^2") || x.name.starts_with("X^2")));
        judge(&format!("n={} D^2, x^2 both models", r.config.n), &rows, None)
    })
}

fn c3(rep: &[VerificationReport; 2]) -> Outcome {
    both_n(rep, |r| {
        let rows = select(r, "bi", is("bannai-ito"));
        let pairs = 1usize << (2 * r.config.n);
        let expected = 2 * pairs * r.config.parameter_sets.len();
        judge(&format!("n={} {pairs} ordered pairs x 2 models", r.config.n), &rows, Some(expected))
    })
}

fn c4(rep: &[VerificationReport; 2]) -> Outcome {
    both_n(rep, |r| {
        let rows = select(r, "casimir", |x| !x.name.starts_with('{'));
        judge(&format!("n={} casimir commutation and values", r.config.n), &rows, None)
    })
}

fn c5(rep: &[VerificationReport; 2]) -> Outcome {
    let rows = select(&rep[0], "casimir", |x| x.name.starts_with('{'));
    judge("n=3 three cyclic relations", &rows, Some(3 * 2 * rep[0].config.parameter_sets.len()))
}

fn c6(rep: &[VerificationReport; 2]) -> Outcome {
    both_n(rep, |r| {
        let names = ["kernel of D", "label count and rank", "joint eigenvalues", "tower equals Jacobi form"];
        let rows = select(r, "monogenics", |x| names.contains(&x.name.as_str()));
        judge(&format!("n={} kernel, count, eigenvalues, Jacobi form", r.config.n), &rows, None)
    })
}

fn c7(rep: &[VerificationReport; 2]) -> Outcome {
    let rows = select(&rep[0], "monogenics", |x| x.name.starts_with("power actions"));
    // l in 0..=2 and 0 <= j <= k <= 2 per parameter set
    judge("n=3 power actions", &rows, Some(18 * rep[0].config.parameter_sets.len()))
}

fn c8(rep: &[VerificationReport; 2]) -> Outcome {
    let rows = select(&rep[0], "monogenics", is("Fischer decomposition"));
    judge("n=3 k<=3 Fischer rank", &rows, Some(4 * rep[0].config.parameter_sets.len()))
}

fn c9(rep: &[VerificationReport; 2]) -> Outcome {
    let rows = select(&rep[0], "monogenics", is("orthogonality"));
    let gram = judge("n=3 diagonal positive Gram", &rows, None);
    let mut worst = 0.0f64;
    let mut sets: Vec<ParameterSet> = ParameterSet::sample_many(3, 1, 3).unwrap();
    sets.extend(sets.clone().iter().map(|p| p.truncated(2).unwrap()));
    for p in &sets {
        worst = worst.max(common::moment_deviation(p, 3));
    }
    let quad = Outcome {
        ok: worst < 1e-8,
        detail: format!("moment quadrature n=2,3 max deviation {worst:.2e}"),
    };
    all(vec![gram, quad])
}

fn c10(rep: &[VerificationReport; 2]) -> Outcome {
    let mut parts = Vec::new();
    for r in rep {
        let n = r.config.n;
        let ops = select(r, "ladder", |x| x.name.ends_with("covariance") || x.name.ends_with("square factorization"));
        parts.push(judge(&format!("n={n} covariance and square factorization"), &ops, None));
        parts.push(judge(&format!("n={n} K^2 = alpha"), &select(r, "ladder", is("square eigenvalues")), None));
        let act = select(r, "ladder", |x| x.name.starts_with("ladder action"));
        parts.push(judge(&format!("n={n} single-target action"), &act, None));
        let irr = select(r, "ladder", |x| x.name.starts_with("irreducibility"));
        parts.push(judge(&format!("n={n} strongly connected"), &irr, None));
        let listed = select(r, "ladder", is("alpha zero iff listed case"));
        parts.push(judge(&format!("n={n} vanishing pattern as printed"), &listed, None));
        // reported alongside, not part of the verdict
        let target = select(r, "ladder", is("alpha zero iff target leaves simplex"));
        let t = judge(&format!("[info] n={n} alpha zero iff target leaves simplex"), &target, None);
        parts.push(Outcome { ok: true, detail: t.detail });
    }
    all(parts)
}

fn c11(rep: &[VerificationReport; 2]) -> Outcome {
    let rows = select(&rep[0], "monogenics", is("connection unitarity"));
    let unit = judge("n=3 k<=3 C^T G C = G'", &rows, None);
    let mut oracle = Outcome {
        ok: true,
        detail: "recurrence oracle columns".into(),
    };
    let mut columns = 0;
    for p in rep[0].config.parameter_sets.iter() {
        let items: Vec<&str> = p.iter().map(String::as_str).collect();
        let params = ParameterSet::from_strs(&items).unwrap();
        for k in 0..=3 {
            match common::connection_against_recurrence(&params, k) {
                Ok(c) => columns += c,
                Err(e) => {
                    oracle.ok = false;
                    oracle.detail = format!("recurrence oracle mismatch: {e}");
                }
            }
        }
    }
    if oracle.ok {
        oracle.detail = format!("recurrence oracle: {columns} columns proportional");
    }
    all(vec![unit, oracle])
}

fn ffi_report(n: usize) -> String {
    let mu = CString::new("random:3").unwrap();
    let suites = CString::new("osp,bi,casimir").unwrap();
    let mut out = ptr::null_mut();
    let mut ok = 0;
    let st = unsafe { dunkl_run_suite_json(n, mu.as_ptr(), 2, suites.as_ptr(), ptr::null(), &mut out, &mut ok) };
    assert_eq!(st, DunklStatus::Ok);
    let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe { dunkl_string_free(out) };
    s
}

fn c12(rep: &[VerificationReport; 2]) -> Outcome {
    let serial = run_suite(&RunConfig { jobs: 1, ..default_config(3) }).unwrap();
    let same = serial.to_json() == rep[0].to_json();
    let ffi_same = ffi_report(3) == ffi_report(3);
    let mut bad = RunConfig {
        k_caps: KCaps::uniform(2),
        suites: vec![Suite::Bi],
        inject_fault: true,
        ..default_config(3)
    };
    bad.parameter_sets = 1;
    let fault = run_suite(&bad).unwrap();
    let witnessed = fault.exit_code() != 0 && fault.failures().all(|r| r.witness.as_ref().is_some_and(|w| !w.input.is_empty()));
    Outcome {
        ok: same && ffi_same && witnessed,
        detail: format!(
            "serial vs parallel report identical: {same}; C ABI reruns identical: {ffi_same}; injected flip: {} failing rows with witnesses: {witnessed}",
            fault.summary.failed
        ),
    }
}

fn default_config(n: usize) -> RunConfig {
    RunConfig {
        mu: MuSpec::Random(1),
        ..RunConfig::new(n)
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let reports = [run_suite(&default_config(3)).unwrap(), run_suite(&default_config(4)).unwrap()];
    println!(
        "full runs: n=3 {} rows in {:.1}s, n=4 {} rows in {:.1}s",
        reports[0].summary.total, reports[0].total_seconds, reports[1].summary.total, reports[1].total_seconds
    );
    let criteria: [(&str, fn(&[VerificationReport; 2]) -> Outcome); 12] = [
        ("osp(1|2) relations", c1),
        ("factorization identities", c2),
        ("Bannai-Ito relations", c3),
        ("Casimirs", c4),
        ("rank-one reduction", c5),
        ("monogenic basis", c6),
        ("power actions", c7),
        ("Fischer decomposition", c8),
        ("orthogonality and moments", c9),
        ("ladder suite", c10),
        ("connection coefficients", c11),
        ("determinism and negative control", c12),
    ];
    let mut failed = Vec::new();
    for (i, (title, f)) in criteria.iter().enumerate() {
        let o = f(&reports);
        println!("criterion {:>2} {} {title}: {}", i + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed.push(i + 1);
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if failed.is_empty() {
        println!("all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
