//! One PASS/FAIL line per acceptance criterion, using the default budgets.
//! Runs without the test harness so the lines always print.

mod support;

use std::collections::BTreeSet;
use std::time::Instant;

use girth5::budget::Budget;
use girth5::parallel::Parallel;
use girth5::report::SuiteReport;
use girth5::suites::run_suite;
use girth5_core::canon::CanonicalForm;
use girth5_core::enumerate::{Search, SearchSpec};

use support::oracle::critical_keys_up_to;

fn suites(names: &[&str], b: &Budget, p: &Parallel) -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in names {
        let r: SuiteReport = run_suite(name, b, p).unwrap_or_else(|e| panic!("{name}: {e}"));
        ok &= r.ok();
        detail.push(format!("{name} {}/{}", r.passed(), r.cases.len()));
        for c in r.cases.iter().filter(|c| !c.ok) {
            detail.push(format!("[{} expected {} got {}]", c.id, c.expected, c.actual));
        }
    }
    (ok, detail.join(", "))
}

fn search_keys(spec: SearchSpec, p: &Parallel) -> BTreeSet<CanonicalForm> {
    Search::new(spec).unwrap().run(p).unwrap().found.into_iter().map(|f| f.key).collect()
}

fn oracle_equivalence(p: &Parallel) -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for l in 5..=10 {
        let ours = search_keys(SearchSpec::disk(l, 3), p);
        let theirs = critical_keys_up_to(&[l], 3, 5, false, false);
        ok &= ours == theirs;
        detail.push(format!("disk-{l} {}={}", ours.len(), theirs.len()));
    }
    let ours = search_keys(SearchSpec::cylinder(3, 3, 1), p);
    let theirs = critical_keys_up_to(&[3, 3], 1, 3, true, true);
    ok &= ours == theirs;
    detail.push(format!("cyl-3-3 {}={}", ours.len(), theirs.len()));
    (ok, detail.join(", "))
}

fn main() {
    let b = Budget::default();
    let p = Parallel::from_env();
    let criteria: [(&str, &dyn Fn() -> (bool, String)); 10] = [
        ("constants", &|| suites(&["s-props"], &b, &p)),
        ("surface inequalities", &|| suites(&["surfineq"], &b, &p)),
        ("cyl fixpoint", &|| suites(&["cyl"], &b, &p)),
        ("chains", &|| suites(&["chains"], &b, &p)),
        ("disk enumeration", &|| suites(&["planechar-small", "diskweight-small"], &b, &p)),
        ("short-cycle cylinder", &|| suites(&["critshort"], &b, &p)),
        ("basic graphs", &|| suites(&["basic"], &b, &p)),
        ("one-ring negative search", &|| suites(&["aksen-small"], &b, &p)),
        ("oracle equivalence", &|| oracle_equivalence(&p)),
        ("instance bounds", &|| suites(&["concentric"], &b, &p)),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {name} ({detail}) [{:.1}s]", i + 1, t.elapsed().as_secs_f64());
        if !ok {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
