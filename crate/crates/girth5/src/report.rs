//! Suite reports: one case per checked claim, JSON and a human summary.

use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub params: serde_json::Value,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl Case {
    pub fn new(id: impl Into<String>, params: serde_json::Value, expected: impl ToString, actual: impl ToString) -> Case {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        Case { id: id.into(), params, expected, actual, ok }
    }

    /// A case whose verdict is decided by the caller.
    pub fn check(id: impl Into<String>, params: serde_json::Value, expected: impl ToString, actual: impl ToString, ok: bool) -> Case {
        Case { id: id.into(), params, expected: expected.to_string(), actual: actual.to_string(), ok }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<Case>,
    /// Wall time; kept out of the JSON unless asked for, so reports of
    /// identical runs are byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
    pub exit: i32,
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<Case>, elapsed: Duration) -> SuiteReport {
        let exit = i32::from(cases.iter().any(|c| !c.ok));
        SuiteReport { suite: suite.into(), cases, elapsed, exit }
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.ok).count()
    }

    pub fn ok(&self) -> bool {
        self.exit == 0
    }

    pub fn to_json(&self, timing: bool) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if timing {
            v["elapsed_ms"] = serde_json::json!(self.elapsed.as_millis() as u64);
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    /// One line per failed case plus a count line.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in self.cases.iter().filter(|c| !c.ok) {
            out.push_str(&format!("  FAIL {} {}: expected {}, got {}\n", c.id, c.params, c.expected, c.actual));
        }
        out.push_str(&format!(
            "{}: {}/{} ok ({:.2}s)\n",
            self.suite,
            self.passed(),
            self.cases.len(),
            self.elapsed.as_secs_f64()
        ));
        out
    }
}

/// 0 when every report passed, else 1.
pub fn exit_code(reports: &[SuiteReport]) -> i32 {
    i32::from(reports.iter().any(|r| !r.ok()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn report(oks: &[bool]) -> SuiteReport {
        let cases = oks
            .iter()
            .enumerate()
            .map(|(i, &ok)| Case::check(format!("c{i}"), serde_json::json!({ "i": i }), "x", "y", ok))
            .collect();
        SuiteReport::new("t", cases, Duration::from_millis(5))
    }

    proptest! {
        #[test]
        fn exit_is_zero_iff_all_ok(oks in proptest::collection::vec(any::<bool>(), 0..20)) {
            let r = report(&oks);
            prop_assert_eq!(r.exit == 0, oks.iter().all(|&b| b));
            prop_assert_eq!(exit_code(std::slice::from_ref(&r)), r.exit);
        }

        #[test]
        fn summary_and_json_agree_on_counts(oks in proptest::collection::vec(any::<bool>(), 0..20)) {
            let r = report(&oks);
            let back: SuiteReport = serde_json::from_str(&r.to_json(false)).unwrap();
            let n_ok = back.cases.iter().filter(|c| c.ok).count();
            let expected = format!("t: {}/{} ok", n_ok, oks.len());
            prop_assert!(r.summary().contains(&expected));
            prop_assert_eq!(r.summary().matches("FAIL").count(), oks.len() - n_ok);
        }
    }

    #[test]
    fn timing_only_on_request() {
        let r = report(&[true]);
        assert!(!r.to_json(false).contains("elapsed"));
        assert!(r.to_json(true).contains("\"elapsed_ms\": 5"));
    }
}
