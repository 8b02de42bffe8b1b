//! Verification reports: one record per checked case, summary counts, the
//! configuration echo, and the list of findings where a symbolic claim and
//! the oracle disagree with the claim as written.

use std::fmt::Write as _;

use serde::Serialize;

use sl2dyn::oracle::{Check, Verdict};

/// One checked case.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Case {
    pub id: String,
    pub paper_ref: String,
    pub verdict: String,
    pub details: String,
}

impl Case {
    pub fn new(id: impl Into<String>, paper_ref: &str, verdict: Verdict, details: impl Into<String>) -> Self {
        Case { id: id.into(), paper_ref: paper_ref.to_string(), verdict: verdict.to_string(), details: details.into() }
    }

    pub fn from_check(id: impl Into<String>, paper_ref: &str, check: Check) -> Self {
        Case::new(id, paper_ref, check.verdict, check.details)
    }

    /// PASS iff `ok`, with the same details either way.
    pub fn expect(id: impl Into<String>, paper_ref: &str, ok: bool, details: impl Into<String>) -> Self {
        Case::new(id, paper_ref, if ok { Verdict::Pass } else { Verdict::Fail }, details)
    }

    pub fn verdict(&self) -> Verdict {
        match self.verdict.as_str() {
            "PASS" => Verdict::Pass,
            "FAIL" => Verdict::Fail,
            _ => Verdict::Indeterminate,
        }
    }
}

/// A discrepancy between a claim as stated and what the rules and the oracle
/// compute; findings never fail a suite on their own.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Finding {
    pub id: String,
    pub paper_ref: String,
    pub stated: String,
    pub computed: String,
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConfigEcho {
    pub precision: usize,
    pub levels: usize,
    pub horizon: usize,
    pub coset_bound: i64,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub config: ConfigEcho,
    pub findings: Vec<Finding>,
}

impl Report {
    /// Assembles a report; findings are deduplicated by id, first one kept.
    pub fn new(suite: &str, cases: Vec<Case>, findings: Vec<Finding>, config: ConfigEcho) -> Self {
        let mut summary = Summary { total: cases.len(), ..Summary::default() };
        for c in &cases {
            match c.verdict() {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Indeterminate => summary.indeterminate += 1,
            }
        }
        let mut unique: Vec<Finding> = Vec::new();
        for f in findings {
            if !unique.iter().any(|u| u.id == f.id) {
                unique.push(f);
            }
        }
        Report { suite: suite.to_string(), cases, summary, config, findings: unique }
    }

    /// 0 without FAIL or INDETERMINATE, 1 with any FAIL, 3 with only
    /// INDETERMINATE besides PASS.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.indeterminate > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(out, "{:<13} {}  {}", c.verdict, c.id, c.details);
        }
        for f in &self.findings {
            let _ = writeln!(out, "FINDING       {}: stated {}; computed {}", f.id, f.stated, f.computed);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "suite {}: {} cases, {} pass, {} fail, {} indeterminate, {} findings",
            self.suite,
            s.total,
            s.pass,
            s.fail,
            s.indeterminate,
            self.findings.len()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn echo() -> ConfigEcho {
        ConfigEcho { precision: 32, levels: 8, horizon: 256, coset_bound: 5, seed: 0 }
    }

    fn finding(id: &str) -> Finding {
        Finding { id: id.into(), paper_ref: String::new(), stated: "a".into(), computed: "b".into(), evidence: vec![] }
    }

    #[test]
    fn exit_codes() {
        let pass = Case::expect("a", "", true, "");
        let fail = Case::expect("b", "", false, "");
        let ind = Case::new("c", "", Verdict::Indeterminate, "");
        assert_eq!(Report::new("x", vec![pass.clone()], vec![], echo()).exit_code(), 0);
        assert_eq!(Report::new("x", vec![pass.clone(), ind.clone()], vec![], echo()).exit_code(), 3);
        assert_eq!(Report::new("x", vec![pass, ind, fail], vec![], echo()).exit_code(), 1);
    }

    #[test]
    fn findings_are_deduplicated() {
        let r = Report::new("x", vec![], vec![finding("k"), finding("k"), finding("e")], echo());
        assert_eq!(r.findings.iter().map(|f| f.id.as_str()).collect::<Vec<_>>(), ["k", "e"]);
    }

    #[test]
    fn json_field_names() {
        let r = Report::new("x", vec![Case::expect("a", "ref", true, "d")], vec![], echo());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["cases", "config", "findings", "suite", "summary"]);
        assert_eq!(v["cases"][0]["verdict"], "PASS");
        assert_eq!(v["summary"]["pass"], 1);
    }
}
