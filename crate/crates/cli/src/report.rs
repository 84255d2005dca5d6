//! Verification reports: a stable list of assertion records with pass,
//! fail or skip status, rendered as JSON, CSV or human-readable text.
//!
//! Record order is fixed by assertion id. The timestamp lives in a single
//! header field so byte comparison of reports can exclude it.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Assertion {
    pub id: String,
    pub anchor: String,
    pub inputs: String,
    pub computed: String,
    pub expected: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Assertion {
    pub fn check(
        id: impl Into<String>,
        anchor: impl Into<String>,
        inputs: impl Into<String>,
        computed: impl Into<String>,
        expected: impl Into<String>,
        pass: bool,
    ) -> Self {
        Assertion {
            id: id.into(),
            anchor: anchor.into(),
            inputs: inputs.into(),
            computed: computed.into(),
            expected: expected.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            note: String::new(),
        }
    }

    pub fn skip(
        id: impl Into<String>,
        anchor: impl Into<String>,
        inputs: impl Into<String>,
        note: impl Into<String>,
    ) -> Self {
        Assertion {
            id: id.into(),
            anchor: anchor.into(),
            inputs: inputs.into(),
            computed: String::from("-"),
            expected: String::from("-"),
            status: Status::Skip,
            note: note.into(),
        }
    }

    pub fn is_budget_skip(&self) -> bool {
        self.status == Status::Skip && self.note.contains("budget")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Header {
    pub suite: String,
    pub timestamp: String,
    pub field: String,
    #[serde(rename = "N")]
    pub n_levels: usize,
    pub seed: u64,
    pub budget: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub header: Header,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn new(header: Header, mut assertions: Vec<Assertion>) -> Self {
        assertions.sort_by(|a, b| a.id.cmp(&b.id));
        Report { header, assertions }
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.status != Status::Fail)
    }

    pub fn any_budget_skip(&self) -> bool {
        self.assertions.iter().any(|a| a.is_budget_skip())
    }

    /// Process exit code contract: 0 all pass, 1 any failure, 3 any
    /// budget-induced skip.
    pub fn exit_code(&self) -> i32 {
        if !self.all_pass() {
            1
        } else if self.any_budget_skip() {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,anchor,inputs,computed,expected,status,note\n");
        for a in &self.assertions {
            let esc = |s: &str| {
                if s.contains(',') || s.contains('"') {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.to_string()
                }
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                esc(&a.id),
                esc(&a.anchor),
                esc(&a.inputs),
                esc(&a.computed),
                esc(&a.expected),
                match a.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skip => "skip",
                },
                esc(&a.note),
            ));
        }
        out
    }

    pub fn to_human(&self) -> String {
        let mut out = format!(
            "suite {} (field {}, N {}): {} assertions\n",
            self.header.suite,
            self.header.field,
            self.header.n_levels,
            self.assertions.len()
        );
        for a in &self.assertions {
            let tag = match a.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("[{tag}] {}: {}\n", a.id, a.anchor));
            if a.status == Status::Fail {
                out.push_str(&format!(
                    "       inputs: {}\n       computed: {}\n       expected: {}\n",
                    a.inputs, a.computed, a.expected
                ));
            }
            if !a.note.is_empty() {
                out.push_str(&format!("       note: {}\n", a.note));
            }
        }
        let verdict = if self.all_pass() { "ALL PASS" } else { "FAILURES" };
        out.push_str(&format!("{verdict}\n"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let header = Header {
            suite: "t".into(),
            timestamp: "0".into(),
            field: "Q".into(),
            n_levels: 4,
            seed: 0,
            budget: 0,
        };
        let pass = Assertion::check("a", "x", "i", "1", "1", true);
        let fail = Assertion::check("b", "x", "i", "1", "2", false);
        let skip = Assertion::skip("c", "x", "i", "budget exceeded: 9000 > 10");
        assert_eq!(Report::new(header.clone(), vec![pass.clone()]).exit_code(), 0);
        assert_eq!(
            Report::new(header.clone(), vec![pass.clone(), fail]).exit_code(),
            1
        );
        assert_eq!(Report::new(header, vec![pass, skip]).exit_code(), 3);
    }

    #[test]
    fn records_sorted_by_id() {
        let header = Header {
            suite: "t".into(),
            timestamp: "0".into(),
            field: "Q".into(),
            n_levels: 4,
            seed: 0,
            budget: 0,
        };
        let r = Report::new(
            header,
            vec![
                Assertion::check("b", "", "", "", "", true),
                Assertion::check("a", "", "", "", "", true),
            ],
        );
        assert_eq!(r.assertions[0].id, "a");
    }
}
