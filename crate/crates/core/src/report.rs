//! Check reports with a fixed JSON layout:
//! `{suite, config_echo, checks: [{name, status, witness?, millis}], aggregate}`.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// `None` unless timings were requested, so that reports stay byte-identical.
    pub millis: Option<u64>,
    /// One-line outcome for text output.
    #[serde(skip)]
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub config_echo: serde_json::Value,
    pub checks: Vec<CheckRecord>,
    pub aggregate: Status,
}

impl Report {
    pub fn new(suite: impl Into<String>, config_echo: serde_json::Value) -> Report {
        Report {
            suite: suite.into(),
            config_echo,
            checks: Vec::new(),
            aggregate: Status::Pass,
        }
    }

    /// Runs `check` and records its outcome. Any error fails the check; the error text
    /// becomes the witness.
    pub fn run(
        &mut self,
        name: &str,
        timed: bool,
        check: impl FnOnce() -> Result<String>,
    ) -> &CheckRecord {
        let start = Instant::now();
        let outcome = check();
        let millis = timed.then(|| start.elapsed().as_millis() as u64);
        let record = match outcome {
            Ok(summary) => CheckRecord {
                name: name.to_string(),
                status: Status::Pass,
                witness: None,
                millis,
                summary,
            },
            Err(e) => CheckRecord {
                name: name.to_string(),
                status: Status::Fail,
                witness: Some(witness_of(&e)),
                millis,
                summary: String::new(),
            },
        };
        self.push(record);
        self.checks.last().expect("just pushed")
    }

    pub fn push(&mut self, record: CheckRecord) {
        if record.status == Status::Fail {
            self.aggregate = Status::Fail;
        }
        self.checks.push(record);
    }

    pub fn passed(&self) -> bool {
        self.aggregate == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {}\n", self.suite);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = write!(s, "{status} {}", c.name);
            if let Some(ms) = c.millis {
                let _ = write!(s, " ({ms} ms)");
            }
            if !c.summary.is_empty() {
                let _ = write!(s, ": {}", c.summary);
            }
            if let Some(w) = &c.witness {
                let _ = write!(s, "\n     {w}");
            }
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "aggregate {}",
            if self.passed() { "pass" } else { "fail" }
        );
        s
    }
}

fn witness_of(e: &Error) -> String {
    match e {
        Error::Violation(c) => c.to_string(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregate_follows_checks() {
        let mut r = Report::new("t", serde_json::json!({}));
        r.run("ok", false, || Ok("fine".into()));
        assert!(r.passed());
        r.run("bad", false, || Err(Error::violation("claim", "0101")));
        assert!(!r.passed());
        assert_eq!(r.checks[1].witness.as_deref(), Some("claim: 0101"));
    }

    #[test]
    fn json_layout() {
        let mut r = Report::new("t", serde_json::json!({"seed": 1}));
        r.run("ok", false, || Ok("fine".into()));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["aggregate", "checks", "config_echo", "suite"]);
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0]["millis"].is_null());
        assert!(v["checks"][0].get("witness").is_none());
        assert!(v["checks"][0].get("summary").is_none());
    }
}
