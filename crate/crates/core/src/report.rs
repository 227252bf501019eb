//! Structured outcome of a verification check.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Result of one named check.
///
/// A report starts out passing. Recording a failure flips it to `Fail` and
/// stores the failing instance as a witness, so a failed report always
/// carries at least one witness. `Skip` is only reachable when nothing failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub counts: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, witness: impl Into<String>) {
        self.witnesses.push(witness.into());
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.status = Status::Fail;
        self.witnesses.push(witness.into());
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        if self.status != Status::Fail {
            self.status = Status::Skip;
        }
        self.witnesses.push(reason.into());
    }

    /// Records `ok` under `key`; on failure the lazily built witness is kept.
    pub fn check(&mut self, key: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.bump(key);
        if !ok {
            self.bump("failed");
            self.fail(witness());
        }
    }

    pub fn bump(&mut self, key: &str) {
        self.add(key, 1);
    }

    pub fn add(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += n;
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub skip: u64,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        reports.iter().fold(Self::default(), |mut s, r| {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skip => s.skip += 1,
            }
            s
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_keeps_witness_and_beats_skip() {
        let mut r = VerificationReport::new("demo");
        r.check("pairs", true, || unreachable!());
        assert!(r.passed());
        r.check("pairs", false, || "n=3".into());
        r.skip("late");
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses[0], "n=3");
        assert_eq!(r.count("pairs"), 2);
        assert_eq!(r.count("failed"), 1);
    }

    #[test]
    fn summary_counts_statuses() {
        let mut a = VerificationReport::new("a");
        a.skip("nothing to do");
        let b = VerificationReport::new("b");
        let mut c = VerificationReport::new("c");
        c.fail("x");
        assert_eq!(Summary::of(&[a, b, c]), Summary { pass: 1, fail: 1, skip: 1 });
    }
}
