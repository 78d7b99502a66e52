//! Structured pass/fail reports for the exhaustive theorem checks.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// A verdict that is neither a pass nor a failure, e.g. whether a
    /// theorem's hypothesis holds on this instance.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub clause: String,
    pub status: Status,
    /// Number of instances evaluated.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub clauses: Vec<Clause>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport { check: check.into(), clauses: Vec::new() }
    }

    /// True iff no clause failed. Skipped clauses do not count as failures.
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub fn skip(&mut self, clause: impl Into<String>, reason: impl Into<String>) {
        self.clauses.push(Clause {
            clause: clause.into(),
            status: Status::Skipped,
            checked: 0,
            witness: Some(reason.into()),
        });
    }

    pub fn info(&mut self, clause: impl Into<String>, checked: usize, verdict: impl Into<String>) {
        self.clauses.push(Clause {
            clause: clause.into(),
            status: Status::Info,
            checked,
            witness: Some(verdict.into()),
        });
    }

    /// Starts accumulating one clause; call [`ClauseCheck::finish`] to record it.
    pub fn clause(&mut self, name: impl Into<String>) -> ClauseCheck<'_> {
        ClauseCheck { report: self, name: name.into(), checked: 0, witness: None }
    }
}

/// Accumulates instances of one clause, keeping the first failing witness.
pub struct ClauseCheck<'a> {
    report: &'a mut CheckReport,
    name: String,
    checked: usize,
    witness: Option<String>,
}

impl ClauseCheck<'_> {
    pub fn check(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn finish(self) -> bool {
        let ok = self.witness.is_none();
        self.report.clauses.push(Clause {
            clause: self.name,
            status: if ok { Status::Pass } else { Status::Fail },
            checked: self.checked,
            witness: self.witness,
        });
        ok
    }
}

/// Free-standing clause accumulator.
pub struct Tally {
    name: String,
    checked: usize,
    witness: Option<String>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), checked: 0, witness: None }
    }

    pub fn check(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn into_clause(self) -> Clause {
        Clause {
            status: if self.witness.is_none() { Status::Pass } else { Status::Fail },
            clause: self.name,
            checked: self.checked,
            witness: self.witness,
        }
    }
}
