//! Pass/fail records produced by every verification step.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The identity only applies to a different class of inputs.
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    /// First counterexample found, for failures.
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::Pass, witness: None, note: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::Fail, witness: Some(witness.into()), note: None }
    }

    pub fn not_applicable(id: impl Into<String>, note: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::NotApplicable, witness: None, note: Some(note.into()) }
    }

    /// `Ok` passes, `Err(witness)` fails.
    pub fn from_result(id: impl Into<String>, r: std::result::Result<(), String>) -> Check {
        match r {
            Ok(()) => Check::pass(id),
            Err(w) => Check::fail(id, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check {}: {}", self.id, self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " note={n}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `Err` with a formatted witness unless `cond` holds.
pub(crate) fn ensure(cond: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}
