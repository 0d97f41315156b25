//! Named pass/fail checks with witnesses.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::diagram::Equality;
use crate::exactmath::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

/// An ordered list of checks; passes iff every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: if passed { None } else { witness },
            elapsed: None,
        });
    }

    pub fn push_equality(&mut self, name: impl Into<String>, eq: &Equality) {
        self.push(name, eq.equal, eq.witness.as_ref().map(|w| w.to_string()));
    }

    /// Compares two matrices, recording the first differing entry.
    pub fn push_matrices(&mut self, name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) {
        let witness = if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            Some(format!(
                "shapes {}x{} and {}x{}",
                lhs.rows(),
                lhs.cols(),
                rhs.rows(),
                rhs.cols()
            ))
        } else {
            lhs.first_difference(rhs)
                .map(|(i, j, a, b)| format!("entry ({i},{j}): {a} vs {b}"))
        };
        self.push(name, witness.is_none(), witness);
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .failures()
            .map(|c| match &c.witness {
                Some(w) => format!("{} ({w})", c.name),
                None => c.name.clone(),
            })
            .collect();
        if failed.is_empty() {
            format!("{} checks passed", self.checks.len())
        } else {
            format!("{} of {} checks failed: {}", failed.len(), self.checks.len(), failed.join("; "))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{}: {}", c.name, if c.passed { "pass" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                write!(f, " [{w}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
