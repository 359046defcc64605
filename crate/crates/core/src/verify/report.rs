use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked.
    pub claim: String,
    pub status: Status,
    /// Counterexample data on failure; supporting data otherwise.
    pub witness: Option<Value>,
    pub millis: Option<u64>,
}

/// Poset counts for one size of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepCount {
    pub size: usize,
    pub posets: usize,
    pub ideal_lattices_verified: usize,
    pub lattices_classified: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub input: String,
    pub field: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Vec<SweepCount>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Drops timings so that repeated runs serialize identically.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.millis = None;
        }
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("verification of {} over {}\n", self.input, self.field);
        if let Some(counts) = &self.sweep {
            for c in counts {
                out.push_str(&format!(
                    "  size {}: {} posets, {} ideal lattices verified, {} lattices classified\n",
                    c.size, c.posets, c.ideal_lattices_verified, c.lattices_classified
                ));
            }
        }
        for c in &self.checks {
            out.push_str(&format!("  [{}] {}: {}", c.status, c.name, c.claim));
            if let Some(ms) = c.millis {
                out.push_str(&format!(" ({ms} ms)"));
            }
            out.push('\n');
            if c.status == Status::Fail {
                if let Some(w) = &c.witness {
                    out.push_str(&format!("      witness: {w}\n"));
                }
            }
        }
        let fails = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), fails));
        out
    }
}

pub(crate) enum Outcome {
    Pass(Option<Value>),
    Fail(Value),
    Skipped(String),
}

impl Outcome {
    pub(crate) fn from_bool(ok: bool, witness: Value) -> Self {
        if ok {
            Outcome::Pass(Some(witness))
        } else {
            Outcome::Fail(witness)
        }
    }
}

#[derive(Default)]
pub(crate) struct Checker {
    pub checks: Vec<Check>,
}

impl Checker {
    pub fn run(&mut self, name: &str, claim: &str, f: impl FnOnce() -> Result<Outcome>) -> Result<()> {
        let start = Instant::now();
        let outcome = f()?;
        let millis = Some(start.elapsed().as_millis() as u64);
        let (status, witness) = match outcome {
            Outcome::Pass(w) => (Status::Pass, w),
            Outcome::Fail(w) => (Status::Fail, Some(w)),
            Outcome::Skipped(reason) => (Status::Skipped, Some(Value::String(reason))),
        };
        self.checks.push(Check {
            name: name.into(),
            claim: claim.into(),
            status,
            witness,
            millis,
        });
        Ok(())
    }
}
