//! Verification reports: one [`CheckResult`] per named check, each counting
//! the instances it examined and keeping a few concrete witnesses for every
//! failure.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

/// Witnesses kept per check; failures beyond this are only counted.
pub const MAX_WITNESSES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// A failed law instance. `detail` names the elements, maps or subsets it
/// failed at, in index notation, so the instance can be re-checked directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub law: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub instances: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall time; left out of rendered output unless asked for, so reports
    /// stay reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl CheckResult {
    pub fn skipped(check: &str, reason: impl Into<String>) -> Self {
        CheckResult {
            check: check.to_string(),
            subject: String::new(),
            status: Status::Skipped,
            reason: Some(reason.into()),
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Accumulates law instances for one check.
pub struct Check {
    result: CheckResult,
    start: Instant,
}

impl Check {
    pub fn new(check: &str) -> Self {
        Check {
            result: CheckResult {
                check: check.to_string(),
                subject: String::new(),
                status: Status::Pass,
                reason: None,
                instances: 0,
                failures: 0,
                witnesses: Vec::new(),
                notes: Vec::new(),
                elapsed: None,
            },
            start: Instant::now(),
        }
    }

    /// Records one instance of `law`; `detail` is only evaluated on failure.
    pub fn law(&mut self, law: &str, holds: bool, detail: impl FnOnce() -> String) -> bool {
        self.result.instances += 1;
        if !holds {
            self.result.failures += 1;
            if self.result.witnesses.len() < MAX_WITNESSES {
                self.result.witnesses.push(Witness { law: law.to_string(), detail: detail() });
            }
        }
        holds
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.result.notes.push(note.into());
    }

    pub fn failures(&self) -> u64 {
        self.result.failures
    }

    pub fn finish(mut self) -> CheckResult {
        if self.result.failures > 0 {
            self.result.status = Status::Fail;
        }
        self.result.elapsed = Some(self.start.elapsed());
        self.result
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(check: CheckResult) -> Self {
        VerificationReport { checks: vec![check] }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Sets the subject of every check that has none.
    pub fn with_subject(mut self, subject: &str) -> Self {
        for c in &mut self.checks {
            if c.subject.is_empty() {
                c.subject = subject.to_string();
            }
        }
        self
    }

    /// One line per check plus indented witnesses, reasons and notes.
    pub fn render_text(&self, timing: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{}  {}", c.status.label(), c.check);
            if !c.subject.is_empty() {
                let _ = write!(out, "  [{}]", c.subject);
            }
            let _ = write!(out, "  instances={} failures={}", c.instances, c.failures);
            if let (true, Some(d)) = (timing, c.elapsed) {
                let _ = write!(out, "  time={:.3}ms", d.as_secs_f64() * 1e3);
            }
            out.push('\n');
            if let Some(r) = &c.reason {
                let _ = writeln!(out, "    reason: {r}");
            }
            for w in &c.witnesses {
                let _ = writeln!(out, "    {}: {}", w.law, w.detail);
            }
            for n in &c.notes {
                let _ = writeln!(out, "    {n}");
            }
        }
        let _ = writeln!(
            out,
            "summary: {} checks, {} passed, {} failed, {} skipped",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        out
    }

    /// JSON rendering; `elapsed_ms` is added per check only when `timing`.
    pub fn to_json(&self, timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if timing {
            if let Some(arr) = v.get_mut("checks").and_then(|c| c.as_array_mut()) {
                for (item, c) in arr.iter_mut().zip(&self.checks) {
                    if let (Some(obj), Some(d)) = (item.as_object_mut(), c.elapsed) {
                        obj.insert("elapsed_ms".into(), serde_json::json!(d.as_secs_f64() * 1e3));
                    }
                }
            }
        }
        v
    }
}
