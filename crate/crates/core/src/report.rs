//! Verification reports: an ordered list of named checks.
//!
//! Two renderings are provided. The text form is meant for reading; the
//! structured form has one `key=value` record per line:
//!
//! ```text
//! check subject="entry 1" name="chern" status=pass detail="1 + 3h + 9h^2 + 27h^3"
//! summary entries_passed=9 entries_total=9 exclusions_passed=13 exclusions_total=13 divergences=2 failures=0 status=pass
//! ```
//!
//! Values are quoted when they contain anything besides `[A-Za-z0-9_.+-]`;
//! inside quotes `\` and `"` are escaped with a backslash.

use std::fmt::Write as _;

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The computation succeeded but disagrees with a quoted value. Not a
    /// failure unless the report is read strictly.
    Divergence,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Divergence => "divergence",
        }
    }

    fn is_failure(self, strict: bool) -> bool {
        match self {
            Status::Pass => false,
            Status::Fail => true,
            Status::Divergence => strict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// What was checked, e.g. `entry 3` or `exclusion two-conics`.
    pub subject: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, subject: &str, name: &str, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            subject: subject.to_string(),
            name: name.to_string(),
            status,
            detail: detail.into(),
        });
    }

    /// Records a pass or a failure depending on `ok`.
    pub fn check(&mut self, subject: &str, name: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(subject, name, status, detail);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn failures(&self, strict: bool) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.status.is_failure(strict))
    }

    pub fn divergences(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Divergence)
    }

    pub fn passed(&self, strict: bool) -> bool {
        self.failures(strict).next().is_none()
    }

    /// Subjects in first-appearance order.
    fn subjects(&self) -> Vec<&str> {
        let mut seen: Vec<&str> = Vec::new();
        for c in &self.checks {
            if !seen.contains(&c.subject.as_str()) {
                seen.push(&c.subject);
            }
        }
        seen
    }

    /// `(passed, total)` over subjects whose name starts with `prefix`.
    pub fn tally(&self, prefix: &str, strict: bool) -> (usize, usize) {
        let subjects: Vec<&str> = self.subjects().into_iter().filter(|s| s.starts_with(prefix)).collect();
        let passed = subjects
            .iter()
            .filter(|s| {
                !self
                    .checks
                    .iter()
                    .any(|c| c.subject == **s && c.status.is_failure(strict))
            })
            .count();
        (passed, subjects.len())
    }

    pub fn render_text(&self, strict: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let label = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Divergence if strict => "FAIL",
                Status::Divergence => "NOTE",
            };
            let _ = writeln!(out, "{label} {}: {}: {}", c.subject, c.name, c.detail);
        }
        let (ep, et) = self.tally("entry ", strict);
        let (xp, xt) = self.tally("exclusion ", strict);
        if et > 0 {
            let _ = writeln!(out, "{ep}/{et} entries {}", if ep == et { "PASS" } else { "FAIL" });
        }
        if xt > 0 {
            let _ = writeln!(out, "{xp}/{xt} exclusions {}", if xp == xt { "PASS" } else { "FAIL" });
        }
        let notes = self.divergences().count();
        if notes > 0 {
            let how = if strict {
                "counted as failures (strict)"
            } else {
                "annotations, not failures"
            };
            let _ = writeln!(out, "{notes} divergence(s) from quoted values: {how}");
        }
        let _ = writeln!(out, "overall: {}", if self.passed(strict) { "PASS" } else { "FAIL" });
        out
    }

    pub fn render_structured(&self, strict: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.status == Status::Divergence && strict {
                "fail"
            } else {
                c.status.as_str()
            };
            let _ = writeln!(
                out,
                "check subject={} name={} status={} detail={}",
                value(&c.subject),
                value(&c.name),
                status,
                value(&c.detail)
            );
        }
        let (ep, et) = self.tally("entry ", strict);
        let (xp, xt) = self.tally("exclusion ", strict);
        let _ = writeln!(
            out,
            "summary entries_passed={ep} entries_total={et} exclusions_passed={xp} exclusions_total={xt} divergences={} failures={} status={}",
            self.divergences().count(),
            self.failures(strict).count(),
            if self.passed(strict) { "pass" } else { "fail" }
        );
        out
    }
}

fn value(s: &str) -> String {
    let bare = !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "_.+-".contains(c));
    if bare {
        return s.to_string();
    }
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            q.push('\\');
        }
        q.push(c);
    }
    q.push('"');
    q
}
