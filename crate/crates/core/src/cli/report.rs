use serde::Serialize;

use crate::quasi_hopf::CheckSummary;
use crate::twisted::Cocycle3;

use super::{Backend, RunSpec, Source, SuiteOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Skipped,
}

impl SuiteStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteStatus::Pass => "pass",
            SuiteStatus::Fail => "fail",
            SuiteStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecEcho {
    pub source: String,
    pub suites: Vec<String>,
    pub backend: String,
    pub group_order: usize,
    pub root_order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub label: String,
    pub status: SuiteStatus,
    /// One entry per identity checked.
    pub discrepancies: Vec<CheckSummary>,
    pub notes: Vec<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float_defects: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub spec: SpecEcho,
    pub suites: Vec<SuiteEntry>,
    pub summary: Summary,
}

impl Report {
    pub(super) fn new(spec: &RunSpec, w: &Cocycle3, outcomes: Vec<SuiteOutcome>, float_defects: Option<Vec<String>>) -> Self {
        let count = |s: SuiteStatus| outcomes.iter().filter(|o| o.status == s).count();
        let (passed, failed, skipped) = (
            count(SuiteStatus::Pass),
            count(SuiteStatus::Fail),
            count(SuiteStatus::Skipped),
        );
        let source = match &spec.source {
            Source::Builtin(id) => id.clone(),
            Source::File(p) => p.display().to_string(),
        };
        Report {
            spec: SpecEcho {
                source,
                suites: spec.suites.iter().map(|s| s.name().to_string()).collect(),
                backend: match spec.backend {
                    Backend::Exact => "exact".to_string(),
                    Backend::Float => "float".to_string(),
                },
                group_order: w.group().order(),
                root_order: w.root_order(),
            },
            suites: outcomes
                .into_iter()
                .map(|o| SuiteEntry {
                    label: o.suite.name().to_string(),
                    status: o.status,
                    discrepancies: o.checks,
                    notes: o.notes,
                    millis: o.millis,
                })
                .collect(),
            summary: Summary {
                passed,
                failed,
                skipped,
                exit_code: if failed == 0 && skipped == 0 { 0 } else { 1 },
                float_defects,
            },
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn suite(&self, label: &str) -> Option<&SuiteEntry> {
        self.suites.iter().find(|s| s.label == label)
    }
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let spec = &report.spec;
    out.push_str(&format!(
        "source {} | group order {} | root order {} | backend {}\n",
        spec.source, spec.group_order, spec.root_order, spec.backend
    ));
    for suite in &report.suites {
        let passed = suite.discrepancies.iter().filter(|c| c.passed).count();
        out.push_str(&format!(
            "[{}] {} ({}/{} identities)",
            suite.status.as_str(),
            suite.label,
            passed,
            suite.discrepancies.len()
        ));
        if suite.millis > 0 {
            out.push_str(&format!(" {} ms", suite.millis));
        }
        out.push('\n');
        for c in suite.discrepancies.iter().filter(|c| !c.passed) {
            out.push_str(&format!("  FAIL {}: {} discrepant coefficient(s)\n", c.label, c.discrepancies));
            for o in &c.offending {
                out.push_str(&format!("    at {:?}: lhs {} rhs {}\n", o.index, o.lhs, o.rhs));
            }
        }
        for note in &suite.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
    }
    let s = &report.summary;
    out.push_str(&format!(
        "summary: {} passed, {} failed, {} skipped, exit code {}\n",
        s.passed, s.failed, s.skipped, s.exit_code
    ));
    if let Some(defects) = &s.float_defects {
        if defects.is_empty() {
            out.push_str("float cross-check: agrees with exact backend\n");
        } else {
            out.push_str(&format!("float cross-check: {} defect(s) in the float path\n", defects.len()));
            for d in defects {
                out.push_str(&format!("  {d}\n"));
            }
        }
    }
    out
}
