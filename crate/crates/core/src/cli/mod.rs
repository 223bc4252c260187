//! Batch verification: resolve an algebra, run check suites in dependency
//! order, render a deterministic report.

mod input;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use thiserror::Error;

use crate::algebra::SparseTensor;
use crate::heisenberg::{
    build_h1, build_h1_dual, canonical_elements, check_dual_double_identities, check_plain_double_identities, quasi_inverse_products,
    CanonicalElements, HeisenbergAlgebra, InvertibilityProbe,
};
use crate::quasi_hopf::{
    check_u_vtilde_identities, check_qr_pl_identities, check_quasi_antipode, check_quasi_bialgebra, check_twist_identities,
    compute_qr_pl, compute_twist, compute_u_vtilde, CheckReport, CheckSummary, DerivedElements, QuasiHopfAlgebra,
    Twist,
};
use crate::scalar::{ComplexApprox, Cyclotomic, Field};
use crate::twisted::{
    build_k_omega_g, check_section5_expansions, compare_canonical, compare_doubles, compare_u_vtilde,
    invertibility_criterion, Cocycle3, CocycleReport, ElementProbe, GroupError,
};

pub use input::{parse_input, parse_input_str, resolve_builtin};
pub use report::{render_json, render_text, Report, SpecEcho, SuiteEntry, SuiteStatus, Summary};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: invalid group table: {source}")]
    Group {
        line: usize,
        #[source]
        source: GroupError,
    },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("no suite selected")]
    NoSuite,
    #[error("not a normalized 3-cocycle:\n{}", render_violations(.0))]
    InvalidCocycle(CocycleReport),
}

fn render_violations(r: &CocycleReport) -> String {
    let mut lines = vec![format!(
        "  {} normalization failure(s), {} cocycle-condition failure(s)",
        r.normalization_failures, r.cocycle_failures
    )];
    for [a, b, c] in &r.normalization_examples {
        lines.push(format!("  normalization: ω({a},{b},{c}) ≠ 1"));
    }
    for [a, b, c, d] in &r.cocycle_examples {
        lines.push(format!("  cocycle condition fails at (a,b,c,d) = ({a},{b},{c},{d})"));
    }
    lines.join("\n")
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Axioms,
    Twist,
    Lemma41,
    Heisenberg,
    Theorems,
    Section5,
    Invertibility,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Axioms,
        Suite::Twist,
        Suite::Lemma41,
        Suite::Heisenberg,
        Suite::Theorems,
        Suite::Section5,
        Suite::Invertibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Twist => "twist",
            Suite::Lemma41 => "lemma41",
            Suite::Heisenberg => "heisenberg",
            Suite::Theorems => "theorems",
            Suite::Section5 => "section5",
            Suite::Invertibility => "invertibility",
        }
    }

    pub fn prerequisites(self) -> &'static [Suite] {
        match self {
            Suite::Axioms => &[],
            Suite::Twist => &[Suite::Axioms],
            Suite::Lemma41 => &[Suite::Twist],
            Suite::Heisenberg => &[Suite::Axioms],
            Suite::Theorems => &[Suite::Lemma41, Suite::Heisenberg],
            Suite::Section5 => &[Suite::Theorems],
            Suite::Invertibility => &[Suite::Heisenberg],
        }
    }

    /// Parses a comma-separated list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, CliError> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
                continue;
            }
            let suite = Suite::ALL
                .into_iter()
                .find(|x| x.name() == part)
                .ok_or_else(|| CliError::UnknownSuite(part.to_string()))?;
            out.push(suite);
        }
        if out.is_empty() {
            return Err(CliError::NoSuite);
        }
        Ok(out)
    }

    /// The selection closed under prerequisites, in execution order.
    pub fn closure(selected: &[Suite]) -> Vec<Suite> {
        let mut need: Vec<Suite> = selected.to_vec();
        let mut i = 0;
        while i < need.len() {
            for &p in need[i].prerequisites() {
                if !need.contains(&p) {
                    need.push(p);
                }
            }
            i += 1;
        }
        Suite::ALL.into_iter().filter(|s| need.contains(s)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin(String),
    File(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    /// Exact run plus a floating-point re-evaluation at tolerance 1e-9.
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunSpec {
    pub source: Source,
    pub suites: Vec<Suite>,
    pub backend: Backend,
    pub format: ReportFormat,
    /// Record wall-clock milliseconds per suite (otherwise 0).
    pub timing: bool,
}

impl RunSpec {
    pub fn builtin(id: &str, suites: &[Suite]) -> Self {
        RunSpec {
            source: Source::Builtin(id.to_string()),
            suites: suites.to_vec(),
            backend: Backend::Exact,
            format: ReportFormat::Text,
            timing: false,
        }
    }
}

/// Loads the cocycle named by the spec and gates it through the checker.
pub fn load(source: &Source) -> Result<Cocycle3, CliError> {
    let w = match source {
        Source::Builtin(id) => resolve_builtin(id)?,
        Source::File(path) => parse_input(path)?.1,
    };
    let report = w.check();
    if !report.is_valid() {
        return Err(CliError::InvalidCocycle(report));
    }
    Ok(w)
}

/// Result of one suite on one backend.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub status: SuiteStatus,
    pub checks: Vec<CheckSummary>,
    pub notes: Vec<String>,
    pub millis: u64,
}

struct Session<F: Field> {
    field: F,
    w: Cocycle3,
    h: QuasiHopfAlgebra<F>,
    twist: Option<Twist<F::Elem>>,
    qp: Option<(SparseTensor<F::Elem>, SparseTensor<F::Elem>)>,
    derived: Option<DerivedElements<F::Elem>>,
    doubles: Option<(HeisenbergAlgebra<F>, HeisenbergAlgebra<F>)>,
    canonical: Option<CanonicalElements<F::Elem>>,
}

type SuiteResult<E> = (CheckReport<E>, Vec<CheckSummary>, Vec<String>);

fn prefixed<F: Field>(field: &F, prefix: &str, r: &CheckReport<F::Elem>) -> Vec<CheckSummary> {
    r.summaries(field)
        .into_iter()
        .map(|mut s| {
            s.label = format!("{prefix}{}", s.label);
            s
        })
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl<F: Field> Session<F> {
    fn new(field: F, w: &Cocycle3) -> Self {
        let h = build_k_omega_g(field.clone(), w).expect("k^ω(G) tables have consistent shapes");
        Session {
            field,
            w: w.clone(),
            h,
            twist: None,
            qp: None,
            derived: None,
            doubles: None,
            canonical: None,
        }
    }

    fn run(&mut self, suite: Suite) -> SuiteResult<F::Elem> {
        let field = self.field.clone();
        let mut notes = Vec::new();
        let mut extra = Vec::new();
        let report = match suite {
            Suite::Axioms => {
                let mut r = check_quasi_bialgebra(&self.h);
                r.extend(check_quasi_antipode(&self.h));
                r
            }
            Suite::Twist => match compute_twist(&self.h) {
                Err(e) => {
                    extra.push(failed_entry("twist-construction"));
                    notes.push(e.to_string());
                    CheckReport::default()
                }
                Ok(tw) => {
                    let mut r = check_twist_identities(&self.h, &tw);
                    match compute_qr_pl(&self.h).and_then(|(q, p)| {
                        let rq = check_qr_pl_identities(&self.h, &tw, &q, &p)?;
                        Ok((q, p, rq))
                    }) {
                        Ok((q, p, rq)) => {
                            r.extend(rq);
                            self.qp = Some((q, p));
                        }
                        Err(e) => {
                            extra.push(failed_entry("qR-pL-construction"));
                            notes.push(e.to_string());
                        }
                    }
                    self.twist = Some(tw);
                    r
                }
            },
            Suite::Lemma41 => {
                let tw = self.twist.clone().expect("twist suite passed");
                let (q, p) = self.qp.clone().expect("twist suite passed");
                let (u, v) = compute_u_vtilde(&self.h, &tw, &q, &p);
                let mut r = check_u_vtilde_identities(&self.h, &u, &v);
                r.extend(compare_u_vtilde(&field, &self.w, &u, &v));
                self.derived = Some(DerivedElements {
                    twist: tw,
                    q_r: q,
                    p_l: p,
                    u,
                    v_tilde: v,
                });
                r
            }
            Suite::Heisenberg => {
                let dual = build_h1_dual(&self.h);
                let plain = build_h1(&self.h);
                extra.extend(prefixed(&field, "H1(H*)/", &dual.check_structure(&self.h)));
                extra.extend(prefixed(&field, "H1(H)/", &plain.check_structure(&self.h)));
                for (name, ha) in [("H1(H*)", &dual), ("H1(H)", &plain)] {
                    let assoc = ha.mult().find_nonassociative_triple(&field).is_none();
                    notes.push(format!("{name} associative: {}", yes_no(assoc)));
                }
                let r = compare_doubles(&field, &self.w, &dual, &plain);
                self.doubles = Some((dual, plain));
                r
            }
            Suite::Theorems => {
                let (dual, plain) = self.doubles.as_ref().expect("heisenberg suite passed");
                let derived = self.derived.as_ref().expect("lemma41 suite passed");
                let ce = canonical_elements(&self.h, dual, plain, derived);
                let mut r = check_dual_double_identities(&ce, dual);
                r.extend(check_plain_double_identities(&ce, plain));
                r.extend(compare_canonical(&field, &self.w, &ce));
                for (name, ha, x, y) in [("W·W̃", dual, &ce.w, &ce.w_tilde), ("W̄·Ŵ", plain, &ce.w_bar, &ce.w_hat)] {
                    let (xy, yx) = quasi_inverse_products(ha, x, y);
                    let unit = SparseTensor::power(&field, ha.unit(), 2);
                    notes.push(format!(
                        "{name} = 1⊗1: {}; reversed product = 1⊗1: {}",
                        yes_no(xy.approx_eq(&field, &unit)),
                        yes_no(yx.approx_eq(&field, &unit))
                    ));
                }
                self.canonical = Some(ce);
                r
            }
            Suite::Section5 => {
                let (_, plain) = self.doubles.as_ref().expect("heisenberg suite passed");
                let ce = self.canonical.as_ref().expect("theorems suite passed");
                check_section5_expansions(&self.w, plain, ce, None)
            }
            Suite::Invertibility => {
                let (dual, plain) = self.doubles.as_ref().expect("heisenberg suite passed");
                let inv = invertibility_criterion(&self.w, dual, plain);
                let criterion = if inv.criterion() {
                    "holds".to_string()
                } else {
                    let bad: Vec<String> = inv.violations.iter().map(|a| a.to_string()).collect();
                    format!("fails at a = {}", bad.join(", "))
                };
                notes.push(format!("criterion ω(a,a⁻¹,a) = 1 for all a: {criterion}"));
                notes.push(probe_note(&field, "W", &inv.w));
                notes.push(probe_note(&field, "W̄", &inv.w_bar));
                if inv.converse_observed() {
                    notes.push("criterion holds and both inverses were found (observed, not a theorem)".to_string());
                }
                let ok = inv.consistent(&field, &self.w);
                extra.push(CheckSummary {
                    label: "probes-consistent-with-criterion".to_string(),
                    passed: ok,
                    discrepancies: usize::from(!ok),
                    offending: vec![],
                });
                CheckReport::default()
            }
        };
        (report, extra, notes)
    }
}

fn failed_entry(label: &str) -> CheckSummary {
    CheckSummary {
        label: label.to_string(),
        passed: false,
        discrepancies: 1,
        offending: vec![],
    }
}

fn probe_note<F: Field>(field: &F, name: &str, p: &ElementProbe<F::Elem>) -> String {
    match (&p.probe, &p.obstruction) {
        (InvertibilityProbe::TwoSided { .. }, _) => format!(
            "{name} invertible: two-sided inverse found (verified: {})",
            yes_no(p.inverse_verified)
        ),
        (probe, Some((a, value))) => format!(
            "{name} not invertible: {}; obstruction ω(a,a⁻¹,a) = {} at a = {a}",
            probe.verdict(),
            field.render(value)
        ),
        (probe, None) => format!("{name} not invertible: {}", probe.verdict()),
    }
}

fn run_backend<F: Field>(field: F, w: &Cocycle3, suites: &[Suite], timing: bool) -> Vec<SuiteOutcome> {
    let mut session = Session::new(field.clone(), w);
    let mut status: BTreeMap<Suite, SuiteStatus> = BTreeMap::new();
    let mut out = Vec::new();
    for &suite in suites {
        let blocked: Vec<&str> = suite
            .prerequisites()
            .iter()
            .filter(|p| status.get(p) != Some(&SuiteStatus::Pass))
            .map(|p| p.name())
            .collect();
        if !blocked.is_empty() {
            status.insert(suite, SuiteStatus::Skipped);
            out.push(SuiteOutcome {
                suite,
                status: SuiteStatus::Skipped,
                checks: vec![],
                notes: vec![format!("prerequisite did not pass: {}", blocked.join(", "))],
                millis: 0,
            });
            continue;
        }
        let start = Instant::now();
        let (report, extra, notes) = session.run(suite);
        let millis = if timing { start.elapsed().as_millis() as u64 } else { 0 };
        let mut checks = extra;
        checks.extend(report.summaries(&field));
        let st = if checks.iter().all(|c| c.passed) {
            SuiteStatus::Pass
        } else {
            SuiteStatus::Fail
        };
        status.insert(suite, st);
        out.push(SuiteOutcome {
            suite,
            status: st,
            checks,
            notes,
            millis,
        });
    }
    out
}

/// Disagreements of the float path with the exact one.
fn float_defects(exact: &[SuiteOutcome], float: &[SuiteOutcome]) -> Vec<String> {
    let mut defects = Vec::new();
    for (e, f) in exact.iter().zip(float) {
        if e.status != f.status {
            defects.push(format!(
                "{}: exact {}, float {}",
                e.suite.name(),
                e.status.as_str(),
                f.status.as_str()
            ));
        }
        let fmap: BTreeMap<&str, bool> = f.checks.iter().map(|c| (c.label.as_str(), c.passed)).collect();
        for c in &e.checks {
            if let Some(&fp) = fmap.get(c.label.as_str()) {
                if fp != c.passed {
                    defects.push(format!(
                        "{}/{}: exact {}, float {}",
                        e.suite.name(),
                        c.label,
                        if c.passed { "pass" } else { "fail" },
                        if fp { "pass" } else { "fail" }
                    ));
                }
            }
        }
    }
    defects
}

/// Runs a spec. Input errors (including a failed cocycle gate) are returned
/// as `Err`; identity failures show up in the report's exit code.
pub fn run(spec: &RunSpec) -> Result<Report, CliError> {
    if spec.suites.is_empty() {
        return Err(CliError::NoSuite);
    }
    let w = load(&spec.source)?;
    let suites = Suite::closure(&spec.suites);
    let n = w.root_order();
    let exact = run_backend(Cyclotomic::new(n), &w, &suites, spec.timing);
    let defects = match spec.backend {
        Backend::Exact => None,
        Backend::Float => {
            let float = run_backend(ComplexApprox::new(n), &w, &suites, false);
            Some(float_defects(&exact, &float))
        }
    };
    Ok(Report::new(spec, &w, exact, defects))
}
