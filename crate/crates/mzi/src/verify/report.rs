//! Report structures shared by every suite, plus JSON and CSV emission.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Exact value equality and exact witness-set equality.
    Verified,
    /// The enumerated extreme differs from the expected value.
    FormulaMismatch,
    /// Right value, wrong witness set.
    WitnessMismatch,
    /// A quantified statement failed on a concrete instance.
    Counterexample,
    /// Vacuous or inapplicable instance; not a failure.
    Skipped,
}

impl Status {
    pub fn passed(self) -> bool {
        matches!(self, Status::Verified | Status::Skipped)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Verified => "verified",
            Status::FormulaMismatch => "formula_mismatch",
            Status::WitnessMismatch => "witness_mismatch",
            Status::Counterexample => "counterexample",
            Status::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

/// Instance parameters; absent fields are omitted from serialized output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params { n: Some(n), ..Default::default() }
    }

    pub fn nk(n: usize, k: usize) -> Self {
        Params { n: Some(n), k: Some(k), p: None }
    }

    pub fn np(n: usize, p: usize) -> Self {
        Params { n: Some(n), k: None, p: Some(p) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    /// Where the expected value comes from: a built witness graph or a
    /// closed-form expression.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_source: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<String>,
    /// Witness graphs as graph6 tokens, sorted.
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_size: Option<usize>,
    pub runtime_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
}

impl VerificationReport {
    pub(crate) fn skipped(suite: String, params: Params, details: String) -> Self {
        VerificationReport {
            suite,
            params,
            status: Status::Skipped,
            expected: None,
            expected_source: None,
            observed: None,
            witnesses: Vec::new(),
            class_size: None,
            runtime_ms: 0,
            details: Some(details),
        }
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }
}

pub(crate) fn sort_key(a: &VerificationReport, b: &VerificationReport) -> std::cmp::Ordering {
    (&a.suite, a.params.n, a.params.k, a.params.p).cmp(&(
        &b.suite,
        b.params.n,
        b.params.k,
        b.params.p,
    ))
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Summary CSV: one row per report, witnesses and details elided.
pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("suite,n,k,p,status,expected,observed,class_size,runtime_ms\n");
    for r in reports {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let field = |v: &Option<String>| csv_escape(v.as_deref().unwrap_or(""));
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            csv_escape(&r.suite),
            opt(r.params.n),
            opt(r.params.k),
            opt(r.params.p),
            r.status,
            field(&r.expected),
            field(&r.observed),
            opt(r.class_size),
            r.runtime_ms,
        ));
    }
    out
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
