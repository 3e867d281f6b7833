//! Verification suites: each extremal statement and each monotonicity
//! lemma is checked exhaustively over every small graph or tree it
//! quantifies over, and the outcome is emitted as a structured report.
//!
//! Suites are grouped into instances keyed by `(suite, n, k, p)`.
//! Instances are independent, so callers may run them concurrently;
//! reports are sorted before emission, which keeps output byte-identical
//! regardless of scheduling.

mod lemmas;
mod report;
mod scalar;
mod suites;

pub use report::{reports_to_csv, reports_to_json, Params, Status, VerificationReport};
pub use suites::ConnectivityKind;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use serde::Serializer;

use crate::canon::{canonical_form, CanonicalCode};
use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::enumeration::{enumerate_connected, enumerate_trees};
use crate::graph::Graph;
use crate::indices::{pi1, pi2};
use crate::Result;

pub(crate) fn serialize_biguint<S: Serializer>(
    value: &BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

/// `base^exp` with the `0^0 = 1` convention made explicit.
pub(crate) fn bpow(base: usize, exp: usize) -> BigUint {
    if exp == 0 {
        BigUint::from(1u32)
    } else {
        BigUint::from(base).pow(exp as u32)
    }
}

/// One enumerated graph with every invariant the suites consume.
pub struct GraphProfile {
    pub graph: Graph,
    pub code: CanonicalCode,
    pub kappa: usize,
    pub kappa_edge: usize,
    pub pendants: usize,
    pub pi1: BigUint,
    pub pi2: BigUint,
}

/// Shared suite runner. Enumeration output is cached per order, so the
/// many `(n, k, p)` instances at one order pay for generation once.
/// Methods take `&self`; the caches are behind mutexes.
#[derive(Default)]
pub struct Verifier {
    connected: Mutex<HashMap<usize, Arc<Vec<GraphProfile>>>>,
    trees: Mutex<HashMap<usize, Arc<Vec<Graph>>>>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn connected_profiles(&self, n: usize) -> Result<Arc<Vec<GraphProfile>>> {
        if let Some(found) = self.connected.lock().unwrap().get(&n) {
            return Ok(Arc::clone(found));
        }
        let mut profiles = Vec::new();
        for graph in enumerate_connected(n)? {
            let code = canonical_form(&graph)?;
            let kappa = vertex_connectivity(&graph)?;
            let kappa_edge = edge_connectivity(&graph)?;
            profiles.push(GraphProfile {
                pendants: graph.pendant_count(),
                pi1: pi1(&graph),
                pi2: pi2(&graph),
                graph,
                code,
                kappa,
                kappa_edge,
            });
        }
        let profiles = Arc::new(profiles);
        self.connected
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::clone(&profiles));
        Ok(profiles)
    }

    pub(crate) fn tree_set(&self, n: usize) -> Result<Arc<Vec<Graph>>> {
        if let Some(found) = self.trees.lock().unwrap().get(&n) {
            return Ok(Arc::clone(found));
        }
        let trees = Arc::new(enumerate_trees(n)?);
        self.trees.lock().unwrap().entry(n).or_insert_with(|| Arc::clone(&trees));
        Ok(trees)
    }

    /// Runs one instance; most produce a handful of per-index reports.
    pub fn run_instance(&self, instance: Instance) -> Result<Vec<VerificationReport>> {
        match instance {
            Instance::ConnectivityMax { kind, n, k } => self.connectivity_max(n, k, kind),
            Instance::ConnectivityMin { kind, n } => self.connectivity_min(n, kind),
            Instance::PendantMax { n, p } => self.pendant_max(n, p),
            Instance::PendantMin { n, p } => self.pendant_min(n, p),
            Instance::PrintedBound { n } => self.printed_bound(n),
            Instance::Lemma { id, cap } => Ok(vec![self.lemma(id, cap)?]),
            Instance::Scalar(id) => Ok(vec![scalar::proposition_report(id)]),
        }
    }

    /// Runs every instance of `selector` under `config` and returns the
    /// sorted reports.
    pub fn run(&self, config: &RunConfig, selector: SuiteSelector) -> Result<RunSummary> {
        let mut reports = Vec::new();
        for instance in instances(config, selector) {
            reports.extend(self.run_instance(instance)?);
        }
        Ok(RunSummary { reports: finalize(selector, reports) })
    }

    /// Every suite at the given bounds.
    pub fn run_all(&self, config: &RunConfig) -> Result<RunSummary> {
        self.run(config, SuiteSelector::All)
    }
}

/// Order bounds for suite instance generation.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    /// Cap for suites that quantify over all connected graphs.
    pub n_max_graphs: usize,
    /// Cap for tree-only suites.
    pub n_max_trees: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { n_max_graphs: 7, n_max_trees: 9 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteSelector {
    All,
    Connectivity,
    Pendant,
    Lemmas,
    Propositions,
    Erratum,
}

impl SuiteSelector {
    fn includes(self, other: SuiteSelector) -> bool {
        self == SuiteSelector::All || self == other
    }

    /// Suite-name prefixes that must appear in the output (else a skip
    /// marker is emitted).
    fn families(self) -> &'static [&'static str] {
        match self {
            SuiteSelector::All => &[
                "vertex_conn_max",
                "edge_conn_max",
                "vertex_conn_min",
                "edge_conn_min",
                "pendant_max",
                "pendant_min",
                "printed_bound",
                "lemma",
                "scalar",
            ],
            SuiteSelector::Connectivity => {
                &["vertex_conn_max", "edge_conn_max", "vertex_conn_min", "edge_conn_min"]
            }
            SuiteSelector::Pendant => &["pendant_max", "pendant_min"],
            SuiteSelector::Lemmas => &["lemma"],
            SuiteSelector::Propositions => &["scalar"],
            SuiteSelector::Erratum => &["printed_bound"],
        }
    }
}

/// One independently runnable unit of verification work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Instance {
    ConnectivityMax { kind: ConnectivityKind, n: usize, k: usize },
    ConnectivityMin { kind: ConnectivityKind, n: usize },
    PendantMax { n: usize, p: usize },
    PendantMin { n: usize, p: usize },
    PrintedBound { n: usize },
    Lemma { id: lemmas::LemmaId, cap: usize },
    Scalar(scalar::ScalarId),
}

pub use lemmas::LemmaId;
pub use scalar::ScalarId;

/// Instance list for a selector, in deterministic order.
pub fn instances(config: &RunConfig, selector: SuiteSelector) -> Vec<Instance> {
    let mut out = Vec::new();
    let graph_cap = config.n_max_graphs.min(8);
    let pendant_min_cap = config.n_max_graphs.min(9);
    if selector.includes(SuiteSelector::Connectivity) {
        for kind in [ConnectivityKind::Vertex, ConnectivityKind::Edge] {
            for n in 2..=graph_cap {
                for k in 1..n {
                    out.push(Instance::ConnectivityMax { kind, n, k });
                }
                out.push(Instance::ConnectivityMin { kind, n });
            }
        }
    }
    if selector.includes(SuiteSelector::Pendant) {
        for n in 4..=graph_cap {
            for p in 2..=(n - 2) {
                out.push(Instance::PendantMax { n, p });
            }
        }
        for n in 3..=pendant_min_cap {
            for p in 2..=(n - 1) {
                out.push(Instance::PendantMin { n, p });
            }
        }
    }
    if selector.includes(SuiteSelector::Erratum) {
        for n in 2..=graph_cap {
            out.push(Instance::PrintedBound { n });
        }
    }
    if selector.includes(SuiteSelector::Lemmas) {
        for id in lemmas::LemmaId::ALL {
            out.push(Instance::Lemma { id, cap: id.cap(config) });
        }
    }
    if selector.includes(SuiteSelector::Propositions) {
        for id in scalar::ScalarId::ALL {
            out.push(Instance::Scalar(id));
        }
    }
    out
}

/// Marks suite families that produced no reports (vacuous at the given
/// bounds) as skipped, then sorts by `(suite, n, k, p)`. Callers that run
/// instances concurrently pass their collected reports through here to
/// get byte-stable output.
pub fn finalize(
    selector: SuiteSelector,
    mut reports: Vec<VerificationReport>,
) -> Vec<VerificationReport> {
    for family in selector.families() {
        if !reports.iter().any(|r| r.suite.starts_with(family)) {
            reports.push(VerificationReport::skipped(
                family.to_string(),
                Params::default(),
                "no valid parameters at this bound".to_string(),
            ));
        }
    }
    reports.sort_by(report::sort_key);
    reports
}

/// Sorted reports from one run.
pub struct RunSummary {
    pub reports: Vec<VerificationReport>,
}

impl RunSummary {
    /// True when every report is verified or skipped.
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}
