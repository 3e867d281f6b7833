//! Acceptance suite: every headline claim is checked exhaustively at the
//! stated orders, with exact integer comparisons. One PASS/FAIL line is
//! printed per criterion (visible with `cargo test --test acceptance --
//! --nocapture`).

use std::sync::OnceLock;
use std::time::Instant;

use mzi::canon::canonical_form;
use mzi::constructions::{clique_with_attached_vertex, path, pendant_clique_single, star};
use mzi::enumeration::enumerate_connected;
use mzi::graph::Graph;
use mzi::graph6::{parse_graph6, to_graph6};
use mzi::indices::{pi1, pi1_log, pi2, pi2_log};
use mzi::verify::{ConnectivityKind, Status, Verifier};
use mzi::BigUint;
use num_traits::ToPrimitive;

fn verifier() -> &'static Verifier {
    static V: OnceLock<Verifier> = OnceLock::new();
    V.get_or_init(Verifier::new)
}

fn conclude(name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("ACCEPTANCE {name}: PASS");
    } else {
        println!("ACCEPTANCE {name}: FAIL");
        panic!("{name}: {} failure(s): {:#?}", failures.len(), failures);
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn a1_connectivity_maxima_exhaustive() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for kind in [ConnectivityKind::Vertex, ConnectivityKind::Edge] {
        for n in 4..=7 {
            for k in 1..n {
                let reports = verifier().connectivity_max(n, k, kind).unwrap();
                for r in &reports {
                    if r.status != Status::Verified {
                        failures.push(format!("{} n={n} k={k}: {:?}", r.suite, r));
                    }
                    if r.witnesses.len() != 1 {
                        failures.push(format!("{} n={n} k={k}: non-unique witness", r.suite));
                    }
                }
            }
        }
    }
    // pinned instance: order 5, cap 2
    let reports = verifier().connectivity_max(5, 2, ConnectivityKind::Vertex).unwrap();
    if reports[0].observed.as_deref() != Some("82944") {
        failures.push(format!("pi1 instance: {:?}", reports[0].observed));
    }
    if reports[1].observed.as_deref() != Some("191102976") {
        failures.push(format!("pi2 instance: {:?}", reports[1].observed));
    }
    if started.elapsed().as_secs() >= 60 {
        failures.push(format!("runtime budget exceeded: {:?}", started.elapsed()));
    }
    conclude("connectivity maxima (both classes, orders 4-7)", failures);
}

#[test]
fn a2_printed_bound_erratum() {
    let mut failures = Vec::new();
    let mut mismatch_demonstrated = false;
    for n in 4..=7 {
        for r in verifier().printed_bound(n).unwrap() {
            if r.status != Status::Verified {
                failures.push(format!("printed-bound check n={n}: {r:?}"));
            }
            let k = r.params.k.unwrap();
            if k < n - 1 && r.details.as_deref().unwrap_or("").contains("differs") {
                mismatch_demonstrated = true;
            }
        }
    }
    if !mismatch_demonstrated {
        failures.push("no below-cap instance with printed bound differing".to_string());
    }
    // pinned instance: order 5, cap 2: printed 4*81*81 = 26244, enumerated 82944
    let r5 = verifier().printed_bound(5).unwrap();
    let k2 = r5.iter().find(|r| r.params.k == Some(2)).unwrap();
    if k2.observed.as_deref() != Some("82944")
        || !k2.details.as_deref().unwrap().contains("26244")
    {
        failures.push(format!("pinned erratum instance: {k2:?}"));
    }
    conclude("printed first-index bound erratum detection", failures);
}

#[test]
fn a3_connectivity_minima_exhaustive() {
    let mut failures = Vec::new();
    for kind in [ConnectivityKind::Vertex, ConnectivityKind::Edge] {
        for n in 4..=7 {
            for r in verifier().connectivity_min(n, kind).unwrap() {
                if r.status != Status::Verified {
                    failures.push(format!("{} n={n}: {r:?}", r.suite));
                }
            }
        }
    }
    // pinned instance: order 6 minima 25 at the star, 256 at the path
    let reports = verifier().connectivity_min(6, ConnectivityKind::Vertex).unwrap();
    let star6 = to_graph6(&mzi::canon::canonical_relabel(&star(6).unwrap())).unwrap();
    let path6 = to_graph6(&mzi::canon::canonical_relabel(&path(6).unwrap())).unwrap();
    for r in &reports {
        if r.suite.ends_with("pi1") && (r.observed.as_deref() != Some("25") || r.witnesses != [star6.clone()]) {
            failures.push(format!("star minimum: {r:?}"));
        }
        if r.suite.ends_with("pi2") && (r.observed.as_deref() != Some("256") || r.witnesses != [path6.clone()]) {
            failures.push(format!("path minimum: {r:?}"));
        }
    }
    conclude("connectivity minima at star and path (orders 4-7, every cap)", failures);
}

#[test]
fn a4_pendant_maxima_exhaustive() {
    let mut failures = Vec::new();
    for n in 5..=7usize {
        for p in 2..=(n - 2) {
            let reports = verifier().pendant_max(n, p).unwrap();
            let (r1, r2) = (&reports[0], &reports[1]);
            if r1.status != Status::Verified {
                failures.push(format!("pi1 n={n} p={p}: {r1:?}"));
            }
            if p + 3 <= n {
                if r2.status != Status::Verified {
                    failures.push(format!("pi2 n={n} p={p}: {r2:?}"));
                }
            } else {
                // clique order 2: the single-attach witness falls outside the
                // exact-pendant-count class and its closed form is
                // unattainable; the suite must demonstrate exactly that.
                if r2.status != Status::Skipped {
                    failures.push(format!("pi2 boundary n={n} p={p} not flagged: {r2:?}"));
                }
                if r2.observed == r2.expected {
                    failures.push(format!(
                        "pi2 boundary n={n} p={p}: closed form unexpectedly attained"
                    ));
                }
                let witness = pendant_clique_single(n, p).unwrap();
                if witness.pendant_count() != p + 1 {
                    failures.push(format!("pi2 boundary n={n} p={p}: witness pendant count"));
                }
            }
        }
    }
    // pinned instance: (6,3) maxima 729 and 50000
    let reports = verifier().pendant_max(6, 3).unwrap();
    if reports[0].observed.as_deref() != Some("729")
        || reports[1].observed.as_deref() != Some("50000")
    {
        failures.push(format!("(6,3) instance: {reports:?}"));
    }
    conclude("pendant-count maxima at the pendant cliques (orders 5-7)", failures);
}

#[test]
fn a5_pendant_minima_exhaustive() {
    let mut failures = Vec::new();
    for n in 5..=7usize {
        for p in 2..=(n - 1) {
            for r in verifier().pendant_min(n, p).unwrap() {
                if r.status != Status::Verified {
                    failures.push(format!("{} n={n} p={p}: {r:?}", r.suite));
                }
            }
        }
    }
    // pinned instances: (6,3) -> 144 / 432 and (7,3) -> 576 / 1728
    let reports = verifier().pendant_min(6, 3).unwrap();
    if reports[0].observed.as_deref() != Some("144")
        || reports[1].observed.as_deref() != Some("432")
    {
        failures.push(format!("(6,3) instance: {reports:?}"));
    }
    let reports = verifier().pendant_min(7, 3).unwrap();
    if reports[0].observed.as_deref() != Some("576")
        || reports[1].observed.as_deref() != Some("1728")
    {
        failures.push(format!("(7,3) instance: {reports:?}"));
    }
    conclude("pendant-count minima at spiders and balanced trees (orders 5-7)", failures);
}

#[test]
fn a6_lemma_suites_zero_counterexamples() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let config = mzi::verify::RunConfig::default(); // graphs to 7, trees to 9
    for id in mzi::verify::LemmaId::ALL {
        let report = verifier()
            .run_instance(mzi::verify::Instance::Lemma { id, cap: id.cap(&config) })
            .unwrap()
            .remove(0);
        if report.status != Status::Verified {
            failures.push(format!("{}: {report:?}", report.suite));
        }
        if report.class_size == Some(0) {
            failures.push(format!("{}: no instances checked", report.suite));
        }
    }
    if started.elapsed().as_secs() >= 300 {
        failures.push(format!("runtime budget exceeded: {:?}", started.elapsed()));
    }
    conclude("monotonicity lemmas, exhaustive with zero counterexamples", failures);
}

#[test]
fn a7_scalar_proposition_grids() {
    let mut failures = Vec::new();
    for id in mzi::verify::ScalarId::ALL {
        let report = verifier().run_instance(mzi::verify::Instance::Scalar(id)).unwrap().remove(0);
        if report.status != Status::Verified {
            failures.push(format!("{}: {report:?}", report.suite));
        }
        if report.class_size.unwrap_or(0) < 100 {
            failures.push(format!("{}: grid too small", report.suite));
        }
    }
    conclude("scalar monotonicity on 100+ point grids (margin 1e-12)", failures);
}

#[test]
fn a8_infrastructure_oracles() {
    let mut failures = Vec::new();

    // enumeration counts vs the labeled brute-force oracle
    for (n, expect) in [(3usize, 2usize), (4, 6), (5, 21), (6, 112)] {
        let enumerated = enumerate_connected(n).unwrap();
        if enumerated.len() != expect {
            failures.push(format!("count at n={n}: {} != {expect}", enumerated.len()));
        }
        let mut oracle: Vec<String> = Vec::new();
        let pairs = n * (n - 1) / 2;
        for bits in 0u32..(1 << pairs) {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits >> i & 1 == 1 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                oracle.push(canonical_form(&g).unwrap().to_string());
            }
        }
        oracle.sort();
        oracle.dedup();
        let ours: Vec<String> = enumerated
            .iter()
            .map(|g| canonical_form(g).unwrap().to_string())
            .collect();
        if oracle != ours {
            failures.push(format!("oracle set mismatch at n={n}"));
        }
    }

    // round trip, index-form agreement, and log agreement on everything
    // enumerated through order 8
    for n in 1..=8usize {
        for g in enumerate_connected(n).unwrap() {
            let token = to_graph6(&g).unwrap();
            let back = parse_graph6(&token).unwrap();
            if back.order() != g.order() || back.edges() != g.edges() {
                failures.push(format!("round trip failed for {token}"));
            }

            let vertex_form = pi2(&g);
            let mut edge_form = big(1);
            for (u, v) in g.edges() {
                edge_form *= big((g.degree(u) * g.degree(v)) as u64);
            }
            if vertex_form != edge_form {
                failures.push(format!("index form mismatch for {token}"));
            }

            if n >= 2 {
                // |delta| <= 1e-9 in the log domain makes exp(log value)
                // agree with the exact integer within 1e-9 relative
                let exact1 = pi1(&g).to_f64().unwrap().ln();
                let exact2 = vertex_form.to_f64().unwrap().ln();
                if (pi1_log(&g).unwrap() - exact1).abs() > 1e-9 {
                    failures.push(format!("pi1 log drift for {token}"));
                }
                if (pi2_log(&g).unwrap() - exact2).abs() > 1e-9 {
                    failures.push(format!("pi2 log drift for {token}"));
                }
            }
        }
    }

    // spot-check a construction against its degree-sequence value
    let g = clique_with_attached_vertex(5, 2).unwrap();
    if pi1(&g) != big(82944) {
        failures.push("construction value drifted".to_string());
    }
    conclude("infrastructure oracles (counts, graph6, index forms, logs)", failures);
}
