//! Shared helpers for unit tests. Oracles here are deliberately naive and
//! independent of the implementations they check.

use crate::graph::Graph;

/// All permutations of `0..n`, in a deterministic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Brute-force canonical code: the minimum relabeled adjacency matrix over
/// all permutations, built directly from `has_edge`.
pub fn min_perm_code(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut best: Option<Vec<u64>> = None;
    for perm in permutations(n) {
        let mut rows = vec![0u64; n];
        for u in 0..n {
            for v in 0..n {
                if u != v && g.has_edge(u, v) {
                    rows[perm[u]] |= 1 << perm[v];
                }
            }
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    }
    best.expect("order >= 1")
}

/// Every labeled graph on `n` vertices (all `2^C(n,2)` edge subsets).
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs = n * (n - 1) / 2;
    assert!(pairs <= 20, "labeled brute force capped for test budgets");
    let mut out = Vec::with_capacity(1 << pairs);
    for bits in 0u32..(1u32 << pairs) {
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
        out.push(Graph::from_edges(n, &edges).unwrap());
    }
    out
}
