//! Vertex and edge connectivity, pendant counts, and the graph-class
//! predicates built on them.
//!
//! Connectivity is computed by maximum flow with unit capacities: the
//! global edge version minimizes s-t flows from a fixed source, and the
//! vertex version minimizes over non-adjacent pairs on the split-vertex
//! network. Complete graphs have no vertex cut; their connectivity is
//! `n - 1` by convention, which also covers `K_2`.

use serde::Serialize;

use crate::graph::Graph;
use crate::{Error, Result};

/// Vertex connectivity. Requires a connected graph.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if g.size() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    let mut best = usize::MAX;
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                best = best.min(split_vertex_flow(g, u, v));
            }
        }
    }
    Ok(best)
}

/// Edge connectivity. Requires a connected graph.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n == 1 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    for t in 1..n {
        best = best.min(edge_flow(g, 0, t));
    }
    Ok(best)
}

/// Number of degree-1 vertices.
pub fn pendant_count(g: &Graph) -> usize {
    g.pendant_count()
}

/// Maximum u-v flow where every vertex other than `u`, `v` has capacity 1:
/// vertex `x` splits into `2x` (in) and `2x + 1` (out).
fn split_vertex_flow(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.order();
    let mut net = FlowNet::new(2 * n);
    const INF: u32 = u32::MAX / 2;
    for x in 0..n {
        let cap = if x == u || x == v { INF } else { 1 };
        net.add(2 * x, 2 * x + 1, cap);
    }
    for (a, b) in g.edges() {
        net.add(2 * a + 1, 2 * b, INF);
        net.add(2 * b + 1, 2 * a, INF);
    }
    net.max_flow(2 * u + 1, 2 * v) as usize
}

/// Maximum u-v flow with each undirected edge carrying capacity 1 per direction.
fn edge_flow(g: &Graph, u: usize, v: usize) -> usize {
    let mut net = FlowNet::new(g.order());
    for (a, b) in g.edges() {
        net.add(a, b, 1);
        net.add(b, a, 1);
    }
    net.max_flow(u, v) as usize
}

/// Dense-matrix max flow (Edmonds-Karp). Node counts stay tiny here.
struct FlowNet {
    n: usize,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet { n, cap: vec![0; n * n] }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.cap[from * self.n + to] = self.cap[from * self.n + to].saturating_add(cap);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u32 {
        let mut total = 0u32;
        let mut parent = vec![usize::MAX; self.n];
        loop {
            parent.fill(usize::MAX);
            parent[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                let row = &self.cap[x * self.n..(x + 1) * self.n];
                for (y, slot) in parent.iter_mut().enumerate() {
                    if *slot == usize::MAX && row[y] > 0 {
                        *slot = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[t] == usize::MAX {
                return total;
            }
            let mut push = u32::MAX;
            let mut y = t;
            while y != s {
                let x = parent[y];
                push = push.min(self.cap[x * self.n + y]);
                y = x;
            }
            let mut y = t;
            while y != s {
                let x = parent[y];
                self.cap[x * self.n + y] -= push;
                self.cap[y * self.n + x] += push;
                y = x;
            }
            total += push;
        }
    }
}

/// Which graph parameter a class constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    /// Vertex connectivity at most `k`.
    VertexConnectivityAtMost(usize),
    /// Edge connectivity at most `k`.
    EdgeConnectivityAtMost(usize),
    /// Exactly `p` pendant vertices.
    PendantCount(usize),
}

/// A class of connected graphs of a fixed order: connectivity capped by `k`,
/// edge connectivity capped by `k`, or pendant count exactly `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassConstraint {
    pub n: usize,
    pub kind: ClassKind,
}

impl ClassConstraint {
    /// Connected graphs on `n` vertices with vertex connectivity at most `k`.
    pub fn vertex_cap(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConstraint(format!("order {n} too small")));
        }
        if k == 0 || k > n - 1 {
            return Err(Error::InvalidConstraint(format!(
                "connectivity cap {k} outside 1..={}",
                n - 1
            )));
        }
        Ok(ClassConstraint { n, kind: ClassKind::VertexConnectivityAtMost(k) })
    }

    /// Connected graphs on `n` vertices with edge connectivity at most `k`.
    pub fn edge_cap(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConstraint(format!("order {n} too small")));
        }
        if k == 0 || k > n - 1 {
            return Err(Error::InvalidConstraint(format!(
                "edge connectivity cap {k} outside 1..={}",
                n - 1
            )));
        }
        Ok(ClassConstraint { n, kind: ClassKind::EdgeConnectivityAtMost(k) })
    }

    /// Connected graphs on `n` vertices with exactly `p` pendant vertices.
    pub fn pendants(n: usize, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidConstraint(format!("pendant count {p} must be at least 2")));
        }
        if p > n.saturating_sub(1) {
            return Err(Error::InvalidConstraint(format!(
                "pendant count {p} exceeds n-1 = {}",
                n.saturating_sub(1)
            )));
        }
        Ok(ClassConstraint { n, kind: ClassKind::PendantCount(p) })
    }

    /// Membership test: connected, right order, and the kind predicate.
    pub fn is_member(&self, g: &Graph) -> bool {
        if g.order() != self.n || !g.is_connected() {
            return false;
        }
        match self.kind {
            ClassKind::VertexConnectivityAtMost(k) => {
                vertex_connectivity(g).map(|c| c <= k).unwrap_or(false)
            }
            ClassKind::EdgeConnectivityAtMost(k) => {
                edge_connectivity(g).map(|c| c <= k).unwrap_or(false)
            }
            ClassKind::PendantCount(p) => g.pendant_count() == p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path, star};
    use crate::test_support::all_labeled_graphs;

    /// Brute-force vertex connectivity: smallest vertex set whose removal
    /// disconnects, or n-1 for complete graphs.
    fn bf_vertex_connectivity(g: &Graph) -> usize {
        let n = g.order();
        if g.size() == n * (n - 1) / 2 {
            return n - 1;
        }
        for size in 1..n - 1 {
            for bits in 0u64..(1 << n) {
                if bits.count_ones() as usize != size {
                    continue;
                }
                let allowed = !bits & ((1u64 << n) - 1);
                let start = allowed.trailing_zeros() as usize;
                if g.reach(start, allowed).count_ones() != allowed.count_ones() {
                    return size;
                }
            }
        }
        n - 1
    }

    /// Brute-force edge connectivity over all edge subsets.
    fn bf_edge_connectivity(g: &Graph) -> usize {
        let edges = g.edges();
        for size in 1..=edges.len() {
            for bits in 0u64..(1 << edges.len()) {
                if bits.count_ones() as usize != size {
                    continue;
                }
                let mut h = g.clone();
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        h = h.edge_delete(u, v).unwrap();
                    }
                }
                if !h.is_connected() {
                    return size;
                }
            }
        }
        unreachable!("connected graph with no disconnecting edge set")
    }

    #[test]
    fn complete_graph_connectivity() {
        let k5 = complete(5).unwrap();
        assert_eq!(vertex_connectivity(&k5).unwrap(), 4);
        assert_eq!(edge_connectivity(&k5).unwrap(), 4);
    }

    #[test]
    fn path_and_cycle_connectivity() {
        assert_eq!(vertex_connectivity(&path(6).unwrap()).unwrap(), 1);
        assert_eq!(vertex_connectivity(&cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(bf_vertex_connectivity(&cycle(5).unwrap()), 2);
        assert_eq!(edge_connectivity(&star(7).unwrap()).unwrap(), 1);
        assert_eq!(edge_connectivity(&path(5).unwrap()).unwrap(), 1);
        assert_eq!(edge_connectivity(&cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(bf_edge_connectivity(&cycle(6).unwrap()), 2);
    }

    #[test]
    fn k2_has_connectivity_one() {
        let k2 = complete(2).unwrap();
        assert_eq!(vertex_connectivity(&k2).unwrap(), 1);
        assert_eq!(edge_connectivity(&k2).unwrap(), 1);
    }

    #[test]
    fn disconnected_inputs_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&g), Err(Error::Disconnected));
        assert_eq!(edge_connectivity(&g), Err(Error::Disconnected));
    }

    #[test]
    fn flow_agrees_with_brute_force_small() {
        // Every connected labeled graph on up to 5 vertices.
        for n in 2..=5usize {
            for g in all_labeled_graphs(n) {
                if !g.is_connected() {
                    continue;
                }
                assert_eq!(vertex_connectivity(&g).unwrap(), bf_vertex_connectivity(&g), "{g:?}");
                assert_eq!(edge_connectivity(&g).unwrap(), bf_edge_connectivity(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn pendant_counts() {
        assert_eq!(pendant_count(&star(6).unwrap()), 5);
        assert_eq!(pendant_count(&path(7).unwrap()), 2);
        let g = crate::constructions::clique_with_attached_vertex(5, 1).unwrap();
        assert_eq!(pendant_count(&g), 1);
    }

    #[test]
    fn class_membership() {
        let k5 = complete(5).unwrap();
        assert!(ClassConstraint::vertex_cap(5, 4).unwrap().is_member(&k5));
        assert!(!ClassConstraint::vertex_cap(5, 2).unwrap().is_member(&k5));
        assert!(ClassConstraint::pendants(5, 2).unwrap().is_member(&path(5).unwrap()));
        // wrong order and disconnected inputs are excluded
        assert!(!ClassConstraint::vertex_cap(4, 2).unwrap().is_member(&k5));
        let split = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(!ClassConstraint::pendants(5, 4).unwrap().is_member(&split));
    }

    #[test]
    fn constraint_validation() {
        assert!(ClassConstraint::vertex_cap(5, 0).is_err());
        assert!(ClassConstraint::vertex_cap(5, 5).is_err());
        assert!(ClassConstraint::vertex_cap(1, 1).is_err());
        assert!(ClassConstraint::pendants(5, 1).is_err());
        assert!(ClassConstraint::pendants(4, 4).is_err());
        assert!(ClassConstraint::pendants(5, 4).is_ok());
    }
}
