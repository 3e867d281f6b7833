//! Simple undirected graphs on dense labels `0..n`, stored as one adjacency
//! bitset per vertex.

use std::fmt;

use crate::{Error, Result};

/// Hard cap on the number of vertices so a neighborhood fits in one word.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph.
///
/// Invariants maintained by every constructor and operation:
/// no self-loops, symmetric adjacency, and `1 <= order <= 64`.
/// Graphs are immutable; edits return a new value and leave the receiver
/// untouched, so values can be shared freely across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate pairs are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Returns a copy with edge `uv` added.
    pub fn edge_add(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// Returns a copy with edge `uv` removed.
    pub fn edge_delete(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Returns a copy with a new vertex `n` adjacent to the set given by
    /// `neighbors` (a bitset over the existing vertices).
    pub fn add_vertex(&self, neighbors: u64) -> Result<Self> {
        if self.n + 1 > MAX_ORDER {
            return Err(Error::OrderOutOfRange(self.n + 1));
        }
        if self.n < 64 && neighbors >> self.n != 0 {
            return Err(Error::VertexOutOfRange(63 - neighbors.leading_zeros() as usize, self.n));
        }
        let mut adj = self.adj.clone();
        adj.push(neighbors);
        for v in BitIter(neighbors) {
            adj[v] |= 1 << self.n;
        }
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Degree multiset, sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Number of degree-1 vertices.
    pub fn pendant_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & (1 << v) != 0 {
                continue;
            }
            let comp = self.reach(v, u64::MAX);
            seen |= comp;
            out.push(BitIter(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, u64::MAX).count_ones() as usize == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() == self.n - 1
    }

    /// Vertices reachable from `start` while staying inside `allowed`,
    /// as a bitset. `start` must itself be allowed.
    pub(crate) fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v] & allowed & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over the set bits of a word.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}
