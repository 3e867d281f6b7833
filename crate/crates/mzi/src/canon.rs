//! Canonical forms for isomorphism testing and deduplication.
//!
//! The canonical labeling uses equitable partition refinement followed by
//! backtracking over individualizations of the first non-singleton cell.
//! Every leaf of the search tree yields a candidate labeling; the minimum
//! permuted adjacency code over all leaves is the canonical one. Pairs of
//! leaves with equal codes yield automorphisms, and the orbits of the
//! automorphisms that fix the current individualization prefix are used to
//! prune sibling branches. At the orders handled here (n <= 64, enumeration
//! up to n = 9) this keeps even the highly symmetric inputs cheap.

use std::fmt;

use serde::Serialize;

use crate::graph::{BitIter, Graph};
use crate::graph6::to_graph6;
use crate::Result;

/// A canonical graph6 token: two graphs have equal codes iff they are
/// isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

/// Canonical code of `g`. Requires `order <= 62` (the graph6 range).
pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    Ok(CanonicalCode(to_graph6(&canonical_relabel(g))?))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_relabel(g: &Graph) -> Graph {
    let lab = Search::new(g).run();
    // lab[pos] = vertex; relabel wants vertex -> new label
    let mut perm = vec![0usize; g.order()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

/// Canonical relabeling and code in one pass.
pub fn canonical_pair(g: &Graph) -> Result<(Graph, CanonicalCode)> {
    let h = canonical_relabel(g);
    let code = CanonicalCode(to_graph6(&h)?);
    Ok((h, code))
}

/// Ordered partition of the vertex set.
type Partition = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | 1 << v)
}

/// Refines `cells` to the coarsest equitable partition at most as coarse as
/// the input: repeatedly splits cells by neighbor counts against every cell,
/// with split pieces ordered by count signature. The result depends only on
/// the graph structure and the input cell order, so it is isomorphism
/// invariant.
fn refine(g: &Graph, cells: &mut Partition) {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| cell_mask(c)).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: Vec<(Vec<u8>, Vec<usize>)> = Vec::new();
            'verts: for &v in cell {
                let sig: Vec<u8> = masks
                    .iter()
                    .map(|&m| (g.neighbor_mask(v) & m).count_ones() as u8)
                    .collect();
                for (key, members) in groups.iter_mut() {
                    if *key == sig {
                        members.push(v);
                        continue 'verts;
                    }
                }
                groups.push((sig, vec![v]));
            }
            if groups.len() > 1 {
                changed = true;
                groups.sort_by(|a, b| a.0.cmp(&b.0));
            }
            next.extend(groups.into_iter().map(|(_, members)| members));
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Vec<u64>>,
    best_lab: Vec<usize>,
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.order(),
            best: None,
            best_lab: Vec::new(),
            autos: Vec::new(),
            path: Vec::new(),
        }
    }

    /// Runs the search and returns the canonical labeling as `lab[pos] = vertex`.
    fn run(mut self) -> Vec<usize> {
        let mut root: Partition = vec![(0..self.n).collect()];
        refine(self.g, &mut root);
        self.explore(root);
        self.best_lab
    }

    fn explore(&mut self, cells: Partition) {
        let target = match cells.iter().position(|c| c.len() > 1) {
            None => {
                self.leaf(&cells);
                return;
            }
            Some(t) => t,
        };
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &c in &candidates {
            if !tried.is_empty() {
                let mut orbit = self.orbits_fixing_path();
                if tried.iter().any(|&t| orbit.same(t, c)) {
                    continue;
                }
            }
            tried.push(c);
            let mut child: Partition = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![c]);
                    child.push(cell.iter().copied().filter(|&v| v != c).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(self.g, &mut child);
            self.path.push(c);
            self.explore(child);
            self.path.pop();
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = permuted_rows(self.g, &lab);
        match &self.best {
            None => {
                self.best = Some(code);
                self.best_lab = lab;
            }
            Some(best) => match code.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best = Some(code);
                    self.best_lab = lab;
                }
                std::cmp::Ordering::Equal => {
                    // Equal codes: position-wise match of the two labelings
                    // is an automorphism.
                    let mut auto = vec![0usize; self.n];
                    let mut identity = true;
                    for pos in 0..self.n {
                        auto[self.best_lab[pos]] = lab[pos];
                        identity &= self.best_lab[pos] == lab[pos];
                    }
                    if !identity && !self.autos.contains(&auto) {
                        self.autos.push(auto);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbits of the subgroup generated by the discovered automorphisms that
    /// fix every vertex on the current individualization path. Skipping a
    /// candidate that such an orbit links to an already-explored sibling is
    /// safe: the two subtrees produce identical code sets.
    fn orbits_fixing_path(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for auto in &self.autos {
            if self.path.iter().all(|&v| auto[v] == v) {
                for (v, &image) in auto.iter().enumerate() {
                    uf.union(v, image);
                }
            }
        }
        uf
    }
}

/// Adjacency rows of `g` relabeled by `lab[pos] = vertex`.
fn permuted_rows(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = g.order();
    let mut pos = vec![0usize; n];
    for (p, &v) in lab.iter().enumerate() {
        pos[v] = p;
    }
    let mut rows = vec![0u64; n];
    for (p, &v) in lab.iter().enumerate() {
        for w in BitIter(g.neighbor_mask(v)) {
            rows[p] |= 1 << pos[w];
        }
    }
    rows
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}
