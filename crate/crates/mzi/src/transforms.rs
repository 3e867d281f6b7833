//! Graph surgeries with proven monotonicity behavior on the indices:
//! neighbor transfers, branch transfers on trees, and pendant moves.
//! Every operation returns a fresh graph and leaves its input untouched.

use num_bigint::BigUint;
use serde::Serialize;

use crate::graph::{BitIter, Graph};
use crate::indices::{pi1, pi2};
use crate::{Error, Result};

/// Moves every edge `v-s` for `s` in `targets` to `u-s`. `targets` must be
/// a nonempty set of neighbors of `v` that are not neighbors of `u`, and
/// `u`, `v` must be non-adjacent. When `d(u) >= d(v)` this strictly
/// increases the second index.
pub fn neighbor_transfer(g: &Graph, u: usize, v: usize, targets: &[usize]) -> Result<Graph> {
    if u == v {
        return Err(Error::InvalidTransform("endpoints coincide".into()));
    }
    if g.has_edge(u, v) {
        return Err(Error::InvalidTransform(format!("{u} and {v} are adjacent")));
    }
    if targets.is_empty() {
        return Err(Error::InvalidTransform("empty transfer set".into()));
    }
    for &s in targets {
        if s == u || s == v {
            return Err(Error::InvalidTransform(format!("vertex {s} cannot be transferred")));
        }
        if !g.has_edge(v, s) {
            return Err(Error::InvalidTransform(format!("{s} is not a neighbor of {v}")));
        }
        if g.has_edge(u, s) {
            return Err(Error::InvalidTransform(format!("{s} is already a neighbor of {u}")));
        }
    }
    let mut out = g.clone();
    for &s in targets {
        out = out.edge_delete(v, s)?.edge_add(u, s)?;
    }
    Ok(out)
}

/// Reattaches all but one branch of `from` onto `to` in a tree. `from`
/// keeps its branch toward `to` and its lowest-indexed other neighbor.
/// When both endpoints have degree at least 3 this strictly decreases the
/// first index.
pub fn branch_transfer_all(t: &Graph, from: usize, to: usize) -> Result<Graph> {
    let (_, movable) = branch_split(t, from, to)?;
    if movable.len() < 2 {
        return Err(Error::InvalidTransform(format!("no transferable branch at {from}")));
    }
    // keep the smallest movable root in place, move the rest
    let mut out = t.clone();
    for &root in &movable[1..] {
        out = out.edge_delete(from, root)?.edge_add(to, root)?;
    }
    Ok(out)
}

/// Moves one branch of `from` (the one with the smallest root index) onto
/// `to` in a tree. When `d(from) - d(to) >= 2` this strictly decreases the
/// second index.
pub fn branch_move_one(t: &Graph, from: usize, to: usize) -> Result<Graph> {
    let (_, movable) = branch_split(t, from, to)?;
    if movable.is_empty() {
        return Err(Error::InvalidTransform(format!("no movable branch at {from}")));
    }
    let root = movable[0];
    t.edge_delete(from, root)?.edge_add(to, root)
}

/// Splits the neighbors of `from` into the one whose branch contains `to`
/// and the sorted rest (roots of movable branches).
fn branch_split(t: &Graph, from: usize, to: usize) -> Result<(usize, Vec<usize>)> {
    if !t.is_tree() {
        return Err(Error::InvalidTransform("input is not a tree".into()));
    }
    if from == to {
        return Err(Error::InvalidTransform("endpoints coincide".into()));
    }
    if from >= t.order() || to >= t.order() {
        return Err(Error::VertexOutOfRange(from.max(to), t.order()));
    }
    let all = u64::MAX >> (64 - t.order());
    let mut anchor = None;
    let mut movable = Vec::new();
    for w in BitIter(t.neighbor_mask(from)) {
        let comp = t.reach(w, all & !(1 << from));
        if comp & (1 << to) != 0 {
            anchor = Some(w);
        } else {
            movable.push(w);
        }
    }
    let anchor = anchor.expect("tree is connected, some branch contains `to`");
    Ok((anchor, movable))
}

/// Reattaches one pendant neighbor of `from` (smallest index, never `to`
/// itself) onto `to`.
pub fn pendant_move(g: &Graph, from: usize, to: usize) -> Result<Graph> {
    if from == to {
        return Err(Error::InvalidTransform("endpoints coincide".into()));
    }
    if from >= g.order() || to >= g.order() {
        return Err(Error::VertexOutOfRange(from.max(to), g.order()));
    }
    let pendant = g
        .neighbors(from)
        .find(|&x| g.degree(x) == 1 && x != to)
        .ok_or_else(|| Error::InvalidTransform(format!("no pendant neighbor at {from}")))?;
    g.edge_delete(from, pendant)?.edge_add(to, pendant)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    EdgeAdd,
    EdgeDelete,
    NeighborTransfer,
    BranchTransferAll,
    BranchMoveOne,
    PendantMove,
}

/// One applied surgery together with the exact index values on both sides,
/// as recorded by the verification suites.
#[derive(Clone, Debug, Serialize)]
pub struct TransformStep {
    pub kind: TransformKind,
    pub source: usize,
    pub target: usize,
    pub moved: Vec<usize>,
    #[serde(serialize_with = "crate::verify::serialize_biguint")]
    pub pi1_before: BigUint,
    #[serde(serialize_with = "crate::verify::serialize_biguint")]
    pub pi1_after: BigUint,
    #[serde(serialize_with = "crate::verify::serialize_biguint")]
    pub pi2_before: BigUint,
    #[serde(serialize_with = "crate::verify::serialize_biguint")]
    pub pi2_after: BigUint,
}

impl TransformStep {
    pub fn measure(
        kind: TransformKind,
        source: usize,
        target: usize,
        moved: Vec<usize>,
        before: &Graph,
        after: &Graph,
    ) -> Self {
        TransformStep {
            kind,
            source,
            target,
            moved,
            pi1_before: pi1(before),
            pi1_after: pi1(after),
            pi2_before: pi2(before),
            pi2_after: pi2(after),
        }
    }
}
