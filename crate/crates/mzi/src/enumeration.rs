//! Isomorph-free exhaustive generation of connected graphs and trees at
//! small order, class filtering, and brute-force extremal search.
//!
//! Generation is level by level: every representative on `k` vertices is
//! extended by one new vertex with every admissible neighborhood, children
//! are canonically relabeled, and one representative per canonical code is
//! kept. Completeness follows from the fact that every connected graph has
//! a non-cut vertex (and every tree a leaf) whose removal stays in the
//! previous level. Each level is held sorted by canonical code, so
//! enumeration order is deterministic.
//!
//! Counts for connected graphs at orders 1..=9 are
//! 1, 1, 2, 6, 21, 112, 853, 11117, 261080 (OEIS A001349), and for trees
//! at orders 1..=12 are 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551
//! (OEIS A000055); the tests pin these against a labeled brute-force
//! oracle where that is affordable.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::canon::{canonical_pair, CanonicalCode};
use crate::connectivity::ClassConstraint;
use crate::graph::Graph;
use crate::indices::{pi1, pi2};
use crate::{Error, Result};

/// Largest order supported by `enumerate_connected`.
pub const MAX_CONNECTED_ORDER: usize = 9;
/// Largest order supported by `enumerate_trees`.
pub const MAX_TREE_ORDER: usize = 12;

/// Every connected graph on `n` vertices, one canonical representative per
/// isomorphism class, sorted by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CONNECTED_ORDER {
        return Err(Error::EnumRange { got: n, max: MAX_CONNECTED_ORDER });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for parent in &level {
            // nonempty neighborhoods keep every intermediate graph connected
            for nbrs in 1..(1u64 << k) {
                let child = parent.add_vertex(nbrs)?;
                let (canonical, code) = canonical_pair(&child)?;
                next.entry(code).or_insert(canonical);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Every tree on `n` vertices, one canonical representative per
/// isomorphism class, sorted by canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::EnumRange { got: n, max: MAX_TREE_ORDER });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for parent in &level {
            for v in 0..k {
                let child = parent.add_vertex(1u64 << v)?;
                let (canonical, code) = canonical_pair(&child)?;
                next.entry(code).or_insert(canonical);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Members of a graph class, one per isomorphism class, sorted by
/// canonical code.
pub fn enumerate_class(constraint: &ClassConstraint) -> Result<Vec<Graph>> {
    let all = enumerate_connected(constraint.n)?;
    Ok(all.into_iter().filter(|g| constraint.is_member(g)).collect())
}

/// Which multiplicative index to optimize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexKind {
    Pi1,
    Pi2,
}

impl IndexKind {
    pub fn eval(self, g: &Graph) -> BigUint {
        match self {
            IndexKind::Pi1 => pi1(g),
            IndexKind::Pi2 => pi2(g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

/// Result of an exhaustive extremal search over one class.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub constraint: ClassConstraint,
    pub index: IndexKind,
    pub direction: Direction,
    #[serde(serialize_with = "crate::verify::serialize_biguint")]
    pub value: BigUint,
    /// Canonical codes of every graph attaining the extreme, sorted.
    pub witnesses: Vec<CanonicalCode>,
    /// Number of graphs examined.
    pub class_size: usize,
}

/// Exhaustive extremal search: exact optimum and the complete witness set.
pub fn extremal_search(
    constraint: &ClassConstraint,
    index: IndexKind,
    direction: Direction,
) -> Result<ExtremalReport> {
    let members = enumerate_class(constraint)?;
    let valued: Vec<(CanonicalCode, BigUint)> = members
        .iter()
        .map(|g| Ok((canonical_pair(g)?.1, index.eval(g))))
        .collect::<Result<_>>()?;
    let (value, witnesses) =
        extremal_scan(valued.iter().map(|(c, v)| (c, v)), direction).ok_or(Error::EmptyClass)?;
    Ok(ExtremalReport { constraint: *constraint, index, direction, value, witnesses, class_size: members.len() })
}

/// Scans `(code, value)` pairs for the optimum and all its witnesses.
pub(crate) fn extremal_scan<'a>(
    items: impl Iterator<Item = (&'a CanonicalCode, &'a BigUint)>,
    direction: Direction,
) -> Option<(BigUint, Vec<CanonicalCode>)> {
    let mut best: Option<BigUint> = None;
    let mut witnesses: Vec<CanonicalCode> = Vec::new();
    for (code, value) in items {
        let better = match (&best, direction) {
            (None, _) => true,
            (Some(b), Direction::Max) => value > b,
            (Some(b), Direction::Min) => value < b,
        };
        if better {
            best = Some(value.clone());
            witnesses.clear();
            witnesses.push(code.clone());
        } else if best.as_ref() == Some(value) {
            witnesses.push(code.clone());
        }
    }
    witnesses.sort();
    witnesses.dedup();
    best.map(|b| (b, witnesses))
}
