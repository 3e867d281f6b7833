//! Builders for the named graphs and extremal families: paths, stars,
//! cliques, joins, clique-plus-pendant families, and the spider and
//! balanced-internal-degree trees that attain the index minima.

use crate::enumeration::enumerate_trees;
use crate::graph::{Graph, MAX_ORDER};
use crate::{Error, Result};

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// The path `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// The star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// Join of two graphs: disjoint union plus every edge between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let n = a.order() + b.order();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let shift = a.order();
    let mut edges = a.edges();
    for (u, v) in b.edges() {
        edges.push((u + shift, v + shift));
    }
    for u in 0..a.order() {
        for v in 0..b.order() {
            edges.push((u, v + shift));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_{n-1}` plus one extra vertex joined to exactly `k` of its vertices.
///
/// Degree sequence: the new vertex has degree `k`, the `k` attachment
/// vertices have degree `n - 1`, the rest have degree `n - 2`. Both the
/// vertex and edge connectivity equal `k`. This family maximizes both
/// multiplicative Zagreb indices among connected graphs of order `n` whose
/// (edge) connectivity is capped at `k`.
pub fn clique_with_attached_vertex(n: usize, k: usize) -> Result<Graph> {
    if n < 2 || k == 0 || k > n - 1 {
        return Err(Error::InvalidFamily(format!(
            "attachment count {k} outside 1..={} for order {n}",
            n.max(1) - 1
        )));
    }
    let mut g = complete(n - 1)?;
    let mask = (1u64 << k) - 1;
    g = g.add_vertex(mask)?;
    Ok(g)
}

/// `K_j (+) H (+) K_m`: cliques of orders `j` and `m` fully joined to a
/// middle graph `h`, with no edges between the two cliques.
pub fn sandwich(j: usize, h: &Graph, m: usize) -> Result<Graph> {
    if j == 0 || m == 0 {
        return Err(Error::InvalidFamily("sandwich cliques must be nonempty".into()));
    }
    let k = h.order();
    let n = j + k + m;
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut edges = Vec::new();
    for u in 0..j {
        for v in (u + 1)..j {
            edges.push((u, v));
        }
    }
    for (u, v) in h.edges() {
        edges.push((u + j, v + j));
    }
    for u in 0..m {
        for v in (u + 1)..m {
            edges.push((u + j + k, v + j + k));
        }
    }
    for u in 0..j {
        for v in 0..k {
            edges.push((u, v + j));
        }
    }
    for u in 0..k {
        for v in 0..m {
            edges.push((u + j, v + j + k));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Clique `K_{n-p}` carrying `p` pendant vertices spread as evenly as
/// possible: with `p = l * (n - p) + t`, `t` clique vertices carry `l + 1`
/// pendants and the rest carry `l`. Maximizes the first index over
/// connected graphs with exactly `p` pendants.
pub fn pendant_clique_balanced(n: usize, p: usize) -> Result<Graph> {
    if p < 2 || p + 1 > n {
        return Err(Error::InvalidFamily(format!(
            "balanced pendant clique needs 2 <= p <= n-1, got n={n} p={p}"
        )));
    }
    let core = n - p;
    let (l, t) = (p / core, p % core);
    let mut g = complete(core)?;
    let mut next = core;
    for v in 0..core {
        let quota = if v < t { l + 1 } else { l };
        for _ in 0..quota {
            g = g.add_vertex(1u64 << v)?;
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Ok(g)
}

/// Clique `K_{n-p}` with all `p` pendants attached to a single vertex.
/// Needs a clique of order at least 2. Maximizes the second index over
/// connected graphs with exactly `p` pendants whenever the clique has
/// order at least 3; at clique order 2 the unattached clique vertex is
/// itself a pendant, so the graph has `p + 1` pendants.
pub fn pendant_clique_single(n: usize, p: usize) -> Result<Graph> {
    if p < 2 || p + 2 > n {
        return Err(Error::InvalidFamily(format!(
            "single-attach pendant clique needs 2 <= p <= n-2, got n={n} p={p}"
        )));
    }
    let mut g = complete(n - p)?;
    for _ in 0..p {
        g = g.add_vertex(1)?;
    }
    Ok(g)
}

/// Spider: one center of degree `p` with `p` pendant paths whose lengths
/// are given by `legs` (a partition of `n - 1` into `p` positive parts).
/// Degree sequence `(p, 2, ..., 2, 1, ..., 1)`; minimizes the first index
/// over connected graphs with exactly `p` pendants.
pub fn spider(n: usize, p: usize, legs: &[usize]) -> Result<Graph> {
    if p < 2 {
        return Err(Error::InvalidFamily(format!("spider needs p >= 2, got {p}")));
    }
    if legs.len() != p || legs.contains(&0) || legs.iter().sum::<usize>() != n - 1 {
        return Err(Error::InvalidFamily(format!(
            "legs {legs:?} are not a partition of {} into {p} positive parts",
            n - 1
        )));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Internal degree split for the balanced-internal-degree trees: the `k`
/// and `r` with `2n - p - 2 = k * (n - p) + r`, `0 <= r < n - p`.
pub fn balanced_internal_split(n: usize, p: usize) -> Result<(usize, usize)> {
    if p < 2 || p + 1 > n {
        return Err(Error::InvalidFamily(format!(
            "balanced internal trees need 2 <= p <= n-1, got n={n} p={p}"
        )));
    }
    let core = n - p;
    let total = 2 * n - p - 2;
    let (k, r) = (total / core, total % core);
    if k < 2 {
        return Err(Error::InvalidFamily(format!(
            "internal degree quotient {k} below 2 for n={n} p={p}"
        )));
    }
    Ok((k, r))
}

/// Every tree (up to isomorphism) with exactly `p` leaves whose internal
/// degrees are `r` copies of `k + 1` and `n - p - r` copies of `k`, where
/// `2n - p - 2 = k * (n - p) + r`. These trees minimize the second index
/// over connected graphs with exactly `p` pendants.
pub fn balanced_internal_trees(n: usize, p: usize) -> Result<Vec<Graph>> {
    let (k, r) = balanced_internal_split(n, p)?;
    let mut target: Vec<usize> = Vec::with_capacity(n);
    target.extend(std::iter::repeat_n(k + 1, r));
    target.extend(std::iter::repeat_n(k, n - p - r));
    target.extend(std::iter::repeat_n(1, p));
    target.sort_unstable_by(|a, b| b.cmp(a));
    let members: Vec<Graph> = enumerate_trees(n)?
        .into_iter()
        .filter(|t| t.degree_sequence() == target)
        .collect();
    if members.is_empty() {
        return Err(Error::InvalidFamily(format!(
            "no tree realizes the degree sequence for n={n} p={p}"
        )));
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::connectivity::{edge_connectivity, vertex_connectivity};
    use crate::indices::{pi1, pi2};
    use num_bigint::BigUint;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn basic_families() {
        assert_eq!(star(5).unwrap().degree_sequence(), vec![4, 1, 1, 1, 1]);
        assert_eq!(path(4).unwrap().degree_sequence(), vec![2, 2, 1, 1]);
        assert_eq!(complete(4).unwrap().degree_sequence(), vec![3, 3, 3, 3]);
        assert!(complete(0).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn join_examples() {
        let k1 = complete(1).unwrap();
        let k2 = join(&k1, &k1).unwrap();
        assert_eq!(canonical_form(&k2).unwrap(), canonical_form(&complete(2).unwrap()).unwrap());
        let k3 = join(&k1, &path(2).unwrap()).unwrap();
        assert_eq!(canonical_form(&k3).unwrap(), canonical_form(&complete(3).unwrap()).unwrap());
        let k23 = join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.degree_sequence(), vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn attached_clique_degrees_and_connectivity() {
        let g = clique_with_attached_vertex(5, 2).unwrap();
        assert_eq!(g.degree_sequence(), vec![4, 4, 3, 3, 2]);
        assert_eq!(pi1(&g), big(82944));
        assert_eq!(vertex_connectivity(&g).unwrap(), 2);
        assert_eq!(edge_connectivity(&g).unwrap(), 2);
    }

    #[test]
    fn attached_clique_with_full_attachment_is_complete() {
        for n in 2..=7 {
            let g = clique_with_attached_vertex(n, n - 1).unwrap();
            assert_eq!(
                canonical_form(&g).unwrap(),
                canonical_form(&complete(n).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn attached_clique_connectivity_matches_k() {
        for n in 2..=9usize {
            for k in 1..n {
                let g = clique_with_attached_vertex(n, k).unwrap();
                assert_eq!(vertex_connectivity(&g).unwrap(), k, "n={n} k={k}");
                assert_eq!(edge_connectivity(&g).unwrap(), k, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn attached_clique_rejects_bad_k() {
        assert!(clique_with_attached_vertex(5, 0).is_err());
        assert!(clique_with_attached_vertex(5, 5).is_err());
    }

    #[test]
    fn sandwich_values() {
        let k1 = complete(1).unwrap();
        let g = sandwich(2, &k1, 3).unwrap();
        let mut degs = g.degree_sequence();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3, 3, 5]);
        assert_eq!(pi1(&g), big(291600));
        let h = sandwich(1, &k1, 4).unwrap();
        assert_eq!(pi1(&h), big(1638400));
        assert!(pi1(&g) < pi1(&h));
    }

    #[test]
    fn sandwich_with_trivial_clique_matches_attached_clique() {
        for (n, k) in [(6, 1), (6, 2), (7, 3)] {
            let h = complete(k).unwrap();
            let s = sandwich(1, &h, n - k - 1).unwrap();
            let g = clique_with_attached_vertex(n, k).unwrap();
            assert_eq!(canonical_form(&s).unwrap(), canonical_form(&g).unwrap());
        }
    }

    #[test]
    fn balanced_pendant_clique_values() {
        let g = pendant_clique_balanced(6, 3).unwrap();
        assert_eq!(pi1(&g), big(729));
        assert_eq!(g.pendant_count(), 3);

        let g = pendant_clique_balanced(7, 3).unwrap();
        assert_eq!(pi1(&g), big(36864));

        let s5 = pendant_clique_balanced(5, 4).unwrap();
        assert_eq!(canonical_form(&s5).unwrap(), canonical_form(&star(5).unwrap()).unwrap());
    }

    #[test]
    fn balanced_pendant_clique_distribution_is_even() {
        for (n, p) in [(7, 3), (8, 5), (9, 4), (9, 7), (8, 2)] {
            let g = pendant_clique_balanced(n, p).unwrap();
            assert_eq!(g.pendant_count(), p, "n={n} p={p}");
            assert!(g.is_connected());
            let core = n - p;
            let counts: Vec<usize> = (0..core)
                .map(|v| g.neighbors(v).filter(|&w| g.degree(w) == 1).count())
                .collect();
            let (mn, mx) = (counts.iter().min().unwrap(), counts.iter().max().unwrap());
            assert!(mx - mn <= 1, "uneven pendant spread {counts:?}");
        }
    }

    #[test]
    fn single_attach_pendant_clique_values() {
        let g = pendant_clique_single(6, 3).unwrap();
        assert_eq!(pi2(&g), big(50000));
        let g = pendant_clique_single(7, 3).unwrap();
        assert_eq!(pi2(&g), big(918_330_048));
        assert!(pendant_clique_single(6, 5).is_err());
    }

    #[test]
    fn spider_values() {
        let g = spider(6, 3, &[2, 2, 1]).unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
        assert_eq!(pi1(&g), big(144));

        let p5 = spider(5, 2, &[2, 2]).unwrap();
        assert_eq!(canonical_form(&p5).unwrap(), canonical_form(&path(5).unwrap()).unwrap());

        let s6 = spider(6, 5, &[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(canonical_form(&s6).unwrap(), canonical_form(&star(6).unwrap()).unwrap());

        assert!(spider(6, 3, &[2, 2]).is_err());
        assert!(spider(6, 3, &[3, 1, 0]).is_err());
        assert!(spider(6, 3, &[4, 2, 1]).is_err());
    }

    #[test]
    fn spider_indices_do_not_depend_on_leg_partition() {
        let partitions: [&[usize]; 3] = [&[4, 1, 1], &[3, 2, 1], &[2, 2, 2]];
        let values: Vec<_> = partitions
            .iter()
            .map(|legs| {
                let g = spider(7, 3, legs).unwrap();
                (pi1(&g), pi2(&g))
            })
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn balanced_internal_trees_examples() {
        // 2n - p - 2 = 9 = 2 * 4 + 1: internal degrees (3,2,2,2)
        let members = balanced_internal_trees(7, 3).unwrap();
        assert_eq!(members.len(), 3);
        for t in &members {
            assert_eq!(t.degree_sequence(), vec![3, 2, 2, 2, 1, 1, 1]);
            assert_eq!(pi2(t), big(1728));
        }

        let members = balanced_internal_trees(6, 3).unwrap();
        for t in &members {
            assert_eq!(t.degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
            assert_eq!(pi2(t), big(432));
        }

        // 2n - p - 2 = 4 = 2 * 2 + 0: the path on four vertices
        let members = balanced_internal_trees(4, 2).unwrap();
        assert_eq!(members.len(), 1);
        assert_eq!(
            canonical_form(&members[0]).unwrap(),
            canonical_form(&path(4).unwrap()).unwrap()
        );

        assert!(balanced_internal_trees(5, 5).is_err());
    }

    #[test]
    fn construction_outputs_are_connected() {
        let k1 = complete(1).unwrap();
        let all = [
            complete(5).unwrap(),
            path(5).unwrap(),
            star(5).unwrap(),
            cycle(5).unwrap(),
            clique_with_attached_vertex(6, 3).unwrap(),
            sandwich(2, &k1, 3).unwrap(),
            pendant_clique_balanced(7, 4).unwrap(),
            pendant_clique_single(7, 4).unwrap(),
            spider(7, 3, &[3, 2, 1]).unwrap(),
        ];
        for g in all {
            assert!(g.is_connected(), "{g:?}");
        }
    }
}
