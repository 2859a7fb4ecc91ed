//! Structural graph parameters: h-index, degeneracy and core, degree
//! extremes, clique number and exact treewidth.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_CLIQUE_LIMIT: usize = 128;
pub const DEFAULT_TREEWIDTH_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HIndex {
    pub h: usize,
    /// `h` vertices of degree at least `h`, highest degree first.
    pub witness: Vec<usize>,
}

/// Largest `h` such that at least `h` vertices have degree at least `h`.
pub fn h_index(g: &Graph) -> HIndex {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let h = order
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| g.degree(v) > i)
        .count();
    order.truncate(h);
    HIndex { h, witness: order }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreDecomposition {
    pub degeneracy: usize,
    pub core: VertexSet,
    /// Deletion order of the min-degree elimination.
    pub elimination_order: Vec<usize>,
}

/// Repeatedly deletes a minimum-degree vertex (lowest id on ties). The
/// degeneracy is the largest degree seen at deletion time; the core is the
/// set of vertices still present when the first vertex of that degree is
/// deleted.
pub fn degeneracy_core(g: &Graph) -> CoreDecomposition {
    let n = g.n();
    let mut alive = g.vertices();
    let mut deg: Vec<usize> = g.degrees().to_vec();
    let mut order = Vec::with_capacity(n);
    let mut deleted_at = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (deg[v], v))
            .expect("alive set is non-empty");
        deleted_at.push(deg[v]);
        order.push(v);
        alive.remove(v);
        for u in g.neighbors(v).iter().filter(|&u| alive.contains(u)) {
            deg[u] -= 1;
        }
    }
    let degeneracy = deleted_at.iter().copied().max().unwrap_or(0);
    let start = deleted_at
        .iter()
        .position(|&d| d == degeneracy)
        .unwrap_or(0);
    CoreDecomposition {
        degeneracy,
        core: order[start..].iter().copied().collect(),
        elimination_order: order,
    }
}

/// `(min degree, max degree)`.
pub fn degree_profile(g: &Graph) -> Result<(usize, usize)> {
    let min = g.degrees().iter().min().copied();
    let max = g.degrees().iter().max().copied();
    match (min, max) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::input("degree profile of the empty graph is undefined")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueNumber {
    pub omega: usize,
    pub witness: VertexSet,
}

pub fn clique_number(g: &Graph) -> Result<CliqueNumber> {
    clique_number_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<CliqueNumber> {
    if g.n() > limit {
        return Err(Error::capacity("clique_number", limit, g.n()));
    }
    let witness = max_clique(g);
    Ok(CliqueNumber {
        omega: witness.len(),
        witness,
    })
}

/// Tomita-style search. Vertices are relabelled by non-increasing degree so
/// that bit order is the branching order.
pub(crate) fn max_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_ids(n, g.neighbors(v).iter().map(|u| pos[u])))
        .collect();

    struct Search<'a> {
        adj: &'a [BitSet],
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn color_sort(&self, p: &BitSet) -> Vec<(usize, usize)> {
            let mut uncolored = p.clone();
            let mut out = Vec::with_capacity(p.len());
            let mut color = 0;
            while !uncolored.is_empty() {
                color += 1;
                let mut q = uncolored.clone();
                while let Some(v) = q.first() {
                    q.remove(v);
                    q.difference_with(&self.adj[v]);
                    uncolored.remove(v);
                    out.push((v, color));
                }
            }
            out
        }

        fn expand(&mut self, current: &mut Vec<usize>, mut p: BitSet) {
            let colored = self.color_sort(&p);
            for &(v, color) in colored.iter().rev() {
                if current.len() + color <= self.best.len() {
                    return;
                }
                current.push(v);
                let next = p.intersection(&self.adj[v]);
                if next.is_empty() {
                    if current.len() > self.best.len() {
                        self.best = current.clone();
                    }
                } else {
                    self.expand(current, next);
                }
                current.pop();
                p.remove(v);
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
    };
    search.expand(&mut Vec::new(), BitSet::full(n));
    search.best.iter().map(|&i| order[i]).collect()
}

pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    treewidth_exact_with_limit(g, DEFAULT_TREEWIDTH_LIMIT)
}

/// Exact treewidth by dynamic programming over vertex subsets (elimination
/// prefixes), run per connected component between a minor-min-width lower
/// bound and a min-fill upper bound.
pub fn treewidth_exact_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    if g.n() > limit.min(64) {
        return Err(Error::capacity("treewidth_exact", limit.min(64), g.n()));
    }
    let mut tw = 0;
    for comp in g.components() {
        if comp.len() <= 1 {
            continue;
        }
        let sub = g.induced_by_mask(&BitSet::from_ids(g.n(), comp.iter().copied()));
        let masks = to_masks(&sub.graph);
        tw = tw.max(component_treewidth(&masks));
    }
    Ok(tw)
}

fn to_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect()
}

fn component_treewidth(adj: &[u64]) -> usize {
    let lb = minor_min_width(adj);
    let ub = min_fill_width(adj);
    if lb >= ub {
        return ub;
    }
    (lb..ub).find(|&t| treewidth_at_most(adj, t)).unwrap_or(ub)
}

/// Lower bound: repeatedly contract a minimum-degree vertex into its
/// minimum-degree neighbor.
fn minor_min_width(adj: &[u64]) -> usize {
    let mut adj = adj.to_vec();
    let mut alive: u64 = mask_all(adj.len());
    let mut lb = 0;
    while alive.count_ones() > 1 {
        let v = iter_bits(alive)
            .min_by_key(|&v| (adj[v].count_ones(), v))
            .unwrap();
        let d = adj[v].count_ones() as usize;
        lb = lb.max(d);
        if d == 0 {
            alive &= !(1 << v);
            continue;
        }
        let u = iter_bits(adj[v])
            .min_by_key(|&u| (adj[u].count_ones(), u))
            .unwrap();
        let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
        for w in iter_bits(adj[v]) {
            adj[w] &= !(1 << v);
        }
        adj[u] = merged;
        for w in iter_bits(merged) {
            adj[w] |= 1 << u;
        }
        adj[v] = 0;
        alive &= !(1 << v);
    }
    lb
}

/// Upper bound: width of the min-fill elimination ordering.
fn min_fill_width(adj: &[u64]) -> usize {
    let mut adj = adj.to_vec();
    let mut alive = mask_all(adj.len());
    let mut width = 0;
    while alive != 0 {
        let v = iter_bits(alive)
            .min_by_key(|&v| {
                let nb = adj[v];
                let fill: u32 = iter_bits(nb)
                    .map(|u| (nb & !adj[u] & !(1 << u)).count_ones())
                    .sum();
                (fill, nb.count_ones(), v)
            })
            .unwrap();
        let nb = adj[v];
        width = width.max(nb.count_ones() as usize);
        for u in iter_bits(nb) {
            adj[u] = (adj[u] | nb) & !(1 << u) & !(1 << v);
        }
        adj[v] = 0;
        alive &= !(1 << v);
    }
    width
}

/// Decides `tw <= t`. A set `S` is kept when its vertices can be eliminated
/// first with every elimination having at most `t` neighbors outside the
/// already-eliminated part.
fn treewidth_at_most(adj: &[u64], t: usize) -> bool {
    let n = adj.len();
    if n <= t + 1 {
        return true;
    }
    let mut layer: HashSet<u64> = HashSet::from([0u64]);
    for size in 0..n {
        if n - size <= t + 1 {
            return !layer.is_empty();
        }
        let mut next = HashSet::with_capacity(layer.len() * 2);
        for &s in &layer {
            for v in iter_bits(mask_all(n) & !s) {
                if elimination_degree(adj, s, v) <= t {
                    next.insert(s | 1 << v);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        layer = next;
    }
    true
}

/// Number of vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn elimination_degree(adj: &[u64], s: u64, v: usize) -> usize {
    let mut comp = 1u64 << v;
    let mut nb = adj[v];
    loop {
        let grow = nb & s & !comp;
        if grow == 0 {
            break;
        }
        comp |= grow;
        for w in iter_bits(grow) {
            nb |= adj[w];
        }
    }
    (nb & !s & !comp).count_ones() as usize
}

fn mask_all(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter_bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn k4_plus_pendant() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn h_index_examples() {
        assert_eq!(h_index(&Graph::complete(4)).h, 3);
        assert_eq!(h_index(&star(3)).h, 1);
        let p = h_index(&petersen());
        assert_eq!(p.h, 3);
        assert_eq!(p.witness, vec![0, 1, 2]);
        assert_eq!(h_index(&Graph::empty(3)).h, 0);
    }

    #[test]
    fn degeneracy_examples() {
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let t = degeneracy_core(&tree);
        assert_eq!(t.degeneracy, 1);
        assert!(t.core.len() >= 2);

        let c = degeneracy_core(&cycle(5));
        assert_eq!(c.degeneracy, 2);
        assert_eq!(c.core, VertexSet::from([0, 1, 2, 3, 4]));

        let k = degeneracy_core(&k4_plus_pendant());
        assert_eq!(k.degeneracy, 3);
        assert_eq!(k.core, VertexSet::from([0, 1, 2, 3]));
        assert_eq!(k.elimination_order[0], 4);
    }

    #[test]
    fn degree_profile_examples() {
        assert_eq!(degree_profile(&star(3)).unwrap(), (1, 3));
        assert_eq!(degree_profile(&cycle(5)).unwrap(), (2, 2));
        assert_eq!(degree_profile(&Graph::complete(4)).unwrap(), (3, 3));
        assert!(degree_profile(&Graph::empty(0)).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&cycle(5)).unwrap().omega, 2);
        let k4 = clique_number(&Graph::complete(4)).unwrap();
        assert_eq!(k4.omega, 4);
        assert_eq!(k4.witness, VertexSet::from([0, 1, 2, 3]));
        assert_eq!(clique_number(&cycle(5).complement()).unwrap().omega, 2);
        assert_eq!(clique_number(&Graph::empty(0)).unwrap().omega, 0);
        assert!(matches!(
            clique_number_with_limit(&Graph::empty(5), 4),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn treewidth_examples() {
        assert_eq!(treewidth_exact(&path(2)).unwrap(), 1);
        assert_eq!(treewidth_exact(&star(5)).unwrap(), 1);
        assert_eq!(treewidth_exact(&cycle(5)).unwrap(), 2);
        assert_eq!(treewidth_exact(&grid(3, 3)).unwrap(), 3);
        assert_eq!(treewidth_exact(&Graph::complete(6)).unwrap(), 5);
        assert_eq!(treewidth_exact(&petersen()).unwrap(), 4);
        assert_eq!(treewidth_exact(&Graph::empty(4)).unwrap(), 0);
        assert!(matches!(
            treewidth_exact(&Graph::empty(25)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn treewidth_of_grids() {
        for g in 2..=5 {
            assert_eq!(treewidth_exact_with_limit(&grid(g, g), 32).unwrap(), g, "grid {g}");
        }
    }
}
