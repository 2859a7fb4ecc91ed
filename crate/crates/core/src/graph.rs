//! Simple undirected graphs with dense vertex ids `0..n`.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Immutable simple graph. Adjacency rows are bit sets, so membership is O(1)
/// and neighbor iteration is in increasing id order.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    degrees: Vec<usize>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a simple graph; duplicate pairs collapse, self-loops and
    /// out-of-range ids are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_rows(adj))
    }

    /// Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<BitSet>) -> Graph {
        let degrees: Vec<usize> = adj.iter().map(BitSet::len).collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        debug_assert!(adj.iter().enumerate().all(|(v, row)| !row.contains(v)
            && row.iter().all(|u| adj[u].contains(v))));
        Graph {
            adj,
            degrees,
            edge_count,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![BitSet::new(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| {
                let mut row = BitSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows(adj)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> BitSet {
        BitSet::full(self.n())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = BitSet::full(n);
                row.difference_with(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows(adj)
    }

    /// `G[S]` with vertices renumbered by increasing original id.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<InducedSubgraph> {
        set.validate(self.n())?;
        Ok(self.induced_by_mask(&BitSet::from_ids(self.n(), set.iter())))
    }

    pub(crate) fn induced_by_mask(&self, keep: &BitSet) -> InducedSubgraph {
        let original: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            new_id[v] = i;
        }
        let k = original.len();
        let adj = original
            .iter()
            .map(|&v| {
                BitSet::from_ids(
                    k,
                    self.adj[v].iter().filter(|&u| keep.contains(u)).map(|u| new_id[u]),
                )
            })
            .collect();
        InducedSubgraph {
            graph: Graph::from_rows(adj),
            original,
        }
    }

    /// `G - X`.
    pub fn remove_vertices(&self, set: &VertexSet) -> Result<InducedSubgraph> {
        set.validate(self.n())?;
        let mut keep = self.vertices();
        for v in set.iter() {
            keep.remove(v);
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// Degree of `v` inside the vertex mask `alive`.
    #[inline]
    pub fn degree_in(&self, v: usize, alive: &BitSet) -> usize {
        self.adj[v].intersection_len(alive)
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_in(&self.vertices())
    }

    pub(crate) fn is_acyclic_in(&self, alive: &BitSet) -> bool {
        let mut dsu = Dsu::new(self.n());
        for u in alive.iter() {
            for v in self.adj[u].iter().filter(|&v| v > u && alive.contains(v)) {
                if !dsu.union(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Every component is a clique, i.e. no induced P3.
    pub fn is_cluster(&self) -> bool {
        self.edges().all(|(u, v)| {
            let mut a = self.adj[u].clone();
            a.insert(u);
            let mut b = self.adj[v].clone();
            b.insert(v);
            a == b
        })
    }

    pub fn has_clique(&self, r: usize) -> bool {
        match r {
            0 => true,
            1 => self.n() >= 1,
            2 => self.edge_count >= 1,
            _ => (0..self.n()).any(|v| {
                let mut cand = self.adj[v].clone();
                for u in 0..=v {
                    cand.remove(u);
                }
                self.extend_clique(&cand, r - 1)
            }),
        }
    }

    fn extend_clique(&self, cand: &BitSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        cand.iter().any(|v| {
            let mut next = cand.intersection(&self.adj[v]);
            for u in cand.iter().take_while(|&u| u <= v) {
                next.remove(u);
            }
            self.extend_clique(&next, need - 1)
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n());
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in self.adj[v].iter() {
                    if seen.insert(u) {
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_vertex_cover(&self, set: &VertexSet) -> bool {
        self.edges().all(|(u, v)| set.contains(u) || set.contains(v))
    }

    pub fn is_independent_set(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| set.iter().all(|u| u == v || !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| set.iter().all(|u| u == v || self.has_edge(u, v)))
    }
}

/// Result of taking an induced subgraph: the new graph plus `original[new_id]`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_original(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::input(format!(
                "vertex {v} is outside the graph's id range 0..{n}"
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn to_bits(&self, n: usize) -> BitSet {
        BitSet::from_ids(n, self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl From<&BitSet> for VertexSet {
    fn from(b: &BitSet) -> Self {
        VertexSet(b.iter().collect())
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `u` and `v` were already connected.
    pub(crate) fn union(&mut self, u: usize, v: usize) -> bool {
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        self.parent[a] = b;
        true
    }
}

/// Named graph families used throughout tests, examples and the verifier.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("valid star")
    }

    pub fn grid(rows: usize, cols: usize) -> Graph {
        let id = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        Graph::new(rows * cols, &edges).expect("valid grid")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, &edges).expect("valid Petersen graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::new(a + b, &edges).expect("valid complete bipartite graph")
    }

    /// Vertex-disjoint union, second graph's ids shifted by `g.n()`.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        let off = g.n();
        let edges: Vec<_> = g
            .edges()
            .chain(h.edges().map(|(u, v)| (u + off, v + off)))
            .collect();
        Graph::new(g.n() + h.n(), &edges).expect("valid union")
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn build_examples() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(Graph::new(4, &[]).unwrap().edge_count(), 0);
        assert_eq!(Graph::new(2, &[(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(Graph::new(2, &[(0, 2)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(2, &[(1, 1)]), Err(Error::Input(_))));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(4).complement(), Graph::complete(4));
        let c5c = cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!(c5c.degrees().iter().all(|&d| d == 2));
        assert_eq!(c5c.components().len(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        let sub = k4.induced_subgraph(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(sub.graph, Graph::complete(3));
        let sub = cycle(5).induced_subgraph(&VertexSet::from([0, 2])).unwrap();
        assert_eq!(sub.graph, Graph::empty(2));
        assert_eq!(sub.original, vec![0, 2]);
        let sub = k4.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(sub.graph.n(), 0);
        assert!(k4.induced_subgraph(&VertexSet::from([7])).is_err());
    }

    #[test]
    fn acyclicity_examples() {
        assert!(path(4).is_acyclic());
        assert!(!cycle(3).is_acyclic());
        assert!(!disjoint_union(&cycle(3), &cycle(3)).is_acyclic());
        assert!(Graph::empty(0).is_acyclic());
    }

    #[test]
    fn cluster_examples() {
        assert!(disjoint_union(&Graph::complete(3), &Graph::complete(2)).is_cluster());
        assert!(!path(3).is_cluster());
        assert!(!cycle(4).is_cluster());
    }

    #[test]
    fn clique_examples() {
        assert!(Graph::complete(4).has_clique(3));
        assert!(!cycle(5).has_clique(3));
        assert!(path(2).has_clique(1));
        assert!(!Graph::empty(0).has_clique(1));
        assert!(Graph::complete(5).has_clique(5));
        assert!(!Graph::complete(5).has_clique(6));
    }

    #[test]
    fn families_shapes() {
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
        assert_eq!(grid(3, 3).edge_count(), 12);
        assert_eq!(star(3).degree(0), 3);
    }

    #[test]
    fn vertex_set_normalizes() {
        let s = VertexSet::from(vec![3, 1, 3, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(s.contains(2));
        assert!(s.validate(3).is_err());
        assert!(s.validate(4).is_ok());
    }
}
