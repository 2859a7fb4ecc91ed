//! Planarity testing and the planar vertex cover procedure that rejects
//! instances whose width already forces a large cover.
//!
//! Planarity uses the Demoucron-Malgrange-Pertuiset face-embedding algorithm
//! on each biconnected block. A planar answer carries the faces of every
//! block; a non-planar answer carries an edge-minimal non-planar subgraph,
//! which is a subdivision of K5 or K3,3.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::treewidth_exact_with_limit;
use crate::solve::{SearchLimits, SolveResult};
use crate::vc::vc_decide_with_limits;

/// Vertex limit for the exact treewidth computation in the planar procedure.
/// Slightly above the general default so that a 5x5 grid is in range.
pub const PLANAR_WIDTH_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockEmbedding {
    pub edges: Vec<(usize, usize)>,
    /// Each face as a cyclic vertex sequence. Empty for a bridge block.
    pub faces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlanarityWitness {
    Embedding { blocks: Vec<BlockEmbedding> },
    Kuratowski { edges: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Planarity {
    pub planar: bool,
    pub witness: PlanarityWitness,
}

pub fn is_planar(g: &Graph) -> bool {
    embed(g).is_some()
}

pub fn check_planar(g: &Graph) -> Planarity {
    match embed(g) {
        Some(blocks) => Planarity {
            planar: true,
            witness: PlanarityWitness::Embedding { blocks },
        },
        None => Planarity {
            planar: false,
            witness: PlanarityWitness::Kuratowski {
                edges: minimal_nonplanar_edges(g),
            },
        },
    }
}

fn embed(g: &Graph) -> Option<Vec<BlockEmbedding>> {
    let n = g.n();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    biconnected_blocks(g)
        .into_iter()
        .map(|edges| {
            let faces = if edges.len() == 1 {
                Vec::new()
            } else {
                embed_block(&edges)?
            };
            Some(BlockEmbedding { edges, faces })
        })
        .collect()
}

/// Edge sets of the biconnected blocks, by Tarjan's lowpoint method.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            for u in self.g.neighbors(v).iter() {
                if Some(u) == parent {
                    continue;
                }
                if self.disc[u] == 0 {
                    self.stack.push((v, u));
                    self.visit(u, Some(v));
                    self.low[v] = self.low[v].min(self.low[u]);
                    if self.low[u] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (v, u) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        self.blocks.push(block);
                    }
                } else if self.disc[u] < self.disc[v] {
                    self.stack.push((v, u));
                    self.low[v] = self.low[v].min(self.disc[u]);
                }
            }
        }
    }
    let n = g.n();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    dfs.blocks
}

enum Fragment {
    Edge(usize, usize),
    Component { vertices: Vec<usize>, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

/// Face embedding of a biconnected block with at least two edges, or `None`
/// if it is not planar.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    let cycle = find_cycle(&adj, edges[0].0);
    let mut on = vec![false; n];
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        on[v] = true;
        done.insert(key(v, cycle[(i + 1) % cycle.len()]));
    }
    let mut faces = vec![cycle.clone(), cycle];

    while done.len() < edges.len() {
        let fragments = fragments(edges, &adj, &on, &done);
        let members: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut m = vec![false; n];
                f.iter().for_each(|&v| m[v] = true);
                m
            })
            .collect();
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| att.iter().all(|&a| members[f][a]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ if choice.is_none() => choice = Some((fi, admissible[0])),
                _ => {}
            }
        }
        let (fi, face) = choice.expect("an unembedded edge leaves some fragment");
        let path = fragment_path(&fragments[fi], &adj, &on);
        for w in path.windows(2) {
            done.insert(key(w[0], w[1]));
        }
        for &v in &path {
            on[v] = true;
        }
        let (a, b) = split_face(&faces[face], &path);
        faces[face] = a;
        faces.push(b);
    }
    Some(faces)
}

/// Any cycle through the DFS tree rooted at `root` (blocks with two or more
/// edges always contain one).
fn find_cycle(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![root];
    depth[root] = 0;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                stack.push(u);
            } else if u != parent[v] && parent[u] != v {
                // Non-tree edge: the tree paths to the common ancestor close
                // a cycle with it.
                let (mut x, mut y) = (v, u);
                let mut left = vec![x];
                let mut right = vec![y];
                while depth[x] > depth[y] {
                    x = parent[x];
                    left.push(x);
                }
                while depth[y] > depth[x] {
                    y = parent[y];
                    right.push(y);
                }
                while x != y {
                    x = parent[x];
                    y = parent[y];
                    left.push(x);
                    right.push(y);
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return left;
            }
        }
    }
    unreachable!("block with at least two edges contains a cycle")
}

fn fragments(
    edges: &[(usize, usize)],
    adj: &[Vec<usize>],
    on: &[bool],
    done: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut out: Vec<Fragment> = edges
        .iter()
        .filter(|&&(u, v)| on[u] && on[v] && !done.contains(&(u, v)))
        .map(|&(u, v)| Fragment::Edge(u, v))
        .collect();
    let n = adj.len();
    let mut seen = vec![false; n];
    for s in 0..n {
        if on[s] || seen[s] || adj[s].is_empty() {
            continue;
        }
        seen[s] = true;
        let mut vertices = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < vertices.len() {
            let v = vertices[i];
            i += 1;
            for &u in &adj[v] {
                if on[u] {
                    attachments.push(u);
                } else if !seen[u] {
                    seen[u] = true;
                    vertices.push(u);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment::Component { vertices, attachments });
    }
    out
}

/// A path through the fragment between two of its attachments.
fn fragment_path(frag: &Fragment, adj: &[Vec<usize>], on: &[bool]) -> Vec<usize> {
    match frag {
        Fragment::Edge(u, v) => vec![*u, *v],
        Fragment::Component { vertices, attachments } => {
            let (a, b) = (attachments[0], attachments[1]);
            let n = adj.len();
            let mut inside = vec![false; n];
            vertices.iter().for_each(|&v| inside[v] = true);
            let mut parent = vec![usize::MAX; n];
            let mut queue: Vec<usize> = adj[a].iter().copied().filter(|&c| inside[c]).collect();
            for &c in &queue {
                parent[c] = a;
            }
            let mut i = 0;
            while i < queue.len() {
                let v = queue[i];
                i += 1;
                if adj[v].contains(&b) {
                    let mut path = vec![b, v];
                    let mut x = v;
                    while parent[x] != a {
                        x = parent[x];
                        path.push(x);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for &u in &adj[v] {
                    if inside[u] && !on[u] && parent[u] == usize::MAX {
                        parent[u] = v;
                        queue.push(u);
                    }
                }
            }
            unreachable!("fragment component is connected to each attachment")
        }
    }
}

/// Splits a face cycle along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], *path.last().unwrap());
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut x = from;
        while x != to {
            x = (x + 1) % face.len();
            out.push(face[x]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut first = walk(i, j);
    first.extend(interior.iter().rev());
    let mut second = walk(j, i);
    second.extend(interior.iter());
    (first, second)
}

/// Shrinks the edge set while it stays non-planar: first in halving chunks,
/// then one edge at a time, so the result is edge-minimal.
fn minimal_nonplanar_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let nonplanar = |edges: &[(usize, usize)]| {
        embed(&Graph::new(n, edges).expect("edges come from a valid graph")).is_none()
    };
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut chunk = edges.len() / 2;
    while chunk >= 1 {
        let mut start = 0;
        while start < edges.len() {
            let end = (start + chunk).min(edges.len());
            let trial: Vec<_> = edges[..start].iter().chain(&edges[end..]).copied().collect();
            if nonplanar(&trial) {
                edges = trial;
            } else {
                start = end;
            }
        }
        chunk /= 2;
    }
    edges
}

/// Checks that `faces` is a face set of the block with `edges`: every edge is
/// traversed by exactly two face boundaries and Euler's formula holds.
pub fn verify_block_embedding(block: &BlockEmbedding) -> bool {
    let edges = &block.edges;
    if edges.len() == 1 {
        return block.faces.is_empty();
    }
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    if block.faces.len() + verts.len() != edges.len() + 2 {
        return false;
    }
    let mut count = std::collections::HashMap::new();
    for f in &block.faces {
        for i in 0..f.len() {
            let (u, v) = (f[i], f[(i + 1) % f.len()]);
            *count.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
    }
    count.len() == edges.len() && edges.iter().all(|e| count.get(e) == Some(&2))
}

/// True iff `edges` (ignoring isolated vertices) form a subdivision of K5 or
/// K3,3.
pub fn is_kuratowski_subdivision(n: usize, edges: &[(usize, usize)]) -> bool {
    let Ok(g) = Graph::new(n, edges) else {
        return false;
    };
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    if (0..n).any(|v| g.degree(v) == 1) {
        return false;
    }
    let want_deg = match branch.len() {
        5 => 4,
        6 => 3,
        _ => return false,
    };
    if branch.iter().any(|&b| g.degree(b) != want_deg) {
        return false;
    }
    let mut pairs = Vec::new();
    let mut covered = 0;
    for &b in &branch {
        for start in g.neighbors(b).iter() {
            let (mut prev, mut cur) = (b, start);
            covered += 1;
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).iter().find(|&x| x != prev).unwrap();
                prev = cur;
                cur = next;
                covered += 1;
            }
            if cur == b {
                return false;
            }
            if b < cur {
                pairs.push((b, cur));
            }
        }
    }
    // Every edge lies on exactly one branch path, walked from both ends.
    if covered != 2 * g.edge_count() {
        return false;
    }
    pairs.sort_unstable();
    let distinct = pairs.windows(2).all(|w| w[0] != w[1]);
    if !distinct {
        return false;
    }
    if want_deg == 4 {
        return pairs.len() == 10;
    }
    // K3,3: the branch pairs must form a bipartite graph with sides of 3.
    let idx = |v: usize| branch.iter().position(|&b| b == v).unwrap();
    let mut side = [usize::MAX; 6];
    side[0] = 0;
    for _ in 0..6 {
        for &(u, v) in &pairs {
            let (i, j) = (idx(u), idx(v));
            if side[i] != usize::MAX {
                side[j] = 1 - side[i];
            } else if side[j] != usize::MAX {
                side[i] = 1 - side[j];
            }
        }
    }
    pairs.len() == 9
        && side.iter().filter(|&&s| s == 0).count() == 3
        && pairs.iter().all(|&(u, v)| side[idx(u)] != side[idx(v)])
}

/// Lower bound on branchwidth from treewidth: `tw + 1 <= 3/2 * bw`.
pub fn branchwidth_lower_bound(treewidth: usize) -> usize {
    (2 * (treewidth + 1)).div_ceil(3)
}

/// Vertex cover lower bound implied by branchwidth `beta` on planar graphs:
/// `max(0, floor((beta^2 - 9) / 72))`.
pub fn grid_vc_lower_bound(beta: usize) -> usize {
    let sq = (beta as u128) * (beta as u128);
    (sq.saturating_sub(9) / 72) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthKind {
    Treewidth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WidthBoundReport {
    pub width: usize,
    pub width_kind: WidthKind,
    pub beta_lower_bound: usize,
    pub r: usize,
    pub rejected: bool,
    /// `k - tw`.
    pub ell: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlanarVcResult {
    #[serde(flatten)]
    pub result: SolveResult,
    #[serde(flatten)]
    pub report: WidthBoundReport,
}

#[derive(Clone, Copy, Debug)]
pub struct PlanarWidthOptions {
    pub width_limit: usize,
    /// Treewidth known in advance (e.g. for grids); skips the exact
    /// computation and is trusted as given.
    pub known_treewidth: Option<usize>,
    pub limits: SearchLimits,
}

impl Default for PlanarWidthOptions {
    fn default() -> Self {
        PlanarWidthOptions {
            width_limit: PLANAR_WIDTH_LIMIT,
            known_treewidth: None,
            limits: SearchLimits::unlimited(),
        }
    }
}

pub fn vc_above_treewidth_planar(g: &Graph, k: usize) -> Result<PlanarVcResult> {
    vc_above_treewidth_planar_with(g, k, &PlanarWidthOptions::default())
}

/// Rejects when `k` is below the width-implied cover bound, otherwise
/// decides with the plain vertex cover solver.
pub fn vc_above_treewidth_planar_with(
    g: &Graph,
    k: usize,
    opts: &PlanarWidthOptions,
) -> Result<PlanarVcResult> {
    let started = Instant::now();
    if !is_planar(g) {
        return Err(Error::input("graph is not planar"));
    }
    let tw = match opts.known_treewidth {
        Some(tw) => tw,
        None => treewidth_exact_with_limit(g, opts.width_limit)?,
    };
    let beta = branchwidth_lower_bound(tw);
    let r = grid_vc_lower_bound(beta);
    let rejected = k < r;
    let report = WidthBoundReport {
        width: tw,
        width_kind: WidthKind::Treewidth,
        beta_lower_bound: beta,
        r,
        rejected,
        ell: k as i64 - tw as i64,
    };
    let result = if rejected {
        SolveResult::infeasible(0, started)
    } else {
        vc_decide_with_limits(g, k, opts.limits)?
    };
    Ok(PlanarVcResult { result, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn assert_planar(g: &Graph) {
        let p = check_planar(g);
        assert!(p.planar);
        let PlanarityWitness::Embedding { blocks } = p.witness else {
            panic!("expected embedding")
        };
        let total: usize = blocks.iter().map(|b| b.edges.len()).sum();
        assert_eq!(total, g.edge_count());
        assert!(blocks.iter().all(verify_block_embedding));
    }

    fn assert_nonplanar(g: &Graph) {
        let p = check_planar(g);
        assert!(!p.planar);
        let PlanarityWitness::Kuratowski { edges } = p.witness else {
            panic!("expected Kuratowski witness")
        };
        assert!(is_kuratowski_subdivision(g.n(), &edges), "{edges:?}");
    }

    #[test]
    fn planarity_examples() {
        assert_planar(&Graph::complete(4));
        assert_nonplanar(&Graph::complete(5));
        assert_planar(&grid(4, 4));
        assert_nonplanar(&complete_bipartite(3, 3));
        assert_nonplanar(&petersen());
        assert_planar(&complete_bipartite(2, 7));
        assert_planar(&Graph::empty(3));
        assert_planar(&path(5));
        assert_planar(&disjoint_union(&cycle(4), &Graph::complete(4)));
    }

    #[test]
    fn kuratowski_in_larger_graph() {
        assert_nonplanar(&Graph::complete(7));
        assert_nonplanar(&disjoint_union(&grid(3, 3), &complete_bipartite(3, 4)));
    }

    #[test]
    fn subdivided_k33_is_recognized() {
        let edges = [(0, 3), (0, 4), (0, 6), (6, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
        assert!(is_kuratowski_subdivision(7, &edges));
        assert!(!is_kuratowski_subdivision(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(grid_vc_lower_bound(3), 0);
        assert_eq!(grid_vc_lower_bound(9), 1);
        assert_eq!(grid_vc_lower_bound(27), 10);
        assert_eq!(grid_vc_lower_bound(0), 0);
        assert_eq!(branchwidth_lower_bound(5), 4);
        assert_eq!(branchwidth_lower_bound(3), 3);
    }

    #[test]
    fn planar_vc_examples() {
        let r = vc_above_treewidth_planar(&grid(5, 5), 5).unwrap();
        assert_eq!((r.report.width, r.report.beta_lower_bound, r.report.r), (5, 4, 0));
        assert!(!r.report.rejected && !r.result.feasible);
        assert_eq!(r.report.ell, 0);

        let r = vc_above_treewidth_planar(&Graph::complete(4), 0).unwrap();
        assert_eq!((r.report.width, r.report.r, r.report.rejected), (3, 0, false));
        assert!(!r.result.feasible);

        let r = vc_above_treewidth_planar(&grid(3, 3), 9).unwrap();
        assert!(r.result.feasible && !r.report.rejected);

        assert!(matches!(
            vc_above_treewidth_planar(&Graph::complete(5), 10),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn known_width_can_reject() {
        let g = grid(13, 13);
        let opts = PlanarWidthOptions {
            known_treewidth: Some(13),
            ..Default::default()
        };
        let r = vc_above_treewidth_planar_with(&g, 0, &opts).unwrap();
        assert_eq!((r.report.beta_lower_bound, r.report.r), (10, 1));
        assert!(r.report.rejected && !r.result.feasible);
    }
}
