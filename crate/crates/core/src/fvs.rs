//! Feedback Vertex Set: reduction rules, shortest-cycle branching, and the
//! one-round branching above the degeneracy.

use std::collections::VecDeque;
use std::time::Instant;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::params::degeneracy_core;
use crate::solve::{
    AboveGuaranteeResult, AboveOptions, Branch, BranchCase, SearchLimits, SolveResult,
};

/// Output of [`reduce_fvs`]. The reduced graph is not an induced subgraph
/// (degree-2 bypassing adds edges) but its vertices are input vertices:
/// `original[i]` is the input id of reduced vertex `i`.
#[derive(Clone, Debug)]
pub struct FvsKernel {
    pub reduced: Graph,
    pub original: Vec<usize>,
    pub budget: usize,
    pub forced: VertexSet,
    pub infeasible: bool,
}

impl FvsKernel {
    pub fn lift(&self, reduced_solution: &VertexSet) -> VertexSet {
        reduced_solution
            .iter()
            .map(|v| self.original[v])
            .chain(self.forced.iter())
            .collect()
    }
}

/// Applies, until none fires:
/// - delete vertices of degree at most one;
/// - a component that is a cycle forces its lowest-id vertex;
/// - a degree-2 vertex `w` with non-adjacent neighbors `a, b` is bypassed
///   (replaced by the edge `ab`);
/// - a degree-2 vertex `w` whose neighbors `a, b` are adjacent, where `a`
///   also has degree 2, forces `b` (every cycle through `w` or `a` uses `b`).
///
/// A degree-2 vertex in a triangle with two higher-degree vertices is left
/// alone; the branching treats that triangle as a shortest cycle.
pub fn reduce_fvs(g: &Graph, k: usize) -> FvsKernel {
    let n = g.n();
    let mut adj: Vec<BitSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut alive = g.vertices();
    let mut budget = k as i64;
    let mut forced = Vec::new();

    fn delete(adj: &mut [BitSet], alive: &mut BitSet, v: usize) {
        let nb: Vec<usize> = adj[v].iter().collect();
        for u in nb {
            adj[u].remove(v);
        }
        adj[v].clear();
        alive.remove(v);
    }

    let mut changed = true;
    while changed && budget >= 0 {
        changed = false;
        let snapshot: Vec<usize> = alive.iter().collect();
        for v in snapshot {
            if !alive.contains(v) || budget < 0 {
                continue;
            }
            let d = adj[v].len();
            if d <= 1 {
                delete(&mut adj, &mut alive, v);
                changed = true;
                continue;
            }
            if d != 2 {
                continue;
            }
            if let Some(cycle) = cycle_component_through(&adj, v) {
                let lowest = *cycle.iter().min().unwrap();
                delete(&mut adj, &mut alive, lowest);
                forced.push(lowest);
                budget -= 1;
                changed = true;
                continue;
            }
            let mut it = adj[v].iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            if !adj[a].contains(b) {
                delete(&mut adj, &mut alive, v);
                adj[a].insert(b);
                adj[b].insert(a);
                changed = true;
            } else if adj[a].len() == 2 || adj[b].len() == 2 {
                let hub = if adj[a].len() == 2 { b } else { a };
                delete(&mut adj, &mut alive, hub);
                forced.push(hub);
                budget -= 1;
                changed = true;
            }
        }
    }

    let original: Vec<usize> = alive.iter().collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in original.iter().enumerate() {
        new_id[v] = i;
    }
    let rows = original
        .iter()
        .map(|&v| BitSet::from_ids(original.len(), adj[v].iter().map(|u| new_id[u])))
        .collect();
    FvsKernel {
        reduced: Graph::from_rows(rows),
        original,
        budget: budget.max(0) as usize,
        forced: forced.into_iter().collect(),
        infeasible: budget < 0,
    }
}

/// If `v` lies in a connected component that is a simple cycle, its vertices.
fn cycle_component_through(adj: &[BitSet], v: usize) -> Option<Vec<usize>> {
    let mut walk = vec![v];
    let mut prev = v;
    let mut cur = adj[v].first()?;
    while cur != v {
        if adj[cur].len() != 2 {
            return None;
        }
        walk.push(cur);
        let next = adj[cur].iter().find(|&x| x != prev).unwrap();
        prev = cur;
        cur = next;
    }
    Some(walk)
}

/// A shortest cycle, rotated to start at its lowest id and oriented toward
/// the smaller of that vertex's two cycle neighbors.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<(usize, usize, usize, usize)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut parents_of_best = Vec::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        let mut found: Option<(usize, usize, usize)> = None;
        while let Some(x) = queue.pop_front() {
            let shortest_possible = 2 * dist[x];
            if best.is_some_and(|b| shortest_possible >= b.0)
                || found.is_some_and(|f| shortest_possible >= f.0)
            {
                break;
            }
            for y in g.neighbors(x).iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if found.is_none_or(|f| len < f.0) {
                        found = Some((len, x, y));
                    }
                }
            }
        }
        if let Some((len, x, y)) = found {
            if best.is_none_or(|b| len < b.0) {
                best = Some((len, root, x, y));
                parents_of_best = parent.clone();
            }
        }
    }
    let (_, root, x, y) = best?;
    let climb = |mut v: usize| {
        let mut p = vec![v];
        while v != root {
            v = parents_of_best[v];
            p.push(v);
        }
        p
    };
    let mut cycle = climb(x);
    cycle.reverse();
    let mut back = climb(y);
    back.pop();
    cycle.extend(back);
    debug_assert!({
        let mut s = cycle.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == cycle.len()
    });
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    Some(cycle)
}

/// Minimum number of deletions needed to kill the cyclomatic number
/// `m - n + c`, since deleting a vertex of degree `d` lowers it by at most
/// `d - 1`.
pub(crate) fn cyclomatic_bound(g: &Graph) -> usize {
    let cyclomatic = g.edge_count() + g.components().len() - g.n();
    let mut gains: Vec<usize> = g.degrees().iter().map(|&d| d.saturating_sub(1)).collect();
    gains.sort_unstable_by(|a, b| b.cmp(a));
    let mut covered = 0;
    for (i, gain) in gains.into_iter().enumerate() {
        if covered >= cyclomatic {
            return i;
        }
        covered += gain;
    }
    if covered >= cyclomatic {
        g.n()
    } else {
        g.n() + 1
    }
}

struct FvsSearch {
    nodes: u64,
    limits: SearchLimits,
}

impl FvsSearch {
    fn solve(&mut self, g: &Graph, k: usize) -> Result<Option<VertexSet>> {
        self.nodes += 1;
        self.limits.check(self.nodes, "feedback vertex set search")?;
        let kern = reduce_fvs(g, k);
        if kern.infeasible {
            return Ok(None);
        }
        let h = &kern.reduced;
        if h.is_acyclic() {
            return Ok(Some(kern.lift(&VertexSet::new())));
        }
        if kern.budget == 0 || cyclomatic_bound(h) > kern.budget {
            return Ok(None);
        }
        let cycle = shortest_cycle(h).expect("a graph with a cycle has a shortest cycle");
        for c in cycle {
            let sub = h.remove_vertices(&VertexSet::from([c]))?;
            if let Some(s) = self.solve(&sub.graph, kern.budget - 1)? {
                let mut local = sub.to_original(&s);
                local.insert(c);
                return Ok(Some(kern.lift(&local)));
            }
        }
        Ok(None)
    }
}

pub fn fvs_decide(g: &Graph, k: usize) -> SolveResult {
    fvs_decide_with_limits(g, k, SearchLimits::unlimited()).expect("unlimited search cannot time out")
}

/// Decides `fvs(G) <= k` by reducing and then branching over the vertices of
/// a shortest cycle.
pub fn fvs_decide_with_limits(g: &Graph, k: usize, limits: SearchLimits) -> Result<SolveResult> {
    let started = Instant::now();
    let mut search = FvsSearch { nodes: 0, limits };
    match search.solve(g, k)? {
        Some(cert) => {
            assert!(
                cert.len() <= k && g.remove_vertices(&cert)?.graph.is_acyclic(),
                "feedback vertex set certificate failed verification"
            );
            Ok(SolveResult::feasible(cert, search.nodes, started))
        }
        None => Ok(SolveResult::infeasible(search.nodes, started)),
    }
}

/// Minimum feedback vertex set size by increasing the budget.
pub fn fvs_optimum(g: &Graph) -> (usize, VertexSet) {
    let start = cyclomatic_bound(g).min(g.n());
    (start..=g.n())
        .find_map(|k| fvs_decide(g, k).certificate)
        .map(|c| (c.len(), c))
        .expect("deleting every vertex leaves a forest")
}

pub fn fvs_above_degeneracy(g: &Graph, k: usize) -> AboveGuaranteeResult {
    fvs_above_degeneracy_with(g, k, AboveOptions::default())
        .expect("unlimited search cannot time out")
}

/// One round of branching on the core `V'` (degeneracy `d`):
/// - the whole core is in the solution (budget `k - |V'|`);
/// - some core vertex `u` survives isolated inside the core, so its core
///   neighbors are deleted (budget `k - deg_{G[V']}(u)`);
/// - some surviving core vertex `u` is a leaf of the surviving core forest
///   with neighbor `v`, so its other core neighbors are deleted
///   (budget `k - deg_{G[V']}(u) + 1`).
///
/// Every subcall budget is at most `k - d + 1`; subinstances go to
/// [`fvs_decide`].
pub fn fvs_above_degeneracy_with(
    g: &Graph,
    k: usize,
    opts: AboveOptions,
) -> Result<AboveGuaranteeResult> {
    let started = Instant::now();
    let core = degeneracy_core(g);
    let d = core.degeneracy;
    let core_bits = core.core.to_bits(g.n());
    let k = k as i64;

    let mut plans: Vec<(BranchCase, VertexSet)> = vec![(BranchCase::DeleteCore, core.core.clone())];
    for u in core.core.iter() {
        let inner = VertexSet::from(&g.neighbors(u).intersection(&core_bits));
        plans.push((BranchCase::IsolatedInCore { vertex: u }, inner));
    }
    for u in core.core.iter() {
        let inner = g.neighbors(u).intersection(&core_bits);
        for v in inner.iter() {
            let mut removed = inner.clone();
            removed.remove(v);
            plans.push((
                BranchCase::LeafInCore {
                    vertex: u,
                    parent: v,
                },
                VertexSet::from(&removed),
            ));
        }
    }
    let core_size = core.core.len();
    assert!(plans.len() <= core_size * core_size + 1);

    let mut branches = Vec::with_capacity(plans.len());
    let mut nodes = 1;
    let mut answer: Option<VertexSet> = None;
    for (case, removed) in plans {
        let budget = k - removed.len() as i64;
        let mut outcome = None;
        if budget >= 0 && (answer.is_none() || opts.exhaustive) {
            let sub = g.remove_vertices(&removed)?;
            let r = fvs_decide_with_limits(&sub.graph, budget as usize, opts.limits)?;
            nodes += r.nodes_explored;
            outcome = Some(r.feasible);
            if let (None, Some(c)) = (&answer, r.certificate) {
                answer = Some(sub.to_original(&c).union(&removed));
            }
        }
        branches.push(Branch {
            case,
            removed,
            budget,
            outcome,
        });
    }

    let result = match answer {
        Some(cert) => {
            assert!(cert.len() as i64 <= k && g.remove_vertices(&cert)?.graph.is_acyclic());
            SolveResult::feasible(cert, nodes, started)
        }
        None => SolveResult::infeasible(nodes, started),
    };
    Ok(AboveGuaranteeResult {
        result,
        guarantee: d,
        ell: k - d as i64,
        branches,
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
    fn reduce_tree_to_nothing() {
        let tree = Graph::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let kern = reduce_fvs(&tree, 0);
        assert!(!kern.infeasible);
        assert_eq!(kern.reduced.n(), 0);
        assert!(fvs_decide(&tree, 0).feasible);
    }

    #[test]
    fn reduce_triangle_forces_one() {
        let kern = reduce_fvs(&cycle(3), 1);
        assert!(!kern.infeasible);
        assert_eq!(kern.forced.len(), 1);
        assert_eq!(kern.budget, 0);
        assert_eq!(kern.reduced.n(), 0);
    }

    #[test]
    fn reduce_two_squares_budget_one() {
        let g = disjoint_union(&cycle(4), &cycle(4));
        assert!(reduce_fvs(&g, 1).infeasible);
        assert!(!fvs_decide(&g, 1).feasible);
        assert!(fvs_decide(&g, 2).feasible);
    }

    #[test]
    fn reduce_keeps_triangle_with_hubs() {
        // Triangle 0-1-2 where 1 and 2 also lie on another triangle 1-2-3
        // with 3 attached to a K4; vertex 0 has degree 2 but is not smoothed.
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let kern = reduce_fvs(&g, 1);
        assert!(!kern.infeasible);
        assert!(fvs_decide(&g, 1).feasible);
    }

    #[test]
    fn decide_examples() {
        let k4 = Graph::complete(4);
        assert!(!fvs_decide(&k4, 1).feasible);
        assert!(fvs_decide(&k4, 2).feasible);
        assert!(fvs_decide(&path(7), 0).feasible);
        assert!(fvs_decide(&petersen(), 3).feasible);
        assert!(!fvs_decide(&petersen(), 2).feasible);
    }

    #[test]
    fn shortest_cycle_examples() {
        assert_eq!(shortest_cycle(&cycle(5)), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(shortest_cycle(&path(5)), None);
        assert_eq!(shortest_cycle(&petersen()).unwrap().len(), 5);
        assert_eq!(shortest_cycle(&k4_plus_pendant()).unwrap().len(), 3);
        assert_eq!(shortest_cycle(&grid(3, 3)).unwrap(), vec![0, 1, 4, 3]);
    }

    #[test]
    fn cyclomatic_bound_is_valid() {
        assert_eq!(cyclomatic_bound(&path(4)), 0);
        assert_eq!(cyclomatic_bound(&cycle(6)), 1);
        assert_eq!(cyclomatic_bound(&Graph::complete(4)), 2);
    }

    #[test]
    fn above_degeneracy_examples() {
        let r = fvs_above_degeneracy(&cycle(5), 1);
        assert_eq!(r.guarantee, 2);
        assert_eq!(r.ell, -1);
        assert!(r.result.feasible);

        let r = fvs_above_degeneracy(&path(4), 0);
        assert!(r.guarantee <= 1);
        assert!(r.result.feasible);

        let r = fvs_above_degeneracy(&k4_plus_pendant(), 2);
        assert_eq!(r.guarantee, 3);
        assert_eq!(r.branches[0].case, BranchCase::DeleteCore);
        assert_eq!(r.branches[0].budget, -2);
        assert_eq!(r.branches[0].outcome, None);
        assert!(r.result.feasible);
        assert!(!fvs_above_degeneracy(&k4_plus_pendant(), 1).result.feasible);
    }

    #[test]
    fn above_degeneracy_budget_bound_and_branch_count() {
        for g in [petersen(), grid(3, 4), Graph::complete(5), k4_plus_pendant()] {
            let d = degeneracy_core(&g);
            for k in 0..=g.n() {
                let r = fvs_above_degeneracy_with(
                    &g,
                    k,
                    AboveOptions {
                        exhaustive: true,
                        ..Default::default()
                    },
                )
                .unwrap();
                assert!(r.max_subcall_budget().unwrap() <= k as i64 - d.degeneracy as i64 + 1);
                assert!(r.branches.len() <= d.core.len().pow(2) + 1);
                assert_eq!(r.result.feasible, fvs_decide(&g, k).feasible);
            }
        }
    }
}
