//! Vertex Cover: kernelization, exact branch and bound, and the one-round
//! branching above the h-index.

use std::time::Instant;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph, VertexSet};
use crate::params::h_index;
use crate::solve::{
    AboveGuaranteeResult, AboveOptions, Branch, BranchCase, SearchLimits, SolveResult,
};

pub const DEFAULT_OPTIMUM_LIMIT: usize = 256;

/// Output of [`kernelize_vc`]. A cover of `reduced.graph` within `budget`,
/// mapped through `reduced.original` and joined with `forced`, is a cover of
/// the input within the input budget.
#[derive(Clone, Debug)]
pub struct VcKernel {
    pub reduced: InducedSubgraph,
    pub budget: usize,
    pub forced: VertexSet,
    /// The rules already proved that no cover within the budget exists.
    pub infeasible: bool,
}

impl VcKernel {
    pub fn lift(&self, reduced_cover: &VertexSet) -> VertexSet {
        self.reduced.to_original(reduced_cover).union(&self.forced)
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct KernelStats {
    pub vertices: usize,
    pub edges: usize,
}

/// Exhaustively applies the degree-0, degree-1 and high-degree (> budget)
/// rules, then the size bound: a graph without isolated vertices and
/// maximum degree at most `k` with a cover of size `k` has at most `k(k+1)`
/// vertices.
pub fn kernelize_vc(g: &Graph, k: usize) -> VcKernel {
    let mut alive = g.vertices();
    let mut budget = k as i64;
    let mut taken = Vec::new();
    let ok = apply_rules(g, &mut alive, &mut budget, &mut taken);
    let infeasible = !ok || exceeds_size_bound(&alive, budget);
    VcKernel {
        reduced: g.induced_by_mask(&alive),
        budget: budget.max(0) as usize,
        forced: taken.into_iter().collect(),
        infeasible,
    }
}

fn exceeds_size_bound(alive: &BitSet, budget: i64) -> bool {
    let b = budget.max(0) as usize;
    alive.len() > b * (b + 1)
}

/// Returns false when the budget went negative.
fn apply_rules(g: &Graph, alive: &mut BitSet, k: &mut i64, taken: &mut Vec<usize>) -> bool {
    loop {
        let mut changed = false;
        let snapshot: Vec<usize> = alive.iter().collect();
        for v in snapshot {
            if !alive.contains(v) {
                continue;
            }
            let d = g.degree_in(v, alive);
            if d == 0 {
                alive.remove(v);
                changed = true;
            } else if d == 1 {
                let u = g.neighbors(v).intersection(alive).first().unwrap();
                alive.remove(u);
                alive.remove(v);
                taken.push(u);
                *k -= 1;
                changed = true;
            } else if d as i64 > *k {
                alive.remove(v);
                taken.push(v);
                *k -= 1;
                changed = true;
            }
            if *k < 0 {
                return false;
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Size of a greedy maximal matching inside `alive`.
pub(crate) fn matching_bound(g: &Graph, alive: &BitSet) -> usize {
    let mut free = alive.clone();
    let mut size = 0;
    for v in alive.iter() {
        if !free.contains(v) {
            continue;
        }
        if let Some(u) = g.neighbors(v).intersection(&free).first() {
            free.remove(u);
            free.remove(v);
            size += 1;
        }
    }
    size
}

/// `|alive|` minus the size of a greedy clique cover; valid because an
/// independent set meets each clique at most once.
pub(crate) fn clique_cover_bound(g: &Graph, alive: &BitSet) -> usize {
    let mut order: Vec<usize> = alive.iter().collect();
    order.sort_by_key(|&v| (g.degree_in(v, alive), v));
    let mut commons: Vec<BitSet> = Vec::new();
    for v in order {
        match commons.iter_mut().find(|c| c.contains(v)) {
            Some(c) => c.intersect_with(g.neighbors(v)),
            None => commons.push(g.neighbors(v).intersection(alive)),
        }
    }
    alive.len() - commons.len()
}

/// Mirrors of `v`: vertices `u` at distance two with `N(v) \ N(u)` a clique.
/// Some minimum cover contains either all of `N(v)` or `v` with all mirrors.
fn mirrors(g: &Graph, alive: &BitSet, v: usize) -> Vec<usize> {
    let nv = g.neighbors(v).intersection(alive);
    let mut second = BitSet::new(g.n());
    for w in nv.iter() {
        second.union_with(g.neighbors(w));
    }
    second.intersect_with(alive);
    second.difference_with(&nv);
    second.remove(v);
    second
        .iter()
        .filter(|&u| {
            let rest = nv.difference(g.neighbors(u));
            rest.iter().all(|x| {
                let mut need = rest.clone();
                need.remove(x);
                need.is_subset(g.neighbors(x))
            })
        })
        .collect()
}

struct VcSearch<'g> {
    g: &'g Graph,
    nodes: u64,
    limits: SearchLimits,
}

impl VcSearch<'_> {
    fn decide(&mut self, mut alive: BitSet, mut k: i64, taken: &mut Vec<usize>) -> Result<bool> {
        self.nodes += 1;
        self.limits.check(self.nodes, "vertex cover search")?;
        let g = self.g;
        let mark = taken.len();
        let found = 'node: {
            if !apply_rules(g, &mut alive, &mut k, taken) {
                break 'node false;
            }
            if alive.is_empty() {
                break 'node true;
            }
            if exceeds_size_bound(&alive, k) {
                break 'node false;
            }
            let lb = matching_bound(g, &alive);
            if lb as i64 > k || clique_cover_bound(g, &alive) as i64 > k {
                break 'node false;
            }
            let v = alive
                .iter()
                .max_by_key(|&v| (g.degree_in(v, &alive), std::cmp::Reverse(v)))
                .unwrap();

            let mut with_v = mirrors(g, &alive, v);
            with_v.push(v);
            if with_v.len() as i64 <= k {
                let inner = taken.len();
                let mut next = alive.clone();
                for &u in &with_v {
                    next.remove(u);
                    taken.push(u);
                }
                if self.decide(next, k - with_v.len() as i64, taken)? {
                    break 'node true;
                }
                taken.truncate(inner);
            }

            let nv = g.neighbors(v).intersection(&alive);
            if nv.len() as i64 <= k {
                let mut next = alive.clone();
                next.difference_with(&nv);
                next.remove(v);
                taken.extend(nv.iter());
                if self.decide(next, k - nv.len() as i64, taken)? {
                    break 'node true;
                }
            }
            false
        };
        if !found {
            taken.truncate(mark);
        }
        Ok(found)
    }
}

pub fn vc_decide(g: &Graph, k: usize) -> SolveResult {
    vc_decide_with_limits(g, k, SearchLimits::unlimited()).expect("unlimited search cannot time out")
}

/// Decides `vc(G) <= k`: kernelize, then branch on a maximum-degree vertex
/// (take it with its mirrors, or take its neighborhood) with matching and
/// clique-cover lower bounds.
pub fn vc_decide_with_limits(g: &Graph, k: usize, limits: SearchLimits) -> Result<SolveResult> {
    let started = Instant::now();
    let kernel = kernelize_vc(g, k);
    if kernel.infeasible {
        return Ok(SolveResult::infeasible(1, started));
    }
    let rg = &kernel.reduced.graph;
    let mut search = VcSearch {
        g: rg,
        nodes: 0,
        limits,
    };
    let mut taken = Vec::new();
    let found = search.decide(rg.vertices(), kernel.budget as i64, &mut taken)?;
    if !found {
        return Ok(SolveResult::infeasible(search.nodes, started));
    }
    let cert = kernel.lift(&taken.into_iter().collect());
    assert!(
        cert.len() <= k && g.is_vertex_cover(&cert),
        "vertex cover certificate failed verification"
    );
    Ok(SolveResult::feasible(cert, search.nodes, started))
}

#[derive(Clone, Debug, Serialize)]
pub struct VcOptimum {
    pub size: usize,
    pub certificate: VertexSet,
    pub nodes_explored: u64,
}

pub fn vc_optimum(g: &Graph) -> Result<VcOptimum> {
    vc_optimum_with_limit(g, DEFAULT_OPTIMUM_LIMIT)
}

/// Minimum vertex cover by increasing the budget from a lower bound.
pub fn vc_optimum_with_limit(g: &Graph, limit: usize) -> Result<VcOptimum> {
    if g.n() > limit {
        return Err(Error::capacity("vc_optimum", limit, g.n()));
    }
    let all = g.vertices();
    let start = matching_bound(g, &all).max(clique_cover_bound(g, &all));
    let mut nodes = 0;
    for k in start..=g.n() {
        let r = vc_decide(g, k);
        nodes += r.nodes_explored;
        if let Some(cert) = r.certificate {
            return Ok(VcOptimum {
                size: cert.len(),
                certificate: cert,
                nodes_explored: nodes,
            });
        }
    }
    unreachable!("the whole vertex set is always a cover")
}

pub fn vc_above_h_index(g: &Graph, k: usize) -> AboveGuaranteeResult {
    vc_above_h_index_with(g, k, AboveOptions::default()).expect("unlimited search cannot time out")
}

/// One round of `h + 1`-way branching on the h-index witnesses
/// `v_1..v_h`: either all are in the cover (budget `k - h`), or some `v_i`
/// is not and its whole neighborhood is (budget `k - deg(v_i) <= k - h`).
/// Each subinstance goes to [`vc_decide`].
pub fn vc_above_h_index_with(
    g: &Graph,
    k: usize,
    opts: AboveOptions,
) -> Result<AboveGuaranteeResult> {
    let started = Instant::now();
    let hi = h_index(g);
    let h = hi.h;
    let k = k as i64;

    let mut plans: Vec<(BranchCase, VertexSet)> =
        vec![(BranchCase::TakeWitnesses, hi.witness.iter().copied().collect())];
    for &v in &hi.witness {
        plans.push((
            BranchCase::ExcludeWitness { vertex: v },
            VertexSet::from(g.neighbors(v)),
        ));
    }

    let mut branches = Vec::with_capacity(plans.len());
    let mut nodes = 1;
    let mut answer: Option<VertexSet> = None;
    for (case, removed) in plans {
        let budget = k - removed.len() as i64;
        let mut outcome = None;
        if budget >= 0 && (answer.is_none() || opts.exhaustive) {
            let sub = g.remove_vertices(&removed)?;
            let r = vc_decide_with_limits(&sub.graph, budget as usize, opts.limits)?;
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
            assert!(cert.len() as i64 <= k && g.is_vertex_cover(&cert));
            SolveResult::feasible(cert, nodes, started)
        }
        None => SolveResult::infeasible(nodes, started),
    };
    Ok(AboveGuaranteeResult {
        result,
        guarantee: h,
        ell: k - h as i64,
        branches,
    })
}
