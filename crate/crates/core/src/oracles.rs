//! Ground-truth computations used to cross-check every solver and
//! construction.
//!
//! Tier 1 enumerates vertex subsets in increasing size (lexicographic order
//! within a size), so the witness returned is the lexicographically smallest
//! optimal set. Tier 2 is branch and bound that is only trusted after it has
//! been validated against tier 1 (see the `oracles` verification suite).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::params::{iter_bits, max_clique};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    /// Vertex limit for subset enumeration (vc, independent set, fvs).
    pub enumeration_max_n: usize,
    /// Vertex limit for cluster-deletion enumeration.
    pub cvd_enumeration_max_n: usize,
    /// Vertex limit for the branch-and-bound vertex cover tier.
    pub vc_tier2_max_n: usize,
    /// Vertex limit for the P3-branching cluster deletion tier.
    pub cvd_tier2_max_n: usize,
    /// Cap on the number of subsets any enumeration may test.
    pub work_budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            enumeration_max_n: 16,
            cvd_enumeration_max_n: 14,
            vc_tier2_max_n: 40,
            cvd_tier2_max_n: 64,
            work_budget: 1_000_000_000,
        }
    }
}

impl OracleLimits {
    /// Raised limits for verification suites whose instances are larger than
    /// the defaults but still enumerable because the answers are small.
    pub fn extended() -> Self {
        OracleLimits {
            enumeration_max_n: 32,
            vc_tier2_max_n: 128,
            cvd_tier2_max_n: 128,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValue {
    pub value: usize,
    pub witness: VertexSet,
}

const MAX_MASK_N: usize = 64;

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect()
}

fn all_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_set(m: u64) -> VertexSet {
    iter_bits(m).collect()
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r.min(u64::MAX as u128) as u64
}

/// Calls `visit` on every `size`-subset of `0..n` in lexicographic order;
/// stops early when it returns true.
fn find_subset(n: usize, size: usize, mut visit: impl FnMut(u64) -> bool) -> Option<u64> {
    if size > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let m = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if visit(m) {
            return Some(m);
        }
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - size + i {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Smallest subset (by size, then lexicographically) satisfying `pred`.
fn smallest_subset(
    g: &Graph,
    what: &'static str,
    max_n: usize,
    limits: &OracleLimits,
    pred: impl Fn(u64) -> bool,
) -> Result<OracleValue> {
    let n = g.n();
    let max_n = max_n.min(MAX_MASK_N);
    if n > max_n {
        return Err(Error::capacity(what, max_n, n));
    }
    let mut work = 0u64;
    for size in 0..=n {
        work = work.saturating_add(binomial(n, size));
        if work > limits.work_budget {
            return Err(Error::Capacity {
                what,
                limit: limits.work_budget,
                actual: work,
            });
        }
        if let Some(m) = find_subset(n, size, &pred) {
            return Ok(OracleValue {
                value: size,
                witness: mask_to_set(m),
            });
        }
    }
    unreachable!("the full vertex set satisfies every deletion predicate")
}

fn is_forest_mask(adj: &[u64], alive: u64) -> bool {
    let mut edges = 0u32;
    for v in iter_bits(alive) {
        edges += (adj[v] & alive).count_ones();
    }
    let edges = edges / 2;
    let mut comps = 0u32;
    let mut unseen = alive;
    while unseen != 0 {
        comps += 1;
        let mut frontier = unseen & unseen.wrapping_neg();
        let mut comp = frontier;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_bits(frontier) {
                next |= adj[v] & alive;
            }
            frontier = next & !comp;
            comp |= next;
        }
        unseen &= !comp;
    }
    edges + comps == alive.count_ones()
}

fn is_cluster_mask(adj: &[u64], alive: u64) -> bool {
    iter_bits(alive).all(|v| {
        let nv = (adj[v] | 1 << v) & alive;
        iter_bits(adj[v] & alive).all(|u| (adj[u] | 1 << u) & alive == nv)
    })
}

fn has_clique_mask(adj: &[u64], cand: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique_mask(adj, rest & adj[v], need - 1) {
            return true;
        }
    }
    false
}

pub fn brute_min_vertex_cover(g: &Graph) -> Result<OracleValue> {
    brute_min_vertex_cover_with(g, &OracleLimits::default())
}

/// Enumeration when `n` is within the enumeration limit, otherwise the
/// branch-and-bound tier.
pub fn brute_min_vertex_cover_with(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    if g.n() <= limits.enumeration_max_n.min(MAX_MASK_N) {
        enumerate_min_vertex_cover(g, limits)
    } else {
        tier2_min_vertex_cover(g, limits)
    }
}

pub fn enumerate_min_vertex_cover(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    let adj = masks(g);
    let n = g.n();
    let full = all_mask(n);
    smallest_subset(g, "vertex cover enumeration", limits.enumeration_max_n, limits, |s| {
        iter_bits(full & !s).all(|v| adj[v] & !s == 0)
    })
}

/// `n - ω(complement)`, using the clique branch and bound. Independent of
/// the vertex cover solver's search.
pub fn tier2_min_vertex_cover(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    if g.n() > limits.vc_tier2_max_n {
        return Err(Error::capacity(
            "vertex cover branch and bound",
            limits.vc_tier2_max_n,
            g.n(),
        ));
    }
    let independent = max_clique(&g.complement());
    let witness: VertexSet = (0..g.n()).filter(|&v| !independent.contains(v)).collect();
    debug_assert!(g.is_vertex_cover(&witness));
    Ok(OracleValue {
        value: witness.len(),
        witness,
    })
}

pub fn brute_max_independent_set(g: &Graph) -> Result<OracleValue> {
    brute_max_independent_set_with(g, &OracleLimits::default())
}

/// Largest independent set by enumeration from the top size down; checked
/// against `n - vc`.
pub fn brute_max_independent_set_with(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    let n = g.n();
    let max_n = limits.enumeration_max_n.min(MAX_MASK_N);
    if n > max_n {
        return Err(Error::capacity("independent set enumeration", max_n, n));
    }
    let adj = masks(g);
    let mut work = 0u64;
    for size in (0..=n).rev() {
        work = work.saturating_add(binomial(n, size));
        if work > limits.work_budget {
            return Err(Error::Capacity {
                what: "independent set enumeration",
                limit: limits.work_budget,
                actual: work,
            });
        }
        if let Some(m) = find_subset(n, size, |s| iter_bits(s).all(|v| adj[v] & s == 0)) {
            let vc = enumerate_min_vertex_cover(g, limits)?;
            assert_eq!(size + vc.value, n, "independence number plus vertex cover number must equal n");
            return Ok(OracleValue {
                value: size,
                witness: mask_to_set(m),
            });
        }
    }
    unreachable!("the empty set is independent")
}

/// Clique number by enumeration (largest clique, scanning sizes downward).
pub fn brute_clique_number(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    let n = g.n();
    let max_n = limits.enumeration_max_n.min(MAX_MASK_N);
    if n > max_n {
        return Err(Error::capacity("clique enumeration", max_n, n));
    }
    let adj = masks(g);
    for size in (0..=n).rev() {
        if let Some(m) = find_subset(n, size, |s| {
            iter_bits(s).all(|v| s & !(adj[v] | 1 << v) == 0)
        }) {
            return Ok(OracleValue {
                value: size,
                witness: mask_to_set(m),
            });
        }
    }
    unreachable!("the empty set is a clique")
}

pub fn brute_min_fvs(g: &Graph) -> Result<OracleValue> {
    brute_min_fvs_with(g, &OracleLimits::default())
}

pub fn brute_min_fvs_with(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    let adj = masks(g);
    let full = all_mask(g.n());
    smallest_subset(g, "feedback vertex set enumeration", limits.enumeration_max_n, limits, |s| {
        is_forest_mask(&adj, full & !s)
    })
}

pub fn brute_cluster_deletion_number(g: &Graph) -> Result<OracleValue> {
    brute_cluster_deletion_number_with(g, &OracleLimits::default())
}

/// Enumeration up to `cvd_enumeration_max_n` vertices, branch and bound above.
pub fn brute_cluster_deletion_number_with(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    if g.n() <= limits.cvd_enumeration_max_n.min(MAX_MASK_N) {
        enumerate_cluster_deletion(g, limits)
    } else {
        tier2_cluster_deletion(g, limits)
    }
}

pub fn enumerate_cluster_deletion(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    let adj = masks(g);
    let full = all_mask(g.n());
    smallest_subset(g, "cluster deletion enumeration", limits.cvd_enumeration_max_n, limits, |s| {
        is_cluster_mask(&adj, full & !s)
    })
}

pub fn brute_distance_to_kr_free(g: &Graph, r: usize) -> Result<OracleValue> {
    brute_distance_to_kr_free_with(g, r, &OracleLimits::default())
}

/// Minimum deletions leaving no clique on `r` vertices. Guarded only by the
/// work budget (and the 64-vertex mask width).
pub fn brute_distance_to_kr_free_with(
    g: &Graph,
    r: usize,
    limits: &OracleLimits,
) -> Result<OracleValue> {
    if r < 3 {
        return Err(Error::input(format!("clique order r must be at least 3, got {r}")));
    }
    let adj = masks(g);
    let full = all_mask(g.n());
    smallest_subset(g, "K_r deletion enumeration", MAX_MASK_N, limits, |s| {
        !has_clique_mask(&adj, full & !s, r)
    })
}

/// Tier 2 cluster deletion: branch and bound on the induced P3s with a
/// vertex-disjoint P3 packing as lower bound, plus a branching rule on false
/// twins.
pub fn tier2_cluster_deletion(g: &Graph, limits: &OracleLimits) -> Result<OracleValue> {
    if g.n() > limits.cvd_tier2_max_n {
        return Err(Error::capacity(
            "cluster deletion branch and bound",
            limits.cvd_tier2_max_n,
            g.n(),
        ));
    }
    let all = g.vertices();
    let start = p3_packing(g, &all);
    for k in start..=g.n() {
        let mut sol = Vec::new();
        if cvd_branch(g, all.clone(), k, &mut sol) {
            let witness: VertexSet = sol.into_iter().collect();
            debug_assert!(g.remove_vertices(&witness).unwrap().graph.is_cluster());
            return Ok(OracleValue {
                value: witness.len(),
                witness,
            });
        }
    }
    unreachable!("deleting every vertex leaves a cluster graph")
}

/// Some induced P3 `(a, center, b)` in `G[alive]`, preferring a center of
/// maximum degree.
fn find_p3(g: &Graph, alive: &BitSet) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, (usize, usize, usize))> = None;
    for v in alive.iter() {
        let nb = g.neighbors(v).intersection(alive);
        let deg = nb.len();
        if deg < 2 || best.is_some_and(|(d, _)| d >= deg) {
            continue;
        }
        for a in nb.iter() {
            let mut rest = nb.difference(g.neighbors(a));
            rest.remove(a);
            if let Some(b) = rest.first() {
                best = Some((deg, (a, v, b)));
                break;
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Greedy number of vertex-disjoint induced P3s in `G[alive]`.
fn p3_packing(g: &Graph, alive: &BitSet) -> usize {
    let mut free = alive.clone();
    let mut count = 0;
    for v in alive.iter() {
        if !free.contains(v) {
            continue;
        }
        let nb = g.neighbors(v).intersection(&free);
        let found = nb.iter().find_map(|a| {
            let mut rest = nb.difference(g.neighbors(a));
            rest.remove(a);
            rest.first().map(|b| (a, b))
        });
        if let Some((a, b)) = found {
            free.remove(v);
            free.remove(a);
            free.remove(b);
            count += 1;
        }
    }
    count
}

/// Largest class of at least two false twins (equal open neighborhoods,
/// non-empty) in `G[alive]`.
fn false_twin_class(g: &Graph, alive: &BitSet) -> Option<(Vec<usize>, BitSet)> {
    let mut classes: HashMap<BitSet, Vec<usize>> = HashMap::new();
    for v in alive.iter() {
        let nb = g.neighbors(v).intersection(alive);
        if !nb.is_empty() {
            classes.entry(nb).or_default().push(v);
        }
    }
    classes
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .max_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| b.1[0].cmp(&a.1[0])))
        .map(|(nb, members)| (members, nb))
}

fn cvd_branch(g: &Graph, alive: BitSet, k: usize, sol: &mut Vec<usize>) -> bool {
    let Some((a, center, b)) = find_p3(g, &alive) else {
        return true;
    };
    if k == 0 || p3_packing(g, &alive) > k {
        return false;
    }
    let mark = sol.len();
    let try_delete = |del: &[usize], sol: &mut Vec<usize>| -> bool {
        if del.len() > k {
            return false;
        }
        let mut next = alive.clone();
        for &v in del {
            next.remove(v);
        }
        sol.extend_from_slice(del);
        if cvd_branch(g, next, k - del.len(), sol) {
            return true;
        }
        sol.truncate(mark);
        false
    };

    // Either every common neighbor of a twin class is deleted (the twins then
    // sit isolated and are kept), or some neighbor survives and at most one
    // twin can stay, which by symmetry is the lowest one.
    if let Some((twins, nb)) = false_twin_class(g, &alive) {
        let neighbors: Vec<usize> = nb.iter().collect();
        if try_delete(&neighbors, sol) {
            return true;
        }
        return try_delete(&twins[1..], sol);
    }
    try_delete(&[center], sol) || try_delete(&[a], sol) || try_delete(&[b], sol)
}
