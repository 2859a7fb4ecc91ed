//! Seeded random instance generators. All randomness flows through a
//! ChaCha stream, so a `(generator, parameters, seed)` triple replays exactly.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{CnfFormula, Literal};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p).
pub fn erdos_renyi(n: usize, p: f64, rng: &mut InstanceRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are in range")
}

/// Random planar graph: a stacked triangulation, randomized by edge flips,
/// with each edge then dropped independently with probability `drop`, and
/// vertex ids shuffled.
pub fn random_planar(n: usize, drop: f64, rng: &mut InstanceRng) -> Graph {
    if n < 3 {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        return Graph::new(n, &edges).expect("path edges are in range");
    }
    // Oriented triangles; each undirected edge appears in two of them with
    // opposite orientations.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges: HashSet<(usize, usize)> = [(0, 1), (0, 2), (1, 2)].into_iter().collect();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        edges.extend([key(a, v), key(b, v), key(c, v)]);
    }
    for _ in 0..2 * n {
        let f1 = rng.gen_range(0..faces.len());
        let rot = rng.gen_range(0..3);
        let (a, b, c) = (faces[f1][rot], faces[f1][(rot + 1) % 3], faces[f1][(rot + 2) % 3]);
        let Some(f2) = faces.iter().position(|t| {
            (0..3).any(|i| t[i] == b && t[(i + 1) % 3] == a)
        }) else {
            continue;
        };
        let d = faces[f2].iter().copied().find(|&x| x != a && x != b).unwrap();
        if c == d || edges.contains(&key(c, d)) {
            continue;
        }
        edges.remove(&key(a, b));
        edges.insert(key(c, d));
        faces[f1] = [c, a, d];
        faces[f2] = [d, b, c];
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut kept: Vec<(usize, usize)> = edges.into_iter().collect();
    kept.sort_unstable();
    let kept: Vec<(usize, usize)> = kept
        .into_iter()
        .filter(|_| !rng.gen_bool(drop.clamp(0.0, 1.0)))
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::new(n, &kept).expect("triangulation edges are in range")
}

/// Uniform random 3-CNF whose clauses each use three distinct variables.
pub fn random_3cnf(num_vars: usize, num_clauses: usize, rng: &mut InstanceRng) -> Result<CnfFormula> {
    if num_vars < 3 {
        return Err(Error::input(format!(
            "need at least 3 variables for distinct-variable clauses, got {num_vars}"
        )));
    }
    let vars: Vec<usize> = (1..=num_vars).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            let picked: Vec<usize> = vars.choose_multiple(rng, 3).copied().collect();
            let lit = |v: usize, rng: &mut InstanceRng| Literal {
                var: v,
                negated: rng.gen_bool(0.5),
            };
            [lit(picked[0], rng), lit(picked[1], rng), lit(picked[2], rng)]
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::is_planar;

    #[test]
    fn generators_replay_from_seed() {
        let a = erdos_renyi(12, 0.3, &mut rng(7));
        let b = erdos_renyi(12, 0.3, &mut rng(7));
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let p = random_planar(15, 0.2, &mut rng(3));
        let q = random_planar(15, 0.2, &mut rng(3));
        assert_eq!(p.edges().collect::<Vec<_>>(), q.edges().collect::<Vec<_>>());
    }

    #[test]
    fn triangulations_are_maximal_planar() {
        for seed in 0..50 {
            let g = random_planar(4 + seed as usize % 17, 0.0, &mut rng(seed));
            assert_eq!(g.edge_count(), 3 * g.n() - 6);
            assert!(is_planar(&g), "seed {seed}");
        }
    }

    #[test]
    fn cnf_clauses_have_distinct_variables() {
        let f = random_3cnf(5, 20, &mut rng(1)).unwrap();
        assert!(f.has_distinct_variables());
        assert_eq!(f.num_clauses(), 20);
        assert!(random_3cnf(2, 1, &mut rng(1)).is_err());
    }
}
