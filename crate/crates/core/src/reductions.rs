//! Instance generators for the hardness reductions. Each returns the output
//! graph, its budget, named certificate sets, a label for every output
//! vertex, and the integer quantities the construction claims about itself.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cnf::{Clause, CnfFormula};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::params::degree_profile;

/// Where an output vertex comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GadgetLabel {
    /// A vertex carried over from the input graph.
    Source { vertex: usize },
    /// Apex of the triangle added on input edge `{u, v}`.
    EdgeTriangle { u: usize, v: usize },
    /// Vertex `vertex` of the input in clique copy `copy`.
    Copy { copy: usize, vertex: usize },
    AClique { copy: usize, index: usize },
    ALeaf { copy: usize, index: usize },
    BClique { clique: usize, index: usize },
    BLeaf { clique: usize, index: usize },
    /// Clause gadget vertex; `side` is the literal position in the clause.
    ClauseSide {
        clause: usize,
        side: usize,
        index: usize,
        #[serde(skip_serializing_if = "std::ops::Not::not")]
        padding: bool,
    },
    /// Variable gadget vertex; side 0 is the positive side, 1 the negative.
    VariableSide { variable: usize, side: usize, index: usize },
    Triangle { triangle: usize, index: usize },
    /// Pendant leaf of input vertex `of`.
    Leaf { of: usize },
    Universal { index: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionArtifact {
    pub name: &'static str,
    #[serde(skip)]
    pub graph: Graph,
    pub budget: usize,
    /// What the budget is called for this construction (`k`, `ell`, ...).
    pub budget_name: &'static str,
    pub certificates: BTreeMap<String, VertexSet>,
    pub gadget_map: Vec<GadgetLabel>,
    pub claimed_params: BTreeMap<String, i64>,
}

impl ReductionArtifact {
    pub fn certificate(&self, name: &str) -> &VertexSet {
        &self.certificates[name]
    }

    pub fn param(&self, name: &str) -> i64 {
        self.claimed_params[name]
    }

    fn check(self) -> Self {
        debug_assert_eq!(self.gadget_map.len(), self.graph.n());
        debug_assert!(self
            .certificates
            .values()
            .all(|c| c.validate(self.graph.n()).is_ok()));
        self
    }
}

fn params<const N: usize>(pairs: [(&str, i64); N]) -> BTreeMap<String, i64> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Clique of size `k` in `g` iff vertex cover of size `n - k` in the
/// complement.
pub fn clique_to_vc_complement(g: &Graph, k: usize) -> Result<ReductionArtifact> {
    let n = g.n();
    if k > n {
        return Err(Error::input(format!("clique size {k} exceeds n = {n}")));
    }
    let comp = g.complement();
    let k_bar = n - k;
    let mut claimed = params([("n", n as i64), ("k", k as i64), ("k_bar", k_bar as i64)]);
    if let (Ok((_, max_g)), Ok((min_c, _))) = (degree_profile(g), degree_profile(&comp)) {
        claimed.insert("k_bar_minus_min_degree".into(), k_bar as i64 - min_c as i64);
        claimed.insert("max_degree".into(), max_g as i64);
    }
    Ok(ReductionArtifact {
        name: "clique-complement",
        graph: comp,
        budget: k_bar,
        budget_name: "k_bar",
        certificates: BTreeMap::new(),
        gadget_map: (0..n).map(|vertex| GadgetLabel::Source { vertex }).collect(),
        claimed_params: claimed,
    }
    .check())
}

/// Adds a fresh apex on every edge, so each edge lies on its own triangle.
pub fn vc_to_fvs_triangles(g: &Graph, ell: usize) -> ReductionArtifact {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut gadget_map: Vec<GadgetLabel> = (0..n).map(|vertex| GadgetLabel::Source { vertex }).collect();
    for (i, (u, v)) in g.edges().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
        gadget_map.push(GadgetLabel::EdgeTriangle { u, v });
    }
    let total = n + g.edge_count();
    ReductionArtifact {
        name: "vc-fvs-triangle",
        graph: Graph::new(total, &edges).expect("apex ids are in range"),
        budget: ell,
        budget_name: "ell",
        certificates: [("original".to_string(), (0..n).collect())].into(),
        gadget_map,
        claimed_params: params([("ell", ell as i64), ("n", total as i64)]),
    }
    .check()
}

/// Independent set of size `k` in `g` iff the output has a vertex cover of
/// size `ell`. The union `D` of the clique copies is a minimum `K_r`-deletion
/// set of size `nk`.
///
/// Copies are joined by `w^i_q w^j_q` and, for every input edge `{p, q}`, by
/// `w^i_p w^j_q` for `i != j`. The cross edges are what stop an independent
/// set from picking adjacent input vertices in different copies.
pub fn is_to_vc_above_krfree(g: &Graph, k: usize, r: usize) -> Result<ReductionArtifact> {
    let n = g.n();
    if k < 1 || r < 3 || n < 1 {
        return Err(Error::input(format!(
            "need k >= 1, r >= 3 and a non-empty graph (k = {k}, r = {r}, n = {n})"
        )));
    }
    let w = |i: usize, q: usize| i * n + q;
    let a_size = (r - 2) * k;
    let b_size = (r - 1) * (k + 1);
    let a0 = n * k;
    let a_leaf0 = a0 + a_size;
    let b0 = a_leaf0 + a_size;
    let b_leaf0 = b0 + b_size;
    let total = b_leaf0 + b_size;

    let mut edges = Vec::new();
    let mut gadget_map = Vec::with_capacity(total);
    for i in 0..k {
        for q in 0..n {
            gadget_map.push(GadgetLabel::Copy { copy: i, vertex: q });
            for p in 0..q {
                edges.push((w(i, p), w(i, q)));
            }
            for j in 0..i {
                edges.push((w(j, q), w(i, q)));
            }
        }
    }
    for (p, q) in g.edges() {
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    edges.push((w(i, p), w(j, q)));
                }
            }
        }
    }
    let a = |i: usize, t: usize| a0 + i * (r - 2) + t;
    for i in 0..k {
        for t in 0..r - 2 {
            gadget_map.push(GadgetLabel::AClique { copy: i, index: t });
            for s in 0..t {
                edges.push((a(i, s), a(i, t)));
            }
            edges.push((a(i, t), a_leaf0 + (a(i, t) - a0)));
            for q in 0..n {
                edges.push((a(i, t), w(i, q)));
            }
        }
    }
    for i in 0..k {
        for t in 0..r - 2 {
            gadget_map.push(GadgetLabel::ALeaf { copy: i, index: t });
        }
    }
    let b = |c: usize, t: usize| b0 + c * (r - 1) + t;
    for c in 0..=k {
        for t in 0..r - 1 {
            gadget_map.push(GadgetLabel::BClique { clique: c, index: t });
            for s in 0..t {
                edges.push((b(c, s), b(c, t)));
            }
            edges.push((b(c, t), b_leaf0 + (b(c, t) - b0)));
            for v in 0..n * k {
                edges.push((b(c, t), v));
            }
        }
    }
    for c in 0..=k {
        for t in 0..r - 1 {
            gadget_map.push(GadgetLabel::BLeaf { clique: c, index: t });
        }
    }

    let leaves = (b0 - a_leaf0) + (total - b_leaf0);
    let ell = (n - 1) * k + a_size + b_size;
    let ell_via_leaves = (n - 1) * k + leaves;
    assert_eq!(ell, ell_via_leaves, "both forms of the budget must agree");
    let certificates = [
        ("deletion_set", (0..a0).collect::<VertexSet>()),
        ("a", (a0..a_leaf0).collect()),
        ("b", (b0..b_leaf0).collect()),
        ("leaves", (a_leaf0..b0).chain(b_leaf0..total).collect()),
    ]
    .map(|(k, v)| (k.to_string(), v))
    .into();
    Ok(ReductionArtifact {
        name: "is-krfree",
        graph: Graph::new(total, &edges).expect("gadget ids are in range"),
        budget: ell,
        budget_name: "ell",
        certificates,
        gadget_map,
        claimed_params: params([
            ("n", n as i64),
            ("k", k as i64),
            ("r", r as i64),
            ("ell", ell as i64),
            ("ell_via_leaves", ell_via_leaves as i64),
            ("distance_to_kr_free", (n * k) as i64),
            ("ell_above_distance", ell as i64 - (n * k) as i64),
        ]),
    }
    .check())
}

/// Vertex id layout of the clause/variable gadget construction.
#[derive(Clone, Copy, Debug)]
pub struct SatLayout {
    pub m: usize,
    pub n: usize,
}

impl SatLayout {
    /// `u_{side, index, clause}`: side in 0..3, index in 0..7.
    pub fn clause_vertex(&self, clause: usize, side: usize, index: usize) -> usize {
        21 * clause + 7 * side + index
    }

    /// `v_{side, index, var}`: side 0 positive, 1 negative, index in 0..3;
    /// `var` is 1-based.
    pub fn variable_vertex(&self, var: usize, side: usize, index: usize) -> usize {
        21 * self.m + 6 * (var - 1) + 3 * side + index
    }

    pub fn base_size(&self) -> usize {
        21 * self.m + 6 * self.n
    }
}

/// Pads the clause list to a multiple of three by repeating the first
/// clause; returns the padded clauses and how many are original.
fn pad_clauses(phi: &CnfFormula) -> (Vec<Clause>, usize) {
    let mut clauses = phi.clauses().to_vec();
    let original = clauses.len();
    while clauses.len() % 3 != 0 {
        clauses.push(phi.clauses()[0]);
    }
    (clauses, original)
}

/// 3-SAT to vertex cover parameterized above cluster deletion number. Each
/// clause becomes a complete tripartite gadget with sides of 7, each variable
/// a `K_{3,3}`, and every clause side is joined to the variable side of the
/// opposite sign. Budget `14m + 3n`.
///
/// The extended variant pads the clauses to a multiple of three and adds
/// `7m/3 + n` triangles joined to every original vertex; its budget is
/// `21m + 6n` and `V(G)` is a certified cluster deletion set.
pub fn sat3_to_vc_above_cvd(phi: &CnfFormula, extended: bool) -> Result<ReductionArtifact> {
    let (clauses, original) = if extended && phi.num_clauses() > 0 {
        pad_clauses(phi)
    } else {
        (phi.clauses().to_vec(), phi.num_clauses())
    };
    let m = clauses.len();
    let n = phi.num_vars();
    let layout = SatLayout { m, n };
    let base = layout.base_size();

    let mut edges = Vec::new();
    let mut gadget_map = Vec::with_capacity(base);
    for (i, clause) in clauses.iter().enumerate() {
        for side in 0..3 {
            for s in 0..7 {
                gadget_map.push(GadgetLabel::ClauseSide {
                    clause: i,
                    side,
                    index: s,
                    padding: i >= original,
                });
                let u = layout.clause_vertex(i, side, s);
                for other in 0..side {
                    for t in 0..7 {
                        edges.push((layout.clause_vertex(i, other, t), u));
                    }
                }
                // Positive literal attaches to the positive variable side,
                // so that not covering u forces that side into the cover.
                let lit = clause[side];
                let var_side = usize::from(lit.negated);
                for t in 0..3 {
                    edges.push((u, layout.variable_vertex(lit.var, var_side, t)));
                }
            }
        }
    }
    for j in 1..=n {
        for side in 0..2 {
            for s in 0..3 {
                gadget_map.push(GadgetLabel::VariableSide { variable: j, side, index: s });
                if side == 1 {
                    for t in 0..3 {
                        edges.push((layout.variable_vertex(j, 0, t), layout.variable_vertex(j, 1, s)));
                    }
                }
            }
        }
    }
    let k = 14 * m + 3 * n;
    let mut certificates: BTreeMap<String, VertexSet> = [
        ("clause_vertices".to_string(), (0..21 * m).collect()),
        ("variable_vertices".to_string(), (21 * m..base).collect()),
    ]
    .into();
    let mut claimed = params([
        ("m", m as i64),
        ("n", n as i64),
        ("k", k as i64),
        ("padding_clauses", (m - original) as i64),
    ]);
    if !extended {
        return Ok(ReductionArtifact {
            name: "sat-cvd",
            graph: Graph::new(base, &edges).expect("gadget ids are in range"),
            budget: k,
            budget_name: "k",
            certificates,
            gadget_map,
            claimed_params: claimed,
        }
        .check());
    }

    let triangles = 7 * m / 3 + n;
    let total = base + 3 * triangles;
    for t in 0..triangles {
        for idx in 0..3 {
            gadget_map.push(GadgetLabel::Triangle { triangle: t, index: idx });
            let x = base + 3 * t + idx;
            for y in base + 3 * t..x {
                edges.push((y, x));
            }
            for v in 0..base {
                edges.push((v, x));
            }
        }
    }
    let budget = 21 * m + 6 * n;
    certificates.insert("cluster_deletion_set".into(), (0..base).collect());
    certificates.insert("triangles".into(), (base..total).collect());
    claimed.insert("t_size".into(), (3 * triangles) as i64);
    claimed.insert("budget".into(), budget as i64);
    claimed.insert("cluster_deletion_set_size".into(), base as i64);
    Ok(ReductionArtifact {
        name: "sat-cvd-extended",
        graph: Graph::new(total, &edges).expect("gadget ids are in range"),
        budget,
        budget_name: "budget",
        certificates,
        gadget_map,
        claimed_params: claimed,
    }
    .check())
}

/// The cover built from a satisfying assignment: every clause gadget loses
/// one side whose literal is true, every variable gadget keeps the side that
/// the assignment makes true. With `extended`, all triangle vertices are
/// added as well. Returns `None` if the assignment does not satisfy `phi`.
pub fn cover_from_assignment(
    phi: &CnfFormula,
    assignment: &[bool],
    extended: bool,
) -> Option<VertexSet> {
    if !phi.eval(assignment) {
        return None;
    }
    let (clauses, _) = if extended && phi.num_clauses() > 0 {
        pad_clauses(phi)
    } else {
        (phi.clauses().to_vec(), phi.num_clauses())
    };
    let layout = SatLayout {
        m: clauses.len(),
        n: phi.num_vars(),
    };
    let mut cover = Vec::new();
    for (i, clause) in clauses.iter().enumerate() {
        let keep = clause.iter().position(|l| l.eval(assignment))?;
        for side in (0..3).filter(|&s| s != keep) {
            cover.extend((0..7).map(|s| layout.clause_vertex(i, side, s)));
        }
    }
    for j in 1..=layout.n {
        let side = usize::from(!assignment[j - 1]);
        cover.extend((0..3).map(|s| layout.variable_vertex(j, side, s)));
    }
    if extended {
        let base = layout.base_size();
        cover.extend(base..base + 3 * (7 * layout.m / 3 + layout.n));
    }
    Some(cover.into_iter().collect())
}

/// Feedback vertex set of size `k` in `g` iff one of size `n - 2` in `H`,
/// where `H` adds a pendant leaf to every vertex and `n - k - 2` universal
/// vertices adjacent to all of `V(G)`. `vc(H) = n`, so the output budget is
/// two below the vertex cover number.
pub fn fvs_to_fvs_below_vc(g: &Graph, k: usize) -> Result<ReductionArtifact> {
    let n = g.n();
    if g.edge_count() == 0 {
        return Err(Error::input("graph must have at least one edge"));
    }
    if k + 2 > n {
        return Err(Error::input(format!("k = {k} must be at most n - 2 = {}", n - 2)));
    }
    let lambda = n - k - 2;
    let total = 2 * n + lambda;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut gadget_map: Vec<GadgetLabel> = (0..n).map(|vertex| GadgetLabel::Source { vertex }).collect();
    for v in 0..n {
        edges.push((v, n + v));
        gadget_map.push(GadgetLabel::Leaf { of: v });
    }
    for x in 0..lambda {
        gadget_map.push(GadgetLabel::Universal { index: x });
        edges.extend((0..n).map(|v| (v, 2 * n + x)));
    }
    let certificates = [
        ("original".to_string(), (0..n).collect::<VertexSet>()),
        ("leaves".to_string(), (n..2 * n).collect()),
        ("universal".to_string(), (2 * n..total).collect()),
    ]
    .into();
    Ok(ReductionArtifact {
        name: "fvs-below-vc",
        graph: Graph::new(total, &edges).expect("gadget ids are in range"),
        budget: n - 2,
        budget_name: "k_prime",
        certificates,
        gadget_map,
        claimed_params: params([
            ("k", k as i64),
            ("k_prime", (n - 2) as i64),
            ("lambda", lambda as i64),
            ("vc", n as i64),
            ("ell", 2),
        ]),
    }
    .check())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Literal;
    use crate::fvs::fvs_decide;
    use crate::graph::families::*;
    use crate::oracles::*;
    use crate::vc::vc_decide;

    #[test]
    fn complement_examples() {
        let a = clique_to_vc_complement(&cycle(5), 2).unwrap();
        assert_eq!(a.budget, 3);
        assert_eq!(a.graph.edge_count(), 5);
        assert!(vc_decide(&a.graph, 3).feasible);

        let a = clique_to_vc_complement(&Graph::complete(4), 4).unwrap();
        assert_eq!((a.graph.edge_count(), a.budget), (0, 0));

        let a = clique_to_vc_complement(&Graph::empty(3), 2).unwrap();
        assert_eq!((a.graph.edge_count(), a.budget), (3, 1));
        assert!(!vc_decide(&a.graph, 1).feasible);

        assert!(clique_to_vc_complement(&Graph::empty(3), 4).is_err());
    }

    #[test]
    fn triangle_examples() {
        let a = vc_to_fvs_triangles(&Graph::complete(3), 2);
        assert_eq!(a.graph.n(), 6);
        assert_eq!(brute_min_fvs(&a.graph).unwrap().value, 2);
        let a = vc_to_fvs_triangles(&path(2), 1);
        assert_eq!(a.graph.edge_count(), 3);
        assert!(fvs_decide(&a.graph, 1).feasible);
        let a = vc_to_fvs_triangles(&Graph::empty(4), 0);
        assert_eq!(a.graph.edge_count(), 0);
    }

    fn two_k2() -> Graph {
        Graph::new(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn krfree_examples() {
        let a = is_to_vc_above_krfree(&two_k2(), 2, 3).unwrap();
        assert_eq!((a.graph.n(), a.budget), (24, 14));
        assert_eq!(a.certificate("deletion_set").len(), 8);
        assert!(vc_decide(&a.graph, a.budget).feasible);

        let a = is_to_vc_above_krfree(&two_k2(), 3, 3).unwrap();
        assert!(!vc_decide(&a.graph, a.budget).feasible);

        let a = is_to_vc_above_krfree(&path(2), 1, 3).unwrap();
        assert!(vc_decide(&a.graph, a.budget).feasible);

        assert!(is_to_vc_above_krfree(&path(2), 0, 3).is_err());
        assert!(is_to_vc_above_krfree(&path(2), 1, 2).is_err());
    }

    #[test]
    fn krfree_cross_edges_matter() {
        // In K2 both copies would otherwise pick different endpoints.
        let a = is_to_vc_above_krfree(&path(2), 2, 3).unwrap();
        assert!(!vc_decide(&a.graph, a.budget).feasible);
    }

    fn single_clause() -> CnfFormula {
        CnfFormula::from_signed(3, &[vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn sat_cvd_sizes() {
        let a = sat3_to_vc_above_cvd(&single_clause(), false).unwrap();
        assert_eq!((a.graph.n(), a.budget), (39, 23));
        let a = sat3_to_vc_above_cvd(&CnfFormula::complete_polarity_3(), false).unwrap();
        assert_eq!((a.graph.n(), a.budget), (186, 121));
        let a = sat3_to_vc_above_cvd(&single_clause(), true).unwrap();
        assert_eq!((a.graph.n(), a.budget), (111, 81));
        assert_eq!(a.param("t_size"), 30);
        assert_eq!(a.param("padding_clauses"), 2);
        assert!(a.graph.remove_vertices(a.certificate("cluster_deletion_set")).unwrap().graph.is_cluster());
    }

    #[test]
    fn sat_cvd_edges_follow_literal_signs() {
        let phi = CnfFormula::from_signed(3, &[vec![1, -2, 3]]).unwrap();
        let a = sat3_to_vc_above_cvd(&phi, false).unwrap();
        let l = SatLayout { m: 1, n: 3 };
        assert!(a.graph.has_edge(l.clause_vertex(0, 0, 4), l.variable_vertex(1, 0, 2)));
        assert!(a.graph.has_edge(l.clause_vertex(0, 1, 0), l.variable_vertex(2, 1, 1)));
        assert!(!a.graph.has_edge(l.clause_vertex(0, 1, 0), l.variable_vertex(2, 0, 1)));
        // 3 * 49 clause-internal + 3 * 9 variable-internal + 21 * 3 cross.
        assert_eq!(a.graph.edge_count(), 147 + 27 + 63);
    }

    #[test]
    fn assignment_cover_is_valid() {
        let phi = single_clause();
        let assignment = [false, true, false];
        for extended in [false, true] {
            let a = sat3_to_vc_above_cvd(&phi, extended).unwrap();
            let c = cover_from_assignment(&phi, &assignment, extended).unwrap();
            assert_eq!(c.len(), a.budget);
            assert!(a.graph.is_vertex_cover(&c));
        }
        assert!(cover_from_assignment(&phi, &[false, false, false], false).is_none());
        let mixed = CnfFormula::new(3, vec![[Literal::neg(1), Literal::pos(2), Literal::neg(3)]]).unwrap();
        let c = cover_from_assignment(&mixed, &[true, false, true], false);
        assert!(c.is_none());
    }

    #[test]
    fn fvs_below_vc_examples() {
        let a = fvs_to_fvs_below_vc(&cycle(5), 1).unwrap();
        assert_eq!((a.graph.n(), a.budget, a.param("lambda")), (12, 3, 2));
        assert!(fvs_decide(&a.graph, 3).feasible);
        assert_eq!(brute_min_vertex_cover(&a.graph).unwrap().value, 5);

        let a = fvs_to_fvs_below_vc(&cycle(5), 0).unwrap();
        assert_eq!(a.graph.n(), 13);
        assert!(!fvs_decide(&a.graph, 3).feasible);

        let a = fvs_to_fvs_below_vc(&path(3), 1).unwrap();
        assert_eq!((a.graph.n(), a.budget), (6, 1));
        assert!(a.graph.is_acyclic());

        assert!(fvs_to_fvs_below_vc(&Graph::empty(4), 1).is_err());
        assert!(fvs_to_fvs_below_vc(&cycle(5), 4).is_err());
    }

    #[test]
    fn gadget_maps_are_total() {
        let arts = [
            clique_to_vc_complement(&cycle(5), 2).unwrap(),
            vc_to_fvs_triangles(&petersen(), 3),
            is_to_vc_above_krfree(&two_k2(), 2, 4).unwrap(),
            sat3_to_vc_above_cvd(&CnfFormula::complete_polarity_3(), true).unwrap(),
            fvs_to_fvs_below_vc(&cycle(6), 2).unwrap(),
        ];
        for a in arts {
            assert_eq!(a.gadget_map.len(), a.graph.n(), "{}", a.name);
            let labels: std::collections::BTreeSet<String> =
                a.gadget_map.iter().map(|l| format!("{l:?}")).collect();
            assert_eq!(labels.len(), a.graph.n(), "{}", a.name);
        }
    }
}
