use above::fvs::{fvs_above_degeneracy, fvs_decide};
use above::generate::{random_planar, rng};
use above::io::{parse_cnf, parse_graph, write_cnf, write_dimacs};
use above::oracles::{brute_min_fvs, brute_min_vertex_cover, OracleLimits};
use above::params::{degeneracy_core, h_index};
use above::planar::{check_planar, is_kuratowski_subdivision, verify_block_embedding, PlanarityWitness};
use above::reductions::{is_to_vc_above_krfree, vc_to_fvs_triangles};
use above::vc::{kernelize_vc, vc_above_h_index, vc_decide};
use above::{CnfFormula, Graph, VertexSet};
use itertools::Itertools;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::new(n, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vc_decision_is_monotone_and_certified(g in graph(11)) {
        let mut prev = false;
        for k in 0..=g.n() {
            let r = vc_decide(&g, k);
            prop_assert!(!prev || r.feasible, "feasible at k-1 but not at k={}", k);
            prev = r.feasible;
            if let Some(c) = &r.certificate {
                prop_assert!(c.len() <= k && g.is_vertex_cover(c));
            }
        }
        prop_assert!(prev);
    }

    #[test]
    fn kernel_lift_is_a_cover(g in graph(12), k in 0usize..12) {
        let kern = kernelize_vc(&g, k);
        if kern.infeasible {
            prop_assert!(!vc_decide(&g, k).feasible);
        } else {
            let inner = vc_decide(&kern.reduced.graph, kern.budget);
            prop_assert_eq!(inner.feasible, vc_decide(&g, k).feasible);
            if let Some(c) = inner.certificate {
                let lifted = kern.lift(&c);
                prop_assert!(g.is_vertex_cover(&lifted) && lifted.len() <= k);
            }
        }
    }

    #[test]
    fn fvs_certificates_leave_forests(g in graph(11), k in 0usize..6) {
        let r = fvs_decide(&g, k);
        prop_assert_eq!(r.feasible, brute_min_fvs(&g).unwrap().value <= k);
        if let Some(c) = r.certificate {
            prop_assert!(c.len() <= k);
            prop_assert!(g.remove_vertices(&c).unwrap().graph.is_acyclic());
        }
    }

    #[test]
    fn above_guarantee_budgets(g in graph(10), k in 0usize..10) {
        let h = h_index(&g).h as i64;
        let a = vc_above_h_index(&g, k);
        prop_assert_eq!(a.ell, k as i64 - h);
        prop_assert!(a.branches.iter().all(|b| b.budget <= k as i64 - h));
        prop_assert_eq!(a.result.feasible, vc_decide(&g, k).feasible);

        let d = degeneracy_core(&g).degeneracy as i64;
        let b = fvs_above_degeneracy(&g, k);
        prop_assert!(b.branches.iter().all(|br| br.budget <= k as i64 - d + 1));
        prop_assert_eq!(b.result.feasible, fvs_decide(&g, k).feasible);
    }

    #[test]
    fn h_index_and_core_witnesses(g in graph(14)) {
        let hi = h_index(&g);
        prop_assert_eq!(hi.witness.len(), hi.h);
        prop_assert!(hi.witness.iter().all(|&v| g.degree(v) >= hi.h));
        prop_assert!(g.degrees().iter().filter(|&&d| d > hi.h).count() <= hi.h);
        let core = degeneracy_core(&g);
        if !core.core.is_empty() {
            let inner = g.induced_subgraph(&core.core).unwrap().graph;
            prop_assert_eq!(*inner.degrees().iter().min().unwrap(), core.degeneracy);
        }
        prop_assert!(core.degeneracy <= hi.h);
    }

    #[test]
    fn dimacs_roundtrip(g in graph(15)) {
        let back = parse_graph(&write_dimacs(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn cnf_roundtrip(clauses in proptest::collection::vec(
        proptest::collection::vec((1i64..=5, any::<bool>()).prop_map(|(v, s)| if s { v } else { -v }), 3),
        0..8,
    )) {
        let f = CnfFormula::from_signed(5, &clauses).unwrap();
        let back = parse_cnf(&write_cnf(&f)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn random_planar_graphs_embed(seed in any::<u64>(), n in 0usize..40, drop in 0.0f64..0.6) {
        let g = random_planar(n, drop, &mut rng(seed));
        let p = check_planar(&g);
        prop_assert!(p.planar);
        let PlanarityWitness::Embedding { blocks } = p.witness else {
            return Err(TestCaseError::fail("missing embedding"));
        };
        prop_assert!(blocks.iter().all(verify_block_embedding));
    }

    #[test]
    fn nonplanar_witnesses_are_kuratowski(g in graph(9)) {
        let p = check_planar(&g);
        if let PlanarityWitness::Kuratowski { edges } = p.witness {
            prop_assert!(!p.planar);
            prop_assert!(is_kuratowski_subdivision(g.n(), &edges));
        }
    }

    #[test]
    fn triangle_reduction_preserves_budget_answer(g in graph(6), ell in 0usize..7) {
        let a = vc_to_fvs_triangles(&g, ell);
        let lim = OracleLimits::extended();
        let vc = brute_min_vertex_cover(&g).unwrap().value;
        let fvs = above::oracles::brute_min_fvs_with(&a.graph, &lim).unwrap().value;
        prop_assert_eq!(vc <= ell, fvs <= ell);
    }
}

#[test]
fn krfree_reduction_for_larger_r() {
    // r = 4 on a path: copies of P3 with k = 2 (alpha(P3) = 2).
    let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let a = is_to_vc_above_krfree(&g, 2, 4).unwrap();
    assert!(vc_decide(&a.graph, a.budget).feasible);
    let a = is_to_vc_above_krfree(&g, 3, 4).unwrap();
    assert!(!vc_decide(&a.graph, a.budget).feasible);
    let d: VertexSet = a.certificate("deletion_set").clone();
    assert!(!a.graph.remove_vertices(&d).unwrap().graph.has_clique(4));
}
