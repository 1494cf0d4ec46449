mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rmis_core::abc::induced_subgraph_of_subtree;
use rmis_core::decompose::{articulation_points, bridges};
use rmis_core::generators::{complete_bipartite, random_connected, random_sputnik};
use rmis_core::oracle::{enumerate_mis, is_robust_mis_bruteforce};
use rmis_core::sim::rmis_forall_program;
use rmis_core::*;

use common::{cut_vertices_brute, robust_mis_brute};

/// A connected graph on `0..n`: a random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(any::<u32>(), n.saturating_sub(1)),
            prop::collection::vec(prop::bool::weighted(0.3), pairs),
        )
            .prop_map(|(n, parents, extra)| {
                let n = n as u32;
                let mut edges: Vec<(u32, u32)> =
                    (1..n).map(|i| (parents[i as usize - 1] % i, i)).collect();
                let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                edges.extend(all.zip(extra).filter(|(_, keep)| *keep).map(|(e, _)| e));
                Graph::from_pairs(0..n, &edges).unwrap()
            })
    })
}

fn cfg() -> OracleConfig {
    OracleConfig {
        max_removable_edges: 28,
        max_enumeration_vertices: 16,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn robustness_criterion_matches_spanning_subgraph_search(g in connected_graph(7)) {
        for m in enumerate_mis(&g, &cfg()).unwrap() {
            prop_assert_eq!(
                is_robust_mis(&g, &m).unwrap(),
                is_robust_mis_bruteforce(&g, &m, &cfg()).unwrap(),
                "set {}", m
            );
        }
    }

    #[test]
    fn cut_vertices_and_bridges_match_removal(g in connected_graph(9)) {
        let mut aps = articulation_points(&g).unwrap();
        aps.sort();
        prop_assert_eq!(aps, cut_vertices_brute(&g));
        let found: BTreeSet<Edge> = bridges(&g).unwrap().into_iter().collect();
        let brute: BTreeSet<Edge> = g
            .edges()
            .into_iter()
            .filter(|&e| !g.remove_edges(&[e]).unwrap().is_connected())
            .collect();
        prop_assert_eq!(found, brute);
    }

    #[test]
    fn abc_tree_shape(g in connected_graph(9)) {
        let t = build_abc_tree(&g).unwrap();
        if g.n() == 1 {
            prop_assert!(t.is_empty());
            return Ok(());
        }
        prop_assert_eq!(t.edge_count() + 1, t.len());
        let mut seen = vec![false; t.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in t.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        prop_assert!(seen.iter().all(|&s| s));

        // every edge lies in exactly one B or C node
        for e in g.edges() {
            let owners = t
                .nodes()
                .iter()
                .filter(|x| match x {
                    AbcNode::Bridge(b) => *b == e,
                    AbcNode::Component(vs) => vs.contains(&e.u()) && vs.contains(&e.v()),
                    _ => false,
                })
                .count();
            prop_assert_eq!(owners, 1, "edge {:?}", e);
        }
        let a_nodes: Vec<VertexId> = t
            .nodes()
            .iter()
            .filter_map(|x| match x {
                AbcNode::Articulation(v) => Some(*v),
                _ => None,
            })
            .collect();
        prop_assert_eq!(a_nodes, cut_vertices_brute(&g));
        let covered: BTreeSet<VertexId> = t.nodes().iter().flat_map(|x| x.vertices()).collect();
        prop_assert_eq!(covered.len(), g.n());
    }

    #[test]
    fn subtrees_induce_connected_graphs(g in connected_graph(9)) {
        let Some(rt) = build_abc_tree(&g).unwrap().root_default() else {
            return Ok(());
        };
        let whole = induced_subgraph_of_subtree(&g, &rt, rt.root()).unwrap();
        prop_assert_eq!(&whole, &g);
        for &x in rt.bfs_order() {
            let sub = induced_subgraph_of_subtree(&g, &rt, x).unwrap();
            prop_assert!(sub.is_connected());
            if rt.parent(x).is_some() {
                prop_assert!(sub.contains(rt.attachment_point(x).unwrap()));
            }
        }
    }

    #[test]
    fn find_agrees_with_brute_force(g in connected_graph(7)) {
        let brute = robust_mis_brute(&g, &cfg()).unwrap();
        match find_rmis(&g).unwrap() {
            Some(m) => {
                prop_assert!(brute.contains(&m), "witness {} not robust", m);
            }
            None => prop_assert!(brute.is_empty()),
        }
    }

    #[test]
    fn find_witnesses_are_robust(seed in any::<u64>(), n in 8usize..40, p in 0.05f64..0.3) {
        let g = random_connected(n, p, seed).unwrap();
        if let Some(m) = find_rmis(&g).unwrap() {
            prop_assert!(is_mis(&g, &m).unwrap());
            prop_assert!(is_robust_mis(&g, &m).unwrap());
        }
    }

    #[test]
    fn twosat_is_complete(
        vars in 1usize..8,
        raw in prop::collection::vec((any::<u8>(), any::<bool>(), any::<u8>(), any::<bool>()), 0..20),
    ) {
        let mut f = TwoSatFormula::new(vars);
        for (a, pa, b, pb) in raw {
            let lit = |x: u8, p: bool| Literal { var: x as usize % vars, positive: p };
            f.add_clause(lit(a, pa), lit(b, pb)).unwrap();
        }
        let brute = (0u32..1 << vars)
            .map(|mask| (0..vars).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .any(|a| f.is_satisfied_by(&a));
        prop_assert_eq!(f.is_satisfiable(), brute);
        match f.solve() {
            Some(a) => prop_assert!(f.is_satisfied_by(&a)),
            None => prop_assert!(!brute),
        }
    }

    #[test]
    fn edge_list_roundtrip(g in connected_graph(12)) {
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn forall_program_outputs_a_robust_mis(seed in any::<u64>(), size in 3usize..40, id_seed in any::<u64>()) {
        let g = random_sputnik(seed, size).unwrap();
        let r = run_sync(&g, &rmis_forall_program(), &IdAssignment::random(&g, id_seed), g.n() + 4).unwrap();
        prop_assert!(is_mis(&g, &r.in_set()).unwrap());
        prop_assert!(is_robust_mis(&g, &r.in_set()).unwrap());
    }

    #[test]
    fn forall_program_on_complete_bipartite(a in 1usize..12, b in 1usize..12, id_seed in any::<u64>()) {
        let g = complete_bipartite(a, b).unwrap();
        let r = run_sync(&g, &rmis_forall_program(), &IdAssignment::random(&g, id_seed), 8).unwrap();
        prop_assert!(is_mis(&g, &r.in_set()).unwrap());
        prop_assert_eq!(r.rounds_total, 3);
    }

    #[test]
    fn deterministic(seed in any::<u64>(), n in 2usize..30) {
        let g = random_connected(n, 0.15, seed).unwrap();
        prop_assert_eq!(&g, &random_connected(n, 0.15, seed).unwrap());
        prop_assert_eq!(find_rmis(&g).unwrap(), find_rmis(&g).unwrap());
        let ids = IdAssignment::random(&g, seed);
        prop_assert_eq!(&ids, &IdAssignment::random(&g, seed));
    }
}
