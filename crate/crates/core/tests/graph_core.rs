mod common;

use proptest::prelude::*;
use unigraph_core::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::new(n, &edges).unwrap())
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn degree_set_is_invariant_under_relabeling((g, perm) in arb_graph_with_perm(10)) {
        prop_assert_eq!(g.relabel(&perm).degree_set(), g.degree_set());
    }

    #[test]
    fn canonical_code_is_invariant_under_relabeling((g, perm) in arb_graph_with_perm(12)) {
        prop_assert_eq!(canonical_code(&g.relabel(&perm)).unwrap(), canonical_code(&g).unwrap());
    }

    #[test]
    fn isomorphism_witness_is_valid((g, perm) in arb_graph_with_perm(9)) {
        let h = g.relabel(&perm);
        let f = isomorphism(&g, &h).unwrap();
        for &(u, v) in g.edges() {
            prop_assert!(h.has_edge(f[u], f[v]));
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence(a in arb_graph(8), b in arb_graph(8), c in arb_graph(8)) {
        prop_assert!(are_isomorphic(&a, &a));
        prop_assert_eq!(are_isomorphic(&a, &b), are_isomorphic(&b, &a));
        if are_isomorphic(&a, &b) && are_isomorphic(&b, &c) {
            prop_assert!(are_isomorphic(&a, &c));
        }
    }

    #[test]
    fn isomorphism_is_transitive_on_relabelings((g, p1) in arb_graph_with_perm(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut p2 = p1.clone();
        p2.shuffle(&mut common::rng(seed));
        let (h1, h2) = (g.relabel(&p1), g.relabel(&p2));
        prop_assert!(are_isomorphic(&g, &h1) && are_isomorphic(&h1, &h2) && are_isomorphic(&g, &h2));
    }

    #[test]
    fn full_edge_induced_subgraph(g in arb_graph(9)) {
        let all = g.edge_induced_subgraph(g.edges()).unwrap().graph;
        prop_assert!(!all.has_isolated_vertices());
        prop_assert_eq!(all == g, !g.has_isolated_vertices());
    }

    #[test]
    fn diameter_is_below_vertex_count(g in arb_graph(10)) {
        if let Some(d) = g.diameter() {
            prop_assert!(g.n() == 0 || d < g.n());
        }
    }

    #[test]
    fn induced_p5_witness_is_induced(g in arb_graph(9)) {
        if let Some(p) = g.induced_p5() {
            for i in 0..5 {
                for j in i + 1..5 {
                    prop_assert_eq!(g.has_edge(p[i], p[j]), j == i + 1);
                }
            }
        }
    }
}

#[test]
fn canonical_code_matches_isomorphism_exhaustively() {
    for n in 0..=6 {
        let graphs = common::all_graphs(n);
        // Codes of distinct classes differ, and the independent matcher agrees.
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                assert!(!are_isomorphic(g, h), "{g:?} ~ {h:?}");
            }
        }
    }
    assert_eq!(common::all_graphs(6).len(), 156);
    assert_eq!(common::all_graphs(5).len(), 34);
}

#[test]
fn induced_p5_matches_subset_scan() {
    // Brute force: a 5-set induces P5 iff it has 4 edges, is connected and
    // has degree multiset (2,2,2,1,1).
    for g in common::all_graphs(6) {
        let mut brute = false;
        for mask in 0u32..(1 << g.n()) {
            if mask.count_ones() != 5 {
                continue;
            }
            let keep: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            let s = g.vertex_induced_subgraph(&keep).unwrap().graph;
            brute |= s.m() == 4 && s.is_connected() && s.degree_set().as_slice() == [2, 2, 2, 1, 1];
        }
        assert_eq!(g.contains_induced_p5(), brute, "{g:?}");
    }
}

#[test]
fn vertex_and_edge_induced_examples() {
    let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let s = g.vertex_induced_subgraph(&[0, 1, 2]).unwrap();
    assert!(are_isomorphic(&s.graph, &Graph::path(3)));
    assert_eq!(
        g.vertex_induced_subgraph(&[0, 1, 2, 3, 4, 5])
            .unwrap()
            .graph,
        g
    );
    assert_eq!(g.vertex_induced_subgraph(&[]).unwrap().graph.n(), 0);
    let e = g.edge_induced_subgraph(&[(0, 1), (1, 2)]).unwrap();
    assert_eq!(e.vertices, vec![0, 1, 2]);
    assert_eq!(
        g.edge_induced_subgraph(&[(0, 3)]).unwrap().graph,
        Graph::path(2)
    );
    assert_eq!(
        g.edge_induced_subgraph(&[(0, 2)]),
        Err(Error::EdgeNotInGraph(0, 2))
    );
    assert_eq!(
        g.vertex_induced_subgraph(&[6]),
        Err(Error::VertexOutOfRange { vertex: 6, n: 6 })
    );
}

fn arb_labeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let m = g.m();
        (
            Just(g),
            proptest::collection::vec(1usize..40, m),
            Just((0..m).collect::<Vec<_>>()).prop_shuffle(),
        )
    })
}

proptest! {
    #[test]
    fn edge_lists_round_trip(g in arb_graph(10)) {
        let text = format::write_edge_list(&g);
        prop_assert_eq!(format::parse_edge_list(&text).unwrap(), g);
    }

    /// Arbitrary positive labels, lines in any order, endpoints either way.
    #[test]
    fn coloring_files_round_trip((g, labels, order) in arb_labeled(9)) {
        let mut text = String::from("# any order\n");
        for &id in &order {
            let (u, v) = g.edge(id);
            let (a, b) = if id % 2 == 0 { (u, v) } else { (v, u) };
            text.push_str(&format!("{a} {b} {}\n", labels[id]));
        }
        let first = format::parse_coloring(&g, &text).unwrap();
        // Same partition as the raw labels.
        for i in 0..g.m() {
            for j in 0..g.m() {
                prop_assert_eq!(labels[i] == labels[j], first.color(i) == first.color(j));
            }
        }
        let again = format::parse_coloring(&g, &format::write_coloring(&g, &first).unwrap()).unwrap();
        prop_assert_eq!(again.normalized(), first.normalized());
        prop_assert_eq!(again, first);
    }
}
