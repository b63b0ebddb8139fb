mod common;

use rand::seq::SliceRandom;
use rand::Rng;
use unigraph_core::*;

/// A random unigraphic coloring of a tree: classes grow from a random seed
/// edge by random adjacent edges while the class keeps diameter at most three.
fn random_unigraphic_tree_coloring(rng: &mut impl Rng, t: &Graph) -> EdgeColoring {
    let m = t.m();
    let mut labels = vec![0usize; m];
    let mut next = 0;
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    for &seed in &order {
        if labels[seed] != 0 {
            continue;
        }
        next += 1;
        labels[seed] = next;
        let mut class = vec![seed];
        let target = rng.gen_range(1..=6);
        while class.len() < target {
            let frontier: Vec<usize> = (0..m)
                .filter(|&e| labels[e] == 0)
                .filter(|&e| {
                    let (a, b) = t.edge(e);
                    class.iter().any(|&f| {
                        let (u, v) = t.edge(f);
                        a == u || a == v || b == u || b == v
                    })
                })
                .filter(|&e| {
                    let mut trial = class.clone();
                    trial.push(e);
                    t.edge_induced_by_ids(trial).graph.diameter().unwrap() <= 3
                })
                .collect();
            let Some(&e) = frontier.choose(rng) else {
                break;
            };
            labels[e] = next;
            class.push(e);
        }
    }
    EdgeColoring::from_labels(&labels).unwrap()
}

#[test]
fn dp_matches_brute_force_on_random_trees() {
    let mut rng = common::rng(7);
    for _ in 0..500 {
        let n = rng.gen_range(1..=16);
        let t = common::random_tree(&mut rng, n);
        let dp = min_edge_dominating_set_tree(&t).unwrap();
        assert_eq!(undominated_edge(&t, &dp.edges), None);
        assert_eq!(
            dp.len(),
            brute_force_min_edge_dominating_set(&t).unwrap().len(),
            "{t:?}"
        );
    }
}

#[test]
fn dominators_from_random_unigraphic_colorings() {
    let mut rng = common::rng(11);
    for _ in 0..300 {
        let n = rng.gen_range(2..=14);
        let t = common::random_tree(&mut rng, n);
        let c = random_unigraphic_tree_coloring(&mut rng, &t);
        assert!(
            is_unigraphic_coloring(&t, &c).unwrap().accepted,
            "{t:?} {c:?}"
        );
        let eds = edge_dominating_set_from_coloring(&t, &c).unwrap();
        assert_eq!(eds.len(), c.k());
        assert_eq!(undominated_edge(&t, &eds.edges), None);
        let mut per_color: Vec<usize> = eds.edges.iter().map(|&e| c.color(e)).collect();
        per_color.sort();
        assert_eq!(per_color, (1..=c.k()).collect::<Vec<_>>());
    }
}

#[test]
fn colorings_from_random_dominating_sets() {
    let mut rng = common::rng(13);
    for _ in 0..300 {
        let n = rng.gen_range(2..=14);
        let t = common::random_tree(&mut rng, n);
        // A random dominating set in random order.
        let mut ids: Vec<usize> = (0..t.m()).filter(|_| rng.gen_bool(0.3)).collect();
        while let Some((u, v)) = undominated_edge(&t, &ids) {
            ids.push(t.edge_id(u, v).unwrap());
        }
        ids.shuffle(&mut rng);
        let c = coloring_from_edge_dominating_set(&t, &EdgeDominatingSet { edges: ids.clone() })
            .unwrap();
        assert_eq!(c.k(), ids.len());
        assert!(
            is_unigraphic_coloring(&t, &c).unwrap().accepted,
            "{t:?} {ids:?}"
        );
        for (i, &e) in ids.iter().enumerate() {
            assert_eq!(c.color(e), i + 1);
        }
        for i in 1..=c.k() {
            let class = color_subgraph(&t, &c, i).unwrap().graph;
            assert!(matches!(
                tree_unigraph_class(&class).unwrap(),
                TreeUnigraphClass::K2
                    | TreeUnigraphClass::Star(_)
                    | TreeUnigraphClass::DoubleStar(..)
            ));
        }
    }
}

#[test]
fn tree_number_examples() {
    assert_eq!(tree_unigraph_number(&Graph::path(4)).unwrap().0, 1);
    assert_eq!(tree_unigraph_number(&Graph::path(7)).unwrap().0, 2);
    assert_eq!(tree_unigraph_number(&Graph::path(2)).unwrap().0, 1);
    assert_eq!(tree_unigraph_number(&Graph::cycle(5)), Err(Error::NotATree));
    let big = common::random_tree(&mut common::rng(3), 200_000);
    let (k, c) = tree_unigraph_number(&big).unwrap();
    assert_eq!(c.k(), k);
}
