mod common;

use rand::Rng;
use rayon::prelude::*;
use unigraph_core::*;

#[test]
fn every_graph_matches_exactly_one_realization() {
    for n in 1..=7 {
        common::all_graphs(n).par_iter().for_each(|g| {
            let reals = enumerate_realizations(&g.degree_set()).unwrap();
            assert_eq!(
                reals.iter().filter(|h| are_isomorphic(g, h)).count(),
                1,
                "{g:?}"
            );
            for h in &reals {
                assert_eq!(h.degree_set(), g.degree_set());
            }
        });
    }
}

#[test]
fn realization_counts_match_exhaustive_grouping() {
    // Group all graphs on n vertices by degree set and compare class counts.
    for n in 1..=6 {
        let mut groups = std::collections::BTreeMap::<Vec<usize>, usize>::new();
        for g in common::all_graphs(n) {
            *groups
                .entry(g.degree_set().as_slice().to_vec())
                .or_default() += 1;
        }
        for (ds, count) in groups {
            let got = enumerate_realizations(&DegreeSet::from_unsorted(ds.clone())).unwrap();
            assert_eq!(got.len(), count, "{ds:?}");
        }
    }
}

/// Every coloring with at most `k` colors, as restricted growth strings.
fn colorings(m: usize, k: usize) -> Vec<EdgeColoring> {
    fn go(i: usize, used: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<EdgeColoring>) {
        if i == cur.len() {
            out.push(EdgeColoring::new(cur.clone()).unwrap());
            return;
        }
        for c in 1..=(used + 1).min(k) {
            cur[i] = c;
            go(i + 1, used.max(c), k, cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, 0, k, &mut vec![0; m], &mut out);
    out
}

fn colored_round_trip(g: &Graph, c: &EdgeColoring) {
    let cds = colored_degree_set(g, c).unwrap();
    let reals = enumerate_colored_realizations(&cds, RealizationScope::All).unwrap();
    let own = colored_canonical_code(g, c.colors()).unwrap();
    let hits = reals
        .iter()
        .filter(|(h, hc)| colored_canonical_code(h, hc.colors()).unwrap() == own)
        .count();
    assert_eq!(hits, 1, "{g:?} {c:?}");
    for (h, hc) in &reals {
        assert_eq!(colored_degree_set(h, hc).unwrap(), cds);
    }
    // Projection of a non-empty stream is graphical.
    assert!(is_graphical(&cds.projection()));
}

#[test]
fn colored_round_trip_exhaustive() {
    for n in 1..=6 {
        common::all_graphs(n).par_iter().for_each(|g| {
            for c in colorings(g.m(), 3) {
                colored_round_trip(g, &c);
            }
        });
    }
}

#[test]
fn colored_round_trip_with_more_colors_sampled() {
    let graphs = common::all_graphs(7);
    graphs
        .par_iter()
        .enumerate()
        .filter(|(i, _)| i % 7 == 0)
        .for_each(|(i, g)| {
            let mut rng = common::rng(i as u64);
            for _ in 0..3 {
                let k = rng.gen_range(1..=5usize);
                let labels: Vec<usize> = (0..g.m()).map(|_| rng.gen_range(1..=k)).collect();
                let c = EdgeColoring::from_labels(&labels).unwrap();
                colored_round_trip(g, &c);
            }
        });
}

#[test]
fn colored_realizations_are_pairwise_distinct_and_deterministic() {
    let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let c = EdgeColoring::new(vec![2, 2, 1, 1, 1, 2, 1]).unwrap();
    let cds = colored_degree_set(&g, &c).unwrap();
    let a = enumerate_colored_realizations(&cds, RealizationScope::All).unwrap();
    let b = enumerate_colored_realizations(&cds, RealizationScope::All).unwrap();
    assert_eq!(a, b);
    let codes: std::collections::BTreeSet<_> = a
        .iter()
        .map(|(h, hc)| colored_canonical_code(h, hc.colors()).unwrap())
        .collect();
    assert_eq!(codes.len(), a.len());
    let underlying: std::collections::BTreeSet<_> =
        a.iter().map(|(h, _)| canonical_code(h).unwrap()).collect();
    assert!(underlying.len() >= 2);
}

#[test]
fn graphicality_matches_enumeration() {
    // Every non-increasing sequence on up to 6 vertices.
    fn seqs(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=max {
            cur.push(d);
            seqs(n, d, cur, out);
            cur.pop();
        }
    }
    let realizable: std::collections::BTreeSet<Vec<usize>> = (1..=6)
        .flat_map(common::all_graphs)
        .map(|g| g.degree_set().as_slice().to_vec())
        .collect();
    for n in 1..=6 {
        let mut out = Vec::new();
        seqs(n, n, &mut Vec::new(), &mut out);
        for s in out {
            let ds = DegreeSet::from_unsorted(s.clone());
            assert_eq!(is_graphical(&ds), realizable.contains(&s), "{s:?}");
        }
    }
}
