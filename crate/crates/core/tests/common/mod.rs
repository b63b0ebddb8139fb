#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use unigraph_core::{canonical_code, EdgeColoring, Graph};

/// One graph per isomorphism class on `n` vertices, by adding a vertex with
/// every possible neighborhood to each class on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut next = BTreeMap::new();
        for g in &level {
            for subset in 0u32..(1 << (size - 1)) {
                let mut edges = g.edges().to_vec();
                edges.extend(
                    (0..size - 1)
                        .filter(|&v| subset >> v & 1 == 1)
                        .map(|v| (v, size - 1)),
                );
                let h = Graph::new(size, &edges).unwrap();
                next.entry(canonical_code(&h).unwrap()).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// One tree per isomorphism class on `n >= 1` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in &level {
            for v in 0..size - 1 {
                let mut edges = t.edges().to_vec();
                edges.push((v, size - 1));
                let h = Graph::new(size, &edges).unwrap();
                next.entry(canonical_code(&h).unwrap()).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    level
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Uniformly random labels on a random recursive tree.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let edges: Vec<_> = (1..n)
        .map(|v| (label[rng.gen_range(0..v)], label[v]))
        .collect();
    Graph::new(n, &edges).unwrap()
}

/// A random star coloring: each edge picks one endpoint as its center, and
/// the edges at each center are split into random groups.
pub fn random_star_coloring(rng: &mut impl Rng, g: &Graph) -> EdgeColoring {
    let mut by_center: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        by_center[if rng.gen_bool(0.5) { u } else { v }].push(id);
    }
    let mut labels = vec![0; g.m()];
    let mut next = 0;
    for edges in by_center.iter().filter(|e| !e.is_empty()) {
        let groups = rng.gen_range(1..=edges.len());
        let base = next;
        for &e in edges {
            labels[e] = base + 1 + rng.gen_range(0..groups);
        }
        next += groups;
    }
    EdgeColoring::from_labels(&labels).unwrap()
}
