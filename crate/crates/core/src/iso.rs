//! Isomorphism testing by backtracking over refined vertex classes.
//!
//! This is deliberately independent of [`crate::canon`]: the two are
//! cross-checked against each other in the test suites.

use crate::graph::Graph;

/// A witness bijection `f` with `{u,v} ∈ E(G) ⇔ {f(u),f(v)} ∈ E(H)`, or `None`.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_set() != h.degree_set() {
        return None;
    }
    let n = g.n();
    let cg = vertex_classes(g);
    let ch = vertex_classes(h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }

    let order = matching_order(g, &cg);
    let mut state = Matcher {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if state.extend(0) {
        Some(state.map)
    } else {
        None
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

/// Degree plus the sorted degrees of the neighbors.
fn vertex_classes(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Rarest class first, then grow along edges so every new vertex has as many
/// already-mapped neighbors as possible.
fn matching_order(g: &Graph, classes: &[(usize, Vec<usize>)]) -> Vec<usize> {
    let n = g.n();
    let freq = |v: usize| classes.iter().filter(|c| **c == classes[v]).count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse(links[v]),
                    freq(v),
                    std::cmp::Reverse(g.degree(v)),
                    v,
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [(usize, Vec<usize>)],
    ch: &'a [(usize, Vec<usize>)],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        // Trying `u` itself first makes G-vs-G return the identity.
        let candidates = std::iter::once(u).chain((0..self.h.n()).filter(|&x| x != u));
        for x in candidates {
            if self.used[x] || self.ch[x] != self.cg[u] || !self.consistent(depth, u, x) {
                continue;
            }
            self.map[u] = x;
            self.used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[x] = false;
            self.map[u] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, u: usize, x: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&w| self.g.has_edge(u, w) == self.h.has_edge(x, self.map[w]))
    }
}
