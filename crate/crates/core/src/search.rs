//! Exact unigraph numbers of small graphs by branch and bound.
//!
//! Colorings are enumerated as restricted growth strings over the sorted edge
//! list: edge `i` may take any color already in use or open the next one, so
//! every partition of the edge set is visited once. A partial class is pruned
//! when it can no longer become a connected graph of diameter at most three
//! without an induced P5; once no undecided edge touches a class, the class is
//! final and the full unigraph oracle decides it.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, check_bound};
use crate::coloring::{
    greedy_vertex_cover, is_strongly_unigraphic_coloring, minimum_vertex_cover,
    star_coloring_from_vertex_cover, EdgeColoring,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::realize::colored_degree_set;
use crate::recognize::{connected_unigraph_cached, is_unigraph};
use crate::tree::tree_unigraph_number;

/// Largest edge count for [`unigraph_number`].
pub const UNIGRAPH_NUMBER_MAX_M: usize = 24;
/// Largest host for [`strong_unigraph_number`].
pub const STRONG_NUMBER_MAX_N: usize = 10;
pub const STRONG_NUMBER_MAX_M: usize = 21;

/// Candidates strong-checked together in parallel.
const STRONG_BATCH: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// When false every partition is enumerated and checked at the leaves.
    /// Only useful for cross-checking the pruned search on tiny graphs.
    pub pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { pruning: true }
    }
}

/// Where a bound or an exact value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Trivial,
    VertexCover,
    TreeLemma,
    Search,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Trivial => "trivial",
            Provenance::VertexCover => "vertex-cover",
            Provenance::TreeLemma => "tree-lemma",
            Provenance::Search => "search",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: usize,
    pub provenance: Provenance,
    pub witness: Option<EdgeColoring>,
}

/// An exact value with its witness coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact {
    pub k: usize,
    pub coloring: EdgeColoring,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionReport {
    pub w: Option<Exact>,
    pub s: Option<Exact>,
    /// Minimum vertex cover size, when computed.
    pub tau: Option<usize>,
    pub lower_bounds: Vec<Bound>,
    pub upper_bounds: Vec<Bound>,
    /// Why an exact value is missing.
    pub notices: Vec<String>,
}

/// `w(G)` with the lexicographically least optimal coloring.
pub fn unigraph_number(g: &Graph) -> Result<(usize, EdgeColoring)> {
    unigraph_number_with(g, SearchOptions::default())
}

pub fn unigraph_number_with(g: &Graph, opts: SearchOptions) -> Result<(usize, EdgeColoring)> {
    check_searchable(g, crate::canon::MAX_CANON_N, UNIGRAPH_NUMBER_MAX_M)?;
    if g.m() == 0 {
        return Ok((0, EdgeColoring::uniform(0)));
    }
    let (tau, star) = star_upper_bound(g)?;
    for k in 1..tau {
        let mut found = None;
        Engine::new(g, k, false, opts).run(&mut |colors| {
            found = Some(to_coloring(colors));
            ControlFlow::Break(())
        })?;
        if let Some(c) = found {
            return Ok((k, c));
        }
    }
    // Star colorings are unigraphic, so the cover bound is attained.
    Ok((tau, star))
}

/// `s(G)`: the search over `k = w, w + 1, ...` strong-checks each
/// unigraphic coloring, once per distinct colored degree set.
pub fn strong_unigraph_number(g: &Graph) -> Result<(usize, EdgeColoring)> {
    strong_unigraph_number_with(g, SearchOptions::default())
}

pub fn strong_unigraph_number_with(
    g: &Graph,
    opts: SearchOptions,
) -> Result<(usize, EdgeColoring)> {
    check_searchable(g, STRONG_NUMBER_MAX_N, STRONG_NUMBER_MAX_M)?;
    let (w, _) = unigraph_number_with(g, opts)?;
    strong_from(g, w, opts)
}

fn strong_from(g: &Graph, w: usize, opts: SearchOptions) -> Result<(usize, EdgeColoring)> {
    if g.m() == 0 {
        return Ok((0, EdgeColoring::uniform(0)));
    }
    let (tau, star) = star_upper_bound(g)?;
    for k in w..tau {
        if let Some(c) = strong_at(g, k, opts)? {
            return Ok((k, c));
        }
    }
    Ok((tau, star))
}

/// The first coloring with exactly `k` colors, in search order, that is
/// strongly unigraphic.
fn strong_at(g: &Graph, k: usize, opts: SearchOptions) -> Result<Option<EdgeColoring>> {
    let mut seen = HashSet::new();
    let mut batch: Vec<EdgeColoring> = Vec::new();
    let mut found = None;
    let check_batch = |batch: &mut Vec<EdgeColoring>| -> Option<EdgeColoring> {
        let hit = batch.par_iter().position_first(|c| {
            is_strongly_unigraphic_coloring(g, c)
                .expect("host is within the strong-check bound")
                .accepted
        });
        let out = hit.map(|i| batch[i].clone());
        batch.clear();
        out
    };
    Engine::new(g, k, true, opts).run(&mut |colors| {
        let c = to_coloring(colors);
        let key = cds_key(g, &c);
        if !seen.insert(key) {
            return ControlFlow::Continue(());
        }
        batch.push(c);
        if batch.len() == STRONG_BATCH {
            found = check_batch(&mut batch);
            if found.is_some() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    if found.is_none() && !batch.is_empty() {
        found = check_batch(&mut batch);
    }
    Ok(found)
}

/// Colored degree set up to renaming colors. The strong verdict of a
/// unigraphic coloring depends only on this.
fn cds_key(g: &Graph, c: &EdgeColoring) -> Vec<Vec<usize>> {
    let cds = colored_degree_set(g, c).expect("coloring matches host");
    let k = cds.k();
    let apply = |perm: &[usize]| {
        let mut t: Vec<Vec<usize>> = cds
            .tuples()
            .iter()
            .map(|x| perm.iter().map(|&p| x[p]).collect())
            .collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    };
    if k > 5 {
        return apply(&(0..k).collect::<Vec<_>>());
    }
    let mut perm: Vec<usize> = (0..k).collect();
    let mut best = apply(&perm);
    while next_permutation(&mut perm) {
        best = best.min(apply(&perm));
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn check_searchable(g: &Graph, max_n: usize, max_m: usize) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    check_bound(g.n())?;
    if g.n() > max_n {
        return Err(Error::size("vertices for exact search", max_n, g.n()));
    }
    if g.m() > max_m {
        return Err(Error::size("edges for exact search", max_m, g.m()));
    }
    Ok(())
}

fn star_upper_bound(g: &Graph) -> Result<(usize, EdgeColoring)> {
    let cover = minimum_vertex_cover(g)?;
    let c = star_coloring_from_vertex_cover(g, &cover)?;
    Ok((cover.len(), c.normalized()))
}

fn to_coloring(colors: &[u8]) -> EdgeColoring {
    EdgeColoring::new(colors.iter().map(|&c| c as usize + 1).collect())
        .expect("search colorings are dense")
        .normalized()
}

struct Engine<'a> {
    g: &'a Graph,
    k: usize,
    /// Leaves must use all `k` colors.
    exact_k: bool,
    opts: SearchOptions,
    /// Edge ids in the order they are colored.
    order: Vec<usize>,
    /// `suffix[i]`: mask of `order[i..]`.
    suffix: Vec<u64>,
    /// Edge-id mask of the edges at each vertex.
    incident: Vec<u64>,
    colors: Vec<u8>,
    class_edges: Vec<u64>,
    memo: HashMap<u64, bool>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, k: usize, exact_k: bool, opts: SearchOptions) -> Self {
        let mut incident = vec![0u64; g.n()];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            incident[u] |= 1 << id;
            incident[v] |= 1 << id;
        }
        // Edges sorted under the canonical labeling, so the first coloring
        // found does not depend on how the input was labeled.
        let (_, position) =
            canonical_labeling(g).expect("searchable graphs are within the canonical bound");
        let mut order: Vec<usize> = (0..g.m()).collect();
        order.sort_by_key(|&id| {
            let (u, v) = g.edge(id);
            let (a, b) = (position[u], position[v]);
            (a.min(b), a.max(b))
        });
        let mut suffix = vec![0u64; g.m() + 1];
        for i in (0..g.m()).rev() {
            suffix[i] = suffix[i + 1] | 1 << order[i];
        }
        Self {
            g,
            k,
            exact_k,
            opts,
            order,
            suffix,
            incident,
            colors: vec![0; g.m()],
            class_edges: vec![0; k],
            memo: HashMap::new(),
        }
    }

    /// Calls `visit` with per-edge colors (0-based) in search order until it breaks.
    fn run(mut self, visit: &mut dyn FnMut(&[u8]) -> ControlFlow<()>) -> Result<()> {
        if self.k <= self.g.m() {
            let _ = self.descend(0, 0, visit)?;
        }
        Ok(())
    }

    fn descend(
        &mut self,
        i: usize,
        used: usize,
        visit: &mut dyn FnMut(&[u8]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let m = self.g.m();
        if i == m {
            if self.exact_k && used != self.k {
                return Ok(ControlFlow::Continue(()));
            }
            if !self.opts.pruning {
                for c in 0..used {
                    if !self.oracle(self.class_edges[c])? {
                        return Ok(ControlFlow::Continue(()));
                    }
                }
            }
            return Ok(visit(&self.colors));
        }
        if self.exact_k && self.k - used > m - i {
            return Ok(ControlFlow::Continue(()));
        }
        let e = self.order[i];
        for c in 0..(used + 1).min(self.k) {
            self.colors[e] = c as u8;
            self.class_edges[c] |= 1 << e;
            let used_now = used.max(c + 1);
            let ok = !self.opts.pruning || self.feasible(i, c, used_now)?;
            if ok && self.descend(i + 1, used_now, visit)?.is_break() {
                self.class_edges[c] &= !(1 << e);
                return Ok(ControlFlow::Break(()));
            }
            self.class_edges[c] &= !(1 << e);
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Necessary conditions on every class after the `i`-th edge in search
    /// order joined class `changed`.
    fn feasible(&mut self, i: usize, changed: usize, used: usize) -> Result<bool> {
        let rest = self.suffix[i + 1];
        let n = self.g.n();
        let mut rest_rows = vec![0u64; n];
        for id in bits(rest) {
            let (u, v) = self.g.edge(id);
            rest_rows[u] |= 1 << v;
            rest_rows[v] |= 1 << u;
        }
        for c in 0..used {
            let class = self.class_edges[c];
            let mut verts = 0u64;
            let mut rows = rest_rows.clone();
            for id in bits(class) {
                let (u, v) = self.g.edge(id);
                verts |= 1 << u | 1 << v;
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            let open = bits(verts).any(|v| self.incident[v] & rest != 0);
            if !open {
                if !self.oracle(class)? {
                    return Ok(false);
                }
                continue;
            }
            // Every pair of class vertices must stay within distance three.
            for v in bits(verts) {
                let mut reach = 1u64 << v;
                for _ in 0..3 {
                    let mut next = reach;
                    for x in bits(reach) {
                        next |= rows[x];
                    }
                    reach = next;
                }
                if verts & !reach != 0 {
                    return Ok(false);
                }
            }
            if c == changed && self.has_fixed_p5(class, verts, &rest_rows) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// An induced P5 of the class with no undecided edge among its vertices
    /// stays induced whatever happens later.
    fn has_fixed_p5(&self, class: u64, verts: u64, rest_rows: &[u64]) -> bool {
        let mut rows = vec![0u64; self.g.n()];
        for id in bits(class) {
            let (u, v) = self.g.edge(id);
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        let mut path = Vec::with_capacity(5);
        bits(verts).any(|s| {
            path.push(s);
            let hit = fixed_p5_from(&rows, rest_rows, &mut path);
            path.pop();
            hit
        })
    }

    /// `is_connected && is_unigraph` for the class with edge mask `class`.
    fn oracle(&mut self, class: u64) -> Result<bool> {
        if let Some(&hit) = self.memo.get(&class) {
            return Ok(hit);
        }
        let sub = self.g.edge_induced_by_ids(bits(class)).graph;
        let ok = connected_unigraph_cached(&sub)?;
        self.memo.insert(class, ok);
        Ok(ok)
    }
}

fn fixed_p5_from(rows: &[u64], rest_rows: &[u64], path: &mut Vec<usize>) -> bool {
    if path.len() == 5 {
        let set = path.iter().fold(0u64, |acc, &v| acc | 1 << v);
        return path.iter().all(|&v| rest_rows[v] & set == 0);
    }
    let last = *path.last().unwrap();
    let earlier = path[..path.len() - 1]
        .iter()
        .fold(0u64, |acc, &v| acc | 1 << v | rows[v]);
    for w in bits(rows[last] & !earlier) {
        if path.contains(&w) {
            continue;
        }
        path.push(w);
        // Each path is found from both ends; keep the one starting lower.
        let hit = (path.len() < 5 || path[0] < w) && fixed_p5_from(rows, rest_rows, path);
        path.pop();
        if hit {
            return true;
        }
    }
    false
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let b = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(b)
    })
}

/// Cheap bounds: `1` (or `2` when `G` is certified not to be a unigraph),
/// `tau(G)` with the star-coloring witness, and the exact `w` for trees.
pub fn bounds(g: &Graph) -> Result<DecompositionReport> {
    let mut r = DecompositionReport::default();
    if g.m() == 0 {
        r.lower_bounds.push(Bound {
            value: 0,
            provenance: Provenance::Trivial,
            witness: None,
        });
        r.upper_bounds.push(Bound {
            value: 0,
            provenance: Provenance::Trivial,
            witness: Some(EdgeColoring::uniform(0)),
        });
        r.tau = Some(0);
        let zero = Exact {
            k: 0,
            coloring: EdgeColoring::uniform(0),
            provenance: Provenance::Trivial,
        };
        r.w = Some(zero.clone());
        r.s = Some(zero);
        return Ok(r);
    }
    let mut lower = 1;
    if g.n() <= crate::canon::MAX_CANON_N && g.is_connected() {
        if is_unigraph(g)?.is_unigraph {
            // One color: the colored degree set is the degree set.
            let one = Exact {
                k: 1,
                coloring: EdgeColoring::uniform(g.m()),
                provenance: Provenance::Trivial,
            };
            r.w = Some(one.clone());
            r.s = Some(one);
        } else {
            lower = 2;
        }
    }
    r.lower_bounds.push(Bound {
        value: lower,
        provenance: Provenance::Trivial,
        witness: None,
    });
    match star_upper_bound(g) {
        Ok((tau, star)) => {
            r.tau = Some(tau);
            r.upper_bounds.push(Bound {
                value: tau,
                provenance: Provenance::VertexCover,
                witness: Some(star),
            });
        }
        Err(e) if e.is_size_bound() => {
            // Any cover gives a star coloring, just not necessarily a tight one.
            r.notices.push(format!("tau not computed: {e}"));
            let star = star_coloring_from_vertex_cover(g, &greedy_vertex_cover(g))?.normalized();
            r.upper_bounds.push(Bound {
                value: star.k(),
                provenance: Provenance::VertexCover,
                witness: Some(star),
            });
        }
        Err(e) => return Err(e),
    }
    if g.is_tree() && r.w.is_none() {
        let (k, c) = tree_unigraph_number(g)?;
        r.w = Some(Exact {
            k,
            coloring: c.normalized(),
            provenance: Provenance::TreeLemma,
        });
    }
    Ok(r)
}

/// Bounds plus exact `w` (and `s` when `strong`) where the search bounds
/// allow. A refused search leaves a notice instead of a value.
pub fn decompose(g: &Graph, strong: bool) -> Result<DecompositionReport> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut r = bounds(g)?;
    if r.w.is_none() {
        match unigraph_number(g) {
            Ok((k, c)) => {
                r.w = Some(Exact {
                    k,
                    coloring: c,
                    provenance: Provenance::Search,
                })
            }
            Err(e) if e.is_size_bound() => r.notices.push(format!("w not computed: {e}")),
            Err(e) => return Err(e),
        }
    }
    if strong && r.s.is_none() {
        let refused = check_searchable(g, STRONG_NUMBER_MAX_N, STRONG_NUMBER_MAX_M).err();
        match (refused, &r.w) {
            (Some(e), _) => r.notices.push(format!("s not computed: {e}")),
            (None, Some(w)) => {
                let (k, c) = strong_from(g, w.k, SearchOptions::default())?;
                let provenance = if Some(k) == r.tau && g.m() > 0 {
                    Provenance::VertexCover
                } else {
                    Provenance::Search
                };
                r.s = Some(Exact {
                    k,
                    coloring: c,
                    provenance,
                });
            }
            (None, None) => r.notices.push("s not computed: w unavailable".into()),
        }
    }
    Ok(r)
}

/// One report per connected component, each on the component's own
/// relabeled graph. No aggregate over components is claimed.
pub fn decompose_components(
    g: &Graph,
    strong: bool,
) -> Result<Vec<(Vec<usize>, DecompositionReport)>> {
    g.components()
        .into_iter()
        .map(|comp| {
            let sub = g.vertex_induced_subgraph(&comp)?;
            Ok((sub.vertices, decompose(&sub.graph, strong)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{color_subgraph, is_unigraphic_coloring};

    fn domino() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn domino_unigraph_number_is_two() {
        let g = domino();
        let (k, c) = unigraph_number(&g).unwrap();
        assert_eq!(k, 2);
        assert!(is_unigraphic_coloring(&g, &c).unwrap().accepted);
        let mut sets: Vec<Vec<usize>> = (1..=2)
            .map(|i| {
                color_subgraph(&g, &c, i)
                    .unwrap()
                    .graph
                    .degree_set()
                    .as_slice()
                    .to_vec()
            })
            .collect();
        sets.sort();
        assert_eq!(sets, vec![vec![2, 2, 1, 1], vec![2, 2, 2, 2]]);
    }

    #[test]
    fn complete_graphs() {
        for n in 2..7 {
            let g = Graph::complete(n);
            assert_eq!(unigraph_number(&g).unwrap().0, 1);
            assert_eq!(strong_unigraph_number(&g).unwrap().0, 1);
        }
    }

    #[test]
    fn paths_and_trivial() {
        assert_eq!(unigraph_number(&Graph::path(7)).unwrap().0, 2);
        assert_eq!(unigraph_number(&Graph::path(2)).unwrap().0, 1);
        assert_eq!(unigraph_number(&Graph::empty(1)).unwrap().0, 0);
        assert_eq!(unigraph_number(&Graph::empty(2)), Err(Error::NotConnected));
    }

    #[test]
    fn pruned_matches_exhaustive() {
        let off = SearchOptions { pruning: false };
        for g in [
            domino(),
            Graph::path(6),
            Graph::cycle(6),
            Graph::double_star(2, 2),
        ] {
            assert_eq!(
                unigraph_number(&g).unwrap(),
                unigraph_number_with(&g, off).unwrap()
            );
        }
    }

    #[test]
    fn strong_number_of_domino_is_within_bounds() {
        let (s, c) = strong_unigraph_number(&domino()).unwrap();
        assert!((2..=3).contains(&s));
        assert!(
            is_strongly_unigraphic_coloring(&domino(), &c)
                .unwrap()
                .accepted
        );
    }

    #[test]
    fn bounds_report() {
        let r = bounds(&Graph::complete(5)).unwrap();
        assert_eq!(r.lower_bounds[0].value, 1);
        assert_eq!(r.upper_bounds[0].value, 4);
        let r = bounds(&domino()).unwrap();
        assert_eq!((r.lower_bounds[0].value, r.tau), (2, Some(3)));
        let r = bounds(&Graph::path(7)).unwrap();
        assert_eq!(r.w.unwrap().k, 2);
        // Too large for the exact cover: a greedy star coloring still bounds w.
        let r = bounds(&Graph::path(60)).unwrap();
        assert_eq!((r.tau, r.notices.len()), (None, 1));
        assert_eq!(r.w.unwrap().k, 20);
        assert!(r.upper_bounds[0].value >= 30);
    }

    #[test]
    fn decompose_report() {
        let r = decompose(&Graph::complete(4), true).unwrap();
        assert_eq!((r.w.unwrap().k, r.s.unwrap().k), (1, 1));
        let r = decompose(&Graph::complete(12), true).unwrap();
        assert_eq!((r.w.unwrap().k, r.s.unwrap().k), (1, 1));
        let r = decompose(&Graph::cycle(12), true).unwrap();
        assert!(r.w.is_some() && r.s.is_none());
        assert_eq!(r.notices.len(), 1);
        let parts = decompose_components(&Graph::new(5, &[(0, 1), (2, 3), (3, 4)]).unwrap(), false)
            .unwrap();
        assert_eq!(parts.len(), 2);
    }

    #[test]
    fn permutation_helper() {
        let mut p = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
