//! Unigraph recognition.
//!
//! Cheap necessary conditions run first (component structure, diameter,
//! induced P5). The complete oracle scans the 2-switch neighborhood of `G`:
//! all realizations of a degree sequence are connected by 2-switches, so `G`
//! is a unigraph exactly when every single 2-switch of `G` is isomorphic to
//! `G`. The first non-isomorphic switch is the witness.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::canon::{canonical_code, check_bound, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which check decided a recognition verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decider {
    InducedP5,
    Diameter,
    DisconnectedStructure,
    Oracle,
}

impl Decider {
    pub fn as_str(self) -> &'static str {
        match self {
            Decider::InducedP5 => "induced-P5",
            Decider::Diameter => "diameter",
            Decider::DisconnectedStructure => "disconnected-structure",
            Decider::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionVerdict {
    pub is_unigraph: bool,
    /// A same-degree-set realization not isomorphic to the input; present iff
    /// `is_unigraph` is false.
    pub witness: Option<Graph>,
    pub decided_by: Decider,
}

/// Why [`fast_filter`] rejected a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterReason {
    /// Vertices of an induced path with four edges, in path order.
    InducedP5([usize; 5]),
    Diameter(usize),
    /// At least two components with three or more vertices.
    DisconnectedStructure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterOutcome {
    NotUnigraph(FilterReason),
    Unknown,
}

/// Necessary conditions only; never claims a graph is a unigraph.
pub fn fast_filter(g: &Graph) -> FilterOutcome {
    let comps = g.components();
    if comps.len() > 1 {
        if comps.iter().filter(|c| c.len() >= 3).count() >= 2 {
            return FilterOutcome::NotUnigraph(FilterReason::DisconnectedStructure);
        }
    } else if let Some(d) = g.diameter() {
        if d > 3 {
            return FilterOutcome::NotUnigraph(FilterReason::Diameter(d));
        }
    }
    match g.induced_p5() {
        Some(p) => FilterOutcome::NotUnigraph(FilterReason::InducedP5(p)),
        None => FilterOutcome::Unknown,
    }
}

/// Decides whether `g` is a unigraph, with a witness when it is not.
pub fn is_unigraph(g: &Graph) -> Result<RecognitionVerdict> {
    check_bound(g.n())?;
    let decided_by = match fast_filter(g) {
        FilterOutcome::NotUnigraph(FilterReason::DisconnectedStructure) => {
            return Ok(RecognitionVerdict {
                is_unigraph: false,
                witness: Some(disconnected_witness(g)?),
                decided_by: Decider::DisconnectedStructure,
            });
        }
        FilterOutcome::NotUnigraph(FilterReason::Diameter(_)) => Decider::Diameter,
        FilterOutcome::NotUnigraph(FilterReason::InducedP5(_)) => Decider::InducedP5,
        FilterOutcome::Unknown => Decider::Oracle,
    };
    let witness = two_switch_witness(g)?;
    if decided_by != Decider::Oracle {
        assert!(
            witness.is_some(),
            "filter rejected {g:?} but no 2-switch changes its isomorphism class"
        );
    }
    Ok(RecognitionVerdict {
        is_unigraph: witness.is_none(),
        witness,
        decided_by,
    })
}

pub fn is_connected_unigraph(g: &Graph) -> Result<bool> {
    check_bound(g.n())?;
    Ok(g.is_connected() && is_unigraph(g)?.is_unigraph)
}

/// Memoized `is_connected(g) && is_unigraph(g)` keyed by canonical code.
pub(crate) fn connected_unigraph_cached(g: &Graph) -> Result<bool> {
    static CACHE: OnceLock<RwLock<HashMap<CanonicalCode, bool>>> = OnceLock::new();
    if !g.is_connected() {
        return Ok(false);
    }
    let code = canonical_code(g)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&hit) = cache.read().unwrap().get(&code) {
        return Ok(hit);
    }
    let answer = !matches!(fast_filter(g), FilterOutcome::NotUnigraph(_))
        && two_switch_witness(g)?.is_none();
    cache.write().unwrap().insert(code, answer);
    Ok(answer)
}

/// A 2-switch of `g` that is not isomorphic to `g`, if any.
pub(crate) fn two_switch_witness(g: &Graph) -> Result<Option<Graph>> {
    let own = canonical_code(g)?;
    let own_inv = cheap_invariant(g);
    let edges = g.edges();
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            for (x1, y1, x2, y2) in [(a, c, b, d), (a, d, b, c)] {
                if g.has_edge(x1, y1) || g.has_edge(x2, y2) {
                    continue;
                }
                let mut next: Vec<(usize, usize)> = edges
                    .iter()
                    .copied()
                    .filter(|&e| e != (a, b) && e != (c, d))
                    .collect();
                next.push((x1, y1));
                next.push((x2, y2));
                let h = Graph::from_pairs_unchecked(g.n(), next);
                if cheap_invariant(&h) != own_inv || canonical_code(&h)? != own {
                    return Ok(Some(h));
                }
            }
        }
    }
    Ok(None)
}

/// Sorted per-vertex (degree, neighbor-degree sum, triangles).
fn cheap_invariant(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut inv: Vec<_> = (0..g.n())
        .map(|v| {
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            let mut tri = 0;
            for (i, &x) in nbrs.iter().enumerate() {
                for &y in &nbrs[i + 1..] {
                    if g.has_edge(x, y) {
                        tri += 1;
                    }
                }
            }
            (nbrs.len(), nbrs.iter().map(|&w| g.degree(w)).sum(), tri)
        })
        .collect();
    inv.sort_unstable();
    inv
}

/// For a graph with two components of at least three vertices each, a graph
/// with the same degree set that is not isomorphic to it.
///
/// One edge `{u_i, v_i}` is taken from each of the first two such components:
/// a non-bridge edge when the component has a cycle, otherwise the pendant
/// edge of its least leaf `u_i`. Both are replaced by `{u1, u2}` and
/// `{v1, v2}`. If both components are trees, `{u1, u2}` becomes a separate K2;
/// otherwise the two components merge into one.
pub fn disconnected_witness(g: &Graph) -> Result<Graph> {
    let big: Vec<Vec<usize>> = g
        .components()
        .into_iter()
        .filter(|c| c.len() >= 3)
        .collect();
    if big.len() < 2 {
        return Err(Error::Precondition(
            "disconnected_witness needs two components with at least three vertices".into(),
        ));
    }
    let bridges = bridge_ids(g);
    let pick = |comp: &[usize]| -> (usize, usize, bool) {
        let inside = |&(u, _): &(usize, usize)| comp.binary_search(&u).is_ok();
        let on_cycle = g
            .edges()
            .iter()
            .enumerate()
            .find(|(id, e)| inside(e) && !bridges[*id]);
        match on_cycle {
            Some((_, &(u, v))) => (u, v, true),
            None => {
                let leaf = *comp.iter().find(|&&v| g.degree(v) == 1).unwrap();
                let parent = g.neighbors(leaf).next().unwrap();
                (leaf, parent, false)
            }
        }
    };
    let mut e1 = pick(&big[0]);
    let mut e2 = pick(&big[1]);
    if !e1.2 && e2.2 {
        std::mem::swap(&mut e1, &mut e2);
    }
    let (u1, v1, _) = e1;
    let (u2, v2, _) = e2;
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != (u1.min(v1), u1.max(v1)) && e != (u2.min(v2), u2.max(v2)))
        .collect();
    edges.push((u1, u2));
    edges.push((v1, v2));
    Ok(Graph::from_pairs_unchecked(g.n(), edges))
}

/// `bridge[id]` for every edge, via low-link DFS.
fn bridge_ids(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut bridge = vec![false; g.m()];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent edge id, next incidence index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
            if let Some(&(w, id)) = g.incident(v).get(*next) {
                *next += 1;
                if id == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, id, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridge[parent_edge] = true;
                    }
                }
            }
        }
    }
    bridge
}

/// Tree shapes of diameter at most three.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeUnigraphClass {
    /// The single-vertex tree.
    Trivial,
    K2,
    /// `K_{1,p}`, `p >= 2`.
    Star(usize),
    /// `S_{q,r}` with `q >= r >= 1`.
    DoubleStar(usize, usize),
    NotTreeUnigraph {
        diameter: usize,
    },
}

pub fn tree_unigraph_class(t: &Graph) -> Result<TreeUnigraphClass> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    if n == 1 {
        return Ok(TreeUnigraphClass::Trivial);
    }
    // Tree diameter from two sweeps.
    let far = |s: usize| {
        let d = t.bfs_distances(s);
        (0..n)
            .max_by_key(|&v| (d[v].unwrap(), std::cmp::Reverse(v)))
            .map(|v| (v, d[v].unwrap()))
            .unwrap()
    };
    let (a, _) = far(0);
    let (_, diameter) = far(a);
    Ok(match diameter {
        1 => TreeUnigraphClass::K2,
        2 => TreeUnigraphClass::Star(n - 1),
        3 => {
            let centers: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 2).collect();
            debug_assert_eq!(centers.len(), 2);
            let q = t.degree(centers[0]) - 1;
            let r = t.degree(centers[1]) - 1;
            TreeUnigraphClass::DoubleStar(q.max(r), q.min(r))
        }
        _ => TreeUnigraphClass::NotTreeUnigraph { diameter },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    fn domino() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    fn check_witness(g: &Graph, v: &RecognitionVerdict) {
        let w = v.witness.as_ref().unwrap();
        assert_eq!(w.degree_set(), g.degree_set());
        assert!(!are_isomorphic(g, w));
    }

    #[test]
    fn domino_is_not_a_unigraph() {
        let g = domino();
        let v = is_unigraph(&g).unwrap();
        assert!(!v.is_unigraph);
        // Deleting a middle vertex leaves an induced path on five vertices.
        assert_eq!(v.decided_by, Decider::InducedP5);
        check_witness(&g, &v);
    }

    #[test]
    fn complete_graphs_and_stars_are_unigraphs() {
        for n in 1..8 {
            let v = is_unigraph(&Graph::complete(n)).unwrap();
            assert!(v.is_unigraph && v.witness.is_none());
        }
        assert!(is_unigraph(&Graph::star(3)).unwrap().is_unigraph);
        assert!(is_unigraph(&Graph::empty(0)).unwrap().is_unigraph);
        assert!(is_unigraph(&Graph::empty(2)).unwrap().is_unigraph);
    }

    #[test]
    fn connected_unigraph_examples() {
        assert!(is_connected_unigraph(&Graph::double_star(3, 1)).unwrap());
        assert!(!is_connected_unigraph(&Graph::path(5)).unwrap());
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_unigraph(&two_k2).unwrap().is_unigraph);
        assert!(!is_connected_unigraph(&two_k2).unwrap());
    }

    #[test]
    fn filters() {
        assert!(matches!(
            fast_filter(&domino()),
            FilterOutcome::NotUnigraph(FilterReason::InducedP5(_))
        ));
        assert_eq!(
            fast_filter(&Graph::path(5)),
            FilterOutcome::NotUnigraph(FilterReason::Diameter(4))
        );
        // Diameter 3, P5-free, yet not a unigraph: the triangular prism.
        let prism = Graph::new(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(fast_filter(&prism), FilterOutcome::Unknown);
        let v = is_unigraph(&prism).unwrap();
        assert_eq!(v.decided_by, Decider::Oracle);
        check_witness(&prism, &v);
        assert_eq!(
            fast_filter(&Graph::cycle(8)),
            FilterOutcome::NotUnigraph(FilterReason::Diameter(4))
        );
        let p5 = is_unigraph(&Graph::path(5)).unwrap();
        assert_eq!(p5.decided_by, Decider::Diameter);
        check_witness(&Graph::path(5), &p5);
        let c8 = is_unigraph(&Graph::cycle(8)).unwrap();
        assert_eq!(c8.decided_by, Decider::Diameter);
        check_witness(&Graph::cycle(8), &c8);
    }

    #[test]
    fn witness_for_two_triangles_is_a_hexagon() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let w = disconnected_witness(&g).unwrap();
        assert!(are_isomorphic(&w, &Graph::cycle(6)));
        let v = is_unigraph(&g).unwrap();
        assert_eq!(v.decided_by, Decider::DisconnectedStructure);
        check_witness(&g, &v);
    }

    #[test]
    fn witness_for_two_paths_splits_off_an_edge() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let w = disconnected_witness(&g).unwrap();
        let mut sizes: Vec<usize> = w.components().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(w.degree_set(), g.degree_set());
    }

    #[test]
    fn witness_for_path_and_triangle_is_connected() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let w = disconnected_witness(&g).unwrap();
        assert!(w.is_connected());
        assert_eq!(w.degree_set(), g.degree_set());
    }

    #[test]
    fn witness_precondition() {
        assert!(matches!(
            disconnected_witness(&Graph::path(4)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tree_classes() {
        use TreeUnigraphClass::*;
        assert_eq!(tree_unigraph_class(&Graph::path(2)).unwrap(), K2);
        assert_eq!(tree_unigraph_class(&Graph::star(4)).unwrap(), Star(4));
        assert_eq!(
            tree_unigraph_class(&Graph::path(4)).unwrap(),
            DoubleStar(1, 1)
        );
        assert_eq!(
            tree_unigraph_class(&Graph::double_star(1, 3)).unwrap(),
            DoubleStar(3, 1)
        );
        assert_eq!(
            tree_unigraph_class(&Graph::path(5)).unwrap(),
            NotTreeUnigraph { diameter: 4 }
        );
        assert_eq!(tree_unigraph_class(&Graph::empty(1)).unwrap(), Trivial);
        assert_eq!(tree_unigraph_class(&Graph::cycle(3)), Err(Error::NotATree));
    }

    #[test]
    fn bridges() {
        // Triangle 0-1-2 with pendant 2-3.
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let b = bridge_ids(&g);
        let id = g.edge_id(2, 3).unwrap();
        for e in 0..g.m() {
            assert_eq!(b[e], e == id);
        }
    }
}
