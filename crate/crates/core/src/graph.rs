//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically.
/// The position of an edge in [`Graph::edges`] is its edge id; every other
/// module indexes per-edge data (colors, dominating sets) by that id.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    /// `(neighbor, edge id)`, sorted by neighbor within each vertex.
    incidence: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, self-loops and duplicate edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::EndpointOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(n, normalized))
    }

    /// `edges` must be sorted, deduplicated and normalized to `u < v < n`.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut incidence = vec![(0, 0); 2 * edges.len()];
        // The `u`-side and `v`-side streams interleave, so rows are sorted afterwards.
        for (id, &(u, v)) in edges.iter().enumerate() {
            incidence[fill[u]] = (v, id);
            fill[u] += 1;
            incidence[fill[v]] = (u, id);
            fill[v] += 1;
        }
        for v in 0..n {
            incidence[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph {
            n,
            edges,
            offsets,
            incidence,
        }
    }

    /// Builds a graph from arbitrary pairs that are known to be valid but may be unsorted.
    pub(crate) fn from_pairs_unchecked(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Self::from_sorted_unchecked(n, edges)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unchecked(n, edges)
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        Self::from_sorted_unchecked(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::from_pairs_unchecked(n, edges)
    }

    /// `K_{1,p}` with center 0.
    pub fn star(p: usize) -> Self {
        Self::from_sorted_unchecked(p + 1, (1..=p).map(|v| (0, v)).collect())
    }

    /// `S_{q,r}`: centers 0 and 1, leaves `2..q+2` on 0 and the rest on 1.
    pub fn double_star(q: usize, r: usize) -> Self {
        let mut edges = vec![(0, 1)];
        edges.extend((0..q).map(|i| (0, 2 + i)));
        edges.extend((0..r).map(|i| (1, 2 + q + i)));
        Self::from_pairs_unchecked(q + r + 2, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.incidence[self.offsets[v]..self.offsets[v + 1]]
            .iter()
            .map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs of `v`, ascending by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incidence[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let row = self.incident(u);
        row.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Adjacency rows as bitmasks. Only valid for `n <= 64`.
    pub(crate) fn adjacency_bits(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut rows = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    }

    /// The graph obtained by renaming vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::from_pairs_unchecked(
            self.n,
            self.edges
                .iter()
                .map(|&(u, v)| (perm[u], perm[v]))
                .collect(),
        )
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.m() == self.n - 1 && self.is_connected()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff every pair of vertices is joined by a path. The empty and
    /// single-vertex graphs are connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Largest shortest-path distance, or `None` when disconnected.
    /// The empty and single-vertex graphs have diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Some 5-vertex set inducing exactly a path with four edges, listed in
    /// path order, or `None`.
    pub fn induced_p5(&self) -> Option<[usize; 5]> {
        let mut path = Vec::with_capacity(5);
        for s in 0..self.n {
            path.push(s);
            if self.extend_induced_path(&mut path) {
                return Some([path[0], path[1], path[2], path[3], path[4]]);
            }
            path.pop();
        }
        None
    }

    fn extend_induced_path(&self, path: &mut Vec<usize>) -> bool {
        if path.len() == 5 {
            return true;
        }
        let last = *path.last().unwrap();
        for w in self.neighbors(last) {
            // Induced: w must not touch any path vertex other than the last one.
            let chordless = path[..path.len() - 1]
                .iter()
                .all(|&x| x != w && !self.has_edge(x, w));
            if chordless && !path.contains(&w) {
                path.push(w);
                if self.extend_induced_path(path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    pub fn contains_induced_p5(&self) -> bool {
        self.induced_p5().is_some()
    }

    /// `G[U]`, relabeled to `0..|U|` in ascending order of `U`.
    pub fn vertex_induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        Ok(Subgraph {
            graph: Graph::from_pairs_unchecked(vs.len(), edges),
            vertices: vs,
        })
    }

    /// `G[F]` on exactly the endpoints of `F`, relabeled in ascending order.
    pub fn edge_induced_subgraph(&self, edges: &[(usize, usize)]) -> Result<Subgraph> {
        let mut ids = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            ids.push(self.edge_id(u, v).ok_or(Error::EdgeNotInGraph(u, v))?);
        }
        Ok(self.edge_induced_by_ids(ids))
    }

    /// `G[F]` for edge ids; ids must be valid.
    pub fn edge_induced_by_ids(&self, ids: impl IntoIterator<Item = usize>) -> Subgraph {
        let chosen: Vec<(usize, usize)> = ids.into_iter().map(|id| self.edges[id]).collect();
        let mut vs: Vec<usize> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        let local = |x: usize| vs.binary_search(&x).unwrap();
        let edges = chosen.iter().map(|&(u, v)| (local(u), local(v))).collect();
        Subgraph {
            graph: Graph::from_pairs_unchecked(vs.len(), edges),
            vertices: vs,
        }
    }

    pub fn degree_set(&self) -> DegreeSet {
        DegreeSet::from_unsorted((0..self.n).map(|v| self.degree(v)).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A subgraph together with the original id of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the host vertex that became vertex `i`.
    pub vertices: Vec<usize>,
}

/// The multiset of vertex degrees, stored in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSet(Vec<usize>);

impl DegreeSet {
    pub fn from_unsorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSet(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}
