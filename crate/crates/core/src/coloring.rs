//! Edge colorings, the unigraphic and strongly unigraphic checks, star
//! colorings and the vertex-cover construction.

use std::ops::ControlFlow;

use crate::canon::{canonical_code, check_bound};
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};
use crate::realize::{
    cells_to_colored, colored_degree_set, for_each_colored_realization, RealizationScope,
};
use crate::recognize::connected_unigraph_cached;

/// Total assignment of colors `1..=k` to the edges of a host graph, indexed
/// by edge id. Every color in `1..=k` is used. Colorings need not be proper.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    /// `colors[id]` is the color of edge `id`; colors must be exactly `1..=k`
    /// for some `k`, each used at least once.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::InvalidColoring(
                "color 0 is not allowed; colors start at 1".into(),
            ));
        }
        let mut used = vec![false; k + 1];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(gap) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::InvalidColoring(format!(
                "color {gap} is unused (max color {k})"
            )));
        }
        Ok(Self { k, colors })
    }

    /// Compacts arbitrary positive labels to `1..=k`, keeping their relative order.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidColoring(
                "color 0 is not allowed; colors start at 1".into(),
            ));
        }
        let mut distinct = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = labels
            .iter()
            .map(|l| distinct.binary_search(l).unwrap() + 1)
            .collect();
        Ok(Self {
            k: distinct.len(),
            colors,
        })
    }

    /// Every edge color 1.
    pub fn uniform(m: usize) -> Self {
        Self {
            k: usize::from(m > 0),
            colors: vec![1; m],
        }
    }

    /// One color per edge.
    pub fn rainbow(m: usize) -> Self {
        Self {
            k: m,
            colors: (1..=m).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge_id: usize) -> usize {
        self.colors[edge_id]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Edge ids of color `i`, ascending.
    pub fn class(&self, i: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&e| self.colors[e] == i)
            .collect()
    }

    /// `classes()[i - 1]` holds the edge ids of color `i`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (e, &c) in self.colors.iter().enumerate() {
            out[c - 1].push(e);
        }
        out
    }

    /// Colors relabeled in order of first appearance along the edge order.
    pub fn normalized(&self) -> Self {
        let mut map = vec![0; self.k + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        Self { k: self.k, colors }
    }

    pub fn check_host(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::InvalidColoring(format!(
                "coloring has {} edges, graph has {}",
                self.colors.len(),
                g.m()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassDefect {
    Disconnected,
    NotUnigraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringFailure {
    BadColorClass {
        color: usize,
        reason: ClassDefect,
    },
    /// A colored realization with the same colored degree set whose
    /// underlying graph is not isomorphic to the host.
    NonUniqueRealization {
        witness: Graph,
        witness_coloring: EdgeColoring,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringVerdict {
    pub accepted: bool,
    pub failure: Option<ColoringFailure>,
}

impl ColoringVerdict {
    fn accept() -> Self {
        Self {
            accepted: true,
            failure: None,
        }
    }

    fn reject(f: ColoringFailure) -> Self {
        Self {
            accepted: false,
            failure: Some(f),
        }
    }
}

/// The subgraph induced by the edges of color `i`.
pub fn color_subgraph(g: &Graph, c: &EdgeColoring, i: usize) -> Result<Subgraph> {
    c.check_host(g)?;
    if i == 0 || i > c.k() {
        return Err(Error::ColorOutOfRange { color: i, k: c.k() });
    }
    Ok(g.edge_induced_by_ids(c.class(i)))
}

/// Accepts iff every color class induces a connected unigraph; otherwise
/// reports the least failing color.
pub fn is_unigraphic_coloring(g: &Graph, c: &EdgeColoring) -> Result<ColoringVerdict> {
    c.check_host(g)?;
    for (i, class) in c.classes().into_iter().enumerate() {
        let sub = g.edge_induced_by_ids(class).graph;
        check_bound(sub.n())?;
        if !sub.is_connected() {
            return Ok(ColoringVerdict::reject(ColoringFailure::BadColorClass {
                color: i + 1,
                reason: ClassDefect::Disconnected,
            }));
        }
        if !connected_unigraph_cached(&sub)? {
            return Ok(ColoringVerdict::reject(ColoringFailure::BadColorClass {
                color: i + 1,
                reason: ClassDefect::NotUnigraph,
            }));
        }
    }
    Ok(ColoringVerdict::accept())
}

/// Largest host accepted by the strong check. The check enumerates colored
/// realizations exhaustively and is exponential in the worst case.
pub const STRONG_MAX_N: usize = 10;
pub const STRONG_MAX_M: usize = 24;

/// Strong check over all simple realizations, disconnected ones included.
pub fn is_strongly_unigraphic_coloring(g: &Graph, c: &EdgeColoring) -> Result<ColoringVerdict> {
    is_strongly_unigraphic_coloring_in(g, c, RealizationScope::All)
}

/// Unigraphic, and every colored realization of the colored degree set has
/// an underlying graph isomorphic to `g`. `scope` restricts which
/// realizations are considered.
pub fn is_strongly_unigraphic_coloring_in(
    g: &Graph,
    c: &EdgeColoring,
    scope: RealizationScope,
) -> Result<ColoringVerdict> {
    if g.n() > STRONG_MAX_N {
        return Err(Error::size(
            "vertices for the strong check",
            STRONG_MAX_N,
            g.n(),
        ));
    }
    if g.m() > STRONG_MAX_M {
        return Err(Error::size(
            "edges for the strong check",
            STRONG_MAX_M,
            g.m(),
        ));
    }
    let basic = is_unigraphic_coloring(g, c)?;
    if !basic.accepted {
        return Ok(basic);
    }
    Ok(match non_unique_realization(g, c, scope)? {
        Some(f) => ColoringVerdict::reject(f),
        None => ColoringVerdict::accept(),
    })
}

fn non_unique_realization(
    g: &Graph,
    c: &EdgeColoring,
    scope: RealizationScope,
) -> Result<Option<ColoringFailure>> {
    let cds = colored_degree_set(g, c)?;
    let own = canonical_code(g)?;
    let n = g.n();
    let mut found = None;
    let _ = for_each_colored_realization(&cds, &mut |cells| {
        let (h, colors) = cells_to_colored(n, cells);
        if scope == RealizationScope::Connected && !h.is_connected() {
            return ControlFlow::Continue(());
        }
        if h.degree_set() == g.degree_set() && canonical_code(&h).expect("within bound") == own {
            return ControlFlow::Continue(());
        }
        let witness_coloring = EdgeColoring::new(colors).expect("realization uses every color");
        found = Some(ColoringFailure::NonUniqueRealization {
            witness: h,
            witness_coloring,
        });
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Whether the edges `class` form a star: `K2` or `K_{1,p}`.
fn is_star_class(g: &Graph, class: &[usize]) -> bool {
    let Some(&first) = class.first() else {
        return false;
    };
    let (a, b) = g.edge(first);
    [a, b].into_iter().any(|center| {
        class.iter().all(|&e| {
            let (u, v) = g.edge(e);
            u == center || v == center
        })
    })
}

/// Every color class is a star (`K2` counts).
pub fn is_star_coloring(g: &Graph, c: &EdgeColoring) -> bool {
    c.check_host(g).is_ok() && c.classes().iter().all(|cl| is_star_class(g, cl))
}

/// Decides whether `u` and `v` are adjacent from colored degrees and class
/// sizes alone. For a star coloring this agrees with the true adjacency.
pub fn star_adjacency(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Result<bool> {
    c.check_host(g)?;
    for x in [u, v] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: g.n(),
            });
        }
    }
    let classes = c.classes();
    if let Some(bad) = classes.iter().position(|cl| !is_star_class(g, cl)) {
        return Err(Error::NotAStarColoring(bad + 1));
    }
    let color_degree = |x: usize, i: usize| {
        g.incident(x)
            .iter()
            .filter(|&&(_, e)| c.color(e) == i)
            .count()
    };
    Ok((1..=c.k()).any(|i| {
        let (du, dv) = (color_degree(u, i), color_degree(v, i));
        match classes[i - 1].len() {
            1 => du == 1 && dv == 1,
            _ => du.min(dv) == 1 && du.max(dv) >= 2,
        }
    }))
}

/// A set of vertices meeting every edge, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    pub vertices: Vec<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// An edge not met by `vertices`, if any.
pub fn uncovered_edge(g: &Graph, vertices: &[usize]) -> Option<(usize, usize)> {
    let mut inside = vec![false; g.n()];
    for &v in vertices {
        if v < g.n() {
            inside[v] = true;
        }
    }
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| !inside[u] && !inside[v])
}

/// Largest host for [`minimum_vertex_cover`].
pub const VERTEX_COVER_MAX_N: usize = 40;

/// Exact minimum vertex cover by branch and bound.
pub fn minimum_vertex_cover(g: &Graph) -> Result<VertexCover> {
    if g.n() > VERTEX_COVER_MAX_N {
        return Err(Error::size(
            "vertices for exact vertex cover",
            VERTEX_COVER_MAX_N,
            g.n(),
        ));
    }
    let adj = g.adjacency_bits();
    let mut best = greedy_vertex_cover(g)
        .vertices
        .iter()
        .fold(0u64, |acc, &v| acc | 1 << v);
    cover_search(adj, 0, &mut best);
    Ok(VertexCover {
        vertices: bits_to_vec(best),
    })
}

/// Endpoints of a greedy maximal matching: at most twice the minimum.
pub fn greedy_vertex_cover(g: &Graph) -> VertexCover {
    let mut inside = vec![false; g.n()];
    for &(u, v) in g.edges() {
        if !inside[u] && !inside[v] {
            inside[u] = true;
            inside[v] = true;
        }
    }
    VertexCover {
        vertices: (0..g.n()).filter(|&v| inside[v]).collect(),
    }
}

fn bits_to_vec(mut bits: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}

/// `rest[v]` holds the edges not yet covered, as adjacency rows.
fn cover_search(mut rest: Vec<u64>, mut chosen: u64, best: &mut u64) {
    let take = |rest: &mut Vec<u64>, v: usize| {
        let mut nb = rest[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            rest[w] &= !(1 << v);
            nb &= nb - 1;
        }
        rest[v] = 0;
    };
    // A degree-1 vertex never needs to be chosen over its neighbor.
    while let Some(v) = (0..rest.len()).find(|&v| rest[v].count_ones() == 1) {
        let w = rest[v].trailing_zeros() as usize;
        chosen |= 1 << w;
        take(&mut rest, w);
    }
    if chosen.count_ones() + matching_bound(&rest) >= best.count_ones() {
        return;
    }
    let Some(v) = (0..rest.len()).max_by_key(|&v| (rest[v].count_ones(), std::cmp::Reverse(v)))
    else {
        return;
    };
    if rest[v] == 0 {
        *best = chosen;
        return;
    }
    let nbrs = rest[v];
    let mut with_v = rest.clone();
    take(&mut with_v, v);
    cover_search(with_v, chosen | 1 << v, best);
    let mut without_v = rest;
    for w in bits_to_vec(nbrs) {
        take(&mut without_v, w);
    }
    cover_search(without_v, chosen | nbrs, best);
}

fn matching_bound(rest: &[u64]) -> u32 {
    let mut used = 0u64;
    let mut size = 0;
    for v in 0..rest.len() {
        if used >> v & 1 == 1 {
            continue;
        }
        let free = rest[v] & !used;
        if free != 0 {
            used |= 1 << v | 1 << free.trailing_zeros();
            size += 1;
        }
    }
    size
}

/// Cover vertices get indices `1..` by descending degree (ties by id), and
/// edge `{v_i, v_j}` gets color `min(i, j)`. Unused colors are dropped.
pub fn star_coloring_from_vertex_cover(g: &Graph, cover: &VertexCover) -> Result<EdgeColoring> {
    if let Some(&v) = cover.vertices.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if let Some((u, v)) = uncovered_edge(g, &cover.vertices) {
        return Err(Error::NotAVertexCover(u, v));
    }
    let mut order = cover.vertices.clone();
    order.sort_unstable_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.dedup();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        index[v] = i + 1;
    }
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| index[u].min(index[v]))
        .collect();
    EdgeColoring::from_labels(&labels)
}

/// `tau(G)` together with the star coloring built from a minimum cover.
pub fn strong_upper_bound(g: &Graph) -> Result<(usize, EdgeColoring)> {
    let cover = minimum_vertex_cover(g)?;
    let c = star_coloring_from_vertex_cover(g, &cover)?;
    // Minimality means every cover vertex owns at least one edge.
    debug_assert_eq!(c.k(), cover.len());
    Ok((cover.len(), c))
}
