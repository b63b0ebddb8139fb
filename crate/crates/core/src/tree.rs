//! Unigraph number of trees through edge domination.
//!
//! In a tree every connected unigraph is `K2`, a star or a double star, and
//! each such class is dominated by a single edge. So the unigraph number of a
//! tree equals its edge domination number, which a three-state DP computes in
//! linear time.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::{tree_unigraph_class, TreeUnigraphClass};

/// Edge ids of the host graph. Order matters when building a coloring: the
/// `i`-th edge gets color `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDominatingSet {
    pub edges: Vec<usize>,
}

impl EdgeDominatingSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// An edge sharing no endpoint with any edge of `ids`, if any.
pub fn undominated_edge(g: &Graph, ids: &[usize]) -> Option<(usize, usize)> {
    let mut touched = vec![false; g.n()];
    for &id in ids {
        let (u, v) = g.edge(id);
        touched[u] = true;
        touched[v] = true;
    }
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| !touched[u] && !touched[v])
}

const INF: u32 = u32::MAX / 4;
const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
enum State {
    /// Covered by a chosen edge to a child.
    Internal = 1,
    /// Not an endpoint of any chosen edge.
    Uncovered = 2,
    /// Covered by the chosen edge to its parent.
    ByParent = 3,
}

impl State {
    /// Decodes the low two bits of a `mark` byte. The parent of a vertex is
    /// always decided before the vertex itself, so zero never occurs.
    fn from_bits(bits: u8) -> Self {
        match bits & 3 {
            1 => State::Internal,
            2 => State::Uncovered,
            3 => State::ByParent,
            _ => unreachable!("parent state decided first"),
        }
    }
}

/// The child state that is cheapest given the parent can still take it.
fn preferred(internal: u32, uncovered: u32, by_parent: u32) -> State {
    if uncovered <= internal && uncovered <= 1 + by_parent {
        State::Uncovered
    } else if internal <= 1 + by_parent {
        State::Internal
    } else {
        State::ByParent
    }
}

/// Per-vertex DP state, packed so a random parent access is one cache line.
/// While `v` is live, `link` and `link_edge` are the XOR of its live
/// neighbors and incident edge ids, so a leaf reads its parent directly.
///
/// Costs cover the subtree at `v` without its parent edge: ByParent is
/// `sum_free`, Uncovered is `sum_internal`, and `internal` holds the cheapest
/// child upgrade until `v` is peeled, then the Internal cost. `upgrade` is the
/// child realizing it, and `forced` says whether Internal must force that
/// child because no child prefers ByParent on its own.
#[derive(Clone, Copy)]
struct Node {
    degree: u32,
    link: u32,
    link_edge: u32,
    sum_free: u32,
    sum_internal: u32,
    internal: u32,
    upgrade: u32,
    forced: bool,
}

/// What the top-down pass needs about a peeled vertex, stored in peel order
/// so that pass reads it sequentially.
#[derive(Clone, Copy)]
struct Peel {
    vertex: u32,
    parent: u32,
    edge: u32,
    preferred: State,
}

/// Flag bit in `mark`: the vertex is the child its parent forces when Internal.
const FORCED: u8 = 4;

/// Minimum edge dominating set of a tree in `O(n)`. Edge ids ascend.
pub fn min_edge_dominating_set_tree(t: &Graph) -> Result<EdgeDominatingSet> {
    let n = t.n();
    if n == 0 || t.m() != n - 1 {
        return Err(Error::NotATree);
    }
    if n > NONE as usize {
        return Err(Error::size("vertices for the tree DP", NONE as usize, n));
    }
    let blank = Node {
        degree: 0,
        link: 0,
        link_edge: 0,
        sum_free: 0,
        sum_internal: 0,
        internal: INF,
        upgrade: NONE,
        forced: true,
    };
    let mut node = vec![blank; n];
    for (id, &(u, v)) in t.edges().iter().enumerate() {
        for (a, b) in [(u, v), (v, u)] {
            let x = &mut node[a];
            x.degree += 1;
            x.link ^= b as u32;
            x.link_edge ^= id as u32;
        }
    }

    // A FIFO of leaves: the initial leaves, then each vertex the moment its
    // last child is peeled. Consecutive entries are independent, which lets
    // the cache misses of a large tree overlap. The push is branchless, so
    // the queue has one spare slot.
    let mut queue = vec![0u32; n + 1];
    let mut tail = 0;
    for v in 0..n {
        queue[tail] = v as u32;
        tail += (node[v].degree == 1) as usize;
    }
    // Per vertex: its final state in the low bits, FORCED above them.
    let mut mark = vec![0u8; n];
    let mut peels = Vec::with_capacity(n - 1);
    let mut root = 0;
    for head in 0.. {
        if head == tail {
            break;
        }
        let v = queue[head] as usize;
        let x = &mut node[v];
        if x.degree == 0 {
            // Its last neighbor was peeled earlier in the queue.
            root = v;
            continue;
        }
        x.degree = 0;
        let by_parent = x.sum_free;
        let cost = (by_parent + x.internal).min(INF);
        let chosen = 1 + by_parent;
        let free = chosen.min(cost).min(x.sum_internal);
        let preferred = preferred(cost, x.sum_internal, by_parent);
        let (p, edge) = (x.link as usize, x.link_edge);
        if x.forced && x.upgrade != NONE {
            mark[x.upgrade as usize] |= FORCED;
        }
        peels.push(Peel {
            vertex: v as u32,
            parent: p as u32,
            edge,
            preferred,
        });

        let y = &mut node[p];
        y.degree -= 1;
        y.link ^= v as u32;
        y.link_edge ^= edge;
        y.sum_free = (y.sum_free + free).min(INF);
        y.sum_internal = (y.sum_internal + cost).min(INF);
        let better = chosen - free < y.internal;
        y.internal = if better { chosen - free } else { y.internal };
        y.upgrade = if better { v as u32 } else { y.upgrade };
        y.forced &= preferred != State::ByParent;
        queue[tail] = p as u32;
        tail += (y.degree == 1) as usize;
    }
    if peels.len() != n - 1 {
        return Err(Error::NotATree);
    }
    let r = node[root];
    let internal = (r.sum_free + r.internal).min(INF);
    let root_state = if internal <= r.sum_internal {
        State::Internal
    } else {
        State::Uncovered
    };
    if r.forced && r.upgrade != NONE {
        mark[r.upgrade as usize] |= FORCED;
    }
    mark[root] |= root_state as u8;
    let optimum = internal.min(r.sum_internal);

    let mut in_set = vec![false; t.m()];
    let mut size = 0usize;
    for peel in peels.iter().rev() {
        let v = peel.vertex as usize;
        let forced = mark[v] & FORCED != 0;
        let state = match State::from_bits(mark[peel.parent as usize]) {
            State::Uncovered => State::Internal,
            State::Internal if forced => State::ByParent,
            _ => peel.preferred,
        };
        mark[v] |= state as u8;
        if state == State::ByParent {
            in_set[peel.edge as usize] = true;
            size += 1;
        }
    }
    debug_assert_eq!(size as u32, optimum);
    let mut edges = Vec::with_capacity(size);
    edges.extend((0..t.m()).filter(|&id| in_set[id]));
    Ok(EdgeDominatingSet { edges })
}

pub fn edge_domination_number_tree(t: &Graph) -> Result<usize> {
    Ok(min_edge_dominating_set_tree(t)?.len())
}

/// Largest edge count for [`brute_force_min_edge_dominating_set`].
pub const BRUTE_EDS_MAX_M: usize = 24;

/// Exact minimum edge dominating set of any graph by subset enumeration in
/// order of size, then lexicographically.
pub fn brute_force_min_edge_dominating_set(g: &Graph) -> Result<EdgeDominatingSet> {
    let m = g.m();
    if m > BRUTE_EDS_MAX_M {
        return Err(Error::size(
            "edges for brute-force edge domination",
            BRUTE_EDS_MAX_M,
            m,
        ));
    }
    // closed[e]: edges sharing an endpoint with e, e included.
    let closed: Vec<u32> = (0..m)
        .map(|e| {
            let (u, v) = g.edge(e);
            (0..m)
                .filter(|&f| {
                    let (a, b) = g.edge(f);
                    a == u || a == v || b == u || b == v
                })
                .fold(0, |acc, f| acc | 1 << f)
        })
        .collect();
    let all: u32 = if m == 0 { 0 } else { u32::MAX >> (32 - m) };
    for size in 0..=m {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if pick.iter().fold(0, |acc, &e| acc | closed[e]) == all {
                return Ok(EdgeDominatingSet { edges: pick });
            }
            // Next combination in lexicographic order.
            let Some(i) = (0..size).rev().find(|&i| pick[i] < m - size + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    unreachable!("the full edge set dominates")
}

/// The `i`-th edge of `eds` gets color `i + 1`; every other edge gets the
/// least index of a dominating edge it touches. On a tree each class is then
/// `K2`, a star or a double star.
pub fn coloring_from_edge_dominating_set(
    g: &Graph,
    eds: &EdgeDominatingSet,
) -> Result<EdgeColoring> {
    let m = g.m();
    let mut colors = vec![0; m];
    for (i, &id) in eds.edges.iter().enumerate() {
        if id >= m {
            return Err(Error::Precondition(format!(
                "edge id {id} out of range ({m} edges)"
            )));
        }
        if colors[id] != 0 {
            return Err(Error::Precondition(format!("edge id {id} listed twice")));
        }
        colors[id] = i + 1;
    }
    let mut least = vec![usize::MAX; g.n()];
    for (i, &id) in eds.edges.iter().enumerate() {
        let (u, v) = g.edge(id);
        least[u] = least[u].min(i + 1);
        least[v] = least[v].min(i + 1);
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if colors[id] == 0 {
            let c = least[u].min(least[v]);
            if c == usize::MAX {
                return Err(Error::NotDominating(u, v));
            }
            colors[id] = c;
        }
    }
    EdgeColoring::new(colors)
}

/// One edge per color: the edge of a `K2`, the least edge of a star, the
/// center edge of a double star.
pub fn edge_dominating_set_from_coloring(t: &Graph, c: &EdgeColoring) -> Result<EdgeDominatingSet> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    c.check_host(t)?;
    let mut edges = Vec::with_capacity(c.k());
    for (i, class) in c.classes().into_iter().enumerate() {
        let sub = t.edge_induced_by_ids(class.iter().copied());
        let shape = if sub.graph.is_tree() {
            tree_unigraph_class(&sub.graph)?
        } else {
            return Err(Error::NotUnigraphicTreeColoring(i + 1));
        };
        let pick = match shape {
            TreeUnigraphClass::K2 | TreeUnigraphClass::Star(_) => class[0],
            TreeUnigraphClass::DoubleStar(..) => *class
                .iter()
                .find(|&&e| {
                    let (u, v) = t.edge(e);
                    let deg = |x| {
                        class
                            .iter()
                            .filter(|&&f| {
                                let (a, b) = t.edge(f);
                                a == x || b == x
                            })
                            .count()
                    };
                    deg(u) >= 2 && deg(v) >= 2
                })
                .expect("double star has a center edge"),
            TreeUnigraphClass::Trivial | TreeUnigraphClass::NotTreeUnigraph { .. } => {
                return Err(Error::NotUnigraphicTreeColoring(i + 1));
            }
        };
        edges.push(pick);
    }
    Ok(EdgeDominatingSet { edges })
}

/// Unigraph number of a tree with a witness coloring, in linear time.
pub fn tree_unigraph_number(t: &Graph) -> Result<(usize, EdgeColoring)> {
    let eds = min_edge_dominating_set_tree(t)?;
    let c = coloring_from_edge_dominating_set(t, &eds)?;
    Ok((eds.len(), c))
}
