//! Canonical forms of small (edge-colored) graphs.
//!
//! A canonical code is the lexicographically least leaf certificate of an
//! individualization-refinement search tree. Leaves are keyed first by the
//! sequence of node invariants on their root path, then by the adjacency
//! matrix read in leaf order, so whole subtrees can be cut as soon as their
//! invariant prefix exceeds the incumbent's. Interchangeable vertices (twins)
//! in a target cell are individualized only once.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by canonical codes and everything built on them.
pub const MAX_CANON_N: usize = 12;

const CAP: usize = MAX_CANON_N;
const CODE_CAP: usize = 1 + CAP + CAP * (CAP - 1) / 2;

/// An isomorphism-class key: two graphs within [`MAX_CANON_N`] share a code
/// exactly when they are isomorphic (color-preserving isomorphic, for colored codes).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Hex rendering, used in reports.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Symmetric matrix of small labels: `cell[v][v]` is a vertex color and
/// `cell[u][v]` (u != v) an edge color, 0 meaning "no edge".
#[derive(Clone)]
pub(crate) struct LabelMatrix {
    n: usize,
    cell: [[u8; CAP]; CAP],
}

impl LabelMatrix {
    pub(crate) fn new(n: usize) -> Self {
        assert!(n <= CAP);
        LabelMatrix {
            n,
            cell: [[0; CAP]; CAP],
        }
    }

    /// `cells` must be symmetric with a zero diagonal outside `0..n`.
    pub(crate) fn from_cells(n: usize, cells: &[[u8; CAP]; CAP]) -> Self {
        LabelMatrix { n, cell: *cells }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, label: u8) {
        self.cell[u][v] = label;
        self.cell[v][u] = label;
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        let mut m = Self::new(g.n());
        for &(u, v) in g.edges() {
            m.set_edge(u, v, 1);
        }
        m
    }

    /// `colors[id]` is the (positive) color of edge `id`.
    pub(crate) fn from_colored(g: &Graph, colors: &[usize]) -> Self {
        let mut m = Self::new(g.n());
        for (&(u, v), &c) in g.edges().iter().zip(colors) {
            debug_assert!((1..=255).contains(&c));
            m.set_edge(u, v, c as u8);
        }
        m
    }
}

pub(crate) fn check_bound(n: usize) -> Result<()> {
    if n > MAX_CANON_N {
        return Err(Error::size(
            "vertex count for canonical forms",
            MAX_CANON_N,
            n,
        ));
    }
    Ok(())
}

/// Canonical code of `g`. Fails for `n > MAX_CANON_N`.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    check_bound(g.n())?;
    Ok(canonize(&LabelMatrix::from_graph(g)).0)
}

/// Canonical code plus the labeling producing it: `position[v]` is the
/// canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    check_bound(g.n())?;
    Ok(canonize(&LabelMatrix::from_graph(g)))
}

/// Canonical code of an edge-colored graph, invariant only under
/// color-preserving isomorphisms (colors are not permuted).
pub fn colored_canonical_code(g: &Graph, colors: &[usize]) -> Result<CanonicalCode> {
    check_bound(g.n())?;
    if colors.len() != g.m() {
        return Err(Error::InvalidColoring(format!(
            "{} colors for {} edges",
            colors.len(),
            g.m()
        )));
    }
    if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > 255) {
        return Err(Error::InvalidColoring(format!("color {c} outside 1..=255")));
    }
    Ok(canonize(&LabelMatrix::from_colored(g, colors)).0)
}

pub(crate) fn canonize(m: &LabelMatrix) -> (CanonicalCode, Vec<usize>) {
    let n = m.n;
    let mut search = Search::new(m);
    let mut cell = [0u8; CAP];
    // Initial partition by vertex color.
    for v in 0..n {
        cell[v] = m.cell[v][v];
    }
    normalize_cells(n, &mut cell);
    search.descend(cell);
    let best = search.best.expect("search always reaches a leaf");
    let mut position = vec![0; n];
    for (pos, &v) in best.order[..n].iter().enumerate() {
        position[v as usize] = pos;
    }
    (CanonicalCode(best.code[..code_len(n)].to_vec()), position)
}

fn code_len(n: usize) -> usize {
    1 + n + n * n.saturating_sub(1) / 2
}

/// Relabels arbitrary cell keys to "index of the first vertex of the cell in
/// sorted order", keeping the key order.
fn normalize_cells(n: usize, cell: &mut [u8; CAP]) {
    let mut idx: [u8; CAP] = std::array::from_fn(|i| i as u8);
    idx[..n].sort_unstable_by_key(|&v| cell[v as usize]);
    let mut out = [0u8; CAP];
    let mut start = 0u8;
    for i in 0..n {
        let v = idx[i] as usize;
        if i > 0 && cell[v] != cell[idx[i - 1] as usize] {
            start = i as u8;
        }
        out[v] = start;
    }
    *cell = out;
}

struct Leaf {
    path: Vec<u64>,
    code: [u8; CODE_CAP],
    order: [u8; CAP],
}

struct Search<'a> {
    m: &'a LabelMatrix,
    twins: [u16; CAP],
    path: Vec<u64>,
    best: Option<Leaf>,
}

/// Per-vertex refinement signature: the sorted `(cell << 8) | label` of its
/// labeled neighbors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    cell: u8,
    len: u8,
    items: [u16; CAP],
}

impl<'a> Search<'a> {
    fn new(m: &'a LabelMatrix) -> Self {
        let n = m.n;
        let mut twins = [0u16; CAP];
        for u in 0..n {
            for v in 0..n {
                if u != v
                    && m.cell[u][u] == m.cell[v][v]
                    && (0..n).all(|w| w == u || w == v || m.cell[u][w] == m.cell[v][w])
                {
                    twins[u] |= 1 << v;
                }
            }
        }
        Search {
            m,
            twins,
            path: Vec::with_capacity(CAP),
            best: None,
        }
    }

    /// Refines `cell` to the coarsest equitable partition below it. Returns
    /// the number of cells and an invariant hash of the quotient.
    fn refine(&self, cell: &mut [u8; CAP]) -> (usize, u64) {
        let n = self.m.n;
        let mut cells = count_cells(n, cell);
        loop {
            let mut sig = [Signature {
                cell: 0,
                len: 0,
                items: [0; CAP],
            }; CAP];
            for v in 0..n {
                let s = &mut sig[v];
                s.cell = cell[v];
                let row = &self.m.cell[v];
                for w in 0..n {
                    if w != v && row[w] != 0 {
                        s.items[s.len as usize] = ((cell[w] as u16) << 8) | row[w] as u16;
                        s.len += 1;
                    }
                }
                s.items[..s.len as usize].sort_unstable();
            }
            let mut idx: [u8; CAP] = std::array::from_fn(|i| i as u8);
            idx[..n].sort_unstable_by(|&a, &b| sig[a as usize].cmp(&sig[b as usize]));
            let mut next = [0u8; CAP];
            let mut start = 0u8;
            let mut count = 0;
            let mut hash = FNV_OFFSET;
            for i in 0..n {
                let v = idx[i] as usize;
                if i == 0 || sig[v] != sig[idx[i - 1] as usize] {
                    start = i as u8;
                    count += 1;
                    hash = fnv(hash, start as u64);
                    let s = &sig[v];
                    for &item in &s.items[..s.len as usize] {
                        hash = fnv(hash, item as u64);
                    }
                    hash = fnv(hash, 0xffff);
                }
                next[v] = start;
            }
            *cell = next;
            if count == cells {
                return (count, fnv(hash, count as u64));
            }
            cells = count;
        }
    }

    fn descend(&mut self, mut cell: [u8; CAP]) {
        let n = self.m.n;
        let (cells, inv) = self.refine(&mut cell);
        self.path.push(inv);
        if self.prefix_cmp() == Ordering::Greater {
            self.path.pop();
            return;
        }
        if cells == n {
            self.leaf(&cell);
            self.path.pop();
            return;
        }
        // Target: the non-singleton cell with the least start index.
        let mut sizes = [0u8; CAP];
        for v in 0..n {
            sizes[cell[v] as usize] += 1;
        }
        let target = (0..n).find(|&s| sizes[s] > 1).unwrap() as u8;
        let mut tried: u16 = 0;
        for v in 0..n {
            if cell[v] != target || self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let mut child = cell;
            for w in 0..n {
                if child[w] == target && w != v {
                    child[w] = target + 1;
                }
            }
            self.descend(child);
        }
        self.path.pop();
    }

    /// Compares the current path with the incumbent's path restricted to the
    /// same depth; `Greater` means no leaf below can win.
    fn prefix_cmp(&self) -> Ordering {
        let Some(best) = &self.best else {
            return Ordering::Less;
        };
        let d = self.path.len();
        let l = d.min(best.path.len());
        match self.path[..l].cmp(&best.path[..l]) {
            Ordering::Equal if best.path.len() < d => Ordering::Greater,
            o => o,
        }
    }

    fn leaf(&mut self, cell: &[u8; CAP]) {
        let n = self.m.n;
        let mut order = [0u8; CAP];
        for v in 0..n {
            order[cell[v] as usize] = v as u8;
        }
        let mut code = [0u8; CODE_CAP];
        code[0] = n as u8;
        let mut k = 1;
        for i in 0..n {
            code[k] = self.m.cell[order[i] as usize][order[i] as usize];
            k += 1;
        }
        for i in 0..n {
            let row = &self.m.cell[order[i] as usize];
            for j in i + 1..n {
                code[k] = row[order[j] as usize];
                k += 1;
            }
        }
        let better = match &self.best {
            None => true,
            Some(b) => match self.path.cmp(&b.path) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => code[..k] < b.code[..k],
            },
        };
        if better {
            self.best = Some(Leaf {
                path: self.path.clone(),
                code,
                order,
            });
        }
    }
}

fn count_cells(n: usize, cell: &[u8; CAP]) -> usize {
    let mut seen: u16 = 0;
    for v in 0..n {
        seen |= 1 << cell[v];
    }
    seen.count_ones() as usize
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;

fn fnv(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0000_0100_0000_01b3)
}
