//! Realizations of degree sets and colored degree sets.
//!
//! Both enumerators share one labeled-realization engine. Vertices are laid
//! out in descending order of their target tuple and adjacency rows are
//! filled one vertex at a time: row `u` must exhaust every remaining color
//! degree of `u` using later vertices only. Later vertices that have the same
//! remaining tuple and the same adjacency to finished rows are
//! interchangeable, so each such group receives a multiset of colors instead
//! of an ordered assignment. After each row the remaining per-color and total
//! degree sequences must stay graphical.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::canon::{canonize, check_bound, CanonicalCode, LabelMatrix, MAX_CANON_N};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{DegreeSet, Graph};

const CAP: usize = MAX_CANON_N;

pub(crate) type Cells = [[u8; CAP]; CAP];

/// Which realizations `H` are quantified over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RealizationScope {
    /// Every simple graph, connected or not.
    #[default]
    All,
    /// Only connected graphs.
    Connected,
}

/// Erdős–Gallai test.
pub fn is_graphical(ds: &DegreeSet) -> bool {
    graphical_desc(ds.as_slice())
}

/// `d` must be sorted in descending order.
fn graphical_desc(d: &[usize]) -> bool {
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut lhs = 0;
    for r in 1..=n {
        lhs += d[r - 1];
        let rhs = r * (r - 1) + d[r..].iter().map(|&x| x.min(r)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

fn graphical_unsorted(buf: &mut [usize]) -> bool {
    buf.sort_unstable_by(|a, b| b.cmp(a));
    graphical_desc(buf)
}

/// The multiset of per-vertex color-degree tuples of an edge-colored graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredDegreeSet {
    k: usize,
    /// Sorted descending by (total degree, tuple).
    tuples: Vec<Vec<usize>>,
}

impl ColoredDegreeSet {
    /// Validates tuple lengths, per-color parity, and that every color occurs.
    pub fn new(k: usize, tuples: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(t) = tuples.iter().find(|t| t.len() != k) {
            return Err(Error::InvalidColoredDegreeSet(format!(
                "tuple {t:?} does not have {k} entries"
            )));
        }
        for c in 0..k {
            let sum: usize = tuples.iter().map(|t| t[c]).sum();
            if sum % 2 == 1 {
                return Err(Error::InvalidColoredDegreeSet(format!(
                    "color {} has odd degree sum {sum}",
                    c + 1
                )));
            }
            if sum == 0 {
                return Err(Error::InvalidColoredDegreeSet(format!(
                    "color {} is unused",
                    c + 1
                )));
            }
        }
        Ok(Self::sorted(k, tuples))
    }

    fn sorted(k: usize, mut tuples: Vec<Vec<usize>>) -> Self {
        tuples.sort_unstable_by(|a, b| {
            let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
            sb.cmp(&sa).then_with(|| b.cmp(a))
        });
        ColoredDegreeSet { k, tuples }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.tuples.len()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Entrywise sums, i.e. the plain degree set of any realization.
    pub fn projection(&self) -> DegreeSet {
        DegreeSet::from_unsorted(self.tuples.iter().map(|t| t.iter().sum()).collect())
    }
}

/// `D(G^c)`.
pub fn colored_degree_set(g: &Graph, c: &EdgeColoring) -> Result<ColoredDegreeSet> {
    c.check_host(g)?;
    let k = c.k();
    let mut tuples = vec![vec![0; k]; g.n()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let col = c.color(id) - 1;
        tuples[u][col] += 1;
        tuples[v][col] += 1;
    }
    Ok(ColoredDegreeSet::sorted(k, tuples))
}

/// Every isomorphism class of simple graphs with degree set `ds`, once each,
/// ordered by canonical code. Degree-0 entries become isolated vertices.
pub fn enumerate_realizations(ds: &DegreeSet) -> Result<Vec<Graph>> {
    check_bound(ds.len())?;
    if !is_graphical(ds) {
        return Err(Error::NotGraphical(ds.as_slice().to_vec()));
    }
    let n = ds.len();
    let targets: Vec<Vec<usize>> = ds.as_slice().iter().map(|&d| vec![d]).collect();
    let mut classes = BTreeMap::new();
    let _ = for_each_labeled(1, &targets, &mut |cells| {
        let m = LabelMatrix::from_cells(n, cells);
        classes
            .entry(canonize(&m).0)
            .or_insert_with(|| cells_to_colored(n, cells).0);
        ControlFlow::Continue(())
    });
    Ok(classes.into_values().collect())
}

/// Every color-preserving isomorphism class of edge-colored simple graphs with
/// colored degree set `cds`, once each, ordered by colored canonical code.
/// An infeasible `cds` yields an empty list.
pub fn enumerate_colored_realizations(
    cds: &ColoredDegreeSet,
    scope: RealizationScope,
) -> Result<Vec<(Graph, EdgeColoring)>> {
    check_bound(cds.n())?;
    let n = cds.n();
    let mut classes: BTreeMap<CanonicalCode, (Graph, EdgeColoring)> = BTreeMap::new();
    let _ = for_each_labeled(cds.k, &cds.tuples, &mut |cells| {
        if scope == RealizationScope::Connected && !cells_connected(n, cells) {
            return ControlFlow::Continue(());
        }
        let m = LabelMatrix::from_cells(n, cells);
        classes.entry(canonize(&m).0).or_insert_with(|| {
            let (g, colors) = cells_to_colored(n, cells);
            let c = EdgeColoring::new(colors).expect("realization uses every color");
            (g, c)
        });
        ControlFlow::Continue(())
    });
    Ok(classes.into_values().collect())
}

/// Calls `visit` on labeled realizations of `cds` (vertex `i` carries the
/// `i`-th tuple of `cds.tuples()`), up to interchangeable-vertex symmetry.
/// Every isomorphism class is reached at least once.
pub(crate) fn for_each_colored_realization(
    cds: &ColoredDegreeSet,
    visit: &mut dyn FnMut(&Cells) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    check_bound(cds.n())?;
    Ok(for_each_labeled(cds.k, &cds.tuples, visit))
}

pub(crate) fn cells_to_colored(n: usize, cells: &Cells) -> (Graph, Vec<usize>) {
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if cells[u][v] != 0 {
                edges.push((u, v));
                colors.push(cells[u][v] as usize);
            }
        }
    }
    (Graph::from_sorted_unchecked(n, edges), colors)
}

pub(crate) fn cells_rows(n: usize, cells: &Cells) -> [u64; CAP] {
    let mut rows = [0u64; CAP];
    for u in 0..n {
        for v in 0..n {
            if cells[u][v] != 0 {
                rows[u] |= 1 << v;
            }
        }
    }
    rows
}

fn cells_connected(n: usize, cells: &Cells) -> bool {
    if n <= 1 {
        return true;
    }
    let rows = cells_rows(n, cells);
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen.count_ones() as usize == n
}

fn for_each_labeled(
    k: usize,
    targets: &[Vec<usize>],
    visit: &mut dyn FnMut(&Cells) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = targets.len();
    debug_assert!(n <= CAP);
    assert!(k < 255, "at most 254 colors");
    let mut rem = vec![0u16; n * k];
    for (v, t) in targets.iter().enumerate() {
        for c in 0..k {
            rem[v * k + c] = t[c] as u16;
        }
    }
    let mut engine = Engine {
        n,
        k,
        rem,
        cells: [[0; CAP]; CAP],
        scratch: Vec::with_capacity(n),
        visit,
    };
    if !engine.feasible_from(0) {
        return ControlFlow::Continue(());
    }
    engine.row(0)
}

struct Engine<'v> {
    n: usize,
    k: usize,
    rem: Vec<u16>,
    cells: Cells,
    scratch: Vec<usize>,
    visit: &'v mut dyn FnMut(&Cells) -> ControlFlow<()>,
}

impl Engine<'_> {
    fn rem_of(&self, v: usize) -> &[u16] {
        &self.rem[v * self.k..(v + 1) * self.k]
    }

    fn row(&mut self, u: usize) -> ControlFlow<()> {
        if u == self.n {
            return (self.visit)(&self.cells);
        }
        let need: Vec<u16> = self.rem_of(u).to_vec();
        if need.iter().all(|&x| x == 0) {
            return self.row(u + 1);
        }
        // Interchangeable later vertices.
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for w in u + 1..self.n {
            if self.rem_of(w).iter().all(|&x| x == 0) {
                continue;
            }
            let slot = groups.iter_mut().find(|g| {
                let r = g[0];
                self.rem_of(r) == self.rem_of(w)
                    && (0..u).all(|x| self.cells[x][r] == self.cells[x][w])
            });
            match slot {
                Some(g) => g.push(w),
                None => groups.push(vec![w]),
            }
        }
        let mut need = need;
        self.fill(u, &groups, 0, &mut need)
    }

    fn fill(
        &mut self,
        u: usize,
        groups: &[Vec<usize>],
        gi: usize,
        need: &mut [u16],
    ) -> ControlFlow<()> {
        if need.iter().all(|&x| x == 0) {
            if self.feasible_from(u + 1) {
                return self.row(u + 1);
            }
            return ControlFlow::Continue(());
        }
        if gi == groups.len() {
            return ControlFlow::Continue(());
        }
        for c in 0..self.k {
            if need[c] == 0 {
                continue;
            }
            let cap: usize = groups[gi..]
                .iter()
                .filter(|g| self.rem[g[0] * self.k + c] > 0)
                .map(Vec::len)
                .sum();
            if (need[c] as usize) > cap {
                return ControlFlow::Continue(());
            }
        }
        self.alloc(u, groups, gi, 0, 0, need)
    }

    /// Gives color `c` to `a` consecutive members of group `gi` starting at `next`.
    fn alloc(
        &mut self,
        u: usize,
        groups: &[Vec<usize>],
        gi: usize,
        c: usize,
        next: usize,
        need: &mut [u16],
    ) -> ControlFlow<()> {
        if c == self.k {
            return self.fill(u, groups, gi + 1, need);
        }
        let group = &groups[gi];
        let rep = group[0];
        let max_a = if self.rem[rep * self.k + c] > 0 {
            (need[c] as usize).min(group.len() - next)
        } else {
            0
        };
        for a in (0..=max_a).rev() {
            for &w in &group[next..next + a] {
                self.cells[u][w] = c as u8 + 1;
                self.cells[w][u] = c as u8 + 1;
                self.rem[w * self.k + c] -= 1;
            }
            self.rem[u * self.k + c] -= a as u16;
            need[c] -= a as u16;
            let flow = self.alloc(u, groups, gi, c + 1, next + a, need);
            need[c] += a as u16;
            self.rem[u * self.k + c] += a as u16;
            for &w in &group[next..next + a] {
                self.cells[u][w] = 0;
                self.cells[w][u] = 0;
                self.rem[w * self.k + c] += 1;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Remaining degrees of vertices `from..n` must be graphical per color and in total.
    fn feasible_from(&mut self, from: usize) -> bool {
        let mut buf = std::mem::take(&mut self.scratch);
        let mut ok = true;
        for c in 0..self.k {
            buf.clear();
            buf.extend((from..self.n).map(|w| self.rem[w * self.k + c] as usize));
            if !graphical_unsorted(&mut buf) {
                ok = false;
                break;
            }
        }
        if ok && self.k > 1 {
            buf.clear();
            buf.extend(
                (from..self.n).map(|w| self.rem_of(w).iter().map(|&x| x as usize).sum::<usize>()),
            );
            ok = graphical_unsorted(&mut buf);
        }
        self.scratch = buf;
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::iso::are_isomorphic;

    fn domino() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    fn ds(v: &[usize]) -> DegreeSet {
        DegreeSet::from_unsorted(v.to_vec())
    }

    #[test]
    fn graphicality() {
        assert!(is_graphical(&ds(&[3, 3, 2, 2, 2, 2])));
        assert!(is_graphical(&ds(&[1, 1])));
        assert!(!is_graphical(&ds(&[3, 1])));
        assert!(!is_graphical(&ds(&[1])));
        assert!(is_graphical(&ds(&[0])));
        assert!(is_graphical(&ds(&[])));
        assert!(!is_graphical(&ds(&[3, 3, 1, 1])));
        assert!(is_graphical(&ds(&[3, 3, 2, 2])));
    }

    #[test]
    fn triangle_is_forced() {
        let all = enumerate_realizations(&ds(&[2, 2, 2])).unwrap();
        assert_eq!(all.len(), 1);
        assert!(are_isomorphic(&all[0], &Graph::cycle(3)));
    }

    #[test]
    fn domino_degree_set_has_triangle_realization() {
        let all = enumerate_realizations(&ds(&[3, 3, 2, 2, 2, 2])).unwrap();
        assert!(all.len() >= 2);
        let d = canonical_code(&domino()).unwrap();
        let codes: Vec<_> = all.iter().map(|g| canonical_code(g).unwrap()).collect();
        assert_eq!(codes.iter().filter(|c| **c == d).count(), 1);
        let mut tri = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2)];
        tri.sort();
        let tri = Graph::new(6, &tri).unwrap();
        assert!(codes.contains(&canonical_code(&tri).unwrap()));
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(sorted, codes);
    }

    #[test]
    fn p4_degree_set_is_unique() {
        let all = enumerate_realizations(&ds(&[2, 2, 1, 1])).unwrap();
        assert_eq!(all.len(), 1);
        assert!(are_isomorphic(&all[0], &Graph::path(4)));
    }

    #[test]
    fn isolated_vertices_are_kept() {
        let all = enumerate_realizations(&ds(&[1, 1, 0])).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!((all[0].n(), all[0].m()), (3, 1));
    }

    #[test]
    fn non_graphical_is_an_error() {
        assert!(matches!(
            enumerate_realizations(&ds(&[3, 1])),
            Err(Error::NotGraphical(_))
        ));
        assert!(
            enumerate_realizations(&DegreeSet::from_unsorted(vec![0; 13]))
                .unwrap_err()
                .is_size_bound()
        );
    }

    #[test]
    fn domino_colored_degree_sets() {
        let g = domino();
        let id = |u, v| g.edge_id(u, v).unwrap();
        let mut two = vec![0; 7];
        for e in [(1, 2), (2, 5), (4, 5), (1, 4)] {
            two[id(e.0, e.1)] = 1;
        }
        for e in [(0, 1), (0, 3), (3, 4)] {
            two[id(e.0, e.1)] = 2;
        }
        let c2 = EdgeColoring::new(two).unwrap();
        let cds = colored_degree_set(&g, &c2).unwrap();
        let mut expect = vec![
            vec![2, 1],
            vec![2, 1],
            vec![2, 0],
            vec![2, 0],
            vec![0, 2],
            vec![0, 2],
        ];
        expect.sort();
        let mut got = cds.tuples().to_vec();
        got.sort();
        assert_eq!(got, expect);

        let mut three = vec![0; 7];
        for (e, c) in [
            ((0, 1), 1),
            ((0, 3), 1),
            ((1, 2), 2),
            ((2, 5), 2),
            ((1, 4), 3),
            ((3, 4), 3),
            ((4, 5), 3),
        ] {
            three[id(e.0, e.1)] = c;
        }
        let c3 = EdgeColoring::new(three).unwrap();
        let mut got = colored_degree_set(&g, &c3).unwrap().tuples().to_vec();
        got.sort();
        let mut expect = vec![
            vec![2, 0, 0],
            vec![1, 1, 1],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![0, 1, 1],
            vec![0, 0, 3],
        ];
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn single_color_tuples_are_degrees() {
        let g = domino();
        let c = EdgeColoring::uniform(g.m());
        let cds = colored_degree_set(&g, &c).unwrap();
        let flat: Vec<usize> = cds.tuples().iter().map(|t| t[0]).collect();
        assert_eq!(flat, g.degree_set().as_slice());
        assert_eq!(cds.projection(), g.degree_set());
    }

    #[test]
    fn k2_colored_realization() {
        let cds = ColoredDegreeSet::new(1, vec![vec![1], vec![1]]).unwrap();
        let all = enumerate_colored_realizations(&cds, RealizationScope::All).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].0, Graph::complete(2));
    }

    #[test]
    fn colored_degree_set_validation() {
        assert!(ColoredDegreeSet::new(1, vec![vec![1]]).is_err());
        assert!(ColoredDegreeSet::new(2, vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(ColoredDegreeSet::new(2, vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn infeasible_colored_set_is_empty() {
        // Each color alone is graphical, but together they would need a double edge.
        let cds = ColoredDegreeSet::new(2, vec![vec![1, 1], vec![1, 1]]).unwrap();
        let all = enumerate_colored_realizations(&cds, RealizationScope::All).unwrap();
        assert!(all.is_empty());
    }
}
