//! Text formats: edge lists, colorings and DOT.
//!
//! Edge list: the first non-comment line is `n m`, followed by `m` lines
//! `u v`. Coloring: one `u v c` line per edge, colors positive. In both, `#`
//! starts a comment and blank lines are ignored.

use std::fmt::Write as _;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Fill colors for DOT output, reused cyclically.
pub const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
    "#66c2a5", "#ffd92f", "#1b9e77", "#000000",
];

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, fields: &[&str], want: usize) -> Result<Vec<usize>> {
    if fields.len() != want {
        return Err(parse_err(
            line,
            format!("expected {want} fields, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(line, format!("not a non-negative integer: {f:?}")))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let Some((hline, header)) = it.next() else {
        return Err(parse_err(0, "missing `n m` header"));
    };
    let hv = numbers(hline, &header, 2)?;
    let (n, m) = (hv[0], hv[1]);
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, fields) in it {
        last = line;
        let v = numbers(line, &fields, 2)?;
        let (a, b) = (v[0], v[1]);
        if a >= n || b >= n {
            return Err(parse_err(
                line,
                format!("endpoint out of range in {{{a},{b}}} (n = {n})"),
            ));
        }
        if a == b {
            return Err(parse_err(line, format!("self-loop at {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(parse_err(line, format!("duplicate edge {{{a},{b}}}")));
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(parse_err(
            last,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads `u v c` lines, which must cover the edges of `g` exactly once.
/// Labels are compacted to `1..=k` keeping their order.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring> {
    let mut labels = vec![0usize; g.m()];
    let mut last = 0;
    for (line, fields) in lines(text) {
        last = line;
        let v = numbers(line, &fields, 3)?;
        let (a, b, c) = (v[0], v[1], v[2]);
        if c == 0 {
            return Err(parse_err(line, "colors must be positive"));
        }
        let id = (a < g.n() && b < g.n())
            .then(|| g.edge_id(a, b))
            .flatten()
            .ok_or_else(|| parse_err(line, format!("{{{a},{b}}} is not an edge of the graph")))?;
        if labels[id] != 0 {
            return Err(parse_err(line, format!("edge {{{a},{b}}} colored twice")));
        }
        labels[id] = c;
    }
    if let Some(id) = labels.iter().position(|&l| l == 0) {
        let (u, v) = g.edge(id);
        return Err(parse_err(last, format!("edge {{{u},{v}}} has no color")));
    }
    EdgeColoring::from_labels(&labels)
}

/// `u v c` lines sorted by `u`, then `v`.
pub fn write_coloring(g: &Graph, c: &EdgeColoring) -> Result<String> {
    c.check_host(g)?;
    let mut out = String::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "{u} {v} {}", c.color(id));
    }
    Ok(out)
}

pub fn to_dot(g: &Graph, c: Option<&EdgeColoring>) -> Result<String> {
    if let Some(c) = c {
        c.check_host(g)?;
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        match c {
            Some(c) => {
                let col = c.color(id);
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [color=\"{}\", label=\"{col}\"];",
                    PALETTE[(col - 1) % PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
