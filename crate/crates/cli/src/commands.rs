use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;
use unigraph_core::format::{
    parse_coloring, parse_edge_list, to_dot, write_coloring, write_edge_list,
};
use unigraph_core::{
    colored_degree_set, disconnected_witness, fast_filter, greedy_vertex_cover,
    is_strongly_unigraphic_coloring, is_unigraph, is_unigraphic_coloring, minimum_vertex_cover,
    star_coloring_from_vertex_cover, tree_unigraph_number, Bound, ClassDefect, ColoringFailure,
    ColoringVerdict, DecompositionReport, EdgeColoring, FilterOutcome, FilterReason, Graph,
    VertexCover,
};

use crate::report::{self, Report, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: unigraph_core::Error,
    },
    #[error(transparent)]
    Core(#[from] unigraph_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Core(e) | CliError::Input { source: e, .. } if e.is_size_bound() => {
                Status::TooLarge
            }
            _ => Status::Invalid,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.into(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.into(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read(path)?).map_err(|source| CliError::Input {
        path: path.into(),
        source,
    })
}

fn read_coloring(g: &Graph, path: &Path) -> Result<EdgeColoring> {
    parse_coloring(g, &read(path)?).map_err(|source| CliError::Input {
        path: path.into(),
        source,
    })
}

fn write_coloring_file(path: &Path, g: &Graph, c: &EdgeColoring) -> Result<()> {
    write(path, &write_coloring(g, c)?)
}

fn put_coloring(r: &mut Report, key: &str, g: &Graph, c: &EdgeColoring) {
    r.field(format!("{key}.k"), c.k());
    r.field(format!("{key}.coloring"), report::coloring(g, c));
}

fn describe_failure(f: &ColoringFailure) -> String {
    match f {
        ColoringFailure::BadColorClass {
            color,
            reason: ClassDefect::Disconnected,
        } => {
            format!("color {color} is disconnected")
        }
        ColoringFailure::BadColorClass {
            color,
            reason: ClassDefect::NotUnigraph,
        } => {
            format!("color {color} is not a unigraph")
        }
        ColoringFailure::NonUniqueRealization { .. } => {
            "another realization has the same colored degree set".into()
        }
    }
}

fn put_verdict(r: &mut Report, key: &str, v: &ColoringVerdict) {
    r.field(format!("result.{key}"), v.accepted);
    if let Some(f) = &v.failure {
        r.field(format!("result.{key}.failure"), describe_failure(f));
        if let ColoringFailure::NonUniqueRealization {
            witness,
            witness_coloring,
        } = f
        {
            r.field(format!("result.{key}.witness"), report::edges(witness));
            r.field(
                format!("result.{key}.witness_coloring"),
                report::coloring(witness, witness_coloring),
            );
        }
    }
}

pub fn recognize(r: &mut Report, path: &Path, witness_out: Option<&Path>) -> Result<()> {
    let g = read_graph(path)?;
    r.fingerprint(&g);
    let filter = fast_filter(&g);
    r.field(
        "result.filter",
        match &filter {
            FilterOutcome::Unknown => "none".to_string(),
            FilterOutcome::NotUnigraph(FilterReason::InducedP5(p)) => {
                format!("induced-P5 {}", report::join(p))
            }
            FilterOutcome::NotUnigraph(FilterReason::Diameter(d)) => format!("diameter {d}"),
            FilterOutcome::NotUnigraph(FilterReason::DisconnectedStructure) => {
                "disconnected-structure".into()
            }
        },
    );
    let (unigraph, decided_by, witness) = match is_unigraph(&g) {
        Ok(v) => (v.is_unigraph, v.decided_by.as_str().to_string(), v.witness),
        // The filters have no size bound, so a rejection still stands.
        Err(e) if e.is_size_bound() => match &filter {
            FilterOutcome::NotUnigraph(reason) => {
                r.notice(format!("oracle not run: {e}"));
                let witness = match reason {
                    FilterReason::DisconnectedStructure => Some(disconnected_witness(&g)?),
                    _ => None,
                };
                (false, "filter".to_string(), witness)
            }
            FilterOutcome::Unknown => return Err(e.into()),
        },
        Err(e) => return Err(e.into()),
    };
    r.field("result.unigraph", unigraph);
    r.field("result.decided_by", decided_by);
    if let Some(w) = &witness {
        r.field("result.witness", report::edges(w));
        if let Some(out) = witness_out {
            write(out, &write_edge_list(w))?;
            r.field("output.witness", out.display());
        }
    }
    Ok(())
}

pub fn check_coloring(r: &mut Report, graph: &Path, coloring: &Path, strong: bool) -> Result<()> {
    let g = read_graph(graph)?;
    r.fingerprint(&g);
    let c = read_coloring(&g, coloring)?;
    r.field("result.k", c.k());
    let cds = colored_degree_set(&g, &c)?;
    let mut sorted = cds.tuples().to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let tuples: Vec<String> = sorted
        .iter()
        .map(|t| {
            format!(
                "({})",
                t.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    r.field("result.colored_degree_set", tuples.join(" "));
    put_verdict(r, "unigraphic", &is_unigraphic_coloring(&g, &c)?);
    if strong {
        put_verdict(r, "strong", &is_strongly_unigraphic_coloring(&g, &c)?);
    }
    Ok(())
}

fn put_bounds(r: &mut Report, key: &str, bounds: &[Bound]) {
    let text: Vec<String> = bounds
        .iter()
        .map(|b| format!("{} ({})", b.value, b.provenance.as_str()))
        .collect();
    r.field(key, text.join(", "));
}

/// Lifts a coloring of a component back to host edge ids.
fn lift(
    host_colors: &mut [usize],
    g: &Graph,
    sub: &Graph,
    vertices: &[usize],
    c: &EdgeColoring,
    offset: usize,
) {
    for (id, &(a, b)) in sub.edges().iter().enumerate() {
        let host = g
            .edge_id(vertices[a], vertices[b])
            .expect("component edge is a host edge");
        host_colors[host] = offset + c.color(id);
    }
}

pub fn decompose(
    r: &mut Report,
    path: &Path,
    strong: bool,
    bounds_only: bool,
    coloring_out: Option<&Path>,
) -> Result<()> {
    let g = read_graph(path)?;
    r.fingerprint(&g);
    let components = g.components();
    r.field("result.components", components.len());
    let mut refused = false;
    // Colors for the combined coloring file, offset per component.
    let mut host_colors = vec![0; g.m()];
    let mut offset = 0;
    let mut complete = true;
    for (i, comp) in components.iter().enumerate() {
        let sub = g.vertex_induced_subgraph(comp)?;
        let key = if components.len() == 1 {
            "result".to_string()
        } else {
            format!("component.{i}")
        };
        if components.len() > 1 {
            r.field(format!("{key}.vertices"), report::join(&sub.vertices));
        }
        let rep: DecompositionReport = if bounds_only {
            unigraph_core::bounds(&sub.graph)?
        } else {
            unigraph_core::decompose(&sub.graph, strong)?
        };
        put_bounds(r, &format!("{key}.lower_bounds"), &rep.lower_bounds);
        put_bounds(r, &format!("{key}.upper_bounds"), &rep.upper_bounds);
        if let Some(tau) = rep.tau {
            r.field(format!("{key}.tau"), tau);
        }
        for (name, exact) in [("w", &rep.w), ("s", &rep.s)] {
            if let Some(e) = exact {
                r.field(format!("{key}.{name}"), e.k);
                r.field(format!("{key}.{name}.provenance"), e.provenance.as_str());
                let pairs: Vec<String> = sub
                    .graph
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(id, &(a, b))| {
                        let (u, v) = (sub.vertices[a], sub.vertices[b]);
                        format!("{}-{}:{}", u.min(v), u.max(v), e.coloring.color(id))
                    })
                    .collect();
                r.field(format!("{key}.{name}.coloring"), pairs.join(" "));
            }
        }
        let wanted_s = strong && !bounds_only;
        let chosen = if wanted_s { &rep.s } else { &rep.w };
        match chosen {
            Some(e) => {
                lift(
                    &mut host_colors,
                    &g,
                    &sub.graph,
                    &sub.vertices,
                    &e.coloring,
                    offset,
                );
                offset += e.k;
            }
            None => complete = false,
        }
        for n in &rep.notices {
            r.notice(format!("{key}: {n}"));
        }
        let missing_w = !bounds_only && rep.w.is_none();
        let missing_s = wanted_s && rep.s.is_none();
        refused |= missing_w || missing_s;
    }
    if let Some(out) = coloring_out {
        if complete {
            let c = EdgeColoring::new(host_colors)?;
            write_coloring_file(out, &g, &c)?;
            r.field("output.coloring", out.display());
        } else {
            r.notice("coloring file not written: an exact value is missing");
        }
    }
    if refused {
        r.status = Status::TooLarge;
    }
    Ok(())
}

pub fn tree(r: &mut Report, path: &Path, coloring_out: Option<&Path>) -> Result<()> {
    let g = read_graph(path)?;
    r.fingerprint(&g);
    let eds = unigraph_core::min_edge_dominating_set_tree(&g)?;
    let (k, c) = tree_unigraph_number(&g)?;
    r.field("result.k", k);
    let ids: Vec<String> = eds
        .edges
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            format!("{u}-{v}")
        })
        .collect();
    r.field("result.edge_dominating_set", ids.join(" "));
    r.field("result.coloring", report::coloring(&g, &c));
    if let Some(out) = coloring_out {
        write_coloring_file(out, &g, &c)?;
        r.field("output.coloring", out.display());
    }
    Ok(())
}

pub fn parse_cover(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad cover vertex {s:?}")))
        })
        .collect()
}

pub fn star_coloring(
    r: &mut Report,
    path: &Path,
    cover: Option<&str>,
    greedy: bool,
    coloring_out: Option<&Path>,
) -> Result<()> {
    let g = read_graph(path)?;
    r.fingerprint(&g);
    let cover = match cover {
        Some(text) => VertexCover {
            vertices: parse_cover(text)?,
        },
        None if greedy => {
            r.notice("greedy cover: at most twice the minimum");
            greedy_vertex_cover(&g)
        }
        None => minimum_vertex_cover(&g)?,
    };
    let c = star_coloring_from_vertex_cover(&g, &cover)?;
    r.field("result.cover", report::join(&cover.vertices));
    put_coloring(r, "result", &g, &c);
    if let Some(out) = coloring_out {
        write_coloring_file(out, &g, &c)?;
        r.field("output.coloring", out.display());
    }
    Ok(())
}

/// Returns the DOT text when it should go to standard output.
pub fn export_dot(
    r: &mut Report,
    graph: &Path,
    coloring: Option<&Path>,
    out: &Path,
) -> Result<Option<String>> {
    let g = read_graph(graph)?;
    r.fingerprint(&g);
    let c = coloring.map(|p| read_coloring(&g, p)).transpose()?;
    let dot = to_dot(&g, c.as_ref())?;
    if out == Path::new("-") {
        return Ok(Some(dot));
    }
    write(out, &dot)?;
    r.field("output.dot", out.display());
    if let Some(c) = &c {
        r.field("result.k", c.k());
    }
    Ok(None)
}
