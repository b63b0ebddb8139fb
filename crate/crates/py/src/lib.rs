//! Python bindings. Colorings cross the boundary as lists of positive ints,
//! one per edge in the order of `Graph.edges()`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use unigraph_core as core;
use unigraph_core::{EdgeColoring, EdgeDominatingSet, VertexCover};

create_exception!(
    unigraph,
    SizeBoundError,
    PyValueError,
    "Input exceeds a documented size bound."
);

fn py_err(e: core::Error) -> PyErr {
    if e.is_size_bound() {
        SizeBoundError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

trait OrPy<T> {
    fn or_py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for core::Result<T> {
    fn or_py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[pyclass(frozen, eq, skip_from_py_object, module = "unigraph")]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: core::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: core::Graph::new(n, &edges).or_py()?,
        })
    }

    /// Parses the `n m` header plus `u v` lines edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: core::format::parse_edge_list(text).or_py()?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degree_set(&self) -> Vec<usize> {
        self.inner.degree_set().as_slice().to_vec()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn diameter(&self) -> Option<usize> {
        self.inner.diameter()
    }

    fn induced_p5(&self) -> Option<[usize; 5]> {
        self.inner.induced_p5()
    }

    fn to_edge_list(&self) -> String {
        core::format::write_edge_list(&self.inner)
    }

    /// DOT text, colored when `coloring` is given.
    #[pyo3(signature = (coloring=None))]
    fn to_dot(&self, coloring: Option<Vec<usize>>) -> PyResult<String> {
        let c = coloring.map(|c| to_coloring(&self.inner, c)).transpose()?;
        core::format::to_dot(&self.inner, c.as_ref()).or_py()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

fn to_coloring(g: &core::Graph, colors: Vec<usize>) -> PyResult<EdgeColoring> {
    let c = EdgeColoring::new(colors).or_py()?;
    c.check_host(g).or_py()?;
    Ok(c)
}

fn wrap(g: core::Graph) -> Graph {
    Graph { inner: g }
}

#[pyfunction]
fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    core::are_isomorphic(&g.inner, &h.inner)
}

/// `{"is_unigraph", "decided_by", "witness"}`; the witness is a `Graph` or None.
#[pyfunction]
fn is_unigraph<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyDict>> {
    let v = core::is_unigraph(&g.inner).or_py()?;
    let d = PyDict::new(py);
    d.set_item("is_unigraph", v.is_unigraph)?;
    d.set_item("decided_by", v.decided_by.as_str())?;
    d.set_item("witness", v.witness.map(wrap))?;
    Ok(d)
}

/// The name of the filter that rejects `g`, or None when none does.
#[pyfunction]
fn fast_filter(g: &Graph) -> Option<&'static str> {
    match core::fast_filter(&g.inner) {
        core::FilterOutcome::Unknown => None,
        core::FilterOutcome::NotUnigraph(core::FilterReason::InducedP5(_)) => Some("induced-P5"),
        core::FilterOutcome::NotUnigraph(core::FilterReason::Diameter(_)) => Some("diameter"),
        core::FilterOutcome::NotUnigraph(core::FilterReason::DisconnectedStructure) => {
            Some("disconnected-structure")
        }
    }
}

#[pyfunction]
fn colored_degree_set(g: &Graph, coloring: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    let c = to_coloring(&g.inner, coloring)?;
    Ok(core::colored_degree_set(&g.inner, &c)
        .or_py()?
        .tuples()
        .to_vec())
}

#[pyfunction]
fn is_unigraphic_coloring(g: &Graph, coloring: Vec<usize>) -> PyResult<bool> {
    let c = to_coloring(&g.inner, coloring)?;
    Ok(core::is_unigraphic_coloring(&g.inner, &c).or_py()?.accepted)
}

#[pyfunction]
fn is_strongly_unigraphic_coloring(g: &Graph, coloring: Vec<usize>) -> PyResult<bool> {
    let c = to_coloring(&g.inner, coloring)?;
    Ok(core::is_strongly_unigraphic_coloring(&g.inner, &c)
        .or_py()?
        .accepted)
}

#[pyfunction]
fn minimum_vertex_cover(g: &Graph) -> PyResult<Vec<usize>> {
    Ok(core::minimum_vertex_cover(&g.inner).or_py()?.vertices)
}

#[pyfunction]
fn star_coloring_from_vertex_cover(g: &Graph, cover: Vec<usize>) -> PyResult<Vec<usize>> {
    let c = core::star_coloring_from_vertex_cover(&g.inner, &VertexCover { vertices: cover })
        .or_py()?;
    Ok(c.colors().to_vec())
}

#[pyfunction]
fn unigraph_number(py: Python<'_>, g: &Graph) -> PyResult<(usize, Vec<usize>)> {
    let (k, c) = py.detach(|| core::unigraph_number(&g.inner)).or_py()?;
    Ok((k, c.colors().to_vec()))
}

#[pyfunction]
fn strong_unigraph_number(py: Python<'_>, g: &Graph) -> PyResult<(usize, Vec<usize>)> {
    let (k, c) = py
        .detach(|| core::strong_unigraph_number(&g.inner))
        .or_py()?;
    Ok((k, c.colors().to_vec()))
}

/// Edge ids (indices into `Graph.edges()`) of a minimum edge dominating set.
#[pyfunction]
fn min_edge_dominating_set_tree(t: &Graph) -> PyResult<Vec<usize>> {
    Ok(core::min_edge_dominating_set_tree(&t.inner).or_py()?.edges)
}

#[pyfunction]
fn coloring_from_edge_dominating_set(g: &Graph, edges: Vec<usize>) -> PyResult<Vec<usize>> {
    let c =
        core::coloring_from_edge_dominating_set(&g.inner, &EdgeDominatingSet { edges }).or_py()?;
    Ok(c.colors().to_vec())
}

#[pyfunction]
fn tree_unigraph_number(t: &Graph) -> PyResult<(usize, Vec<usize>)> {
    let (k, c) = core::tree_unigraph_number(&t.inner).or_py()?;
    Ok((k, c.colors().to_vec()))
}

/// Exact `w` (and `s` when `strong`) of a connected graph, with `tau` and
/// notices for values the size bounds refused.
#[pyfunction]
#[pyo3(signature = (g, strong=false))]
fn decompose<'py>(py: Python<'py>, g: &Graph, strong: bool) -> PyResult<Bound<'py, PyDict>> {
    let r = py.detach(|| core::decompose(&g.inner, strong)).or_py()?;
    let d = PyDict::new(py);
    for (name, exact) in [("w", &r.w), ("s", &r.s)] {
        d.set_item(name, exact.as_ref().map(|e| e.k))?;
        d.set_item(
            format!("{name}_coloring"),
            exact.as_ref().map(|e| e.coloring.colors().to_vec()),
        )?;
    }
    d.set_item("tau", r.tau)?;
    d.set_item("notices", r.notices)?;
    Ok(d)
}

#[pymodule]
fn unigraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add("SizeBoundError", m.py().get_type::<SizeBoundError>())?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(is_unigraph, m)?)?;
    m.add_function(wrap_pyfunction!(fast_filter, m)?)?;
    m.add_function(wrap_pyfunction!(colored_degree_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_unigraphic_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(is_strongly_unigraphic_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(minimum_vertex_cover, m)?)?;
    m.add_function(wrap_pyfunction!(star_coloring_from_vertex_cover, m)?)?;
    m.add_function(wrap_pyfunction!(unigraph_number, m)?)?;
    m.add_function(wrap_pyfunction!(strong_unigraph_number, m)?)?;
    m.add_function(wrap_pyfunction!(min_edge_dominating_set_tree, m)?)?;
    m.add_function(wrap_pyfunction!(coloring_from_edge_dominating_set, m)?)?;
    m.add_function(wrap_pyfunction!(tree_unigraph_number, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    Ok(())
}
