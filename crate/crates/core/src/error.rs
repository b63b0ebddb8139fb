use thiserror::Error;

/// Errors raised by graph construction, validation and the bounded exact algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {{{0}, {1}}} is not in the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("{what} exceeds the supported bound ({actual} > {limit})")]
    SizeBound {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not connected")]
    NotConnected,
    #[error("degree set {0:?} is not graphical")]
    NotGraphical(Vec<usize>),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid colored degree set: {0}")]
    InvalidColoredDegreeSet(String),
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("vertex set is not a vertex cover: edge {{{0}, {1}}} is uncovered")]
    NotAVertexCover(usize, usize),
    #[error("edge set is not dominating: edge {{{0}, {1}}} is undominated")]
    NotDominating(usize, usize),
    #[error("not a star coloring: color {0} is not a star")]
    NotAStarColoring(usize),
    #[error("coloring is not unigraphic: color {0} is not K2, a star or a double star")]
    NotUnigraphicTreeColoring(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn size(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::SizeBound {
            what,
            limit,
            actual,
        }
    }

    /// True for refusals caused by an exceeded size bound.
    pub fn is_size_bound(&self) -> bool {
        matches!(self, Error::SizeBound { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
