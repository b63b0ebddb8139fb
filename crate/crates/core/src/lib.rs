//! Decomposing small graphs into unigraphs.
//!
//! A unigraph is a graph determined up to isomorphism by its degree multiset.
//! This crate recognizes unigraphs, checks unigraphic and strongly unigraphic
//! edge colorings, builds star colorings from vertex covers, computes the
//! unigraph number of trees in linear time, and computes exact (strong)
//! unigraph numbers of small graphs by branch and bound.

pub mod canon;
pub mod coloring;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod realize;
pub mod recognize;
pub mod search;
pub mod tree;

pub use canon::{
    canonical_code, canonical_labeling, colored_canonical_code, CanonicalCode, MAX_CANON_N,
};
pub use coloring::{
    color_subgraph, greedy_vertex_cover, is_star_coloring, is_strongly_unigraphic_coloring,
    is_strongly_unigraphic_coloring_in, is_unigraphic_coloring, minimum_vertex_cover,
    star_adjacency, star_coloring_from_vertex_cover, strong_upper_bound, ClassDefect,
    ColoringFailure, ColoringVerdict, EdgeColoring, VertexCover,
};
pub use error::{Error, Result};
pub use graph::{DegreeSet, Graph, Subgraph};
pub use iso::{are_isomorphic, isomorphism};
pub use realize::{
    colored_degree_set, enumerate_colored_realizations, enumerate_realizations, is_graphical,
    ColoredDegreeSet, RealizationScope,
};
pub use recognize::{
    disconnected_witness, fast_filter, is_connected_unigraph, is_unigraph, tree_unigraph_class,
    Decider, FilterOutcome, FilterReason, RecognitionVerdict, TreeUnigraphClass,
};
pub use search::{
    bounds, decompose, decompose_components, strong_unigraph_number, strong_unigraph_number_with,
    unigraph_number, unigraph_number_with, Bound, DecompositionReport, Exact, Provenance,
    SearchOptions,
};
pub use tree::{
    brute_force_min_edge_dominating_set, coloring_from_edge_dominating_set,
    edge_dominating_set_from_coloring, edge_domination_number_tree, min_edge_dominating_set_tree,
    tree_unigraph_number, undominated_edge, EdgeDominatingSet,
};
