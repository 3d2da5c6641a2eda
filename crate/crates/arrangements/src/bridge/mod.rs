//! Graph and matroid front-ends plus coefficient-sequence analyzers:
//! chromatic polynomials three ways, matroid characteristic polynomials
//! by subset expansion, and log-concavity / unimodality / internal-zero
//! checks.

mod graph;
mod matroid;
mod sequence;

pub use graph::{
    chromatic_deletion_contraction, chromatic_via_arrangement, count_proper_colorings,
    graphic_arrangement, SimpleGraph,
};
pub use matroid::{matroid_char_poly_subsets, RepresentedMatroid, DEFAULT_MAX_SUBSETS};
pub use sequence::{analyze_sequence, SequenceReport};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BridgeError {
    #[error("edge ({u}, {v}) is invalid for {vertex_count} vertices")]
    BadEdge { u: usize, v: usize, vertex_count: usize },
    #[error("{what} too large: {got} exceeds the guard {limit}")]
    TooLarge { what: &'static str, got: u64, limit: u64 },
    #[error("column {index} is zero: loops have no hyperplane")]
    ZeroColumn { index: usize },
}
