//! Graph data model, text formats and structural operations.

mod density;
mod embedding;
mod graph;
mod io;
mod structure;

use thiserror::Error;

pub use density::{mad_bruteforce, mad_exact, mad_with_witness, BRUTEFORCE_MAX_N};
pub use embedding::{drawings, mad_girth_spotcheck, Embedding};
pub use graph::{families, EdgeId, Graph};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use structure::{
    conflict_graph, contract, cut_edges, cut_vertices, expand, find_threads, girth,
    is_two_connected, Contraction, Girth, Thread, ThreadDecomposition,
};

/// Exact rational used for densities and charges.
pub type Rational = num_rational::Rational64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("maximum degree {max_degree} exceeds d = {d}")]
    MaxDegreeExceeded { max_degree: usize, d: usize },
    #[error("invalid rotation at vertex {vertex}: {msg}")]
    InvalidRotation { vertex: usize, msg: String },
    #[error("too many {what}: {size} > {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}
