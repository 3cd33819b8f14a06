//! Library side of the `scix` command: the named-graph catalog, the results
//! cache, the regression report and the `verify-paper` suite.

pub mod cache;
pub mod catalog;
pub mod report;
pub mod verify;

use scix_core::graphcore::{parse_edge_list, parse_graph6};
use scix_core::{Graph, GraphError};

/// Parses either format: text whose first non-comment line starts with `n`
/// is an edge list, anything else is graph6.
pub fn parse_graph_auto(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l == "n" || l.starts_with("n ") => parse_edge_list(text),
        Some(l) => parse_graph6(l),
        None => Err(GraphError::Parse {
            line: 0,
            msg: "empty input".into(),
        }),
    }
}
