//! Verification toolkit for strong edge-colorings of sparse graphs.
//!
//! The crate is organised around five areas:
//!
//! * [`graphcore`]: the graph model, text formats, and structural operations
//!   (girth, maximum average degree, contraction, expansion, threads, faces).
//! * [`solver`]: exact strong edge-coloring search (decision, optimisation,
//!   list coloring and precolored extension).
//! * [`configs`]: thread configurations with pendant expansion and their
//!   k-reducibility by exhaustive boundary extension.
//! * [`nullstellensatz`]: exact sparse polynomial expansion for conflict
//!   polynomials and target-coefficient extraction.
//! * [`discharging`]: responsibility sets, executable rule engines and exact
//!   arithmetic audits.

pub mod configs;
pub mod discharging;
pub mod graphcore;
pub mod nullstellensatz;
pub mod solver;

pub use graphcore::{EdgeId, Embedding, Girth, Graph, GraphError, Rational};
