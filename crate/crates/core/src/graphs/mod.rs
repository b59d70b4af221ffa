//! The square and canoe graphs, positive mutation with label transport, and
//! the two mutation sequences connecting them.
//!
//! Graphs here are the mutable bottom-row model: the vertices `v_0 .. v_n`
//! of the subsquare, the edges among them, and half-edges `H_{-1} .. H_{n+1}`
//! standing in for the frozen top row. Half-edges carry twist words; edges
//! carry signed interval curve labels whose transport under mutation runs
//! through the [`curves`](crate::curves) rewrite calculus.

mod build;
mod graph;
mod mutation;
mod sequences;

pub use build::{canoe_graph, graph_for_tuple, square_graph};
pub use graph::{graph_diff, graphs_equal, reduce_word, Edge, HalfEdge, MutGraph};
pub use mutation::positive_mutation;
pub use sequences::{
    long_sequence, short_sequence, verify_mutation_equivalence, MutationTrace, TraceStep,
};

use thiserror::Error;

use crate::curves::CurvesError;
use crate::quiver::QuiverError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphsError {
    #[error("no edge labeled {0}")]
    NoSuchEdge(String),
    #[error("edge {0} bounds a bigon and cannot be mutated")]
    BigonEdge(String),
    #[error("no positively-labeled edge for interval {0}")]
    MissingPositiveEdge(String),
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error(transparent)]
    Twist(#[from] CurvesError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}
