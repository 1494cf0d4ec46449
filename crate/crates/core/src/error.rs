use thiserror::Error;

use crate::graph::{Edge, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: VertexId },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is not connected")]
    Disconnected,

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("unknown edge {0}")]
    UnknownEdge(Edge),

    #[error("{what} is {actual}, above the configured cap of {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("tree node {0} is not a component node")]
    NotAComponent(usize),

    #[error("the root of a rooted decomposition has no attachment point")]
    RootHasNoAttachment,

    #[error("literal refers to variable {var} but the formula has {count} variables")]
    VariableOutOfRange { var: usize, count: usize },

    #[error("child {child} of component {component} carries no label for the chosen polarity")]
    MissingChildLabel { component: usize, child: usize },

    #[error("simulation exceeded {max_rounds} rounds; undecided: {undecided:?}")]
    RoundLimit {
        max_rounds: usize,
        undecided: Vec<VertexId>,
    },

    #[error("identifier assignment is not injective or misses vertex {0}")]
    BadIds(VertexId),
}
