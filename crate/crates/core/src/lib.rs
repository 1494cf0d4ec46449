//! Robust maximal independent sets.
//!
//! An MIS is *robust* when it stays maximal in every connected spanning
//! subgraph. This crate decides whether a connected graph has one and
//! builds it in polynomial time (ABC-tree labeling plus 2-SAT), classifies
//! the graphs where every MIS is robust, provides brute-force oracles, and
//! simulates a distributed LOCAL-model algorithm.

pub mod abc;
pub mod classify;
pub mod decompose;
pub mod error;
pub mod find;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod sim;
pub mod twosat;

pub use abc::{build_abc_tree, AbcNode, AbcTree, RootedAbcTree};
pub use classify::{in_rmis_forall, is_complete_bipartite, is_sputnik, ClassVerdict};
pub use error::{Error, Result};
pub use find::{find_rmis, find_rmis_traced, FindReport, Label, LabelSet, Tag};
pub use generators::GkInstance;
pub use graph::{Ball, Bipartition, Edge, Graph, VertexId};
pub use oracle::{is_mis, is_robust_mis, MisSet, OracleConfig};
pub use sim::{run_sync, Decision, IdAssignment, NodeProgram, SimResult};
pub use twosat::{Literal, TwoSatFormula};
