//! LOCAL-model simulation.

pub mod engine;
pub mod forall;
pub mod lower_bound;

pub use engine::{
    run_sync, run_sync_states, Decision, IdAssignment, NodeProgram, Outbox, SimResult,
};
pub use forall::{rmis_forall_program, ForallProgram};
pub use lower_bound::indistinguishability_check;
