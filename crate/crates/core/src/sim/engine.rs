//! Synchronous LOCAL-model execution.
//!
//! Round 0 runs `init` everywhere. In every later round each node first
//! receives what its neighbours sent in the previous round, then steps.
//! A node that has produced an output stops stepping, but the messages it
//! sent in its deciding round are still delivered.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{seq::index::sample, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::MisSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Decision {
    #[serde(rename = "IN")]
    In,
    #[serde(rename = "OUT")]
    Out,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::In => "IN",
            Decision::Out => "OUT",
        })
    }
}

/// Per-port mailbox; port `p` is the `p`-th neighbour in id order.
pub type Outbox<M> = Vec<Option<M>>;

/// Code run at every node. It learns only its identifier and degree up
/// front; everything else arrives through messages.
pub trait NodeProgram {
    type State;
    type Msg: Clone;

    fn init(&self, id: u64, degree: usize) -> (Self::State, Outbox<Self::Msg>);

    fn step(
        &self,
        state: &mut Self::State,
        round: usize,
        inbox: &[Option<Self::Msg>],
    ) -> Outbox<Self::Msg>;

    fn output(&self, state: &Self::State) -> Option<Decision>;
}

/// Distinct identifiers handed to the nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdAssignment(BTreeMap<VertexId, u64>);

impl IdAssignment {
    /// Each vertex's identifier is its own id.
    pub fn identity(g: &Graph) -> Self {
        IdAssignment(g.vertices().iter().map(|&v| (v, u64::from(v.0))).collect())
    }

    /// Distinct identifiers drawn from `0..16n`.
    pub fn random(g: &Graph, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = (16 * g.n()).max(16);
        let picks = sample(&mut rng, space, g.n());
        IdAssignment(
            g.vertices()
                .iter()
                .zip(picks)
                .map(|(&v, x)| (v, x as u64))
                .collect(),
        )
    }

    /// Rejects assignments that repeat an identifier.
    pub fn from_map(map: BTreeMap<VertexId, u64>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (&v, &id) in &map {
            if !seen.insert(id) {
                return Err(Error::BadIds(v));
            }
        }
        Ok(IdAssignment(map))
    }

    pub fn get(&self, v: VertexId) -> Option<u64> {
        self.0.get(&v).copied()
    }

    pub fn as_map(&self) -> &BTreeMap<VertexId, u64> {
        &self.0
    }

    fn check(&self, g: &Graph) -> Result<()> {
        match g.vertices().iter().find(|v| !self.0.contains_key(v)) {
            Some(&v) => Err(Error::BadIds(v)),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimResult {
    pub outputs: BTreeMap<VertexId, Decision>,
    pub rounds_total: usize,
    #[serde(rename = "per_node_rounds")]
    pub termination_round: BTreeMap<VertexId, usize>,
}

impl SimResult {
    pub fn in_set(&self) -> MisSet {
        self.outputs
            .iter()
            .filter(|(_, &d)| d == Decision::In)
            .map(|(&v, _)| v)
            .collect()
    }
}

pub fn run_sync<P: NodeProgram>(
    g: &Graph,
    program: &P,
    ids: &IdAssignment,
    max_rounds: usize,
) -> Result<SimResult> {
    Ok(run_sync_states(g, program, ids, max_rounds)?.0)
}

/// Like [`run_sync`], also returning each node's final state.
pub fn run_sync_states<P: NodeProgram>(
    g: &Graph,
    program: &P,
    ids: &IdAssignment,
    max_rounds: usize,
) -> Result<(SimResult, BTreeMap<VertexId, P::State>)> {
    g.require_connected()?;
    ids.check(g)?;
    let n = g.n();
    // back[i][p]: the port of i at its p-th neighbour
    let back: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            g.adj(i)
                .iter()
                .map(|&j| g.adj(j).binary_search(&i).expect("symmetric adjacency"))
                .collect()
        })
        .collect();

    let mut states = Vec::with_capacity(n);
    let mut outboxes = Vec::with_capacity(n);
    let mut done: Vec<Option<usize>> = Vec::with_capacity(n);
    for i in 0..n {
        let (state, out) = program.init(ids.get(g.id(i)).unwrap(), g.adj(i).len());
        done.push(program.output(&state).map(|_| 0));
        states.push(state);
        outboxes.push(out);
    }

    let mut round = 0;
    while done.iter().any(Option::is_none) {
        round += 1;
        if round > max_rounds {
            let undecided = (0..n)
                .filter(|&i| done[i].is_none())
                .map(|i| g.id(i))
                .collect();
            return Err(Error::RoundLimit {
                max_rounds,
                undecided,
            });
        }
        let inboxes: Vec<Vec<Option<P::Msg>>> = (0..n)
            .map(|i| {
                g.adj(i)
                    .iter()
                    .zip(&back[i])
                    .map(|(&j, &p)| outboxes[j].get(p).cloned().flatten())
                    .collect()
            })
            .collect();
        for i in 0..n {
            outboxes[i].clear();
            if done[i].is_some() {
                continue;
            }
            outboxes[i] = program.step(&mut states[i], round, &inboxes[i]);
            if program.output(&states[i]).is_some() {
                done[i] = Some(round);
            }
        }
    }

    let mut outputs = BTreeMap::new();
    let mut termination_round = BTreeMap::new();
    for (i, state) in states.iter().enumerate() {
        outputs.insert(g.id(i), program.output(state).unwrap());
        termination_round.insert(g.id(i), done[i].unwrap());
    }
    let rounds_total = termination_round.values().copied().max().unwrap_or(0);
    let finals = states
        .into_iter()
        .enumerate()
        .map(|(i, s)| (g.id(i), s))
        .collect();
    Ok((
        SimResult {
            outputs,
            rounds_total,
            termination_round,
        },
        finals,
    ))
}
