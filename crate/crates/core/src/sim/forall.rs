//! Distributed robust MIS for graphs in which every MIS is robust
//! (complete bipartite graphs and sputniks).
//!
//! Rounds 1–3 flood local knowledge so every node sees adjacency up to
//! distance 2 and degrees up to distance 3. At round 3 a node decides:
//! - if its view is closed and complete bipartite, IN iff it shares a side
//!   with the lowest identifier;
//! - a degree-1 node goes IN and a node with a degree-1 neighbour goes OUT;
//! - the remaining nodes run an identifier-priority MIS on the edges among
//!   themselves, which form a forest in a sputnik.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::sim::engine::{Decision, NodeProgram, Outbox};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexInfo {
    pub degree: usize,
    /// The full neighbour list, once some node has reported it.
    pub adj: Option<Arc<Vec<u64>>>,
}

/// What a node has learned, keyed by identifier. Adjacency lists travel
/// whole, so merging costs one step per known vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Knowledge {
    pub vertices: BTreeMap<u64, VertexInfo>,
}

impl Knowledge {
    fn merge(&mut self, other: &Knowledge) {
        for (&v, info) in &other.vertices {
            match self.vertices.entry(v) {
                Entry::Vacant(e) => {
                    e.insert(info.clone());
                }
                Entry::Occupied(mut e) => {
                    if e.get().adj.is_none() && info.adj.is_some() {
                        e.get_mut().adj = info.adj.clone();
                    }
                }
            }
        }
    }

    pub fn degree(&self, v: u64) -> Option<usize> {
        self.vertices.get(&v).map(|i| i.degree)
    }

    pub fn adjacency(&self, v: u64) -> Option<&[u64]> {
        self.vertices.get(&v)?.adj.as_deref().map(Vec::as_slice)
    }

    pub fn edges(&self) -> BTreeSet<(u64, u64)> {
        self.vertices
            .iter()
            .filter_map(|(&v, i)| i.adj.as_ref().map(|adj| (v, adj)))
            .flat_map(|(v, adj)| adj.iter().map(move |&w| (v.min(w), v.max(w))))
            .collect()
    }

    /// Some known vertex has an edge that is not known yet.
    pub fn is_open(&self) -> bool {
        self.closed_view().is_none()
    }

    /// Rank-indexed adjacency of the known graph, if no known vertex has
    /// an unknown edge.
    fn closed_view(&self) -> Option<Vec<Vec<usize>>> {
        let ids: Vec<u64> = self.vertices.keys().copied().collect();
        let mut adj = vec![Vec::new(); ids.len()];
        for (i, info) in self.vertices.values().enumerate() {
            for &w in info.adj.as_deref().map(Vec::as_slice).unwrap_or(&[]) {
                let j = ids.binary_search(&w).ok()?;
                adj[i].push(j);
                if self.vertices[&w].adj.is_none() {
                    adj[j].push(i);
                }
            }
        }
        let full = self
            .vertices
            .values()
            .zip(&adj)
            .all(|(info, list)| list.len() == info.degree);
        full.then_some(adj)
    }

    /// For a closed, complete bipartite view: whether `me` is on the side
    /// of the smallest identifier.
    fn lowest_side(&self, me: u64) -> Option<bool> {
        let adj = self.closed_view()?;
        let mut colour = vec![None; adj.len()];
        colour[0] = Some(false);
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            let c = colour[i]?;
            for &j in &adj[i] {
                match colour[j] {
                    None => {
                        colour[j] = Some(!c);
                        stack.push(j);
                    }
                    Some(d) if d == c => return None,
                    _ => {}
                }
            }
        }
        let colour: Vec<bool> = colour.into_iter().collect::<Option<_>>()?;
        let left = colour.iter().filter(|&&c| !c).count();
        let right = colour.len() - left;
        let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        if right == 0 || edges != left * right {
            return None;
        }
        let me = self.vertices.keys().position(|&v| v == me)?;
        Some(!colour[me])
    }
}

#[derive(Debug, Clone)]
pub enum ForallMsg {
    Hello { id: u64, degree: usize },
    Know(Arc<Knowledge>),
    Decided(Decision),
}

#[derive(Debug, Clone)]
pub struct ForallState {
    pub id: u64,
    pub degree: usize,
    /// Neighbour identifiers by port.
    pub ports: Vec<u64>,
    pub knowledge: Knowledge,
    pub decision: Option<Decision>,
    /// Ports leading to undecided neighbours in the residual forest.
    pub residual: BTreeSet<usize>,
    pub residual_degree: usize,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ForallProgram;

pub fn rmis_forall_program() -> ForallProgram {
    ForallProgram
}

const GATHER_ROUNDS: usize = 3;

impl ForallProgram {
    fn decide_after_gathering(&self, s: &mut ForallState) {
        let k = &s.knowledge;
        if let Some(mine) = k.lowest_side(s.id) {
            s.decision = Some(if mine { Decision::In } else { Decision::Out });
            return;
        }
        let deg = |v: u64| k.degree(v).unwrap_or(0);
        if s.degree == 1 {
            s.decision = Some(Decision::In);
            return;
        }
        if s.ports.iter().any(|&u| deg(u) == 1) {
            s.decision = Some(Decision::Out);
            return;
        }
        // neighbours that are neither pendant nor next to a pendant
        s.residual = (0..s.ports.len())
            .filter(|&p| {
                let u = s.ports[p];
                deg(u) != 1 && k.adjacency(u).unwrap_or(&[]).iter().all(|&w| deg(w) != 1)
            })
            .collect();
        s.residual_degree = s.residual.len();
        self.try_join(s);
    }

    fn try_join(&self, s: &mut ForallState) {
        if s.residual.iter().all(|&p| s.id < s.ports[p]) {
            s.decision = Some(Decision::In);
        }
    }
}

impl NodeProgram for ForallProgram {
    type State = ForallState;
    type Msg = ForallMsg;

    fn init(&self, id: u64, degree: usize) -> (ForallState, Outbox<ForallMsg>) {
        let mut knowledge = Knowledge::default();
        knowledge
            .vertices
            .insert(id, VertexInfo { degree, adj: None });
        let state = ForallState {
            id,
            degree,
            ports: Vec::new(),
            knowledge,
            decision: None,
            residual: BTreeSet::new(),
            residual_degree: 0,
        };
        (state, vec![Some(ForallMsg::Hello { id, degree }); degree])
    }

    fn step(
        &self,
        s: &mut ForallState,
        round: usize,
        inbox: &[Option<ForallMsg>],
    ) -> Outbox<ForallMsg> {
        for msg in inbox.iter() {
            match msg {
                Some(ForallMsg::Hello { id, degree }) => {
                    s.ports.push(*id);
                    s.knowledge.vertices.insert(
                        *id,
                        VertexInfo {
                            degree: *degree,
                            adj: None,
                        },
                    );
                }
                Some(ForallMsg::Know(k)) => s.knowledge.merge(k),
                _ => {}
            }
        }
        if round == 1 {
            let mut own: Vec<u64> = s.ports.clone();
            own.sort_unstable();
            s.knowledge.vertices.get_mut(&s.id).unwrap().adj = Some(Arc::new(own));
        }
        if round < GATHER_ROUNDS {
            return vec![Some(ForallMsg::Know(Arc::new(s.knowledge.clone()))); s.degree];
        }
        if round == GATHER_ROUNDS {
            self.decide_after_gathering(s);
        } else {
            for (p, msg) in inbox.iter().enumerate() {
                match msg {
                    Some(ForallMsg::Decided(Decision::In)) if s.residual.contains(&p) => {
                        s.decision = Some(Decision::Out);
                    }
                    Some(ForallMsg::Decided(_)) => {
                        s.residual.remove(&p);
                    }
                    _ => {}
                }
            }
            if s.decision.is_none() {
                self.try_join(s);
            }
        }
        match s.decision {
            Some(d) => (0..s.degree)
                .map(|p| s.residual.contains(&p).then_some(ForallMsg::Decided(d)))
                .collect(),
            None => Vec::new(),
        }
    }

    fn output(&self, s: &ForallState) -> Option<Decision> {
        s.decision
    }
}
