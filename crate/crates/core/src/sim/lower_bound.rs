//! The labeled-view argument on `G_k`: three identifier assignments under
//! which the extremities `b_k` and `β_k` cannot tell their radius-`k`
//! neighbourhoods apart, although every robust MIS separates them.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::generators::{gk, GkInstance};
use crate::graph::{Graph, VertexId};
use crate::sim::engine::IdAssignment;

/// A radius-`r` ball seen through identifiers only. Identifiers are unique,
/// so two such views are isomorphic as labeled graphs iff they are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledBall {
    pub center: u64,
    pub vertices: BTreeSet<u64>,
    pub edges: BTreeSet<(u64, u64)>,
}

pub fn labeled_ball(g: &Graph, ids: &IdAssignment, v: VertexId, r: usize) -> Result<LabeledBall> {
    let ball = g.ball(v, r)?;
    let id = |x: VertexId| ids.get(x).expect("every vertex has an identifier");
    Ok(LabeledBall {
        center: id(v),
        vertices: ball.graph.vertices().iter().map(|&x| id(x)).collect(),
        edges: ball
            .graph
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = (id(e.u()), id(e.v()));
                (a.min(b), a.max(b))
            })
            .collect(),
    })
}

/// The automorphism of `G_k` exchanging the two ladders:
/// a↔α, b↔β, c↔γ on every level.
pub fn ladder_swap(inst: &GkInstance) -> BTreeMap<VertexId, VertexId> {
    let mut map = BTreeMap::new();
    for i in 0..=inst.k {
        for (x, y) in [("a", "alpha"), ("b", "beta"), ("c", "gamma")] {
            map.insert(inst.vertex(x, i), inst.vertex(y, i));
            map.insert(inst.vertex(y, i), inst.vertex(x, i));
        }
    }
    map
}

/// The three instances `G_k^1` (b: L1, β: L2), `G_k^2` (b: L1, β: L3) and
/// `G_k^3` (b: L2, β: L3). Labeling `Lj` numbers the radius-`k` ball of
/// `b_k` in id order from `j·S`; on the `β_k` side it is transported by
/// the ladder swap. Every other vertex keeps a private identifier.
pub fn extremity_labelings(inst: &GkInstance) -> Result<[IdAssignment; 3]> {
    let (b, beta) = inst.extremities();
    let swap = ladder_swap(inst);
    let ball: Vec<VertexId> = inst.graph.ball(b, inst.k)?.graph.vertices().to_vec();
    let stride = inst.graph.n() as u64 + 1;
    let scheme = |j: u64| -> BTreeMap<VertexId, u64> {
        ball.iter()
            .enumerate()
            .map(|(rank, &v)| (v, j * stride + rank as u64))
            .collect()
    };
    let build = |on_b: u64, on_beta: u64| {
        let mut ids: BTreeMap<VertexId, u64> = inst
            .graph
            .vertices()
            .iter()
            .map(|&v| (v, 4 * stride + u64::from(v.0)))
            .collect();
        for (v, id) in scheme(on_b) {
            ids.insert(v, id);
        }
        for (v, id) in scheme(on_beta) {
            ids.insert(swap[&v], id);
        }
        IdAssignment::from_map(ids)
    };
    debug_assert_eq!(swap[&b], beta);
    Ok([build(1, 2)?, build(1, 3)?, build(2, 3)?])
}

/// True iff in each pair of instances that share a labeling at an
/// extremity, the labeled radius-`k` views there coincide: `β_k` in
/// `G_k^1` and `b_k` in `G_k^3` (both L2), `b_k` in `G_k^1` and `G_k^2`
/// (L1), `β_k` in `G_k^2` and `G_k^3` (L3).
pub fn indistinguishability_check(k: usize) -> Result<bool> {
    let inst = gk(k);
    let (b, beta) = inst.extremities();
    let [g1, g2, g3] = extremity_labelings(&inst)?;
    let view = |ids: &IdAssignment, v| labeled_ball(&inst.graph, ids, v, k);
    Ok(view(&g1, beta)? == view(&g3, b)?
        && view(&g1, b)? == view(&g2, b)?
        && view(&g2, beta)? == view(&g3, beta)?)
}
