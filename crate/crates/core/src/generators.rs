//! Named graph families and seeded random graphs. Vertex ids are `0..n`.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::decompose::biconnected_components;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::MisSet;

/// The two-ladder graph `G_k` with its two robust MIS.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub k: usize,
    /// `a3`, `beta0`, ... to vertex id.
    pub names: BTreeMap<String, VertexId>,
    pub m1: MisSet,
    pub m2: MisSet,
}

const GK_NAMES: [&str; 6] = ["a", "b", "c", "alpha", "beta", "gamma"];

impl GkInstance {
    /// Id of `name_i`, e.g. `vertex("beta", 2)`.
    pub fn vertex(&self, name: &str, i: usize) -> VertexId {
        self.names[&format!("{name}{i}")]
    }

    /// The two ends of the ladders, `b_k` and `β_k`.
    pub fn extremities(&self) -> (VertexId, VertexId) {
        (self.vertex("b", self.k), self.vertex("beta", self.k))
    }
}

/// Level `i` holds a_i=6i, b_i=6i+1, c_i=6i+2, α_i=6i+3, β_i=6i+4, γ_i=6i+5.
pub fn gk(k: usize) -> GkInstance {
    let id = |i: usize, off: usize| (6 * i + off) as u32;
    let (a, b, c, alpha, beta, gamma) = (0, 1, 2, 3, 4, 5);
    let mut edges = vec![
        (id(0, a), id(0, b)),
        (id(0, b), id(0, c)),
        (id(0, c), id(0, gamma)),
        (id(0, gamma), id(0, beta)),
        (id(0, beta), id(0, alpha)),
        (id(0, alpha), id(0, a)),
    ];
    for i in 1..=k {
        edges.extend([
            (id(i - 1, beta), id(i, alpha)),
            (id(i - 1, beta), id(i, gamma)),
            (id(i, alpha), id(i, beta)),
            (id(i, gamma), id(i, beta)),
            (id(i - 1, b), id(i, a)),
            (id(i - 1, b), id(i, c)),
            (id(i, a), id(i, b)),
            (id(i, c), id(i, b)),
        ]);
    }
    let graph = Graph::from_pairs([], &edges).expect("G_k edges are valid");
    let mut names = BTreeMap::new();
    for i in 0..=k {
        for (off, name) in GK_NAMES.iter().enumerate() {
            names.insert(format!("{name}{i}"), VertexId(id(i, off)));
        }
    }
    let m1: MisSet = (0..=k)
        .flat_map(|i| [id(i, alpha), id(i, gamma), id(i, b)])
        .map(VertexId)
        .collect();
    let m2 = m1.complement_in(&graph);
    GkInstance {
        graph,
        k,
        names,
        m1,
        m2,
    }
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    need(
        m >= 1 && n >= 1,
        "complete bipartite parts need at least one vertex each",
    )?;
    let edges: Vec<(u32, u32)> = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u as u32, v as u32)))
        .collect();
    Graph::from_pairs([], &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "a cycle needs at least 3 vertices")?;
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)).collect();
    Graph::from_pairs([], &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "a path needs at least 1 vertex")?;
    let edges: Vec<(u32, u32)> = (1..n).map(|i| (i as u32 - 1, i as u32)).collect();
    Graph::from_pairs([0], &edges)
}

/// Triangle 1,2,3 with horns 0 (on 1) and 4 (on 2).
pub fn bull() -> Graph {
    Graph::from_pairs([], &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)]).unwrap()
}

pub fn triangle() -> Graph {
    cycle(3).unwrap()
}

pub fn square() -> Graph {
    cycle(4).unwrap()
}

/// Path `0..path_len` whose last vertex joins the first vertex of a clique
/// on the next `clique` ids.
pub fn lollipop(path_len: usize, clique: usize) -> Result<Graph> {
    need(path_len >= 1, "the lollipop stick needs at least 1 vertex")?;
    need(clique >= 3, "the lollipop clique needs at least 3 vertices")?;
    let mut edges: Vec<(u32, u32)> = (1..path_len).map(|i| (i as u32 - 1, i as u32)).collect();
    let base = path_len as u32;
    edges.push((base - 1, base));
    for i in 0..clique as u32 {
        for j in i + 1..clique as u32 {
            edges.push((base + i, base + j));
        }
    }
    Graph::from_pairs([], &edges)
}

/// Each pair is an edge with probability `edge_prob`; disconnected draws
/// are patched by a random spanning tree over the components.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    need(n >= 1, "a random graph needs at least 1 vertex")?;
    need(
        (0.0..=1.0).contains(&edge_prob),
        "edge probability must lie in [0, 1]",
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_pairs(0..n as u32, &edges)?;
    let mut comps = g.components();
    if comps.len() == 1 {
        return Ok(g);
    }
    comps.shuffle(&mut rng);
    for k in 1..comps.len() {
        let earlier = &comps[rng.gen_range(0..k)];
        let u = *earlier.choose(&mut rng).unwrap();
        let v = *comps[k].choose(&mut rng).unwrap();
        edges.push((u.0, v.0));
    }
    Graph::from_pairs(0..n as u32, &edges)
}

/// A random connected graph on `size` vertices in which every vertex on a
/// cycle then receives a fresh pendant unless it already has one.
pub fn random_sputnik(seed: u64, size: usize) -> Result<Graph> {
    need(size >= 1, "a sputnik needs at least 1 vertex")?;
    let p = (3.0 / size as f64).min(1.0);
    let base = random_connected(size, p, seed)?;
    let mut on_cycle = vec![false; base.n()];
    for block in biconnected_components(&base)?
        .iter()
        .filter(|b| b.len() >= 3)
    {
        for &v in block {
            on_cycle[base.index_of(v).unwrap()] = true;
        }
    }
    let mut edges: Vec<(u32, u32)> = base.edges().iter().map(|e| (e.u().0, e.v().0)).collect();
    let mut next = size as u32;
    for (i, &cyc) in on_cycle.iter().enumerate() {
        let has_pendant = base.adj(i).iter().any(|&j| base.adj(j).len() == 1);
        if cyc && !has_pendant {
            edges.push((base.id(i).0, next));
            next += 1;
        }
    }
    Graph::from_pairs(0..size as u32, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{in_rmis_forall, is_sputnik};
    use crate::oracle::is_robust_mis;

    #[test]
    fn gk_shapes() {
        let g0 = gk(0);
        // a0-b0-c0-γ0-β0-α0
        let ring =
            Graph::from_pairs([], &[(0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 0)]).unwrap();
        assert_eq!(g0.graph, ring);
        let g1 = gk(1);
        assert_eq!((g1.graph.n(), g1.graph.m()), (12, 14));
        for k in [0, 1, 5] {
            let inst = gk(k);
            assert_eq!(inst.graph.n(), 6 * (k + 1));
            assert_eq!(inst.graph.m(), 6 + 8 * k);
            assert_eq!(inst.m2, inst.m1.complement_in(&inst.graph));
            assert!(is_robust_mis(&inst.graph, &inst.m1).unwrap());
            assert!(is_robust_mis(&inst.graph, &inst.m2).unwrap());
            assert!(!in_rmis_forall(&inst.graph).unwrap().rmis_forall);
        }
        assert_eq!(g1.vertex("beta", 1), VertexId(10));
        assert_eq!(g1.extremities(), (VertexId(7), VertexId(10)));
    }

    #[test]
    fn small_families() {
        let b = bull();
        let mut degrees: Vec<usize> = b.vertices().iter().map(|&v| b.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2, 3, 3]);
        assert_eq!(square().m(), complete_bipartite(2, 2).unwrap().m());
        assert!(
            in_rmis_forall(&complete_bipartite(3, 4).unwrap())
                .unwrap()
                .complete_bipartite
        );
        let lolli = lollipop(5, 4).unwrap();
        assert_eq!(lolli.n(), 9);
        assert_eq!(lolli.pendant_vertices(), vec![VertexId(0)]);
        assert_eq!(path(1).unwrap().n(), 1);
        assert!(cycle(2).is_err());
        assert!(lollipop(2, 2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn random_graphs() {
        assert_eq!(random_connected(1, 0.5, 1).unwrap().n(), 1);
        let k5 = random_connected(5, 1.0, 9).unwrap();
        assert_eq!(k5.m(), 10);
        for seed in 0..20 {
            let g = random_connected(12, 0.1, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, random_connected(12, 0.1, seed).unwrap());
            let s = random_sputnik(seed, 10).unwrap();
            assert!(is_sputnik(&s).unwrap());
            assert!(s.n() <= 20);
            assert_eq!(s, random_sputnik(seed, 10).unwrap());
        }
        assert!(random_connected(3, 1.5, 0).is_err());
    }
}
