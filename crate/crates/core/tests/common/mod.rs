#![allow(dead_code)]

use rmis_core::oracle::{enumerate_mis, is_robust_mis_bruteforce};
use rmis_core::{Graph, MisSet, OracleConfig, Result};

/// Every connected graph on vertex set `0..n`, one per edge subset.
pub fn connected_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).filter_map(move |mask| {
        let edges: Vec<(u32, u32)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::from_pairs(0..n, &edges).unwrap();
        g.is_connected().then_some(g)
    })
}

/// Robust MISs by exhaustive spanning-subgraph search, independent of the
/// polynomial criterion.
pub fn robust_mis_brute(g: &Graph, cfg: &OracleConfig) -> Result<Vec<MisSet>> {
    let mut out = Vec::new();
    for m in enumerate_mis(g, cfg)? {
        if is_robust_mis_bruteforce(g, &m, cfg)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// Brute-force articulation points: removal leaves more components.
pub fn cut_vertices_brute(g: &Graph) -> Vec<rmis_core::VertexId> {
    g.vertices()
        .iter()
        .copied()
        .filter(|&v| {
            let rest: Vec<_> = g.vertices().iter().copied().filter(|&u| u != v).collect();
            !rest.is_empty() && !g.induced_subgraph(&rest).unwrap().is_connected()
        })
        .collect()
}
