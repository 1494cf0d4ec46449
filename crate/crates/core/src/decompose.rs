//! Articulation points, bridges and biconnected components from a single
//! iterative depth-first lowlink pass.

use crate::error::Result;
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub articulation_points: Vec<VertexId>,
    pub bridges: Vec<Edge>,
    /// Edge-based blocks as sorted vertex sets. Size-2 blocks are exactly
    /// the bridges; an edgeless graph has no blocks.
    pub components: Vec<Vec<VertexId>>,
}

/// Runs the lowlink pass. Rejects disconnected graphs.
pub fn decompose(g: &Graph) -> Result<Decomposition> {
    g.require_connected()?;
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut next = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut root_children = 0usize;
    let mut bridges = Vec::new();
    let mut components = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    let mut timer = 0;
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut stack = vec![0usize];

    while let Some(&v) = stack.last() {
        if next[v] < g.adj(v).len() {
            let w = g.adj(v)[next[v]];
            next[v] += 1;
            if disc[w] == UNSEEN {
                parent[w] = v;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((v, w));
                stack.push(w);
            } else if w != parent[v] && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        stack.pop();
        let p = parent[v];
        if p == UNSEEN {
            continue;
        }
        low[p] = low[p].min(low[v]);
        if low[v] >= disc[p] {
            if parent[p] == UNSEEN {
                root_children += 1;
            } else {
                is_cut[p] = true;
            }
            let mut block = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                block.push(a);
                block.push(b);
                if (a, b) == (p, v) {
                    break;
                }
            }
            block.sort_unstable();
            block.dedup();
            components.push(block.into_iter().map(|i| g.id(i)).collect::<Vec<_>>());
        }
        if low[v] > disc[p] {
            bridges.push(Edge::new(g.id(p), g.id(v)));
        }
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }

    bridges.sort_unstable();
    components.sort_unstable();
    Ok(Decomposition {
        articulation_points: (0..n).filter(|&i| is_cut[i]).map(|i| g.id(i)).collect(),
        bridges,
        components,
    })
}

pub fn articulation_points(g: &Graph) -> Result<Vec<VertexId>> {
    Ok(decompose(g)?.articulation_points)
}

pub fn bridges(g: &Graph) -> Result<Vec<Edge>> {
    Ok(decompose(g)?.bridges)
}

pub fn biconnected_components(g: &Graph) -> Result<Vec<Vec<VertexId>>> {
    Ok(decompose(g)?.components)
}

/// Edges that are not bridges.
pub fn removable_edges(g: &Graph) -> Result<Vec<Edge>> {
    let bridges = bridges(g)?;
    Ok(g.edges()
        .into_iter()
        .filter(|e| bridges.binary_search(e).is_err())
        .collect())
}
