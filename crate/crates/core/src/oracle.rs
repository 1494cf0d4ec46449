//! Ground truth for independence, maximality and robustness.
//!
//! [`is_robust_mis`] is the polynomial test used everywhere else. The
//! exhaustive variants exist to validate it on small graphs and are guarded
//! by caps from [`OracleConfig`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decompose::removable_edges;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A vertex set proposed as a (robust) maximal independent set.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MisSet(BTreeSet<VertexId>);

impl MisSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<VertexId> {
        &self.0
    }

    pub fn extend(&mut self, other: &MisSet) {
        self.0.extend(other.iter());
    }

    /// `V \ self` with respect to `g`.
    pub fn complement_in(&self, g: &Graph) -> MisSet {
        g.vertices()
            .iter()
            .copied()
            .filter(|v| !self.contains(*v))
            .collect()
    }

    /// Dense membership mask over `g`; fails on ids not in `g`.
    pub fn mask(&self, g: &Graph) -> Result<Vec<bool>> {
        let mut mask = vec![false; g.n()];
        for v in self.iter() {
            mask[g.idx(v)?] = true;
        }
        Ok(mask)
    }
}

impl FromIterator<VertexId> for MisSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        MisSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[u32; N]> for MisSet {
    fn from(xs: [u32; N]) -> Self {
        xs.into_iter().map(VertexId).collect()
    }
}

/// Comma-separated sorted ids, e.g. `1,3,5`.
impl fmt::Display for MisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for MisSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>().map(VertexId).map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("bad vertex id {t:?} in set"),
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest number of removable edges the exhaustive robustness check accepts.
    pub max_removable_edges: usize,
    /// Largest vertex count MIS enumeration accepts.
    pub max_enumeration_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_removable_edges: 20,
            max_enumeration_vertices: 16,
        }
    }
}

pub fn is_independent(g: &Graph, s: &MisSet) -> Result<bool> {
    let mask = s.mask(g)?;
    Ok(independent_mask(g, &mask))
}

pub fn is_mis(g: &Graph, s: &MisSet) -> Result<bool> {
    let mask = s.mask(g)?;
    Ok(independent_mask(g, &mask) && dominating_mask(g, &mask))
}

fn independent_mask(g: &Graph, mask: &[bool]) -> bool {
    (0..g.n()).all(|a| !mask[a] || g.adj(a).iter().all(|&b| !mask[b]))
}

fn dominating_mask(g: &Graph, mask: &[bool]) -> bool {
    (0..g.n()).all(|a| mask[a] || g.adj(a).iter().any(|&b| mask[b]))
}

/// A MIS is robust iff, for every vertex outside it, deleting all of that
/// vertex's edges into the set disconnects the graph. `O(n·m)`.
pub fn is_robust_mis(g: &Graph, s: &MisSet) -> Result<bool> {
    g.require_connected()?;
    let mask = s.mask(g)?;
    if !(independent_mask(g, &mask) && dominating_mask(g, &mask)) {
        return Ok(false);
    }
    Ok((0..g.n()).filter(|&u| !mask[u]).all(|u| {
        // BFS over g with every edge {u, w ∈ s} deleted
        let mut seen = vec![false; g.n()];
        let mut stack = vec![u];
        seen[u] = true;
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for &b in g.adj(a) {
                if seen[b] || (a == u && mask[b]) || (b == u && mask[a]) {
                    continue;
                }
                seen[b] = true;
                count += 1;
                stack.push(b);
            }
        }
        count < g.n()
    }))
}

/// Checks maximality of `s` in every connected spanning subgraph of `g` by
/// enumerating subsets of removable edges. Subsets whose removal disconnects
/// the graph are pruned together with all their supersets.
pub fn is_robust_mis_bruteforce(g: &Graph, s: &MisSet, cfg: &OracleConfig) -> Result<bool> {
    g.require_connected()?;
    let mask = s.mask(g)?;
    let removable = removable_edges(g)?;
    if removable.len() > cfg.max_removable_edges {
        return Err(Error::CapExceeded {
            what: "number of removable edges",
            actual: removable.len(),
            cap: cfg.max_removable_edges,
            hint: "; use the polynomial robustness check instead",
        });
    }
    if !(independent_mask(g, &mask) && dominating_mask(g, &mask)) {
        return Ok(false);
    }
    let edges: Vec<(usize, usize)> = removable
        .iter()
        .map(|e| (g.index_of(e.u()).unwrap(), g.index_of(e.v()).unwrap()))
        .collect();
    let mut search = SpanningSearch {
        alive: (0..g.n())
            .map(|a| g.adj(a).iter().map(|&b| (b, true)).collect())
            .collect(),
        covered: (0..g.n())
            .map(|a| g.adj(a).iter().filter(|&&b| mask[b]).count())
            .collect(),
        mask,
        edges,
    };
    Ok(search.explore(0))
}

struct SpanningSearch {
    /// Adjacency with a liveness flag per incident edge.
    alive: Vec<Vec<(usize, bool)>>,
    /// Number of live edges into the candidate set, per vertex.
    covered: Vec<usize>,
    mask: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl SpanningSearch {
    /// Visits every subset of `edges[from..]` whose removal keeps the graph
    /// connected; false as soon as some visited subgraph breaks maximality.
    fn explore(&mut self, from: usize) -> bool {
        for k in from..self.edges.len() {
            let (a, b) = self.edges[k];
            self.set(a, b, false);
            if !self.reachable(a, b) {
                self.set(a, b, true);
                continue;
            }
            let ok = self.uncover(a, b) && self.explore(k + 1);
            self.recover(a, b);
            self.set(a, b, true);
            if !ok {
                return false;
            }
        }
        true
    }

    fn set(&mut self, a: usize, b: usize, live: bool) {
        for (x, y) in [(a, b), (b, a)] {
            let slot = self.alive[x].iter_mut().find(|(w, _)| *w == y).unwrap();
            slot.1 = live;
        }
    }

    /// Decrements coverage counters for the removed edge; false if an
    /// outside vertex lost its last neighbour in the set.
    fn uncover(&mut self, a: usize, b: usize) -> bool {
        let mut ok = true;
        for (x, y) in [(a, b), (b, a)] {
            if self.mask[y] {
                self.covered[x] -= 1;
                if !self.mask[x] && self.covered[x] == 0 {
                    ok = false;
                }
            }
        }
        ok
    }

    fn recover(&mut self, a: usize, b: usize) {
        for (x, y) in [(a, b), (b, a)] {
            if self.mask[y] {
                self.covered[x] += 1;
            }
        }
    }

    fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.alive.len()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            for &(y, live) in &self.alive[x] {
                if live && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// Every MIS of `g`, by in/out backtracking over vertices in id order,
/// sorted canonically.
pub fn enumerate_mis(g: &Graph, cfg: &OracleConfig) -> Result<Vec<MisSet>> {
    if g.n() > cfg.max_enumeration_vertices {
        return Err(Error::CapExceeded {
            what: "vertex count",
            actual: g.n(),
            cap: cfg.max_enumeration_vertices,
            hint: "",
        });
    }
    let mut out = Vec::new();
    let mut state = vec![false; g.n()];
    enumerate_rec(g, 0, &mut state, &mut out);
    out.sort();
    Ok(out)
}

fn enumerate_rec(g: &Graph, v: usize, inset: &mut Vec<bool>, out: &mut Vec<MisSet>) {
    if v == g.n() {
        if dominating_mask(g, inset) {
            out.push((0..g.n()).filter(|&i| inset[i]).map(|i| g.id(i)).collect());
        }
        return;
    }
    // an earlier vertex left out with all neighbours decided and none taken is dead
    let starved = |inset: &Vec<bool>, upto: usize| {
        (0..upto).any(|a| !inset[a] && g.adj(a).iter().all(|&b| b < upto && !inset[b]))
    };
    if g.adj(v).iter().all(|&b| !inset[b]) {
        inset[v] = true;
        if !starved(inset, v + 1) {
            enumerate_rec(g, v + 1, inset, out);
        }
        inset[v] = false;
    }
    if !starved(inset, v + 1) {
        enumerate_rec(g, v + 1, inset, out);
    }
}

/// The MISs of `g` that pass [`is_robust_mis`].
pub fn enumerate_robust_mis(g: &Graph, cfg: &OracleConfig) -> Result<Vec<MisSet>> {
    g.require_connected()?;
    let all = enumerate_mis(g, cfg)?;
    let mut out = Vec::new();
    for s in all {
        if is_robust_mis(g, &s)? {
            out.push(s);
        }
    }
    Ok(out)
}
