//! Simple undirected graphs over sparse integer vertex ids.
//!
//! Vertices are kept sorted by id and every algorithm works on the dense
//! index of a vertex in that order, so "smallest id" and "smallest index"
//! coincide.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(u: impl Into<VertexId>, v: impl Into<VertexId>) -> Self {
        Self::try_new(u, v).expect("edge endpoints must be distinct")
    }

    pub fn try_new(u: impl Into<VertexId>, v: impl Into<VertexId>) -> Option<Self> {
        let (u, v) = (u.into(), v.into());
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge(u, v)),
            std::cmp::Ordering::Greater => Some(Edge(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(&self) -> VertexId {
        self.0
    }

    pub fn v(&self) -> VertexId {
        self.1
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if x == self.0 {
            Some(self.1)
        } else if x == self.1 {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

/// Two-colouring of one connected component. `first` holds the part that
/// contains the component's smallest id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub first: Vec<VertexId>,
    pub second: Vec<VertexId>,
}

/// Induced radius-`r` neighbourhood of a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub graph: Graph,
    /// Vertices at distance exactly `r` that still have a neighbour outside.
    pub boundary: Vec<VertexId>,
}

impl Graph {
    /// Builds a graph from explicit vertices plus edges; edge endpoints are
    /// added implicitly and duplicate edges collapse.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator,
        V::Item: Into<VertexId>,
        E: IntoIterator,
        E::Item: Into<(VertexId, VertexId)>,
    {
        let mut vs: BTreeSet<VertexId> = vertices.into_iter().map(Into::into).collect();
        let mut es = BTreeSet::new();
        for e in edges {
            let (u, v) = e.into();
            let edge = Edge::try_new(u, v).ok_or(Error::SelfLoop { line: 0, vertex: u })?;
            vs.insert(u);
            vs.insert(v);
            es.insert(edge);
        }
        Self::assemble(vs, es)
    }

    /// Convenience constructor for tests and generators over `u32` pairs.
    pub fn from_pairs(
        vertices: impl IntoIterator<Item = u32>,
        edges: &[(u32, u32)],
    ) -> Result<Graph> {
        Self::from_parts(
            vertices.into_iter().map(VertexId),
            edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v))),
        )
    }

    fn assemble(vs: BTreeSet<VertexId>, es: BTreeSet<Edge>) -> Result<Graph> {
        if vs.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let ids: Vec<VertexId> = vs.into_iter().collect();
        let mut adj = vec![Vec::new(); ids.len()];
        for e in es {
            let a = ids.binary_search(&e.u()).expect("endpoint registered");
            let b = ids.binary_search(&e.v()).expect("endpoint registered");
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { ids, adj })
    }

    /// Parses the edge-list format: one `u v` pair per line, a lone id
    /// declares an isolated vertex, `#` starts a comment.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut vs = BTreeSet::new();
        let mut es = BTreeSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let parse = |tok: &str| {
                tok.parse::<u32>().map(VertexId).map_err(|_| Error::Parse {
                    line,
                    message: format!("expected a non-negative integer, found {tok:?}"),
                })
            };
            let toks: Vec<&str> = content.split_whitespace().collect();
            match toks.as_slice() {
                [v] => {
                    vs.insert(parse(v)?);
                }
                [u, v] => {
                    let (u, v) = (parse(u)?, parse(v)?);
                    let edge = Edge::try_new(u, v).ok_or(Error::SelfLoop { line, vertex: u })?;
                    vs.insert(u);
                    vs.insert(v);
                    es.insert(edge);
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected `u v` or a single vertex, found {content:?}"),
                    })
                }
            }
        }
        Self::assemble(vs, es)
    }

    /// Inverse of [`Graph::from_edge_list`]: edges sorted lexicographically,
    /// then isolated vertices.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in self.edges() {
            let _ = writeln!(out, "{} {}", e.u(), e.v());
        }
        for (i, &id) in self.ids.iter().enumerate() {
            if self.adj[i].is_empty() {
                let _ = writeln!(out, "{id}");
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    /// Dense index of `v` in sorted-id order.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn idx(&self, v: VertexId) -> Result<usize> {
        self.index_of(v).ok_or(Error::UnknownVertex(v))
    }

    pub fn id(&self, index: usize) -> VertexId {
        self.ids[index]
    }

    /// Neighbour indices of the vertex at dense index `index`, ascending.
    pub fn adj(&self, index: usize) -> &[usize] {
        &self.adj[index]
    }

    pub fn max_id(&self) -> VertexId {
        *self.ids.last().expect("graphs are non-empty")
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let list: &[usize] = self
            .index_of(v)
            .map(|i| self.adj[i].as_slice())
            .unwrap_or(&[]);
        list.iter().map(move |&j| self.ids[j])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.index_of(v).map_or(0, |i| self.adj[i].len())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.adj[a].binary_search(&b).is_ok(),
            _ => false,
        }
    }

    /// All edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list {
                if a < b {
                    out.push(Edge(self.ids[a], self.ids[b]));
                }
            }
        }
        out
    }

    /// Breadth-first distances from `src` (dense index); `None` if unreachable.
    pub fn bfs_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::from([src]);
        dist[src] = Some(0);
        while let Some(a) = queue.pop_front() {
            let d = dist[a].unwrap();
            for &b in &self.adj[a] {
                if dist[b].is_none() {
                    dist[b] = Some(d + 1);
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from(0).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(a) = stack.pop() {
                comp.push(self.ids[a]);
                for &b in &self.adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn pendant_vertices(&self) -> Vec<VertexId> {
        (0..self.n())
            .filter(|&i| self.adj[i].len() == 1)
            .map(|i| self.ids[i])
            .collect()
    }

    /// Proper two-colouring by index, each component started from its
    /// smallest vertex with colour `false`. `None` if some component has an
    /// odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(a) = queue.pop_front() {
                let ca = color[a].unwrap();
                for &b in &self.adj[a] {
                    match color[b] {
                        None => {
                            color[b] = Some(!ca);
                            queue.push_back(b);
                        }
                        Some(cb) if cb == ca => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// One bipartition per connected component, or `None` if not 2-colourable.
    pub fn is_bipartite(&self) -> Option<Vec<Bipartition>> {
        let color = self.two_coloring()?;
        let parts = self
            .components()
            .into_iter()
            .map(|comp| {
                let (first, second) = comp
                    .into_iter()
                    .partition(|&v| !color[self.index_of(v).unwrap()]);
                Bipartition { first, second }
            })
            .collect();
        Some(parts)
    }

    pub fn ball(&self, v: VertexId, r: usize) -> Result<Ball> {
        let src = self.idx(v)?;
        let dist = self.bfs_from(src);
        let inside: Vec<usize> = (0..self.n())
            .filter(|&i| matches!(dist[i], Some(d) if d <= r))
            .collect();
        let boundary = inside
            .iter()
            .copied()
            .filter(|&i| dist[i] == Some(r))
            .filter(|&i| {
                self.adj[i]
                    .iter()
                    .any(|&j| !matches!(dist[j], Some(d) if d <= r))
            })
            .map(|i| self.ids[i])
            .collect();
        let graph = self.induced_by_index(&inside);
        Ok(Ball { graph, boundary })
    }

    pub fn diameter(&self) -> Result<usize> {
        self.require_connected()?;
        Ok((0..self.n())
            .map(|s| self.bfs_from(s).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    pub fn remove_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut out = self.clone();
        for e in edges {
            let a = self.index_of(e.u()).ok_or(Error::UnknownEdge(*e))?;
            let b = self.index_of(e.v()).ok_or(Error::UnknownEdge(*e))?;
            match out.adj[a].binary_search(&b) {
                Ok(pos) => {
                    out.adj[a].remove(pos);
                    let pos = out.adj[b].binary_search(&a).unwrap();
                    out.adj[b].remove(pos);
                }
                Err(_) if self.has_edge(e.u(), e.v()) => {} // listed twice
                Err(_) => return Err(Error::UnknownEdge(*e)),
            }
        }
        Ok(out)
    }

    /// Subgraph induced by `vs`; unknown ids are an error.
    pub fn induced_subgraph(&self, vs: &[VertexId]) -> Result<Graph> {
        let mut idx = vs
            .iter()
            .map(|&v| self.idx(v))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        if idx.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.induced_by_index(&idx))
    }

    /// `sorted` must be ascending and non-empty.
    fn induced_by_index(&self, sorted: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (k, &i) in sorted.iter().enumerate() {
            local[i] = k;
        }
        let ids = sorted.iter().map(|&i| self.ids[i]).collect();
        let adj = sorted
            .iter()
            .map(|&i| {
                self.adj[i]
                    .iter()
                    .filter_map(|&j| (local[j] != usize::MAX).then_some(local[j]))
                    .collect()
            })
            .collect();
        Graph { ids, adj }
    }

    /// Graphviz rendering; `style` may attach extra attributes per vertex.
    pub fn to_dot(&self, style: impl Fn(VertexId) -> Option<String>) -> String {
        let mut out = String::from("graph G {\n");
        for &v in &self.ids {
            match style(v) {
                Some(attrs) => {
                    let _ = writeln!(out, "  {v} [{attrs}];");
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for e in self.edges() {
            let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
        }
        out.push_str("}\n");
        out
    }
}
