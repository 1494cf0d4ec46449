//! The ABC-tree: articulation points (A), bridges (B), components with at
//! least three vertices (C) and pendant vertices (P), joined into a tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AbcNode {
    Articulation(VertexId),
    Bridge(Edge),
    /// Sorted vertex set of a biconnected component.
    Component(Vec<VertexId>),
    Pendant(VertexId),
}

impl AbcNode {
    pub fn kind(&self) -> char {
        match self {
            AbcNode::Articulation(_) => 'A',
            AbcNode::Bridge(_) => 'B',
            AbcNode::Component(_) => 'C',
            AbcNode::Pendant(_) => 'P',
        }
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        match self {
            AbcNode::Articulation(v) | AbcNode::Pendant(v) => vec![*v],
            AbcNode::Bridge(e) => vec![e.u(), e.v()],
            AbcNode::Component(vs) => vs.clone(),
        }
    }

    /// The vertex an A- or P-node stands for.
    pub fn vertex(&self) -> Option<VertexId> {
        match self {
            AbcNode::Articulation(v) | AbcNode::Pendant(v) => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for AbcNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbcNode::Articulation(v) | AbcNode::Pendant(v) => write!(f, "{} {v}", self.kind()),
            AbcNode::Bridge(e) => write!(f, "B {e}"),
            AbcNode::Component(vs) => {
                f.write_str("C {")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// Nodes are ordered A, B, C, P and by content within a kind; node handles
/// are indices into [`AbcTree::nodes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcTree {
    nodes: Vec<AbcNode>,
    adj: Vec<Vec<usize>>,
}

pub fn build_abc_tree(g: &Graph) -> Result<AbcTree> {
    let d = decompose(g)?;
    let mut nodes: Vec<AbcNode> = Vec::new();
    nodes.extend(
        d.articulation_points
            .iter()
            .map(|&a| AbcNode::Articulation(a)),
    );
    nodes.extend(d.bridges.iter().map(|&e| AbcNode::Bridge(e)));
    nodes.extend(
        d.components
            .iter()
            .filter(|c| c.len() >= 3)
            .map(|c| AbcNode::Component(c.clone())),
    );
    nodes.extend(g.pendant_vertices().into_iter().map(AbcNode::Pendant));

    let mut by_vertex: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, node) in nodes.iter().enumerate() {
        if let Some(v) = node.vertex() {
            by_vertex.insert(v, i);
        }
    }
    let mut adj = vec![Vec::new(); nodes.len()];
    for (i, node) in nodes.iter().enumerate() {
        let attached: Vec<usize> = match node {
            AbcNode::Bridge(e) => vec![by_vertex[&e.u()], by_vertex[&e.v()]],
            AbcNode::Component(vs) => vs
                .iter()
                .filter_map(|v| by_vertex.get(v).copied())
                .collect(),
            _ => continue,
        };
        for j in attached {
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(AbcTree { nodes, adj })
}

impl AbcTree {
    pub fn nodes(&self) -> &[AbcNode] {
        &self.nodes
    }

    pub fn node(&self, x: usize) -> &AbcNode {
        &self.nodes[x]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| {
                self.adj[i]
                    .iter()
                    .filter(move |&&j| i < j)
                    .map(move |&j| (i, j))
            })
            .collect()
    }

    pub fn find(&self, node: &AbcNode) -> Option<usize> {
        self.nodes.iter().position(|n| n == node)
    }

    pub fn components(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| matches!(self.nodes[i], AbcNode::Component(_)))
    }

    /// The C-node whose smallest vertex is minimal, if any.
    pub fn default_root(&self) -> Option<usize> {
        self.components()
            .min_by_key(|&i| self.nodes[i].vertices()[0])
    }

    pub fn root_at(&self, r: usize) -> Result<RootedAbcTree> {
        if !matches!(self.nodes.get(r), Some(AbcNode::Component(_))) {
            return Err(Error::NotAComponent(r));
        }
        Ok(self.orient(r))
    }

    pub fn root_default(&self) -> Option<RootedAbcTree> {
        self.default_root().map(|r| self.orient(r))
    }

    fn orient(&self, r: usize) -> RootedAbcTree {
        let n = self.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([r]);
        seen[r] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    children[x].push(y);
                    queue.push_back(y);
                }
            }
        }
        RootedAbcTree {
            tree: self.clone(),
            root: r,
            parent,
            children,
            order,
        }
    }

    /// Indented text, rooted at the default root or, for acyclic graphs, at
    /// the first node.
    pub fn render_text(&self) -> String {
        match self.default_root() {
            Some(r) => self.orient(r).render_text(),
            None if self.is_empty() => String::new(),
            None => self.orient(0).render_text(),
        }
    }

    /// Graphviz: pendants are circles, articulation points diamonds,
    /// bridges boxes and components ellipses.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph abc {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let shape = match node {
                AbcNode::Articulation(_) => "diamond",
                AbcNode::Bridge(_) => "box",
                AbcNode::Component(_) => "ellipse",
                AbcNode::Pendant(_) => "circle",
            };
            let label = match node {
                AbcNode::Articulation(v) | AbcNode::Pendant(v) => v.to_string(),
                other => other.to_string()[2..].to_string(),
            };
            let _ = writeln!(out, "  n{i} [label=\"{label}\", shape={shape}];");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  n{i} -- n{j};");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedAbcTree {
    tree: AbcTree,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl RootedAbcTree {
    pub fn tree(&self) -> &AbcTree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, x: usize) -> &AbcNode {
        self.tree.node(x)
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    pub fn children(&self, x: usize) -> &[usize] {
        &self.children[x]
    }

    /// Nodes in breadth-first order from the root.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// AP(x): the vertex itself for A/P nodes, the parent's vertex for B/C
    /// nodes. `None` only for the root.
    pub fn attachment_point(&self, x: usize) -> Option<VertexId> {
        match self.tree.node(x) {
            AbcNode::Articulation(v) | AbcNode::Pendant(v) => Some(*v),
            _ => self.parent[x].and_then(|p| self.tree.node(p).vertex()),
        }
    }

    pub fn subtree_nodes(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            out.push(y);
            stack.extend(self.children[y].iter().rev());
        }
        out
    }

    pub fn render_text(&self) -> String {
        self.render_with(|_| None)
    }

    /// Indented rendering with an optional annotation per node.
    pub fn render_with(&self, annotate: impl Fn(usize) -> Option<String>) -> String {
        let mut out = String::new();
        let mut stack = vec![(self.root, 0)];
        while let Some((x, depth)) = stack.pop() {
            let _ = write!(
                out,
                "{:indent$}{}",
                "",
                self.tree.node(x),
                indent = 2 * depth
            );
            if let Some(note) = annotate(x) {
                let _ = write!(out, "  {note}");
            }
            out.push('\n');
            stack.extend(self.children[x].iter().rev().map(|&c| (c, depth + 1)));
        }
        out
    }
}

/// G(T(x)): the union of the vertices and edges contributed by the subtree
/// rooted at `x`.
pub fn induced_subgraph_of_subtree(g: &Graph, rt: &RootedAbcTree, x: usize) -> Result<Graph> {
    let (vs, es) = subtree_parts(g, rt, x)?;
    Graph::from_parts(vs, es.into_iter().map(|e| e.endpoints()))
}

/// G_a(T(x)): the subtree graph plus a fresh vertex adjacent only to AP(x).
/// The fresh id is one more than the largest id of `g`.
pub fn aerial_subgraph_of_subtree(
    g: &Graph,
    rt: &RootedAbcTree,
    x: usize,
) -> Result<(Graph, VertexId)> {
    let ap = rt.attachment_point(x).ok_or(Error::RootHasNoAttachment)?;
    let (vs, mut es) = subtree_parts(g, rt, x)?;
    let aerial = VertexId(g.max_id().0 + 1);
    es.insert(Edge::new(ap, aerial));
    let graph = Graph::from_parts(vs, es.into_iter().map(|e| e.endpoints()))?;
    Ok((graph, aerial))
}

fn subtree_parts(
    g: &Graph,
    rt: &RootedAbcTree,
    x: usize,
) -> Result<(BTreeSet<VertexId>, BTreeSet<Edge>)> {
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    for y in rt.subtree_nodes(x) {
        match rt.node(y) {
            AbcNode::Articulation(v) | AbcNode::Pendant(v) => {
                vs.insert(*v);
            }
            AbcNode::Bridge(e) => {
                es.insert(*e);
            }
            AbcNode::Component(c) => {
                vs.extend(c.iter().copied());
                es.extend(g.induced_subgraph(c)?.edges());
            }
        }
    }
    Ok((vs, es))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Graph {
        Graph::from_edge_list(text).unwrap()
    }

    fn v(x: u32) -> VertexId {
        VertexId(x)
    }

    // bull: a=0 b=1 c=2 d=3 e=4
    const BULL: &str = "0 1\n1 2\n1 3\n2 3\n2 4";

    #[test]
    fn bull_tree() {
        let t = build_abc_tree(&g(BULL)).unwrap();
        assert_eq!(
            t.nodes(),
            &[
                AbcNode::Articulation(v(1)),
                AbcNode::Articulation(v(2)),
                AbcNode::Bridge(Edge::new(0, 1)),
                AbcNode::Bridge(Edge::new(2, 4)),
                AbcNode::Component(vec![v(1), v(2), v(3)]),
                AbcNode::Pendant(v(0)),
                AbcNode::Pendant(v(4)),
            ]
        );
        // path a-{a,b}-b-{b,c,d}-c-{c,e}-e
        let mut edges = t.edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (1, 4), (2, 5), (3, 6)]);
    }

    #[test]
    fn path_has_no_components() {
        let t = build_abc_tree(&g("0 1\n1 2")).unwrap();
        assert_eq!(t.components().count(), 0);
        assert_eq!(t.len(), 5);
        assert_eq!(t.edge_count(), 4);
        assert!(t.root_default().is_none());
        assert_eq!(t.root_at(0), Err(Error::NotAComponent(0)));
    }

    #[test]
    fn square_is_one_component() {
        let t = build_abc_tree(&g("0 1\n1 2\n2 3\n3 0")).unwrap();
        assert_eq!(
            t.nodes(),
            &[AbcNode::Component(vec![v(0), v(1), v(2), v(3)])]
        );
        let rt = t.root_at(0).unwrap();
        assert!(rt.children(0).is_empty());
        assert_eq!(rt.attachment_point(0), None);
    }

    #[test]
    fn bull_rooted() {
        let bull = g(BULL);
        let t = build_abc_tree(&bull).unwrap();
        let rt = t.root_default().unwrap();
        assert_eq!(rt.root(), 4);
        assert_eq!(rt.children(4), &[0, 1]);
        assert_eq!(rt.attachment_point(2), Some(v(1)));
        assert_eq!(rt.attachment_point(0), Some(v(1)));
        assert_eq!(rt.parent(5), Some(2));

        let sub = induced_subgraph_of_subtree(&bull, &rt, 1).unwrap();
        assert_eq!(sub, g("2 4"));
        assert_eq!(induced_subgraph_of_subtree(&bull, &rt, 4).unwrap(), bull);
        assert_eq!(induced_subgraph_of_subtree(&bull, &rt, 6).unwrap(), g("4"));

        let (aerial, w) = aerial_subgraph_of_subtree(&bull, &rt, 1).unwrap();
        assert_eq!(w, v(5));
        assert_eq!(aerial, g("2 4\n2 5"));
        let (leaf, w) = aerial_subgraph_of_subtree(&bull, &rt, 5).unwrap();
        assert_eq!(leaf, g("0 5"));
        assert_eq!(w, v(5));
        assert_eq!(
            aerial_subgraph_of_subtree(&bull, &rt, 4),
            Err(Error::RootHasNoAttachment)
        );
    }

    #[test]
    fn text_and_dot() {
        let t = build_abc_tree(&g(BULL)).unwrap();
        assert_eq!(
            t.render_text(),
            "C {1,2,3}\n  A 1\n    B {0,1}\n      P 0\n  A 2\n    B {2,4}\n      P 4\n"
        );
        let dot = t.to_dot();
        assert!(dot.contains("n0 [label=\"1\", shape=diamond];"));
        assert!(dot.contains("n5 [label=\"0\", shape=circle];"));
        assert!(dot.contains("n4 [label=\"{1,2,3}\", shape=ellipse];"));
        assert!(dot.contains("n2 [label=\"{0,1}\", shape=box];"));
    }

    #[test]
    fn acyclic_rendering_and_single_vertex() {
        let t = build_abc_tree(&g("0 1")).unwrap();
        assert_eq!(t.render_text(), "B {0,1}\n  P 0\n  P 1\n");
        assert!(build_abc_tree(&g("3")).unwrap().is_empty());
    }
}
