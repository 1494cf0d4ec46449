//! Polynomial search for a robust MIS.
//!
//! Acyclic graphs take a shortcut: either colour class of a 2-colouring is
//! robust. Otherwise the ABC-tree is rooted at a component, every node is
//! labeled bottom-up with the kinds of robust MIS its subtree admits
//! relative to its attachment point, and each component is solved as a
//! 2-SAT instance over the labels of its articulation points.
//!
//! Tags, for a non-root node x with attachment point a:
//! - `PI`: the subtree has a robust MIS containing a;
//! - `PO`: it has one avoiding a;
//! - `PE`: no `PO`, but one exists once a has an extra neighbour outside;
//! - `N`: none of the above, which poisons every ancestor;
//! - `E`: the root's final answer.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::abc::{build_abc_tree, AbcNode, RootedAbcTree};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::oracle::MisSet;
use crate::twosat::{Literal, TwoSatFormula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Tag {
    #[serde(rename = "PI")]
    Pi,
    #[serde(rename = "PO")]
    Po,
    #[serde(rename = "PE")]
    Pe,
    N,
    E,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Pi => "PI",
            Tag::Po => "PO",
            Tag::Pe => "PE",
            Tag::N => "N",
            Tag::E => "E",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Label {
    pub tag: Tag,
    pub set: MisSet,
}

/// At most one witness per tag.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelSet(BTreeMap<Tag, MisSet>);

impl LabelSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(tag: Tag, set: MisSet) -> Self {
        LabelSet(BTreeMap::from([(tag, set)]))
    }

    pub fn none() -> Self {
        Self::single(Tag::N, MisSet::new())
    }

    pub fn get(&self, tag: Tag) -> Option<&MisSet> {
        self.0.get(&tag)
    }

    pub fn has(&self, tag: Tag) -> bool {
        self.0.contains_key(&tag)
    }

    pub fn insert(&mut self, tag: Tag, set: MisSet) {
        self.0.insert(tag, set);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_none_label(&self) -> bool {
        self.has(Tag::N)
    }

    /// True when the set holds exactly one label, of type `tag`.
    pub fn is_only(&self, tag: Tag) -> bool {
        self.0.len() == 1 && self.has(tag)
    }

    pub fn tags(&self) -> impl Iterator<Item = Tag> + '_ {
        self.0.keys().copied()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.0
            .iter()
            .map(|(&tag, set)| Label {
                tag,
                set: set.clone(),
            })
            .collect()
    }

    /// The PO witness, falling back to PE.
    fn outside(&self) -> Option<&MisSet> {
        self.get(Tag::Po).or_else(|| self.get(Tag::Pe))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (tag, set)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({tag},{{{set}}})")?;
        }
        Ok(())
    }
}

/// Labeling state for one rooted tree run.
pub struct Labeler<'a> {
    g: &'a Graph,
    rt: &'a RootedAbcTree,
    labels: Vec<LabelSet>,
    a_node: BTreeMap<VertexId, usize>,
    notes: Vec<String>,
}

impl<'a> Labeler<'a> {
    pub fn new(g: &'a Graph, rt: &'a RootedAbcTree) -> Self {
        let a_node = rt
            .tree()
            .nodes()
            .iter()
            .enumerate()
            .filter_map(|(i, n)| match n {
                AbcNode::Articulation(v) => Some((*v, i)),
                _ => None,
            })
            .collect();
        Labeler {
            g,
            rt,
            labels: vec![LabelSet::new(); rt.tree().len()],
            a_node,
            notes: Vec::new(),
        }
    }

    pub fn labels(&self) -> &[LabelSet] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &LabelSet {
        &self.labels[x]
    }

    /// Diagnostics gathered while labeling.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn into_parts(self) -> (Vec<LabelSet>, Vec<String>) {
        (self.labels, self.notes)
    }

    /// Labels every node of the subtree at `x`, children first.
    pub fn label_subtree(&mut self, x: usize) -> Result<()> {
        let mut order = self.rt.subtree_nodes(x);
        order.reverse();
        for y in order {
            self.label_node(y)?;
        }
        Ok(())
    }

    fn label_node(&mut self, x: usize) -> Result<()> {
        if self
            .rt
            .children(x)
            .iter()
            .any(|&c| self.labels[c].is_none_label())
        {
            self.labels[x] = LabelSet::none();
            return Ok(());
        }
        match self.rt.node(x) {
            AbcNode::Articulation(_) => self.label_node_a(x),
            AbcNode::Bridge(_) => self.label_node_b(x),
            AbcNode::Component(_) => self.label_node_c(x)?,
            AbcNode::Pendant(v) => {
                let mut l = LabelSet::single(Tag::Pi, MisSet::from_iter([*v]));
                l.insert(Tag::Pe, MisSet::new());
                self.labels[x] = l;
            }
        }
        // An articulation point whose children agree on no common tag has
        // no robust completion at all.
        if self.labels[x].is_empty() {
            self.labels[x] = LabelSet::none();
        }
        Ok(())
    }

    pub fn label_node_a(&mut self, x: usize) {
        let children = self.rt.children(x);
        let union = |pick: &dyn Fn(&LabelSet) -> Option<&MisSet>| -> Option<MisSet> {
            let mut out = MisSet::new();
            for &c in children {
                out.extend(pick(&self.labels[c])?);
            }
            Some(out)
        };
        let pi = union(&|l| l.get(Tag::Pi));
        let pe = union(&|l| l.get(Tag::Pe));
        let any_po = children.iter().any(|&c| self.labels[c].has(Tag::Po));
        let po = if any_po {
            union(&|l| l.outside())
        } else {
            None
        };

        let mut l = LabelSet::new();
        for (tag, set) in [(Tag::Pi, pi), (Tag::Pe, pe), (Tag::Po, po)] {
            if let Some(set) = set {
                l.insert(tag, set);
            }
        }
        self.labels[x] = l;
    }

    pub fn label_node_b(&mut self, x: usize) {
        let c = self.rt.children(x)[0];
        let parent = self
            .rt
            .attachment_point(x)
            .expect("bridge below an articulation point");
        let child = &self.labels[c];
        let mut l = LabelSet::new();
        if let Some(r) = child.get(Tag::Pi) {
            l.insert(Tag::Po, r.clone());
        }
        if let Some(r) = child.get(Tag::Po) {
            let mut with_parent = r.clone();
            with_parent.insert(parent);
            l.insert(Tag::Pi, with_parent);
            if !l.has(Tag::Po) {
                l.insert(Tag::Pe, r.clone());
            }
        }
        if let Some(r) = child.get(Tag::Pe) {
            let mut with_parent = r.clone();
            with_parent.insert(parent);
            l.insert(Tag::Pi, with_parent);
        }
        self.labels[x] = l;
    }

    pub fn label_node_c(&mut self, x: usize) -> Result<()> {
        let p = self.rt.parent(x).expect("non-root component has a parent");
        let a = self
            .rt
            .attachment_point(x)
            .expect("component hangs off an articulation point");
        let mut l = LabelSet::new();
        if let Some(r) = self.test_rmis(x, &[a], &[])? {
            l.insert(Tag::Pi, r);
        }
        if let Some(r) = self.test_rmis(x, &[], &[a])? {
            l.insert(Tag::Po, r);
        } else {
            let saved = std::mem::replace(
                &mut self.labels[p],
                LabelSet::single(Tag::Po, MisSet::new()),
            );
            if !saved.is_empty() {
                self.notes.push(format!(
                    "parent {} already labeled {saved} during probe of {}",
                    self.rt.node(p),
                    self.rt.node(x)
                ));
            }
            let probe = self.test_rmis(x, &[], &[]);
            self.labels[p] = saved;
            if let Some(r) = probe? {
                l.insert(Tag::Pe, r);
            }
        }
        self.labels[x] = l;
        Ok(())
    }

    fn vertex_label(&self, v: VertexId) -> Option<&LabelSet> {
        self.a_node.get(&v).map(|&i| &self.labels[i])
    }

    /// Solves component `x` under the current labels of its articulation
    /// points, forcing `inside` into and `outside` out of the set. Returns
    /// the assembled robust MIS of the subtree, or `None`.
    pub fn test_rmis(
        &self,
        x: usize,
        inside: &[VertexId],
        outside: &[VertexId],
    ) -> Result<Option<MisSet>> {
        let AbcNode::Component(vs) = self.rt.node(x) else {
            return Err(Error::NotAComponent(x));
        };
        let c = self.g.induced_subgraph(vs)?;
        let has_po = |v: VertexId| self.vertex_label(v).is_some_and(|l| l.has(Tag::Po));
        let removed: Vec<Edge> = c
            .edges()
            .into_iter()
            .filter(|e| has_po(e.u()) && has_po(e.v()))
            .collect();
        let rest = c.remove_edges(&removed)?;
        let Some(color) = rest.two_coloring() else {
            return Ok(None);
        };

        let parts = rest.components();
        let mut var = vec![0; c.n()];
        for (k, part) in parts.iter().enumerate() {
            for &v in part {
                var[c.index_of(v).unwrap()] = k;
            }
        }
        // The side holding a part's smallest id (colour false) is positive.
        let lit = |v: VertexId| {
            let i = c.index_of(v).unwrap();
            Literal {
                var: var[i],
                positive: !color[i],
            }
        };

        let mut f = TwoSatFormula::new(parts.len());
        for &v in vs {
            let Some(l) = self.vertex_label(v) else {
                continue;
            };
            if l.is_only(Tag::Pi) {
                f.add_unit(lit(v))?;
            } else if l.is_only(Tag::Po) || l.is_only(Tag::Pe) {
                f.add_unit(lit(v).negate())?;
            }
        }
        for e in &removed {
            f.add_clause(lit(e.u()).negate(), lit(e.v()).negate())?;
        }
        for &v in inside {
            f.add_unit(lit(v))?;
        }
        for &v in outside {
            f.add_unit(lit(v).negate())?;
        }
        let Some(assignment) = f.solve() else {
            return Ok(None);
        };

        let chosen: MisSet = vs
            .iter()
            .copied()
            .filter(|&v| lit(v).eval(&assignment))
            .collect();
        let mut out = chosen.clone();
        for &child in self.rt.children(x) {
            let a = self
                .rt
                .node(child)
                .vertex()
                .expect("component children are articulation points");
            let l = &self.labels[child];
            let part = if chosen.contains(a) {
                l.get(Tag::Pi)
            } else {
                l.outside()
            };
            let part = part.ok_or(Error::MissingChildLabel {
                component: x,
                child,
            })?;
            out.extend(part);
        }
        Ok(Some(out))
    }
}

/// The answer carried by a finished root label.
pub fn decide(root: &LabelSet) -> Option<MisSet> {
    root.get(Tag::E).cloned()
}

/// Everything the search produced, for inspection.
#[derive(Debug, Clone)]
pub struct FindReport {
    pub result: Option<MisSet>,
    /// `None` for acyclic graphs, which skip the labeling phase.
    pub tree: Option<RootedAbcTree>,
    pub labels: Vec<LabelSet>,
    pub notes: Vec<String>,
}

impl FindReport {
    /// The rooted tree with each node's labels.
    pub fn render_trace(&self) -> String {
        match &self.tree {
            Some(rt) => rt.render_with(|x| Some(self.labels[x].to_string())),
            None => "acyclic: 2-colouring\n".to_string(),
        }
    }
}

/// A robust MIS of `g`, or `None` if it has none.
pub fn find_rmis(g: &Graph) -> Result<Option<MisSet>> {
    Ok(find_rmis_traced(g)?.result)
}

pub fn find_rmis_traced(g: &Graph) -> Result<FindReport> {
    let tree = build_abc_tree(g)?;
    let Some(rt) = tree.root_default() else {
        let color = g.two_coloring().expect("acyclic graphs are bipartite");
        let class = (0..g.n()).filter(|&i| !color[i]).map(|i| g.id(i)).collect();
        return Ok(FindReport {
            result: Some(class),
            tree: None,
            labels: Vec::new(),
            notes: Vec::new(),
        });
    };

    let root = rt.root();
    let mut labeler = Labeler::new(g, &rt);
    for &c in rt.children(root) {
        labeler.label_subtree(c)?;
    }
    let root_label = if rt
        .children(root)
        .iter()
        .any(|&c| labeler.label(c).is_none_label())
    {
        LabelSet::none()
    } else {
        match labeler.test_rmis(root, &[], &[])? {
            Some(m) => LabelSet::single(Tag::E, m),
            None => LabelSet::none(),
        }
    };
    labeler.labels[root] = root_label;
    let result = decide(&labeler.labels[root]);
    let (labels, notes) = labeler.into_parts();
    Ok(FindReport {
        result,
        tree: Some(rt),
        labels,
        notes,
    })
}
