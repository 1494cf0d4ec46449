//! 2-SAT over an implication graph.
//!
//! Satisfiability comes from the strongly connected components of the
//! implication graph. The witness is then fixed variable by variable in
//! index order, trying `false` first and propagating implications, which
//! keeps the result deterministic and biased towards small true-sets.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negate(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    vars: usize,
    clauses: Vec<(Literal, Literal)>,
}

impl TwoSatFormula {
    pub fn new(vars: usize) -> Self {
        TwoSatFormula {
            vars,
            clauses: Vec::new(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Literal, b: Literal) -> Result<()> {
        for l in [a, b] {
            if l.var >= self.vars {
                return Err(Error::VariableOutOfRange {
                    var: l.var,
                    count: self.vars,
                });
            }
        }
        self.clauses.push((a, b));
        Ok(())
    }

    /// Stored as the clause `(l ∨ l)`.
    pub fn add_unit(&mut self, l: Literal) -> Result<()> {
        self.add_clause(l, l)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }

    fn implication_graph(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); 2 * self.vars];
        for &(a, b) in &self.clauses {
            out[a.negate().node()].push(b.node());
            out[b.negate().node()].push(a.node());
        }
        out
    }

    pub fn is_satisfiable(&self) -> bool {
        let scc = tarjan(&self.implication_graph());
        (0..self.vars).all(|v| scc[2 * v] != scc[2 * v + 1])
    }

    /// A satisfying assignment, or `None`. Deterministic for a given formula.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let graph = self.implication_graph();
        let scc = tarjan(&graph);
        if (0..self.vars).any(|v| scc[2 * v] == scc[2 * v + 1]) {
            return None;
        }
        let mut value: Vec<Option<bool>> = vec![None; self.vars];
        let mut trail = Vec::new();
        for var in 0..self.vars {
            if value[var].is_some() {
                continue;
            }
            if !propagate(&graph, Literal::neg(var), &mut value, &mut trail) {
                for v in trail.drain(..) {
                    value[v] = None;
                }
                let ok = propagate(&graph, Literal::pos(var), &mut value, &mut trail);
                debug_assert!(ok, "satisfiable formula cannot conflict on both polarities");
            }
            trail.clear();
        }
        Some(value.into_iter().map(|v| v.unwrap_or(false)).collect())
    }
}

/// Sets `lit` and everything it implies; records newly fixed variables in
/// `trail`. False on contradiction.
fn propagate(
    graph: &[Vec<usize>],
    lit: Literal,
    value: &mut [Option<bool>],
    trail: &mut Vec<usize>,
) -> bool {
    let mut stack = vec![lit.node()];
    while let Some(node) = stack.pop() {
        let (var, truth) = (node / 2, node % 2 == 0);
        match value[var] {
            Some(t) if t == truth => continue,
            Some(_) => return false,
            None => {
                value[var] = Some(truth);
                trail.push(var);
                stack.extend(graph[node].iter().copied());
            }
        }
    }
    true
}

/// Iterative Tarjan; returns the component index of every node.
fn tarjan(graph: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = graph.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut path = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut timer = 0;
    let mut comps = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge == 0 {
                index[v] = timer;
                low[v] = timer;
                timer += 1;
                path.push(v);
                on_stack[v] = true;
            }
            if *edge < graph[v].len() {
                let w = graph[v][*edge];
                *edge += 1;
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if low[v] == index[v] {
                loop {
                    let w = path.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = comps;
                    if w == v {
                        break;
                    }
                }
                comps += 1;
            }
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[v]);
            }
        }
    }
    comp
}
