//! Locally bipartitioned trees, their equivariant refinements, and the
//! associated links.

mod enumerate;
mod format;
mod link;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::IntersectionType;

pub use enumerate::{bipartitions, equivariant_trees, unlabeled_trees};
pub(crate) use enumerate::involutions;
pub use format::{format_tree, parse_tree, tree_to_dot, TreeFile};
pub use link::{associated_link, associated_link_parts, associated_si_link};

/// The two classes of a vertex bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Part {
    P,
    Q,
}

impl Part {
    pub fn other(self) -> Self {
        match self {
            Part::P => Part::Q,
            Part::Q => Part::P,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::P => "P",
            Part::Q => "Q",
        })
    }
}

/// An edge with the class it belongs to at each endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub side_a: Part,
    pub side_b: Part,
}

impl TreeEdge {
    pub fn new(a: usize, b: usize, side_a: Part, side_b: Part) -> Self {
        Self { a, b, side_a, side_b }
    }

    pub fn side_at(&self, v: usize) -> Option<Part> {
        if v == self.a {
            Some(self.side_a)
        } else if v == self.b {
            Some(self.side_b)
        } else {
            None
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// One failed condition. Condition 0 covers the tree structure itself.
#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
#[error("condition {condition}{}: {message}", vertex_suffix(.vertex))]
pub struct TreeViolation {
    pub condition: u8,
    pub vertex: Option<usize>,
    pub message: String,
}

fn vertex_suffix(v: &Option<usize>) -> String {
    v.map(|v| format!(" at vertex {}", v + 1)).unwrap_or_default()
}

fn violation(condition: u8, vertex: Option<usize>, message: impl Into<String>) -> TreeViolation {
    TreeViolation { condition, vertex, message: message.into() }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid tree: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<TreeViolation>),
    #[error("target size {0} is even")]
    EvenSize(usize),
    #[error("target size {k} is outside 1..={n}")]
    OutOfRange { k: usize, n: usize },
    #[error("no removable pair of A leaves in\n{0}")]
    Stuck(String),
    #[error("missing weights or involution")]
    NotEquivariant,
}

/// A finite tree with a bipartition of the edges at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionedTree {
    pub n: usize,
    pub edges: Vec<TreeEdge>,
    /// Vertices whose Hopf link is the negative one.
    pub negative: Vec<bool>,
}

impl BipartitionedTree {
    pub fn new(n: usize, edges: Vec<TreeEdge>) -> Self {
        Self { n, edges, negative: vec![false; n] }
    }

    pub fn single() -> Self {
        Self::new(1, Vec::new())
    }

    /// Indices of the edges at `v`.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].side_at(v).is_some()).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).len()
    }

    /// Edge indices in class `part` at `v`.
    pub fn class(&self, v: usize, part: Part) -> BTreeSet<usize> {
        self.incident(v).into_iter().filter(|&i| self.edges[i].side_at(v) == Some(part)).collect()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|e| (e.a, e.b) == (u, v) || (e.a, e.b) == (v, u))
    }

    pub fn validate(&self) -> Result<(), Vec<TreeViolation>> {
        let mut out = Vec::new();
        if self.n == 0 {
            out.push(violation(0, None, "tree has no vertices"));
            return Err(out);
        }
        if self.negative.len() != self.n {
            out.push(violation(0, None, "handedness list does not match the vertex count"));
        }
        if self.edges.len() + 1 != self.n {
            out.push(violation(0, None, format!("{} edges for {} vertices", self.edges.len(), self.n)));
        }
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if e.a >= self.n || e.b >= self.n {
                out.push(violation(0, None, format!("edge {}-{} uses an unknown vertex", e.a + 1, e.b + 1)));
                return Err(out);
            }
            if e.a == e.b {
                out.push(violation(0, Some(e.a), "loop edge"));
            }
            if !seen.insert((e.a.min(e.b), e.a.max(e.b))) {
                out.push(violation(0, Some(e.a), format!("repeated edge {}-{}", e.a + 1, e.b + 1)));
            }
        }
        let mut reached = vec![false; self.n];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for i in self.incident(v) {
                let w = self.edges[i].other(v);
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = reached.iter().position(|r| !r) {
            out.push(violation(0, Some(v), "not connected to vertex 1"));
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Removes vertex `v` and its edges, renumbering the rest in order.
    fn remove_vertices(&self, gone: &BTreeSet<usize>) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|v| !gone.contains(v)).collect();
        let index = |v: usize| keep.iter().position(|&k| k == v);
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some(TreeEdge { a: index(e.a)?, b: index(e.b)?, ..*e }))
            .collect();
        Self { n: keep.len(), edges, negative: keep.iter().map(|&v| self.negative[v]).collect() }
    }
}

/// A bipartitioned tree with an involution and weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantTree {
    pub base: BipartitionedTree,
    pub rho: Vec<usize>,
    pub weights: Vec<IntersectionType>,
}

impl EquivariantTree {
    pub fn n(&self) -> usize {
        self.base.n
    }

    /// The single vertex of the given on-axis weight.
    pub fn single(weight: IntersectionType) -> Self {
        Self { base: BipartitionedTree::single(), rho: vec![0], weights: vec![weight] }
    }

    pub fn fixed_vertices(&self) -> Vec<usize> {
        (0..self.rho.len()).filter(|&v| self.rho[v] == v).collect()
    }

    /// The image of edge `i` under rho, when rho maps it onto an edge.
    pub fn rho_edge(&self, i: usize) -> Option<usize> {
        let e = self.base.edges[i];
        self.base.edge_between(*self.rho.get(e.a)?, *self.rho.get(e.b)?)
    }

    fn rho_set(&self, set: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        set.iter().map(|&i| self.rho_edge(i)).collect()
    }

    pub fn validate(&self) -> Result<(), Vec<TreeViolation>> {
        self.base.validate()?;
        let n = self.n();
        let mut out = Vec::new();
        if self.rho.len() != n || self.weights.len() != n || self.rho.iter().any(|&r| r >= n) {
            out.push(violation(1, None, "involution or weights do not cover the vertices"));
            return Err(out);
        }
        for v in 0..n {
            if self.rho[self.rho[v]] != v {
                out.push(violation(1, Some(v), "rho is not an involution"));
            }
        }
        for i in 0..self.base.edges.len() {
            if self.rho_edge(i).is_none() {
                let e = self.base.edges[i];
                out.push(violation(1, Some(e.a), format!("rho does not map edge {}-{} to an edge", e.a + 1, e.b + 1)));
            }
        }
        if !out.is_empty() {
            return Err(out);
        }
        let fixed = self.fixed_vertices();
        if fixed.len() != 1 {
            out.push(violation(1, None, format!("rho fixes {} vertices, not exactly one", fixed.len())));
        }
        for v in 0..n {
            let p = self.base.class(v, Part::P);
            let image = self.rho_set(&p).expect("automorphism checked");
            let r = self.rho[v];
            match self.weights[v] {
                IntersectionType::A => {
                    if r == v {
                        out.push(violation(2, Some(v), "weight A on a fixed vertex"));
                    } else {
                        if self.weights[r] != IntersectionType::A {
                            out.push(violation(2, Some(v), format!("partner {} is not weight A", r + 1)));
                        }
                        if image != self.base.class(r, Part::P) && image != self.base.class(r, Part::Q) {
                            out.push(violation(2, Some(v), "rho(P) is not a class of the partner"));
                        }
                    }
                }
                IntersectionType::BPlus | IntersectionType::BMinus => {
                    if r != v {
                        out.push(violation(3, Some(v), "weight B on a moved vertex"));
                    } else if image != self.base.class(v, Part::Q) {
                        out.push(violation(3, Some(v), "rho(P) != Q"));
                    }
                }
                IntersectionType::C => {
                    if r != v {
                        out.push(violation(4, Some(v), "weight C on a moved vertex"));
                    } else if image != p {
                        out.push(violation(4, Some(v), "rho(P) != P"));
                    }
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// The weight of the fixed vertex.
    pub fn tree_type(&self) -> Result<IntersectionType, TreeError> {
        self.validate().map_err(TreeError::Invalid)?;
        Ok(self.weights[self.fixed_vertices()[0]])
    }

    /// Removes rho-paired A leaves, highest index first, until `k` vertices remain.
    pub fn prune_to_size(&self, k: usize) -> Result<Self, TreeError> {
        self.prune_to_size_mapped(k).map(|(t, _)| t)
    }

    /// As [`Self::prune_to_size`], also returning the original index of each kept vertex.
    pub fn prune_to_size_mapped(&self, k: usize) -> Result<(Self, Vec<usize>), TreeError> {
        self.validate().map_err(TreeError::Invalid)?;
        if k.is_multiple_of(2) {
            return Err(TreeError::EvenSize(k));
        }
        if k == 0 || k > self.n() {
            return Err(TreeError::OutOfRange { k, n: self.n() });
        }
        let mut cur = self.clone();
        let mut origin: Vec<usize> = (0..self.n()).collect();
        while cur.n() > k {
            let leaf = (0..cur.n()).rev().find(|&v| {
                let r = cur.rho[v];
                r != v
                    && cur.weights[v] == IntersectionType::A
                    && cur.base.degree(v) == 1
                    && cur.base.degree(r) == 1
                    && cur.base.edge_between(v, r).is_none()
            });
            let Some(v) = leaf else {
                return Err(TreeError::Stuck(format_tree(&TreeFile::equivariant("stuck", cur))));
            };
            let gone = [origin[v], origin[cur.rho[v]]];
            origin.retain(|o| !gone.contains(o));
            cur = cur.without_pair(v);
        }
        Ok((cur, origin))
    }

    /// The same tree with mirrored weights and Hopf links.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        out.weights = self.weights.iter().map(|w| w.mirror()).collect();
        out.base.negative = self.base.negative.iter().map(|n| !n).collect();
        out
    }

    fn without_pair(&self, v: usize) -> Self {
        let gone: BTreeSet<usize> = [v, self.rho[v]].into_iter().collect();
        let base = self.base.remove_vertices(&gone);
        let keep: Vec<usize> = (0..self.n()).filter(|u| !gone.contains(u)).collect();
        let index = |u: usize| keep.iter().position(|&k| k == u).expect("kept vertex");
        Self {
            base,
            rho: keep.iter().map(|&u| index(self.rho[u])).collect(),
            weights: keep.iter().map(|&u| self.weights[u]).collect(),
        }
    }
}
