//! Text and DOT forms of trees.
//!
//! ```text
//! name: path3
//! vertex 1 A
//! vertex 2 B+
//! vertex 3 A -
//! edge 1 2 P P
//! edge 2 3 Q P
//! rho 1 3
//! ```
//!
//! `edge u v S T` puts the edge in class `S` at `u` and `T` at `v`. A trailing
//! `-` on a vertex selects the negative Hopf link. Weights are optional but
//! all-or-nothing; vertices missing from `rho` lines are fixed.

use std::fmt::Write as _;

use super::{BipartitionedTree, EquivariantTree, Part, TreeEdge, TreeError};
use crate::IntersectionType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeFile {
    pub name: String,
    pub tree: BipartitionedTree,
    pub rho: Vec<usize>,
    pub weights: Option<Vec<IntersectionType>>,
}

impl TreeFile {
    pub fn plain(name: impl Into<String>, tree: BipartitionedTree) -> Self {
        let rho = (0..tree.n).collect();
        Self { name: name.into(), tree, rho, weights: None }
    }

    pub fn equivariant(name: impl Into<String>, t: EquivariantTree) -> Self {
        Self { name: name.into(), tree: t.base, rho: t.rho, weights: Some(t.weights) }
    }

    pub fn to_equivariant(&self) -> Result<EquivariantTree, TreeError> {
        let weights = self.weights.clone().ok_or(TreeError::NotEquivariant)?;
        Ok(EquivariantTree { base: self.tree.clone(), rho: self.rho.clone(), weights })
    }
}

fn parse_part(s: &str, line: usize) -> Result<Part, TreeError> {
    match s {
        "P" | "p" => Ok(Part::P),
        "Q" | "q" => Ok(Part::Q),
        _ => Err(TreeError::Parse { line, msg: format!("expected P or Q, got {s:?}") }),
    }
}

pub fn parse_tree(text: &str) -> Result<TreeFile, TreeError> {
    let mut name = String::from("tree");
    let mut vertices: Vec<(usize, Option<IntersectionType>, bool)> = Vec::new();
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("name:") {
            name = rest.trim().to_string();
            continue;
        }
        let err = |msg: String| TreeError::Parse { line, msg };
        let words: Vec<&str> = body.split_whitespace().collect();
        let id = |s: &str| -> Result<usize, TreeError> {
            match s.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(TreeError::Parse { line, msg: format!("bad vertex {s:?}") }),
            }
        };
        match words.as_slice() {
            ["vertex", v, rest @ ..] if rest.len() <= 2 => {
                let mut weight = None;
                let mut negative = false;
                for w in rest {
                    if *w == "-" {
                        negative = true;
                    } else {
                        weight = Some(w.parse().map_err(|e| err(format!("{e}")))?);
                    }
                }
                vertices.push((id(v)?, weight, negative));
            }
            ["edge", u, v, s, t] => {
                edges.push(TreeEdge::new(id(u)?, id(v)?, parse_part(s, line)?, parse_part(t, line)?));
            }
            ["rho", u, v] => pairs.push((id(u)?, id(v)?, line)),
            _ => return Err(err(format!("cannot read {body:?}"))),
        }
    }
    let n = vertices.len();
    let mut slots: Vec<Option<(Option<IntersectionType>, bool)>> = vec![None; n];
    for &(v, w, neg) in &vertices {
        match slots.get_mut(v) {
            Some(s @ None) => *s = Some((w, neg)),
            _ => return Err(TreeError::Parse { line: 0, msg: format!("vertices must be 1..={n} without repeats") }),
        }
    }
    let slots: Vec<(Option<IntersectionType>, bool)> = slots.into_iter().map(|s| s.expect("filled")).collect();
    let weights: Option<Vec<IntersectionType>> = slots.iter().map(|s| s.0).collect();
    if weights.is_none() && slots.iter().any(|s| s.0.is_some()) {
        return Err(TreeError::Parse { line: 0, msg: "either every vertex has a weight or none does".into() });
    }
    let mut rho: Vec<usize> = (0..n).collect();
    for (u, v, line) in pairs {
        if u >= n || v >= n {
            return Err(TreeError::Parse { line, msg: "rho names an unknown vertex".into() });
        }
        rho[u] = v;
        rho[v] = u;
    }
    let mut tree = BipartitionedTree::new(n, edges);
    tree.negative = slots.iter().map(|s| s.1).collect();
    Ok(TreeFile { name, tree, rho, weights })
}

pub fn format_tree(file: &TreeFile) -> String {
    let mut out = format!("name: {}\n", file.name);
    for v in 0..file.tree.n {
        let _ = write!(out, "vertex {}", v + 1);
        if let Some(w) = &file.weights {
            let _ = write!(out, " {}", w[v]);
        }
        if file.tree.negative[v] {
            out.push_str(" -");
        }
        out.push('\n');
    }
    for e in &file.tree.edges {
        let _ = writeln!(out, "edge {} {} {} {}", e.a + 1, e.b + 1, e.side_a, e.side_b);
    }
    for (v, &r) in file.rho.iter().enumerate() {
        if v < r {
            let _ = writeln!(out, "rho {} {}", v + 1, r + 1);
        }
    }
    out
}

/// Graphviz form: class labels at edge ends, rho pairs as dashed arcs.
pub fn tree_to_dot(file: &TreeFile) -> String {
    let mut out = format!("graph \"{}\" {{\n", file.name);
    for v in 0..file.tree.n {
        let weight = file.weights.as_ref().map(|w| format!(" {}", w[v])).unwrap_or_default();
        let sign = if file.tree.negative[v] { " -" } else { "" };
        let _ = writeln!(out, "  v{0} [label=\"{0}{weight}{sign}\"];", v + 1);
    }
    for e in &file.tree.edges {
        let _ = writeln!(out, "  v{} -- v{} [taillabel=\"{}\", headlabel=\"{}\"];", e.a + 1, e.b + 1, e.side_a, e.side_b);
    }
    for (v, &r) in file.rho.iter().enumerate() {
        if v < r {
            let _ = writeln!(out, "  v{} -- v{} [style=dashed, constraint=false];", v + 1, r + 1);
        }
    }
    out.push_str("}\n");
    out
}
