//! Symmetric plumbings of spheres and the ambient manifolds that hold them.

mod builtin;
mod format;

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::eqtree::{BipartitionedTree, EquivariantTree, Part, TreeEdge};
use crate::IntersectionType;

pub use builtin::{ambient, builtin, AmbientDescriptor, QuotientTag, SurfaceComponent, AMBIENT_TAGS};
pub use format::{format_plumbing, parse_plumbing, plumbing_to_dot};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sphere {
    pub name: String,
    pub framing: i64,
}

/// A transverse intersection of spheres `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PlumbingPoint {
    pub a: usize,
    pub b: usize,
    pub kind: IntersectionType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlumbingTree {
    pub name: String,
    pub spheres: Vec<Sphere>,
    pub points: Vec<PlumbingPoint>,
    pub sigma: Vec<usize>,
    pub ambient: AmbientDescriptor,
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum PlumbingViolation {
    #[error("no spheres")]
    Empty,
    #[error("spheres and points do not form a tree: {0}")]
    NotATree(String),
    #[error("{0} spheres: no valid sigma pairing around a single fixed point")]
    OddSphereCount(usize),
    #[error("sigma is not an involution at sphere {0}")]
    SigmaNotInvolution(usize),
    #[error("sphere {0} and its image have different framings")]
    FramingMismatch(usize),
    #[error("sigma does not carry point {0} to a point")]
    PointImageMissing(usize),
    #[error("{0} fixed points; a simple plumbing has exactly one")]
    FixedPointCount(usize),
    #[error("fixed point {point} has type {kind}")]
    FixedPointType { point: usize, kind: IntersectionType },
    #[error("fixed point {point} of type {kind} {detail}")]
    FixedPointSheets { point: usize, kind: IntersectionType, detail: &'static str },
    #[error("moved point {point} has type {kind}, not A")]
    MovedPointNotA { point: usize, kind: IntersectionType },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlumbingError {
    #[error("invalid plumbing: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<PlumbingViolation>),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("{name} needs n >= 1, got {n}")]
    BadParameter { name: String, n: usize },
    #[error("unknown ambient {0:?}")]
    UnknownAmbient(String),
}

impl PlumbingTree {
    pub fn n_spheres(&self) -> usize {
        self.spheres.len()
    }

    fn point_between(&self, a: usize, b: usize) -> Option<usize> {
        self.points.iter().position(|p| (p.a, p.b) == (a, b) || (p.a, p.b) == (b, a))
    }

    /// The involution induced on points, when sigma carries points to points.
    pub fn point_involution(&self) -> Option<Vec<usize>> {
        self.points.iter().map(|p| self.point_between(*self.sigma.get(p.a)?, *self.sigma.get(p.b)?)).collect()
    }

    fn points_on(&self, s: usize) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| self.points[i].a == s || self.points[i].b == s).collect()
    }

    pub fn validate(&self) -> Result<(), Vec<PlumbingViolation>> {
        use PlumbingViolation as V;
        let n = self.n_spheres();
        if n == 0 {
            return Err(vec![V::Empty]);
        }
        let mut out = Vec::new();
        if self.points.iter().any(|p| p.a >= n || p.b >= n || p.a == p.b) {
            return Err(vec![V::NotATree("a point names an unknown sphere or the same sphere twice".into())]);
        }
        if self.points.len() + 1 != n {
            out.push(V::NotATree(format!("{} points for {} spheres", self.points.len(), n)));
        } else {
            let mut reached = vec![false; n];
            let mut stack = vec![0];
            reached[0] = true;
            while let Some(s) = stack.pop() {
                for i in self.points_on(s) {
                    let t = if self.points[i].a == s { self.points[i].b } else { self.points[i].a };
                    if !reached[t] {
                        reached[t] = true;
                        stack.push(t);
                    }
                }
            }
            if reached.contains(&false) {
                out.push(V::NotATree("disconnected".into()));
            }
        }
        if n % 2 == 1 {
            out.push(V::OddSphereCount(n));
        }
        if self.sigma.len() != n || self.sigma.iter().any(|&s| s >= n) {
            out.push(V::SigmaNotInvolution(0));
            return Err(out);
        }
        for s in 0..n {
            if self.sigma[self.sigma[s]] != s {
                out.push(V::SigmaNotInvolution(s + 1));
            } else if self.spheres[self.sigma[s]].framing != self.spheres[s].framing && s < self.sigma[s] {
                out.push(V::FramingMismatch(s + 1));
            }
        }
        if !out.is_empty() {
            return Err(out);
        }
        let Some(rho) = self.point_involution() else {
            let i = (0..self.points.len())
                .find(|&i| self.point_between(self.sigma[self.points[i].a], self.sigma[self.points[i].b]).is_none())
                .expect("some point has no image");
            return Err(vec![V::PointImageMissing(i + 1)]);
        };
        let fixed: Vec<usize> = (0..rho.len()).filter(|&i| rho[i] == i).collect();
        if fixed.len() != 1 {
            out.push(V::FixedPointCount(fixed.len()));
        }
        for (i, p) in self.points.iter().enumerate() {
            if rho[i] != i {
                if p.kind != IntersectionType::A {
                    out.push(V::MovedPointNotA { point: i + 1, kind: p.kind });
                }
                continue;
            }
            let swaps = self.sigma[p.a] == p.b;
            match p.kind {
                IntersectionType::A => out.push(V::FixedPointType { point: i + 1, kind: p.kind }),
                k if k.is_b() && !swaps => {
                    out.push(V::FixedPointSheets { point: i + 1, kind: k, detail: "does not exchange its spheres" })
                }
                IntersectionType::C if swaps => out.push(V::FixedPointSheets {
                    point: i + 1,
                    kind: p.kind,
                    detail: "exchanges its spheres",
                }),
                _ => {}
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    fn fixed_point(&self) -> Result<usize, PlumbingError> {
        self.validate().map_err(PlumbingError::Invalid)?;
        let rho = self.point_involution().expect("validated");
        Ok((0..rho.len()).find(|&i| rho[i] == i).expect("validated"))
    }

    /// Type of the unique fixed point.
    pub fn plumbing_type(&self) -> Result<IntersectionType, PlumbingError> {
        Ok(self.points[self.fixed_point()?].kind)
    }

    /// An equivariant tree with one vertex per point, embedded at that point.
    ///
    /// Tree edges run along spheres: the points on each sphere form a star
    /// around the one nearest the fixed point. An edge along sphere `p.a`
    /// is in class P at point `p`, along `p.b` in class Q. The returned map
    /// sends vertex `i` to point `i`.
    pub fn derive_embedded_tree(&self) -> Result<(EquivariantTree, Vec<usize>), PlumbingError> {
        let root = self.fixed_point()?;
        let rho = self.point_involution().expect("validated");
        let m = self.points.len();
        // breadth-first distance between points, stepping across shared spheres
        let mut dist = vec![usize::MAX; m];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for s in [self.points[i].a, self.points[i].b] {
                for j in self.points_on(s) {
                    if dist[j] == usize::MAX {
                        dist[j] = dist[i] + 1;
                        queue.push_back(j);
                    }
                }
            }
        }
        let side = |i: usize, s: usize| if self.points[i].a == s { Part::P } else { Part::Q };
        let mut edges = Vec::new();
        for s in 0..self.n_spheres() {
            let on = self.points_on(s);
            let Some(&hub) = on.iter().min_by_key(|&&i| dist[i]) else { continue };
            for &j in on.iter().filter(|&&j| j != hub) {
                edges.push(TreeEdge::new(hub, j, side(hub, s), side(j, s)));
            }
        }
        let tree = EquivariantTree {
            base: BipartitionedTree::new(m, edges),
            rho,
            weights: self.points.iter().map(|p| p.kind).collect(),
        };
        Ok((tree, (0..m).collect()))
    }
}

/// Self-intersections available on an immersed surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ImmersedSurfaceBudget {
    pub n_type_a: usize,
    pub omega: Option<IntersectionType>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CapacityError {
    #[error("surface has type {budget:?} but the tree has type {tree}")]
    OmegaMismatch { budget: Option<IntersectionType>, tree: IntersectionType },
    #[error("{vertices} vertices exceed the capacity {capacity}")]
    Insufficient { vertices: usize, capacity: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
}

/// Whether `tree` fits: one vertex at the type-Omega point and a pair at each A pair.
pub fn capacity_check(budget: ImmersedSurfaceBudget, tree: &EquivariantTree) -> Result<(), CapacityError> {
    let t = tree.tree_type().map_err(|e| CapacityError::InvalidTree(e.to_string()))?;
    if budget.omega != Some(t) {
        return Err(CapacityError::OmegaMismatch { budget: budget.omega, tree: t });
    }
    let capacity = 2 * budget.n_type_a + 1;
    if tree.n() > capacity {
        return Err(CapacityError::Insufficient { vertices: tree.n(), capacity });
    }
    Ok(())
}

/// Every simple symmetric plumbing on `n` spheres with zero framings: each
/// tree shape with each involution fixing exactly one point. The fixed point
/// gets each type its sheets allow.
pub fn symmetric_plumbings(n: usize) -> Vec<PlumbingTree> {
    let mut out = Vec::new();
    for shape in crate::eqtree::unlabeled_trees(n) {
        for sigma in crate::eqtree::involutions(n) {
            let mut pt = PlumbingTree {
                name: format!("family{n}"),
                spheres: (1..=n).map(|i| Sphere { name: format!("S{i}"), framing: 0 }).collect(),
                points: shape.iter().map(|&(a, b)| PlumbingPoint { a, b, kind: IntersectionType::A }).collect(),
                sigma,
                ambient: ambient("three_s2xs2").expect("tag in table"),
            };
            let Some(rho) = pt.point_involution() else { continue };
            let fixed: Vec<usize> = (0..rho.len()).filter(|&i| rho[i] == i).collect();
            let &[f] = fixed.as_slice() else { continue };
            let p = pt.points[f];
            let kinds: &[IntersectionType] = if pt.sigma[p.a] == p.b {
                &[IntersectionType::BPlus, IntersectionType::BMinus]
            } else {
                &[IntersectionType::C]
            };
            for &k in kinds {
                pt.points[f].kind = k;
                out.push(pt.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
