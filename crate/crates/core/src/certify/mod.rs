//! Sliceness certificates from plumbings, and non-sliceness from quotients.

mod adjudicate;
mod obstruction;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::eqtree::{associated_si_link, EquivariantTree};
use crate::plumbing::{capacity_check, ImmersedSurfaceBudget, PlumbingTree};
use crate::symdiag::UnknottingSequence;
use crate::IntersectionType;

pub use adjudicate::{adjudicate, CertifyError, Conclusion, Verdict};
pub use obstruction::{parse_database, quotient_obstruction, quotient_obstruction_with, DatabaseEntry, Obstruction, DEFAULT_DATABASE};

/// How the disk's special self-intersection must relate to the plumbing type.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Convention {
    /// The disk has a type Omega self-intersection.
    #[serde(rename = "as-stated")]
    AsStated,
    /// The disk has a type -Omega self-intersection.
    #[default]
    #[serde(rename = "mirrored")]
    Mirrored,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::AsStated, Convention::Mirrored];

    /// The disk type required against a plumbing of type `omega`.
    pub fn required(self, omega: IntersectionType) -> IntersectionType {
        match self {
            Convention::AsStated => omega,
            Convention::Mirrored => omega.mirror(),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::AsStated => "as-stated",
            Convention::Mirrored => "mirrored",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown convention {0:?}; expected as-stated or mirrored")]
pub struct ParseConventionError(String);

impl FromStr for Convention {
    type Err = ParseConventionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "as-stated" | "as_stated" => Ok(Convention::AsStated),
            "mirrored" => Ok(Convention::Mirrored),
            _ => Err(ParseConventionError(s.to_string())),
        }
    }
}

/// Self-intersections of an invariant immersed disk in the 4-ball.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ImmersedDiskDescriptor {
    pub k: usize,
    pub a_pairs: usize,
    pub b_plus: usize,
    pub b_minus: usize,
    pub c: usize,
    /// Set when the on-axis types are the mirrors of the crossing changes.
    pub mirrored: bool,
}

impl ImmersedDiskDescriptor {
    pub fn from_counts(a_pairs: usize, b_plus: usize, b_minus: usize, c: usize) -> Self {
        Self { k: 2 * a_pairs + b_plus + b_minus + c, a_pairs, b_plus, b_minus, c, mirrored: false }
    }

    /// The types with multiplicity, A once per self-intersection.
    pub fn types(&self) -> Vec<IntersectionType> {
        use IntersectionType::*;
        let mut out = vec![BPlus; self.b_plus];
        out.extend(vec![BMinus; self.b_minus]);
        out.extend(vec![C; self.c]);
        out.extend(vec![A; 2 * self.a_pairs]);
        out
    }

    pub fn non_a(&self) -> usize {
        self.b_plus + self.b_minus + self.c
    }

    /// The single non-A type, if exactly one non-A self-intersection occurs.
    pub fn omega(&self) -> Option<IntersectionType> {
        if self.non_a() != 1 {
            return None;
        }
        Some(if self.b_plus == 1 {
            IntersectionType::BPlus
        } else if self.b_minus == 1 {
            IntersectionType::BMinus
        } else {
            IntersectionType::C
        })
    }

    pub fn eligible(&self) -> bool {
        self.non_a() <= 1
    }

    /// B+ and B- exchanged.
    pub fn mirror(&self) -> Self {
        Self { b_plus: self.b_minus, b_minus: self.b_plus, mirrored: !self.mirrored, ..*self }
    }
}

/// Reads each symmetric crossing change as a self-intersection of the same type.
pub fn disk_from_sequence(seq: &UnknottingSequence) -> ImmersedDiskDescriptor {
    ImmersedDiskDescriptor::from_counts(seq.k_a_pairs, seq.k_b_plus, seq.k_b_minus, seq.k_c)
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum Rejection {
    #[error("clause (i): k = {k} exceeds n - 1 = {bound}")]
    TooManyIntersections { k: usize, bound: usize },
    #[error("clause (ii): needs a type {required} self-intersection ({convention}), disk has {found}")]
    WrongType { required: IntersectionType, convention: Convention, found: String },
    #[error("clause (iii): {non_a} self-intersections are not type A")]
    ExtraNonA { non_a: usize },
    #[error("invalid plumbing: {0}")]
    InvalidPlumbing(String),
    #[error("certificate failed its own re-check: {0}")]
    RecheckFailed(String),
}

impl Rejection {
    /// 1, 2 or 3 for the theorem's clauses, 0 otherwise.
    pub fn clause(&self) -> u8 {
        match self {
            Rejection::TooManyIntersections { .. } => 1,
            Rejection::WrongType { .. } => 2,
            Rejection::ExtraNonA { .. } => 3,
            _ => 0,
        }
    }
}

/// Everything needed to re-check that the tubing construction applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub knot: Option<String>,
    pub plumbing: Option<PlumbingTree>,
    pub tree: Option<EquivariantTree>,
    /// Tree vertex to plumbing point.
    pub embedding: Vec<usize>,
    pub disk: ImmersedDiskDescriptor,
    pub convention: Convention,
    pub transcript: Vec<String>,
}

impl Certificate {
    /// The certificate for a knot that is already the unknot.
    pub fn unknotted(knot: &str, convention: Convention) -> Self {
        Self {
            knot: Some(knot.to_string()),
            plumbing: None,
            tree: None,
            embedding: Vec::new(),
            disk: ImmersedDiskDescriptor::default(),
            convention,
            transcript: vec!["diagram is the unknot, which bounds an embedded invariant disk".into()],
        }
    }

    /// Repeats the structural checks behind an accepted certificate.
    pub fn recheck(&self) -> Result<(), String> {
        let (Some(pt), Some(tree)) = (&self.plumbing, &self.tree) else {
            return if self.disk.k == 0 { Ok(()) } else { Err("missing plumbing or tree".into()) };
        };
        let omega = pt.plumbing_type().map_err(|e| e.to_string())?;
        tree.validate().map_err(|v| format!("{v:?}"))?;
        if tree.n() != self.disk.k {
            return Err(format!("tree has {} vertices, disk has k = {}", tree.n(), self.disk.k));
        }
        if tree.tree_type().map_err(|e| e.to_string())? != omega {
            return Err("tree type differs from plumbing type".into());
        }
        let rho = pt.point_involution().ok_or("plumbing involution")?;
        if self.embedding.len() != tree.n() || (0..tree.n()).any(|v| self.embedding[tree.rho[v]] != rho[self.embedding[v]]) {
            return Err("embedding is not equivariant".into());
        }
        let fixed = tree.fixed_vertices()[0];
        if rho[self.embedding[fixed]] != self.embedding[fixed] {
            return Err("fixed vertex is not sent to the fixed point".into());
        }
        let disk_tree = self.disk_tree(tree);
        let budget = ImmersedSurfaceBudget { n_type_a: self.disk.a_pairs, omega: self.disk.omega() };
        capacity_check(budget, &disk_tree).map_err(|e| e.to_string())?;
        let plumbing_side = associated_si_link(tree).map_err(|e| e.to_string())?;
        let disk_side = associated_si_link(&disk_tree).map_err(|e| e.to_string())?.mirror_symmetric();
        let abs = |d: &crate::LinkDiagram| {
            let mut v: Vec<i32> = d.linking_matrix().into_iter().flatten().map(i32::abs).collect();
            v.sort();
            v
        };
        if plumbing_side.base.n_components() != disk_side.base.n_components() || abs(&plumbing_side.base) != abs(&disk_side.base) {
            return Err("boundary links of the two sides differ".into());
        }
        Ok(())
    }

    /// The tree embedded in the disk: the mirror under the mirrored convention.
    fn disk_tree(&self, tree: &EquivariantTree) -> EquivariantTree {
        match self.convention {
            Convention::AsStated => tree.clone(),
            Convention::Mirrored => tree.mirror(),
        }
    }
}

/// Checks the tubing theorem's hypotheses for `disk` against `pt` and, on
/// success, builds the certificate from the derived and pruned tree.
pub fn check_theorem(
    disk: &ImmersedDiskDescriptor,
    pt: &PlumbingTree,
    convention: Convention,
) -> Result<Certificate, Rejection> {
    let omega = pt.plumbing_type().map_err(|e| Rejection::InvalidPlumbing(e.to_string()))?;
    let bound = pt.n_spheres() - 1;
    if disk.k > bound {
        return Err(Rejection::TooManyIntersections { k: disk.k, bound });
    }
    if disk.k == 0 {
        let mut cert = Certificate::unknotted("", convention);
        cert.knot = None;
        return Ok(cert);
    }
    let required = convention.required(omega);
    let count = |t: IntersectionType| match t {
        IntersectionType::BPlus => disk.b_plus,
        IntersectionType::BMinus => disk.b_minus,
        IntersectionType::C => disk.c,
        IntersectionType::A => 2 * disk.a_pairs,
    };
    if count(required) == 0 {
        let found = disk.types().iter().filter(|t| !matches!(t, IntersectionType::A)).map(|t| t.to_string()).collect::<Vec<_>>();
        let found = if found.is_empty() { "only type A".to_string() } else { found.join(", ") };
        return Err(Rejection::WrongType { required, convention, found });
    }
    if disk.non_a() > 1 {
        return Err(Rejection::ExtraNonA { non_a: disk.non_a() });
    }

    let (tree, map) = pt.derive_embedded_tree().map_err(|e| Rejection::InvalidPlumbing(e.to_string()))?;
    let (pruned, kept) = tree.prune_to_size_mapped(disk.k).map_err(|e| Rejection::RecheckFailed(e.to_string()))?;
    let embedding: Vec<usize> = kept.iter().map(|&v| map[v]).collect();
    let mirrored_side = convention == Convention::Mirrored;
    let transcript = vec![
        format!(
            "existence in plumbings: {} ({} spheres, type {omega}) carries a type {omega} tree, size {}",
            pt.name,
            pt.n_spheres(),
            tree.n()
        ),
        format!("pruning: removed {} pairs of A leaves, leaving k = {} vertices", (tree.n() - pruned.n()) / 2, pruned.n()),
        format!(
            "closed surfaces: the {}tree (type {}) embeds in the disk with {} A pairs, capacity {}",
            if mirrored_side { "mirrored " } else { "" },
            required,
            disk.a_pairs,
            2 * disk.a_pairs + 1
        ),
        "link from embedding: both sides have the associated strongly invertible link of the tree as boundary".into(),
        format!("equivariant tubing: one symmetric annulus per tree vertex, {} in all", pruned.n()),
    ];
    let cert = Certificate {
        knot: None,
        plumbing: Some(pt.clone()),
        tree: Some(pruned),
        embedding,
        disk: disk.clone(),
        convention,
        transcript,
    };
    cert.recheck().map_err(Rejection::RecheckFailed)?;
    Ok(cert)
}

#[cfg(test)]
mod tests;
