//! Strongly invertible diagrams in axis-normal form.
//!
//! The involution acts on the projection plane as the reflection in a
//! vertical axis combined with a height flip, so an off-axis crossing and its
//! image are related by an odd reflection of slots. On-axis crossings either
//! exchange their strands (B, again an odd reflection) or keep each strand
//! (C, the half-turn `k -> k + 2`).

mod format;
mod quotient;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::linkdiag::DiagramError;
use crate::{IntersectionType, LinkDiagram};

pub use format::{format_sym, parse_sym};
pub use quotient::{quotient, HalfAxis};
pub use search::{equivariant_unknotting_search, SearchOutcome, SearchStats, UnknottingSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OnAxisKind {
    B,
    C,
}

/// Where a fixed point of the knot sits: on an edge, or on a crossingless
/// component (1-based, as in `O1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixSite {
    Edge(u32),
    FreeLoop(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisEvent {
    FixedPoint(FixSite),
    OnAxis { crossing: usize, kind: OnAxisKind },
}

/// Dihedral map from the slots of a crossing to those of its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotMap {
    pub reflect: bool,
    pub shift: usize,
}

impl SlotMap {
    pub fn apply(self, k: usize) -> usize {
        if self.reflect {
            (self.shift + 4 - k % 4) % 4
        } else {
            (self.shift + k) % 4
        }
    }
}

/// A crossing change site: an iota-pair of crossings or one on-axis crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Site {
    Pair(usize, usize),
    Axis(usize),
}

impl Site {
    pub fn crossings(self) -> Vec<usize> {
        match self {
            Site::Pair(a, b) => vec![a, b],
            Site::Axis(c) => vec![c],
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Pair(a, b) => write!(f, "c{}/c{}", a + 1, b + 1),
            Site::Axis(c) => write!(f, "c{}", c + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymMove {
    pub site: Site,
    pub kind: IntersectionType,
}

/// One failed structural condition, naming the offending id (1-based).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("iota is not an involution on crossing c{0}")]
    CrossingNotInvolution(usize),
    #[error("iota is not an involution on edge {0}")]
    EdgeNotInvolution(u32),
    #[error("iota does not carry crossing c{0} onto its image")]
    NotAutomorphism(usize),
    #[error("crossing c{0} is fixed by iota but missing from the axis")]
    FixedNotOnAxis(usize),
    #[error("crossing c{0} is on the axis but not fixed by iota")]
    OnAxisNotFixed(usize),
    #[error("crossing c{0} is listed on the axis more than once")]
    DuplicateEvent(usize),
    #[error("crossing c{crossing} is listed as {listed:?} but iota acts as {actual:?}")]
    WrongKind { crossing: usize, listed: OnAxisKind, actual: OnAxisKind },
    #[error("fixed point on edge {0}, which iota moves")]
    FixedPointNotFixed(u32),
    #[error("edge {0} is fixed by iota but carries no fixed point")]
    UnlistedFixedEdge(u32),
    #[error("fixed point on unknown free loop O{0}")]
    UnknownFreeLoop(usize),
    #[error("component {component}: fixed-point count {count} != 2")]
    FixedPointCount { component: usize, count: usize },
    #[error("component {0} is neither invariant nor swapped with another")]
    ComponentNotPreserved(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("unknown crossing c{0}")]
    UnknownCrossing(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(u32),
    #[error("invalid symmetric diagram: {}", list(.0))]
    Invalid(Vec<Violation>),
    #[error("expected a strongly invertible knot, found {0} components")]
    NotAKnot(usize),
    #[error("not in axis-normal form: {}", .0.join("; "))]
    NotAxisNormal(Vec<String>),
    #[error("site {site} is type {actual}, not {declared}")]
    TypeMismatch { site: Site, declared: IntersectionType, actual: IntersectionType },
    #[error("{0} is not a crossing-change site")]
    BadSite(Site),
}

fn list(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDiagram {
    pub name: String,
    pub base: LinkDiagram,
    crossing_map: Vec<usize>,
    edge_map: BTreeMap<u32, u32>,
    pub axis: Vec<AxisEvent>,
}

impl SymmetricDiagram {
    /// Assembles a diagram from iota pairs; unlisted crossings and edges are
    /// taken as fixed. Structural checks are left to [`Self::validate`].
    pub fn new(
        name: impl Into<String>,
        base: LinkDiagram,
        crossing_pairs: &[(usize, usize)],
        edge_pairs: &[(u32, u32)],
        axis: Vec<AxisEvent>,
    ) -> Result<Self, SymError> {
        let n = base.n_crossings();
        let mut crossing_map: Vec<usize> = (0..n).collect();
        for &(a, b) in crossing_pairs {
            for c in [a, b] {
                if c >= n {
                    return Err(SymError::UnknownCrossing(c + 1));
                }
            }
            crossing_map[a] = b;
            crossing_map[b] = a;
        }
        let mut edge_map: BTreeMap<u32, u32> = base.edges().map(|e| (e, e)).collect();
        for &(e, f) in edge_pairs {
            for x in [e, f] {
                if !edge_map.contains_key(&x) {
                    return Err(SymError::UnknownEdge(x));
                }
            }
            edge_map.insert(e, f);
            edge_map.insert(f, e);
        }
        for ev in &axis {
            match *ev {
                AxisEvent::OnAxis { crossing, .. } if crossing >= n => {
                    return Err(SymError::UnknownCrossing(crossing + 1))
                }
                AxisEvent::FixedPoint(FixSite::Edge(e)) if !edge_map.contains_key(&e) => {
                    return Err(SymError::UnknownEdge(e))
                }
                _ => {}
            }
        }
        Ok(Self { name: name.into(), base, crossing_map, edge_map, axis })
    }

    pub fn iota_crossing(&self, c: usize) -> usize {
        self.crossing_map[c]
    }

    pub fn iota_edge(&self, e: u32) -> u32 {
        self.edge_map.get(&e).copied().unwrap_or(e)
    }

    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.crossing_map.len()).filter(|&c| c <= self.crossing_map[c]).map(|c| (c, self.crossing_map[c])).collect()
    }

    pub fn edge_pairs(&self) -> Vec<(u32, u32)> {
        self.edge_map.iter().filter(|(e, f)| e <= f).map(|(&e, &f)| (e, f)).collect()
    }

    pub fn is_knot(&self) -> bool {
        self.base.n_components() == 1
    }

    /// The slot map from `c` to `iota(c)`, if iota carries the labels of `c`
    /// onto those of its image. Reflections must exchange over and under
    /// (odd shift); rotations must preserve them (even shift).
    pub fn slot_map(&self, c: usize) -> Option<SlotMap> {
        let img = self.iota_crossing(c);
        let src = self.base.crossing(c);
        let dst = self.base.crossing(img);
        // prefer the kind the axis list declares, since loop edges can fit both
        let candidates = match self.axis_kind(c) {
            Some(OnAxisKind::C) => [(false, 2), (false, 0), (true, 3), (true, 1)],
            _ => [(true, 3), (true, 1), (false, 2), (false, 0)],
        };
        candidates
            .into_iter()
            .map(|(reflect, shift)| SlotMap { reflect, shift })
            .find(|g| (0..4).all(|k| self.iota_edge(src[k]) == dst[g.apply(k)]))
    }

    fn axis_kind(&self, c: usize) -> Option<OnAxisKind> {
        self.axis.iter().find_map(|ev| match *ev {
            AxisEvent::OnAxis { crossing, kind } if crossing == c => Some(kind),
            _ => None,
        })
    }

    /// Checks every structural condition; returns all violations found.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        let n = self.base.n_crossings();
        for c in 0..n {
            if self.iota_crossing(self.iota_crossing(c)) != c {
                out.push(Violation::CrossingNotInvolution(c + 1));
            }
        }
        for (&e, &f) in &self.edge_map {
            if self.iota_edge(f) != e {
                out.push(Violation::EdgeNotInvolution(e));
            }
        }
        for c in 0..n {
            if self.slot_map(c).is_none() {
                out.push(Violation::NotAutomorphism(c + 1));
            }
        }
        let mut listed = vec![0usize; n];
        for ev in &self.axis {
            if let AxisEvent::OnAxis { crossing, .. } = *ev {
                listed[crossing] += 1;
            }
        }
        for c in 0..n {
            let fixed = self.iota_crossing(c) == c;
            match (fixed, listed[c]) {
                (true, 0) => out.push(Violation::FixedNotOnAxis(c + 1)),
                (false, k) if k > 0 => out.push(Violation::OnAxisNotFixed(c + 1)),
                (_, k) if k > 1 => out.push(Violation::DuplicateEvent(c + 1)),
                _ => {}
            }
            if let (true, Some(listed), Some(g)) = (fixed, self.axis_kind(c), self.slot_map(c)) {
                let actual = if g.reflect { OnAxisKind::B } else { OnAxisKind::C };
                if actual != listed {
                    out.push(Violation::WrongKind { crossing: c + 1, listed, actual });
                }
            }
        }

        // Fixed points per component; free loops are numbered after traced components.
        let n_traced = self.base.components().len();
        let n_comp = self.base.n_components();
        let mut count = vec![0usize; n_comp];
        let mut fix_edges = Vec::new();
        for ev in &self.axis {
            match *ev {
                AxisEvent::FixedPoint(FixSite::Edge(e)) => {
                    if self.iota_edge(e) != e {
                        out.push(Violation::FixedPointNotFixed(e));
                    }
                    fix_edges.push(e);
                    if let Some(k) = self.base.component_of_edge(e) {
                        count[k] += 1;
                    }
                }
                AxisEvent::FixedPoint(FixSite::FreeLoop(k)) => {
                    if k == 0 || k > self.base.free_loops() {
                        out.push(Violation::UnknownFreeLoop(k));
                    } else {
                        count[n_traced + k - 1] += 1;
                    }
                }
                AxisEvent::OnAxis { crossing, kind: OnAxisKind::C } => {
                    // each strand of a C crossing carries one fixed point
                    let (u, o) = self.base.strand_components(crossing);
                    count[u] += 1;
                    count[o] += 1;
                }
                AxisEvent::OnAxis { .. } => {}
            }
        }
        for (&e, &f) in &self.edge_map {
            if e == f && !fix_edges.contains(&e) {
                out.push(Violation::UnlistedFixedEdge(e));
            }
        }
        for (k, &cnt) in count.iter().enumerate() {
            let image = if k < n_traced { self.component_image(k) } else { Some(k) };
            match image {
                Some(j) if j == k => {
                    if cnt != 2 {
                        out.push(Violation::FixedPointCount { component: k + 1, count: cnt });
                    }
                }
                Some(_) if cnt == 0 => {}
                Some(_) => out.push(Violation::FixedPointCount { component: k + 1, count: cnt }),
                None => out.push(Violation::ComponentNotPreserved(k + 1)),
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// The component that iota carries traced component `k` onto.
    fn component_image(&self, k: usize) -> Option<usize> {
        let comps = self.base.components();
        let mut images = comps[k].iter().map(|&e| self.base.component_of_edge(self.iota_edge(e)));
        let first = images.next()??;
        images.all(|j| j == Some(first)).then_some(first)
    }

    pub fn check(&self) -> Result<(), SymError> {
        self.validate().map_err(SymError::Invalid)
    }

    /// Type of the crossing change at crossing `c`.
    pub fn classify_move(&self, c: usize) -> Result<IntersectionType, SymError> {
        if c >= self.base.n_crossings() {
            return Err(SymError::UnknownCrossing(c + 1));
        }
        if self.iota_crossing(c) != c {
            return Ok(IntersectionType::A);
        }
        let kind = self.axis_kind(c).ok_or(SymError::Invalid(vec![Violation::FixedNotOnAxis(c + 1)]))?;
        let g = self.slot_map(c).ok_or(SymError::Invalid(vec![Violation::NotAutomorphism(c + 1)]))?;
        Ok(match (kind, g.reflect) {
            (OnAxisKind::C, _) | (_, false) => IntersectionType::C,
            // incoming under-slot carried to slot 3: the transported over
            // strand enters at 3, a positive crossing
            (OnAxisKind::B, true) if g.shift == 3 => IntersectionType::BPlus,
            (OnAxisKind::B, true) => IntersectionType::BMinus,
        })
    }

    /// Every crossing-change site, with its current type.
    pub fn sites(&self) -> Vec<(Site, IntersectionType)> {
        let mut out = Vec::new();
        for c in 0..self.base.n_crossings() {
            let img = self.iota_crossing(c);
            let site = match img.cmp(&c) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => Site::Axis(c),
                std::cmp::Ordering::Greater => Site::Pair(c, img),
            };
            if let Ok(t) = self.classify_move(c) {
                out.push((site, t));
            }
        }
        out
    }

    pub fn classify_site(&self, site: Site) -> Result<IntersectionType, SymError> {
        match site {
            Site::Pair(a, b) if a != b && self.iota_crossing(a) == b => self.classify_move(a),
            Site::Axis(c) if c < self.base.n_crossings() && self.iota_crossing(c) == c => self.classify_move(c),
            _ => Err(SymError::BadSite(site)),
        }
    }

    /// Symmetric crossing change; the declared type must match.
    pub fn apply_move(&self, mv: SymMove) -> Result<Self, SymError> {
        let actual = self.classify_site(mv.site)?;
        if actual != mv.kind {
            return Err(SymError::TypeMismatch { site: mv.site, declared: mv.kind, actual });
        }
        let base = self.base.crossing_change_many(&mv.site.crossings())?;
        Ok(Self { base, ..self.clone() })
    }

    /// Mirror image; B+ and B- sites trade places.
    pub fn mirror_symmetric(&self) -> Self {
        Self { base: self.base.mirror(), ..self.clone() }
    }
}

#[cfg(test)]
mod tests;
