//! Breadth-first search for equivariant unknotting sequences.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{SymMove, SymmetricDiagram};
use crate::invariants::{try_unknot, UnknotStatus, DEFAULT_BUDGET};
use crate::IntersectionType;

/// Upper bound on `max_moves`; larger requests are clamped.
pub const MAX_SEARCH_MOVES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct UnknottingSequence {
    #[serde(skip)]
    pub moves: Vec<SymMove>,
    pub k_total: usize,
    pub k_a_pairs: usize,
    pub k_b_plus: usize,
    pub k_b_minus: usize,
    pub k_c: usize,
}

impl UnknottingSequence {
    pub fn from_moves(moves: Vec<SymMove>) -> Self {
        let count = |t: IntersectionType| moves.iter().filter(|m| m.kind == t).count();
        Self {
            k_total: moves.iter().map(|m| m.kind.multiplicity()).sum(),
            k_a_pairs: count(IntersectionType::A),
            k_b_plus: count(IntersectionType::BPlus),
            k_b_minus: count(IntersectionType::BMinus),
            k_c: count(IntersectionType::C),
            moves,
        }
    }

    /// Replays the moves from `sd`.
    pub fn replay(&self, sd: &SymmetricDiagram) -> Result<SymmetricDiagram, super::SymError> {
        self.moves.iter().try_fold(sd.clone(), |cur, &mv| cur.apply_move(mv))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct SearchStats {
    /// Distinct diagrams examined.
    pub explored: usize,
    /// Size of the last layer expanded.
    pub frontier: usize,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(UnknottingSequence),
    NotFound(SearchStats),
}

type Key = (Vec<[u32; 4]>, Vec<u8>);

fn key(sd: &SymmetricDiagram) -> Key {
    (sd.base.crossings().to_vec(), sd.base.over_in_all().to_vec())
}

fn unknotted(sd: &SymmetricDiagram) -> bool {
    try_unknot(&sd.base, DEFAULT_BUDGET) == UnknotStatus::ProvenUnknot
}

/// Shortest sequence of symmetric crossing changes, drawn from `allowed`,
/// after which the knot is recognised as trivial. Unknown unknot status
/// counts as failure.
pub fn equivariant_unknotting_search(
    sd: &SymmetricDiagram,
    max_moves: usize,
    allowed: &[IntersectionType],
) -> SearchOutcome {
    let max_moves = max_moves.min(MAX_SEARCH_MOVES);
    if unknotted(sd) {
        return SearchOutcome::Found(UnknottingSequence::default());
    }
    let mut seen: HashSet<Key> = HashSet::new();
    seen.insert(key(sd));
    let mut layer: Vec<(SymmetricDiagram, Vec<SymMove>)> = vec![(sd.clone(), Vec::new())];
    let mut stats = SearchStats { explored: 1, frontier: 1, depth: 0 };
    for depth in 1..=max_moves {
        let mut next = Vec::new();
        for (cur, path) in &layer {
            for (site, kind) in cur.sites() {
                if !allowed.contains(&kind) {
                    continue;
                }
                let mv = SymMove { site, kind };
                let child = cur.apply_move(mv).expect("site classified from this diagram");
                if seen.insert(key(&child)) {
                    let mut p = path.clone();
                    p.push(mv);
                    next.push((child, p));
                }
            }
        }
        stats.explored += next.len();
        stats.depth = depth;
        let hit = next.par_iter().position_first(|(child, _)| unknotted(child));
        if let Some(i) = hit {
            return SearchOutcome::Found(UnknottingSequence::from_moves(next.swap_remove(i).1));
        }
        if next.is_empty() {
            break;
        }
        stats.frontier = next.len();
        layer = next;
    }
    SearchOutcome::NotFound(stats)
}
