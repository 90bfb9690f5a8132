//! Bounded unknot recognition.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use serde::{Deserialize, Serialize};

use super::bracket::{crossing_limit, jones_with_limit};
use crate::linkdiag::MoveKind;
use crate::{Laurent, LinkDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnknotStatus {
    ProvenUnknot,
    ProvenKnotted,
    Unknown,
}

pub const DEFAULT_BUDGET: usize = 2000;

/// Semi-decision for knots: a simplification to the trivial diagram proves
/// unknottedness, a nontrivial Jones polynomial proves knottedness.
/// Links always yield `Unknown`.
pub fn try_unknot(d: &LinkDiagram, budget: usize) -> UnknotStatus {
    if d.n_components() != 1 {
        return UnknotStatus::Unknown;
    }
    if d.n_crossings() <= crossing_limit() {
        if let Ok(j) = jones_with_limit(d, crossing_limit()) {
            if j != Laurent::one() {
                return UnknotStatus::ProvenKnotted;
            }
        }
    }
    if simplifies_to_trivial(d, budget) {
        UnknotStatus::ProvenUnknot
    } else {
        UnknotStatus::Unknown
    }
}

/// Best-first search over third moves and bigon insertions, greedily
/// cancelling kinks and bigons after every step. `budget` bounds the number
/// of moves tried.
pub fn simplifies_to_trivial(d: &LinkDiagram, budget: usize) -> bool {
    let start = d.simplify_greedy();
    if start.n_crossings() == 0 {
        return true;
    }
    let cap = start.n_crossings() + 2;
    let mut seen = HashSet::new();
    let mut heap = BinaryHeap::new();
    let mut states = Vec::new();
    seen.insert(start.canonical_code());
    heap.push((Reverse(start.n_crossings()), Reverse(0usize)));
    states.push(start);
    let mut spent = 0;
    while let Some((_, Reverse(idx))) = heap.pop() {
        let cur = states[idx].clone();
        let kinds: &[MoveKind] = if cur.n_crossings() + 2 <= cap {
            &[MoveKind::R3, MoveKind::R2Add]
        } else {
            &[MoveKind::R3]
        };
        for mv in cur.available_moves(kinds) {
            if spent >= budget {
                return false;
            }
            spent += 1;
            let Some(next) = cur.apply_move(mv) else { continue };
            let next = next.simplify_greedy();
            if next.n_crossings() == 0 {
                return true;
            }
            if seen.insert(next.canonical_code()) {
                heap.push((Reverse(next.n_crossings()), Reverse(states.len())));
                states.push(next);
            }
        }
    }
    false
}
