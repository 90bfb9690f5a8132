use std::collections::VecDeque;

use super::LinkDiagram;

/// A relabeling-invariant code: two diagrams have equal codes iff they are
/// related by an orientation-preserving homeomorphism of the sphere that
/// respects crossing information and strand orientations.
///
/// Slot 0 of every crossing is canonical, so a breadth-first numbering from a
/// chosen root crossing fixes all labels; the code is minimized over roots.
pub fn canonical_code(d: &LinkDiagram) -> Vec<u32> {
    let mut pieces: Vec<Vec<u32>> = d
        .pieces()
        .iter()
        .map(|piece| piece.iter().map(|&root| code_from(d, root)).min().unwrap_or_default())
        .collect();
    pieces.sort();
    let mut out = vec![d.free_loops() as u32];
    for p in pieces {
        out.push(u32::MAX);
        out.extend(p);
    }
    out
}

fn code_from(d: &LinkDiagram, root: usize) -> Vec<u32> {
    let n = d.n_crossings();
    let mut index = vec![u32::MAX; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([root]);
    index[root] = 0;
    while let Some(c) = queue.pop_front() {
        order.push(c);
        for s in 0..4 {
            let (x, _) = d.other_end((c, s));
            if index[x] == u32::MAX {
                index[x] = order.len() as u32 + queue.len() as u32;
                queue.push_back(x);
            }
        }
    }
    let mut code = Vec::with_capacity(order.len() * 5);
    for &c in &order {
        code.push(d.over_in(c) as u32);
        for s in 0..4 {
            let (x, t) = d.other_end((c, s));
            code.push(index[x] * 4 + t as u32);
        }
    }
    code
}
