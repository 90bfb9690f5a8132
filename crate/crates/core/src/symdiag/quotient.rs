//! Quotient knots by folding the right half-tangle along a half-axis.
//!
//! The right half-space is folded onto itself by squaring `x + iz`. Away from
//! the axis this keeps the half-tangle as drawn. At an on-axis B crossing the
//! two right-hand strands meet on the far side of the axis, so when the
//! closing arc passes there the joined strand hooks around it: over on the
//! side of the former over-strand, under on the other.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::{AxisEvent, FixSite, OnAxisKind, SymError, SymmetricDiagram};
use crate::linkdiag::{Builder, Faces, Port};
use crate::LinkDiagram;

/// The two arcs of the axis cut out by the fixed points: `H1` runs through
/// infinity, `H2` is the bounded arc between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfAxis {
    H1,
    H2,
}

impl fmt::Display for HalfAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HalfAxis::H1 => "h1",
            HalfAxis::H2 => "h2",
        })
    }
}

impl FromStr for HalfAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "h1" | "H1" | "h₁" | "1" => Ok(HalfAxis::H1),
            "h2" | "H2" | "h₂" | "2" => Ok(HalfAxis::H2),
            other => Err(format!("unknown half-axis `{other}` (expected h1 or h2)")),
        }
    }
}

/// Right-hand data of one axis event.
#[derive(Clone, Copy, Debug)]
enum Side {
    /// The end of a fixed edge lying in the right half.
    Fix(Port),
    /// Upper and lower right-hand slots of a B crossing.
    B { upper: Port, lower: Port },
}

pub fn quotient(sd: &SymmetricDiagram, which: HalfAxis) -> Result<LinkDiagram, SymError> {
    sd.check()?;
    if !sd.is_knot() {
        return Err(SymError::NotAKnot(sd.base.n_components()));
    }
    let mut issues = Vec::new();
    for (i, ev) in sd.axis.iter().enumerate() {
        if let AxisEvent::OnAxis { crossing, kind: OnAxisKind::C } = ev {
            issues.push(format!("event {} (C c{}): strands are not exchanged across the axis", i + 1, crossing + 1));
        }
    }
    for (a, b) in sd.crossing_pairs() {
        if a != b && !sd.slot_map(a).is_some_and(|g| g.reflect) {
            issues.push(format!("crossings c{}/c{} are related by a rotation", a + 1, b + 1));
        }
    }
    if !issues.is_empty() {
        return Err(SymError::NotAxisNormal(issues));
    }
    if sd.base.n_crossings() == 0 {
        return Ok(LinkDiagram::unknot());
    }

    let d = &sd.base;
    let faces = Faces::of(d);
    let mut last_err = None;
    for chain in face_chains(sd, &faces) {
        let sides = match right_sides(sd, &faces, &chain) {
            Ok(s) => s,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        match right_crossings(sd, &sides) {
            Ok(right) => return fold(sd, &sides, &right, which),
            Err(e) => last_err = Some(e),
        }
    }
    Err(SymError::NotAxisNormal(vec![last_err.unwrap_or_else(|| "the axis does not close up through the faces".into())]))
}

/// The pair of faces the axis passes between at each event.
fn event_faces(sd: &SymmetricDiagram, faces: &Faces, ev: AxisEvent) -> (usize, usize) {
    match ev {
        AxisEvent::FixedPoint(FixSite::Edge(e)) => {
            let [p, _] = sd.base.occurrences(e).expect("validated edge");
            faces.faces_at_port(p)
        }
        AxisEvent::OnAxis { crossing, .. } => {
            let k = top_candidate(sd, crossing);
            (faces.face_of_corner((crossing, k)), faces.face_of_corner((crossing, k + 2)))
        }
        AxisEvent::FixedPoint(FixSite::FreeLoop(_)) => unreachable!("free loops have no faces here"),
    }
}

/// The smaller of the two corners the axis can pass through at a B crossing:
/// iota exchanges slots `k` and `k + 1` there.
fn top_candidate(sd: &SymmetricDiagram, c: usize) -> usize {
    let g = sd.slot_map(c).expect("validated crossing");
    (0..2).find(|&k| g.apply(k) == k + 1).expect("odd reflection")
}

/// Consistent (face above, face below) assignments for all events.
fn face_chains(sd: &SymmetricDiagram, faces: &Faces) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = sd.axis.iter().map(|&ev| event_faces(sd, faces, ev)).collect();
    let mut out = Vec::new();
    let first = pairs[0];
    for start in [first, (first.1, first.0)] {
        let mut chain = vec![start];
        let mut below = start.1;
        let ok = pairs[1..].iter().all(|&(f, g)| {
            let next = if f == below {
                (f, g)
            } else if g == below {
                (g, f)
            } else {
                return false;
            };
            below = next.1;
            chain.push(next);
            true
        });
        if ok && below == start.0 && !out.contains(&chain) {
            out.push(chain);
        }
    }
    out
}

fn right_sides(sd: &SymmetricDiagram, faces: &Faces, chain: &[(usize, usize)]) -> Result<Vec<Side>, String> {
    let d = &sd.base;
    sd.axis
        .iter()
        .zip(chain)
        .enumerate()
        .map(|(i, (&ev, &(up, down)))| match ev {
            AxisEvent::FixedPoint(FixSite::Edge(e)) => {
                let ends = d.occurrences(e).expect("validated edge");
                let hits: Vec<Port> = ends.into_iter().filter(|&p| faces.faces_at_port(p) == (up, down)).collect();
                match hits[..] {
                    [p] => Ok(Side::Fix(p)),
                    _ => Err(format!("event {}: cannot tell which end of edge {e} is on the right", i + 1)),
                }
            }
            AxisEvent::OnAxis { crossing: c, .. } => {
                let k0 = top_candidate(sd, c);
                let hits: Vec<usize> = [k0, k0 + 2]
                    .into_iter()
                    .filter(|&k| faces.face_of_corner((c, k)) == up && faces.face_of_corner((c, (k + 2) % 4)) == down)
                    .collect();
                match hits[..] {
                    [k] => Ok(Side::B { upper: (c, k), lower: (c, (k + 3) % 4) }),
                    _ => Err(format!("event {}: cannot tell which side of c{} is on the right", i + 1, c + 1)),
                }
            }
            AxisEvent::FixedPoint(FixSite::FreeLoop(_)) => Err(format!("event {}: free loop in a crossed diagram", i + 1)),
        })
        .collect()
}

/// Off-axis crossings reached from the right-hand ends of the axis events.
fn right_crossings(sd: &SymmetricDiagram, sides: &[Side]) -> Result<BTreeSet<usize>, String> {
    let d = &sd.base;
    let mut fix_end: BTreeMap<u32, Port> = BTreeMap::new();
    let mut b_slots: BTreeSet<Port> = BTreeSet::new();
    for s in sides {
        match *s {
            Side::Fix(p) => {
                fix_end.insert(d.label(p), p);
            }
            Side::B { upper, lower } => {
                b_slots.insert(upper);
                b_slots.insert(lower);
            }
        }
    }
    let mut right = BTreeSet::new();
    let mut stack: Vec<Port> = b_slots.iter().copied().collect();
    let enter = |c: usize, right: &mut BTreeSet<usize>, stack: &mut Vec<Port>| {
        if right.insert(c) {
            stack.extend((0..4).map(|s| (c, s)));
        }
    };
    for &p in fix_end.values() {
        if sd.iota_crossing(p.0) != p.0 {
            enter(p.0, &mut right, &mut stack);
        } else if !b_slots.contains(&p) {
            return Err(format!("fixed edge {} leaves c{} on the wrong side", d.label(p), p.0 + 1));
        }
    }
    while let Some(p) = stack.pop() {
        let e = d.label(p);
        if let Some(&end) = fix_end.get(&e) {
            if end != p {
                return Err(format!("edge {e} reaches its fixed point from the left"));
            }
            continue;
        }
        let q = d.other_end(p);
        if sd.iota_crossing(q.0) == q.0 {
            if !b_slots.contains(&q) {
                return Err(format!("edge {e} enters c{} from the left", q.0 + 1));
            }
            continue;
        }
        enter(q.0, &mut right, &mut stack);
    }
    for &c in &right {
        if right.contains(&sd.iota_crossing(c)) {
            return Err(format!("c{} and its image both lie on the right", c + 1));
        }
    }
    let off_axis = (0..d.n_crossings()).filter(|&c| sd.iota_crossing(c) != c).count();
    if 2 * right.len() != off_axis {
        return Err("some crossing pair is not reached from the axis".into());
    }
    Ok(right)
}

fn fold(
    sd: &SymmetricDiagram,
    sides: &[Side],
    right: &BTreeSet<usize>,
    which: HalfAxis,
) -> Result<LinkDiagram, SymError> {
    let d = &sd.base;
    let fixes: Vec<usize> = (0..sides.len()).filter(|&i| matches!(sides[i], Side::Fix(_))).collect();
    let (top, bottom) = (fixes[0], fixes[1]);
    let n = sides.len();
    // events on the closing arc, in order from the upper fixed point
    let (route, upward): (Vec<usize>, bool) = match which {
        HalfAxis::H2 => ((top + 1..bottom).collect(), false),
        HalfAxis::H1 => ((0..top).rev().chain((bottom + 1..n).rev()).collect(), true),
    };
    let on_arc: BTreeSet<usize> = route.iter().copied().collect();

    let mut b = Builder::new();
    let mut target: BTreeMap<Port, Port> = BTreeMap::new();
    for &c in right {
        let id = b.add_crossing(0);
        for s in 0..4 {
            target.insert((c, s), (id, s));
        }
    }
    // (entry, exit) ports of the hooks on the arc, seen from above
    let mut hooks: BTreeMap<usize, (Port, Port)> = BTreeMap::new();
    for (i, side) in sides.iter().enumerate() {
        let Side::B { upper, lower } = *side else { continue };
        if on_arc.contains(&i) {
            // slots: 0 east, 1 north, 2 west, 3 south; the arc runs north-south
            let hook = |b: &mut Builder, slot: usize| b.add_crossing(if slot % 2 == 1 { 1 } else { 0 });
            let cu = hook(&mut b, upper.1);
            let cl = hook(&mut b, lower.1);
            b.connect((cu, 2), (cl, 2));
            b.connect((cu, 3), (cl, 1));
            target.insert(upper, (cu, 0));
            target.insert(lower, (cl, 0));
            hooks.insert(i, ((cu, 1), (cl, 3)));
        } else {
            // the two strands simply turn back; a removed crossing joins them
            let j = b.add_crossing(0);
            b.connect((j, 1), (j, 3));
            b.kill(j);
            b.add_free_loops(-1);
            target.insert(upper, (j, 0));
            target.insert(lower, (j, 2));
        }
    }
    let fixed_edges: BTreeSet<u32> = sides
        .iter()
        .filter_map(|s| if let Side::Fix(p) = s { Some(d.label(*p)) } else { None })
        .collect();
    for e in d.edges() {
        if fixed_edges.contains(&e) {
            continue;
        }
        let [p, q] = d.occurrences(e).expect("edge present");
        match (target.get(&p), target.get(&q)) {
            (Some(&x), Some(&y)) => b.connect(x, y),
            (None, None) => {}
            _ => return Err(SymError::NotAxisNormal(vec![format!("edge {e} crosses the axis away from a fixed point")])),
        }
    }
    let fix_port = |i: usize| match sides[i] {
        Side::Fix(p) => target[&p],
        Side::B { .. } => unreachable!("fixed point event"),
    };
    let mut current = fix_port(top);
    for i in &route {
        if let Some(&(north, south)) = hooks.get(i) {
            let (entry, exit) = if upward { (south, north) } else { (north, south) };
            b.connect(current, entry);
            current = exit;
        }
    }
    b.connect(current, fix_port(bottom));
    let (q, _) = b.finish()?;
    if q.n_components() != 1 {
        return Err(SymError::NotAxisNormal(vec![format!(
            "folding produced {} components",
            q.n_components()
        )]));
    }
    Ok(q)
}
