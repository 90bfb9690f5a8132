//! Reidemeister moves as local rewrites of the port graph.

use rand::Rng;

use super::{Builder, Faces, LinkDiagram, Port};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Kink on edge `edge`; `variant` selects one of the four kink shapes.
    R1Add { edge: u32, variant: u8 },
    /// Kink on a free loop.
    R1AddFree { variant: u8 },
    R1Remove { crossing: usize },
    /// Push the edge leaving corner `i` of face `face` across the edge leaving corner `j`.
    R2Add { face: usize, i: usize, j: usize, over: bool },
    R2Remove { face: usize },
    R3 { face: usize },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Add { .. } | Move::R1AddFree { .. } => MoveKind::R1Add,
            Move::R1Remove { .. } => MoveKind::R1Remove,
            Move::R2Add { .. } => MoveKind::R2Add,
            Move::R2Remove { .. } => MoveKind::R2Remove,
            Move::R3 { .. } => MoveKind::R3,
        }
    }
}

/// Port wiring of the four kink shapes: (tail, loop, head) attachments and
/// the incoming over slot. Shapes 0 and 3 are positive.
const KINKS: [([usize; 4], usize); 4] = [
    // [tail port, loop a, loop b, head port], over in
    ([0, 2, 3, 1], 3),
    ([0, 2, 1, 3], 1),
    ([1, 3, 0, 2], 1),
    ([3, 1, 0, 2], 3),
];

impl LinkDiagram {
    pub fn apply_move(&self, mv: Move) -> Option<LinkDiagram> {
        let out = match mv {
            Move::R1Add { edge, variant } => self.r1_add(edge, variant)?,
            Move::R1AddFree { variant } => self.r1_add_free(variant)?,
            Move::R1Remove { crossing } => self.r1_remove(crossing)?,
            Move::R2Add { face, i, j, over } => self.r2_add(&Faces::of(self), face, i, j, over)?,
            Move::R2Remove { face } => self.r2_remove(&Faces::of(self), face)?,
            Move::R3 { face } => self.r3(&Faces::of(self), face)?,
        };
        Some(out)
    }

    fn r1_add(&self, edge: u32, variant: u8) -> Option<LinkDiagram> {
        let (tail, _) = self.edge_ends(edge)?;
        let (ports, over_in) = KINKS[variant as usize % 4];
        let mut b = Builder::from_diagram(self);
        let head = b.disconnect(tail);
        let x = b.add_crossing(0);
        b.connect(tail, (x, ports[0]));
        b.connect((x, ports[1]), (x, ports[2]));
        b.connect((x, ports[3]), head);
        b.set_incoming(x, 0);
        b.set_incoming(x, over_in);
        Some(b.finish().ok()?.0)
    }

    fn r1_add_free(&self, variant: u8) -> Option<LinkDiagram> {
        if self.free_loops() == 0 {
            return None;
        }
        let (ports, over_in) = KINKS[variant as usize % 4];
        let mut b = Builder::from_diagram(self);
        b.add_free_loops(-1);
        let x = b.add_crossing(0);
        b.connect((x, ports[0]), (x, ports[3]));
        b.connect((x, ports[1]), (x, ports[2]));
        b.set_incoming(x, 0);
        b.set_incoming(x, over_in);
        Some(b.finish().ok()?.0)
    }

    /// Crossings carrying a loop edge on adjacent slots.
    pub fn r1_sites(&self) -> Vec<usize> {
        (0..self.n_crossings())
            .filter(|&c| (0..4).any(|k| self.other_end((c, k)) == (c, (k + 1) % 4)))
            .collect()
    }

    fn r1_remove(&self, c: usize) -> Option<LinkDiagram> {
        if !self.r1_sites().contains(&c) {
            return None;
        }
        let mut b = Builder::from_diagram(self);
        b.kill(c);
        Some(b.finish().ok()?.0)
    }

    /// Bigon faces whose two crossings can be cancelled.
    pub fn r2_sites(&self, faces: &Faces) -> Vec<usize> {
        faces
            .faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                if let [(x, k), (y, l)] = f.corners[..] {
                    x != y && (k + 1) % 2 == l % 2
                } else {
                    false
                }
            })
            .map(|(i, _)| i)
            .collect()
    }

    fn r2_remove(&self, faces: &Faces, face: usize) -> Option<LinkDiagram> {
        if !self.r2_sites(faces).contains(&face) {
            return None;
        }
        let f = &faces.faces()[face];
        let mut b = Builder::from_diagram(self);
        b.kill(f.corners[0].0);
        b.kill(f.corners[1].0);
        Some(b.finish().ok()?.0)
    }

    fn r2_add(&self, faces: &Faces, face: usize, i: usize, j: usize, over: bool) -> Option<LinkDiagram> {
        let f = faces.faces().get(face)?;
        if i == j || i >= f.len() || j >= f.len() {
            return None;
        }
        let side = |m: usize| -> (Port, Port) {
            let (c, k) = f.corners[m];
            let a = (c, (k + 1) % 4);
            (a, self.other_end(a))
        };
        let (a1, b1) = side(i);
        let (a2, b2) = side(j);
        if self.label(a1) == self.label(a2) {
            return None;
        }
        let mut b = Builder::from_diagram(self);
        b.disconnect(a1);
        b.disconnect(a2);
        let parity = if over { 0 } else { 1 };
        let vb = b.add_crossing(parity);
        let va = b.add_crossing(parity);
        b.connect((vb, 3), a1);
        b.connect((va, 3), b1);
        b.connect((va, 2), a2);
        b.connect((vb, 0), b2);
        b.connect((vb, 1), (va, 1));
        b.connect((vb, 2), (va, 0));
        if self.is_incoming(a1) {
            b.set_incoming(vb, 1);
            b.set_incoming(va, 3);
        } else {
            b.set_incoming(vb, 3);
            b.set_incoming(va, 1);
        }
        if self.is_incoming(a2) {
            b.set_incoming(va, 0);
            b.set_incoming(vb, 0);
        } else {
            b.set_incoming(va, 2);
            b.set_incoming(vb, 2);
        }
        Some(b.finish().ok()?.0)
    }

    /// Triangular faces admitting a third Reidemeister move.
    pub fn r3_sites(&self, faces: &Faces) -> Vec<usize> {
        faces
            .faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| self.r3_ok(f.corners.as_slice()))
            .map(|(i, _)| i)
            .collect()
    }

    fn r3_ok(&self, corners: &[Port]) -> bool {
        let [(x, i), (y, j), (z, k)] = corners else {
            return false;
        };
        if x == y || y == z || x == z {
            return false;
        }
        let tri = [*x, *y, *z];
        let cs = [(*x, *i), (*y, *j), (*z, *k)];
        let mut top = false;
        for m in 0..3 {
            let (c, kk) = cs[m];
            let (d, ll) = cs[(m + 1) % 3];
            if (kk + 1) % 2 == 1 && ll % 2 == 1 {
                top = true;
            }
            let ext_p = self.other_end((c, (kk + 3) % 4));
            let ext_q = self.other_end((d, (ll + 2) % 4));
            if tri.contains(&ext_p.0) || tri.contains(&ext_q.0) {
                return false;
            }
        }
        top
    }

    fn r3(&self, faces: &Faces, face: usize) -> Option<LinkDiagram> {
        let f = faces.faces().get(face)?;
        if !self.r3_ok(&f.corners) {
            return None;
        }
        let mut b = Builder::from_diagram(self);
        let mut wiring = Vec::new();
        for m in 0..3 {
            let (c, k) = f.corners[m];
            let q = f.corners[(m + 1) % 3];
            let p = (c, (k + 1) % 4);
            let p2 = (c, (k + 3) % 4);
            let q2 = (q.0, (q.1 + 2) % 4);
            let ext_p = self.other_end(p2);
            let ext_q = self.other_end(q2);
            wiring.push((p, q, p2, q2, ext_p, ext_q));
        }
        for &(p, _, p2, q2, _, _) in &wiring {
            b.disconnect(p);
            b.disconnect(p2);
            b.disconnect(q2);
        }
        for &(p, q, p2, q2, ext_p, ext_q) in &wiring {
            b.connect(ext_p, q);
            b.connect(ext_q, p);
            b.connect(p2, q2);
        }
        Some(b.finish().ok()?.0)
    }

    /// Every move applicable to this diagram, in a deterministic order.
    pub fn available_moves(&self, kinds: &[MoveKind]) -> Vec<Move> {
        let faces = Faces::of(self);
        let mut out = Vec::new();
        for kind in kinds {
            match kind {
                MoveKind::R1Remove => {
                    out.extend(self.r1_sites().into_iter().map(|crossing| Move::R1Remove { crossing }))
                }
                MoveKind::R2Remove => {
                    out.extend(self.r2_sites(&faces).into_iter().map(|face| Move::R2Remove { face }))
                }
                MoveKind::R3 => out.extend(self.r3_sites(&faces).into_iter().map(|face| Move::R3 { face })),
                MoveKind::R1Add => {
                    for edge in self.edges() {
                        out.extend((0..4).map(|variant| Move::R1Add { edge, variant }));
                    }
                    if self.free_loops() > 0 {
                        out.extend((0..4).map(|variant| Move::R1AddFree { variant }));
                    }
                }
                MoveKind::R2Add => {
                    for (face, f) in faces.faces().iter().enumerate() {
                        for i in 0..f.len() {
                            for j in 0..f.len() {
                                if i != j {
                                    for over in [true, false] {
                                        out.push(Move::R2Add { face, i, j, over });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Applies one uniformly chosen applicable move of a random kind.
    pub fn random_move<R: Rng>(&self, rng: &mut R) -> Option<(Move, LinkDiagram)> {
        const KINDS: [MoveKind; 5] =
            [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3];
        for _ in 0..8 {
            let kind = KINDS[rng.gen_range(0..KINDS.len())];
            let moves = self.available_moves(&[kind]);
            if moves.is_empty() {
                continue;
            }
            let mv = moves[rng.gen_range(0..moves.len())];
            if let Some(d) = self.apply_move(mv) {
                return Some((mv, d));
            }
        }
        None
    }

    /// Removes kinks and cancelling bigons until none remain.
    pub fn simplify_greedy(&self) -> LinkDiagram {
        let mut d = self.clone();
        loop {
            if let Some(&c) = d.r1_sites().first() {
                d = d.r1_remove(c).expect("site is valid");
                continue;
            }
            let faces = Faces::of(&d);
            if let Some(&f) = d.r2_sites(&faces).first() {
                d = d.r2_remove(&faces, f).expect("site is valid");
                continue;
            }
            return d;
        }
    }
}
