//! Planar link diagrams in PD form.
//!
//! A crossing is four edge labels listed counterclockwise starting from the
//! incoming under-strand. Under-strand slots are therefore 0 (in) and 2 (out);
//! the over-strand occupies slots 1 and 3 and its direction is stored
//! separately as the incoming over slot.

mod builder;
mod canon;
mod faces;
mod moves;
mod pd;

use std::collections::BTreeMap;

use thiserror::Error;

pub use builder::{BuildMap, Builder};
pub use faces::{Face, Faces};
pub use moves::{Move, MoveKind};
pub use pd::{format_pd, parse_pd, parse_pd_blocks};

/// A crossing slot: (crossing index, slot 0..4).
pub type Port = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("edge {edge} appears {count} times (expected 2)")]
    EdgeCount { edge: u32, count: usize },
    #[error("edge {edge} cannot be oriented consistently")]
    NonClosable { edge: u32 },
    #[error("edge ids must be positive")]
    ZeroEdge,
    #[error("unknown crossing {0}")]
    UnknownCrossing(usize),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("dangling port {0:?} in construction")]
    Dangling(Port),
}

#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    over_in: Vec<u8>,
    free_loops: usize,
    topo: Topology,
}

#[derive(Clone, Debug, Default)]
struct Topology {
    occ: BTreeMap<u32, [Port; 2]>,
    /// For each edge: (tail port, head port).
    ends: BTreeMap<u32, (Port, Port)>,
    components: Vec<Vec<u32>>,
    edge_comp: BTreeMap<u32, usize>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.over_in == other.over_in
            && self.free_loops == other.free_loops
    }
}

impl Eq for LinkDiagram {}

impl LinkDiagram {
    /// Builds a diagram from PD crossings, inferring over-strand directions.
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self, DiagramError> {
        let occ = occurrences(&crossings)?;
        let over_in = infer_over_in(&crossings, &occ)?;
        Self::with_orientation(crossings, over_in, free_loops)
    }

    /// Builds a diagram whose over-strand directions are given explicitly.
    pub fn with_orientation(
        crossings: Vec<[u32; 4]>,
        over_in: Vec<u8>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let occ = occurrences(&crossings)?;
        let mut ends = BTreeMap::new();
        for (&e, &[p, q]) in &occ {
            let head = |port: Port| is_incoming(&over_in, port);
            let (tail, hd) = match (head(p), head(q)) {
                (false, true) => (p, q),
                (true, false) => (q, p),
                _ => return Err(DiagramError::NonClosable { edge: e }),
            };
            ends.insert(e, (tail, hd));
        }
        let mut topo = Topology { occ, ends, ..Default::default() };
        let mut seen = BTreeMap::new();
        let edges: Vec<u32> = topo.occ.keys().copied().collect();
        for start in edges {
            if seen.contains_key(&start) {
                continue;
            }
            let idx = topo.components.len();
            let mut comp = Vec::new();
            let mut e = start;
            loop {
                if seen.insert(e, idx).is_some() {
                    return Err(DiagramError::NonClosable { edge: e });
                }
                comp.push(e);
                let (c, s) = topo.ends[&e].1;
                e = crossings[c][(s + 2) % 4];
                if e == start {
                    break;
                }
            }
            topo.components.push(comp);
        }
        topo.edge_comp = seen;
        Ok(Self { crossings, over_in, free_loops, topo })
    }

    pub fn unknot() -> Self {
        Self::new(Vec::new(), 1).expect("empty diagram is valid")
    }

    pub fn unlink(k: usize) -> Self {
        Self::new(Vec::new(), k).expect("empty diagram is valid")
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing(&self, c: usize) -> [u32; 4] {
        self.crossings[c]
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Incoming over slot (1 or 3) at crossing `c`.
    pub fn over_in(&self, c: usize) -> usize {
        self.over_in[c] as usize
    }

    pub fn over_in_all(&self) -> &[u8] {
        &self.over_in
    }

    pub fn n_components(&self) -> usize {
        self.topo.components.len() + self.free_loops
    }

    /// Cyclic edge sequences of the components that have crossings.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.topo.components
    }

    pub fn edges(&self) -> impl Iterator<Item = u32> + '_ {
        self.topo.occ.keys().copied()
    }

    pub fn n_edges(&self) -> usize {
        self.topo.occ.len()
    }

    pub fn component_of_edge(&self, e: u32) -> Option<usize> {
        self.topo.edge_comp.get(&e).copied()
    }

    /// Both ports carrying edge `e`.
    pub fn occurrences(&self, e: u32) -> Option<[Port; 2]> {
        self.topo.occ.get(&e).copied()
    }

    /// (tail, head) ports of edge `e` with respect to the orientation.
    pub fn edge_ends(&self, e: u32) -> Option<(Port, Port)> {
        self.topo.ends.get(&e).copied()
    }

    pub fn label(&self, p: Port) -> u32 {
        self.crossings[p.0][p.1]
    }

    /// The port at the other end of the edge leaving `p`.
    pub fn other_end(&self, p: Port) -> Port {
        let [a, b] = self.topo.occ[&self.label(p)];
        if a == p {
            b
        } else {
            a
        }
    }

    pub fn is_incoming(&self, p: Port) -> bool {
        is_incoming(&self.over_in, p)
    }

    pub fn sign(&self, c: usize) -> i32 {
        if self.over_in[c] == 3 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i32 {
        (0..self.n_crossings()).map(|c| self.sign(c)).sum()
    }

    /// Component indices of the (under, over) strands at crossing `c`.
    pub fn strand_components(&self, c: usize) -> (usize, usize) {
        let [a, b, ..] = self.crossings[c];
        (self.topo.edge_comp[&a], self.topo.edge_comp[&b])
    }

    /// Over/under swapped at crossing `c` only.
    pub fn crossing_change(&self, c: usize) -> Result<Self, DiagramError> {
        if c >= self.n_crossings() {
            return Err(DiagramError::UnknownCrossing(c));
        }
        let mut crossings = self.crossings.clone();
        let mut over_in = self.over_in.clone();
        let (x, o) = changed(crossings[c], over_in[c]);
        crossings[c] = x;
        over_in[c] = o;
        Ok(Self::with_orientation(crossings, over_in, self.free_loops)
            .expect("crossing change preserves validity"))
    }

    pub fn crossing_change_many(&self, cs: &[usize]) -> Result<Self, DiagramError> {
        let mut crossings = self.crossings.clone();
        let mut over_in = self.over_in.clone();
        for &c in cs {
            if c >= self.n_crossings() {
                return Err(DiagramError::UnknownCrossing(c));
            }
            let (x, o) = changed(crossings[c], over_in[c]);
            crossings[c] = x;
            over_in[c] = o;
        }
        Ok(Self::with_orientation(crossings, over_in, self.free_loops)
            .expect("crossing change preserves validity"))
    }

    pub fn mirror(&self) -> Self {
        let all: Vec<usize> = (0..self.n_crossings()).collect();
        self.crossing_change_many(&all).expect("indices in range")
    }

    /// Reverses the orientation of the listed traced components.
    pub fn reverse_components(&self, comps: &[usize]) -> Result<Self, DiagramError> {
        if let Some(&k) = comps.iter().find(|&&k| k >= self.topo.components.len()) {
            return Err(DiagramError::UnknownComponent(k));
        }
        let flip = |e: u32| comps.contains(&self.topo.edge_comp[&e]);
        let mut crossings = self.crossings.clone();
        let mut over_in = self.over_in.clone();
        for (c, x) in crossings.iter_mut().enumerate() {
            let under = flip(x[0]);
            let over = flip(x[1]);
            let mut o = over_in[c];
            if over {
                o = 4 - o;
            }
            if under {
                *x = [x[2], x[3], x[0], x[1]];
                o = 4 - o;
            }
            over_in[c] = o;
        }
        Self::with_orientation(crossings, over_in, self.free_loops)
    }

    pub fn reverse(&self) -> Self {
        let all: Vec<usize> = (0..self.topo.components.len()).collect();
        self.reverse_components(&all).expect("indices in range")
    }

    /// Symmetric matrix of pairwise linking numbers, free loops last.
    pub fn linking_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.n_components();
        let mut m = vec![vec![0i32; n]; n];
        for c in 0..self.n_crossings() {
            let (u, o) = self.strand_components(c);
            if u != o {
                m[u][o] += self.sign(c);
                m[o][u] += self.sign(c);
            }
        }
        for row in &mut m {
            for v in row.iter_mut() {
                *v /= 2;
            }
        }
        m
    }

    /// Connected sum of component `c1` of `d1` with component `c2` of `d2`.
    ///
    /// Components are numbered as in [`LinkDiagram::components`], with free
    /// loops following the traced components.
    pub fn connect_sum(
        d1: &LinkDiagram,
        c1: usize,
        d2: &LinkDiagram,
        c2: usize,
    ) -> Result<LinkDiagram, DiagramError> {
        if c1 >= d1.n_components() {
            return Err(DiagramError::UnknownComponent(c1));
        }
        if c2 >= d2.n_components() {
            return Err(DiagramError::UnknownComponent(c2));
        }
        let mut b = Builder::from_diagram(d1);
        let offset = b.absorb(d2);
        let t1 = d1.component_site(c1);
        let t2 = d2.component_site(c2).map(|(t, h)| ((t.0 + offset, t.1), (h.0 + offset, h.1)));
        match (t1, t2) {
            (None, None) => b.add_free_loops(-1),
            (Some(_), None) => b.add_free_loops(-1),
            (None, Some(_)) => b.add_free_loops(-1),
            (Some((t1, h1)), Some((t2, h2))) => {
                b.disconnect(t1);
                b.disconnect(t2);
                b.connect(t1, h2);
                b.connect(t2, h1);
            }
        }
        Ok(b.finish()?.0)
    }

    /// (tail, head) of the first edge of a traced component; `None` for free loops.
    fn component_site(&self, k: usize) -> Option<(Port, Port)> {
        self.topo.components.get(k).map(|comp| self.topo.ends[&comp[0]])
    }

    /// Oriented smoothing at crossing `c`.
    pub fn oriented_smoothing(&self, c: usize) -> Result<Self, DiagramError> {
        if c >= self.n_crossings() {
            return Err(DiagramError::UnknownCrossing(c));
        }
        let mut b = Builder::from_diagram(self);
        let oi = self.over_in(c);
        let oo = (oi + 2) % 4;
        let mut pairing = [0usize; 4];
        pairing[0] = oo;
        pairing[oo] = 0;
        pairing[oi] = 2;
        pairing[2] = oi;
        b.kill_with(c, pairing);
        Ok(b.finish()?.0)
    }

    /// True when the diagram, restricted to each connected piece, satisfies
    /// Euler's formula on the sphere.
    pub fn is_planar(&self) -> bool {
        let faces = Faces::of(self);
        let pieces = self.pieces();
        pieces.iter().all(|piece| {
            let v = piece.len() as i64;
            let f = faces
                .faces()
                .iter()
                .filter(|f| piece.contains(&f.corners[0].0))
                .count() as i64;
            v - 2 * v + f == 2
        })
    }

    /// Crossing sets of the connected pieces of the projection graph.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.n_crossings();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut piece = Vec::new();
            seen[s] = true;
            while let Some(c) = stack.pop() {
                piece.push(c);
                for k in 0..4 {
                    let (d, _) = self.other_end((c, k));
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
            piece.sort_unstable();
            out.push(piece);
        }
        out
    }

    /// Sub-diagram on a set of crossings closed under adjacency.
    pub fn restrict(&self, piece: &[usize]) -> Self {
        let crossings = piece.iter().map(|&c| self.crossings[c]).collect();
        let over_in = piece.iter().map(|&c| self.over_in[c]).collect();
        Self::with_orientation(crossings, over_in, 0).expect("piece is closed")
    }

    pub fn canonical_code(&self) -> Vec<u32> {
        canon::canonical_code(self)
    }

    /// Oriented isomorphism of diagrams on the sphere.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n_crossings() == other.n_crossings()
            && self.free_loops == other.free_loops
            && self.canonical_code() == other.canonical_code()
    }
}

fn is_incoming(over_in: &[u8], (c, s): Port) -> bool {
    s == 0 || s == over_in[c] as usize
}

fn changed(x: [u32; 4], over_in: u8) -> ([u32; 4], u8) {
    let [a, b, c, d] = x;
    if over_in == 3 {
        ([d, a, b, c], 1)
    } else {
        ([b, c, d, a], 3)
    }
}

fn occurrences(crossings: &[[u32; 4]]) -> Result<BTreeMap<u32, [Port; 2]>, DiagramError> {
    let mut tmp: BTreeMap<u32, Vec<Port>> = BTreeMap::new();
    for (c, x) in crossings.iter().enumerate() {
        for (s, &e) in x.iter().enumerate() {
            if e == 0 {
                return Err(DiagramError::ZeroEdge);
            }
            tmp.entry(e).or_default().push((c, s));
        }
    }
    tmp.into_iter()
        .map(|(e, v)| match v.as_slice() {
            [p, q] => Ok((e, [*p, *q])),
            _ => Err(DiagramError::EdgeCount { edge: e, count: v.len() }),
        })
        .collect()
}

fn infer_over_in(
    crossings: &[[u32; 4]],
    occ: &BTreeMap<u32, [Port; 2]>,
) -> Result<Vec<u8>, DiagramError> {
    let n = crossings.len();
    let mut over_in: Vec<Option<u8>> = vec![None; n];
    // head/tail status of each port: Some(true) = incoming
    let mut status: BTreeMap<Port, bool> = BTreeMap::new();
    let mut queue: Vec<(Port, bool)> = Vec::new();
    for c in 0..n {
        queue.push(((c, 0), true));
        queue.push(((c, 2), false));
    }
    let mut next_guess = 0;
    loop {
        while let Some((p, incoming)) = queue.pop() {
            match status.get(&p) {
                Some(&s) if s == incoming => continue,
                Some(_) => return Err(DiagramError::NonClosable { edge: crossings[p.0][p.1] }),
                None => {}
            }
            status.insert(p, incoming);
            let e = crossings[p.0][p.1];
            let [a, b] = occ[&e];
            let other = if a == p { b } else { a };
            queue.push((other, !incoming));
            if p.1 % 2 == 1 {
                let slot = if incoming { p.1 } else { (p.1 + 2) % 4 } as u8;
                match over_in[p.0] {
                    Some(o) if o != slot => {
                        return Err(DiagramError::NonClosable { edge: e });
                    }
                    _ => over_in[p.0] = Some(slot),
                }
                let partner = (p.0, (p.1 + 2) % 4);
                queue.push((partner, !incoming));
            }
        }
        while next_guess < n && over_in[next_guess].is_some() {
            next_guess += 1;
        }
        if next_guess == n {
            break;
        }
        // an all-over component: orient along increasing labels
        let [_, b, _, d] = crossings[next_guess];
        let b_in = if d == b + 1 {
            true
        } else if b == d + 1 {
            false
        } else {
            b > d
        };
        queue.push(((next_guess, 1), b_in));
    }
    Ok(over_in.into_iter().map(|o| o.expect("all oriented")).collect())
}
