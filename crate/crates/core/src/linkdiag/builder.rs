//! Port-graph construction of diagrams.
//!
//! Crossings are described by four counterclockwise ports and the parity of
//! the under-strand slots. Ports are wired pairwise. Removing a crossing turns
//! it into pass-through junctions, which is how Reidemeister removals and
//! smoothings are expressed. [`Builder::finish`] orients every component,
//! rotates each crossing so that slot 0 is the incoming under-strand, and
//! relabels edges `1..=2n` consecutively along components.

use super::{DiagramError, LinkDiagram, Port};

#[derive(Clone, Debug, Default)]
pub struct Builder {
    under_parity: Vec<u8>,
    hint: Vec<[Option<u8>; 2]>,
    pass: Vec<Option<[usize; 4]>>,
    link: Vec<[Option<Port>; 4]>,
    free_loops: i64,
}

/// How crossings of a [`Builder`] map into the finished diagram.
#[derive(Clone, Debug, Default)]
pub struct BuildMap {
    /// Builder crossing to diagram crossing; `None` for removed crossings.
    pub new_index: Vec<Option<usize>>,
    /// Diagram slot `k` of a surviving crossing is builder slot `(k + rotation) % 4`.
    pub rotation: Vec<usize>,
    /// Diagram crossing to builder crossing.
    pub origin: Vec<usize>,
}

impl BuildMap {
    /// The diagram port corresponding to a builder port.
    pub fn port(&self, (c, s): Port) -> Option<Port> {
        self.new_index
            .get(c)
            .copied()
            .flatten()
            .map(|n| (n, (s + 4 - self.rotation[c]) % 4))
    }
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_diagram(d: &LinkDiagram) -> Self {
        let mut b = Self::new();
        b.absorb(d);
        b
    }

    /// Appends a copy of `d`; returns the index offset of its crossings.
    pub fn absorb(&mut self, d: &LinkDiagram) -> usize {
        let offset = self.under_parity.len();
        for c in 0..d.n_crossings() {
            let x = self.add_crossing(0);
            self.hint[x] = [Some(0), Some(d.over_in(c) as u8)];
        }
        for e in d.edges() {
            let [p, q] = d.occurrences(e).expect("edge exists");
            self.connect((p.0 + offset, p.1), (q.0 + offset, q.1));
        }
        self.free_loops += d.free_loops() as i64;
        offset
    }

    pub fn n_crossings(&self) -> usize {
        self.under_parity.len()
    }

    /// Adds a crossing whose under-strand uses the slots of the given parity.
    pub fn add_crossing(&mut self, under_parity: u8) -> usize {
        self.under_parity.push(under_parity % 2);
        self.hint.push([None, None]);
        self.pass.push(None);
        self.link.push([None; 4]);
        self.under_parity.len() - 1
    }

    /// Declares `slot` as the incoming end of the strand through it.
    pub fn set_incoming(&mut self, c: usize, slot: usize) {
        self.hint[c][slot % 2] = Some(slot as u8);
    }

    pub fn incoming_hint(&self, c: usize, parity: usize) -> Option<usize> {
        self.hint[c][parity].map(usize::from)
    }

    pub fn under_parity(&self, c: usize) -> usize {
        self.under_parity[c] as usize
    }

    pub fn is_over(&self, (c, s): Port) -> bool {
        s % 2 != self.under_parity[c] as usize
    }

    pub fn is_alive(&self, c: usize) -> bool {
        self.pass[c].is_none()
    }

    pub fn connect(&mut self, p: Port, q: Port) {
        debug_assert!(self.link[p.0][p.1].is_none() && self.link[q.0][q.1].is_none());
        self.link[p.0][p.1] = Some(q);
        self.link[q.0][q.1] = Some(p);
    }

    /// Unwires `p`, returning its former partner.
    pub fn disconnect(&mut self, p: Port) -> Port {
        let q = self.link[p.0][p.1].take().expect("port is wired");
        self.link[q.0][q.1] = None;
        q
    }

    pub fn partner(&self, p: Port) -> Option<Port> {
        self.link[p.0][p.1]
    }

    /// Removes crossing `c`, letting both strands pass straight through.
    pub fn kill(&mut self, c: usize) {
        self.kill_with(c, [2, 3, 0, 1]);
    }

    /// Removes crossing `c`, joining slots according to the involution `pairing`.
    pub fn kill_with(&mut self, c: usize, pairing: [usize; 4]) {
        self.pass[c] = Some(pairing);
    }

    pub fn add_free_loops(&mut self, k: i64) {
        self.free_loops += k;
    }

    /// Follows wiring from an alive port through removed crossings.
    fn resolve(&self, p: Port, seen_dead: &mut [[bool; 4]]) -> Result<Port, DiagramError> {
        let mut q = self.link[p.0][p.1].ok_or(DiagramError::Dangling(p))?;
        while let Some(pairing) = self.pass[q.0] {
            seen_dead[q.0][q.1] = true;
            let r = (q.0, pairing[q.1]);
            seen_dead[r.0][r.1] = true;
            q = self.link[r.0][r.1].ok_or(DiagramError::Dangling(r))?;
        }
        Ok(q)
    }

    pub fn finish(&self) -> Result<(LinkDiagram, BuildMap), DiagramError> {
        let n = self.n_crossings();
        let mut seen_dead = vec![[false; 4]; n];
        let mut next = vec![[(0usize, 0usize); 4]; n];
        for c in (0..n).filter(|&c| self.is_alive(c)) {
            for s in 0..4 {
                next[c][s] = self.resolve((c, s), &mut seen_dead)?;
            }
        }
        let mut loops = self.free_loops;
        for c in (0..n).filter(|&c| !self.is_alive(c)) {
            for s in 0..4 {
                if seen_dead[c][s] {
                    continue;
                }
                let mut q = (c, s);
                loop {
                    let pairing = self.pass[q.0].expect("dead");
                    seen_dead[q.0][q.1] = true;
                    let r = (q.0, pairing[q.1]);
                    seen_dead[r.0][r.1] = true;
                    q = self.link[r.0][r.1].ok_or(DiagramError::Dangling(r))?;
                    if seen_dead[q.0][q.1] {
                        break;
                    }
                }
                loops += 1;
            }
        }
        assert!(loops >= 0, "negative free-loop count in construction");

        // Trace components, orienting each by its first hinted strand.
        let mut visited = vec![[false; 2]; n];
        let mut entry = vec![[0usize; 2]; n];
        let mut components: Vec<Vec<Port>> = Vec::new();
        for c in (0..n).filter(|&c| self.is_alive(c)) {
            for parity in [self.under_parity(c), 1 - self.under_parity(c)] {
                if visited[c][parity] {
                    continue;
                }
                let mut visits = Vec::new();
                let mut v = (c, parity);
                loop {
                    visited[v.0][v.1 % 2] = true;
                    visits.push(v);
                    let exit = (v.0, (v.1 + 2) % 4);
                    v = next[exit.0][exit.1];
                    if v == (c, parity) {
                        break;
                    }
                    if visited[v.0][v.1 % 2] {
                        return Err(DiagramError::Dangling(v));
                    }
                }
                let agrees = visits.iter().find_map(|&(x, s)| {
                    self.hint[x][s % 2].map(|h| h as usize == s)
                });
                if agrees == Some(false) {
                    visits = visits.iter().rev().map(|&(x, s)| (x, (s + 2) % 4)).collect();
                }
                for &(x, s) in &visits {
                    entry[x][s % 2] = s;
                }
                components.push(visits);
            }
        }

        let mut map = BuildMap {
            new_index: vec![None; n],
            rotation: vec![0; n],
            origin: Vec::new(),
        };
        for c in (0..n).filter(|&c| self.is_alive(c)) {
            map.new_index[c] = Some(map.origin.len());
            map.origin.push(c);
            map.rotation[c] = entry[c][self.under_parity(c)];
        }
        let mut labels = vec![[0u32; 4]; n];
        let mut label = 1u32;
        for visits in &components {
            for (i, &(x, s)) in visits.iter().enumerate() {
                let (y, t) = visits[(i + 1) % visits.len()];
                labels[x][(s + 2) % 4] = label;
                labels[y][t] = label;
                label += 1;
            }
        }
        let mut crossings = Vec::with_capacity(map.origin.len());
        let mut over_in = Vec::with_capacity(map.origin.len());
        for &c in &map.origin {
            let rot = map.rotation[c];
            crossings.push(std::array::from_fn(|k| labels[c][(k + rot) % 4]));
            let o = entry[c][1 - self.under_parity(c)];
            over_in.push(((o + 4 - rot) % 4) as u8);
        }
        let d = LinkDiagram::with_orientation(crossings, over_in, loops as usize)?;
        Ok((d, map))
    }
}
