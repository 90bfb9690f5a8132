//! Links built from trees: one Hopf link per vertex, connect-summed along edges.

use std::collections::VecDeque;

use super::{BipartitionedTree, EquivariantTree, Part, TreeError};
use crate::linkdiag::{Builder, Port};
use crate::symdiag::{AxisEvent, FixSite, SlotMap};
use crate::{corpus, IntersectionType, LinkDiagram, SymmetricDiagram};

/// Outgoing ports of each Hopf component, indexed by [`Part`].
type PartPorts = [[Port; 2]; 2];

fn part_index(p: Part) -> usize {
    match p {
        Part::P => 0,
        Part::Q => 1,
    }
}

/// Wiring of the positive Hopf link on crossings `a`, `b`: component P is
/// over at `a` and under at `b`, component Q the reverse.
const HOPF_WIRES: [(usize, usize, usize, usize); 4] = [(0, 1, 1, 0), (0, 3, 1, 2), (0, 2, 1, 3), (0, 0, 1, 1)];

fn add_hopf(b: &mut Builder, negative: bool) -> (usize, usize, PartPorts) {
    let x = [b.add_crossing(negative as u8), b.add_crossing(negative as u8)];
    for (i, s, j, t) in HOPF_WIRES {
        b.connect((x[i], s), (x[j], t));
    }
    for &c in &x {
        b.set_incoming(c, 0);
        b.set_incoming(c, 3);
    }
    (x[0], x[1], hopf_ports(x[0], x[1]))
}

fn hopf_ports(a: usize, b: usize) -> PartPorts {
    [[(a, 1), (b, 2)], [(a, 2), (b, 1)]]
}

/// Cuts the edge leaving `host` and the edge leaving `guest`, and crosses them over.
fn splice(b: &mut Builder, host: Port, guest: Port) {
    let h = b.disconnect(host);
    let g = b.disconnect(guest);
    b.connect(host, g);
    b.connect(guest, h);
}

/// Round-robin choice among the two sites of a Hopf component.
struct Sites {
    ports: Vec<PartPorts>,
    uses: Vec<[usize; 2]>,
}

impl Sites {
    fn next(&mut self, v: usize, part: Part) -> Port {
        let k = part_index(part);
        let i = self.uses[v][k];
        self.uses[v][k] += 1;
        self.ports[v][k][i % 2]
    }
}

/// The tree edges in breadth-first order from `root`, oriented away from it,
/// restricted to vertices accepted by `keep`.
fn bfs_edges(tree: &BipartitionedTree, root: usize, keep: impl Fn(usize) -> bool) -> Vec<(usize, usize, usize)> {
    let mut seen = vec![false; tree.n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut out = Vec::new();
    while let Some(u) = queue.pop_front() {
        for i in tree.incident(u) {
            let w = tree.edges[i].other(u);
            if !seen[w] && keep(w) {
                seen[w] = true;
                out.push((i, u, w));
                queue.push_back(w);
            }
        }
    }
    out
}

/// The associated link with, for every vertex, the components that contain
/// its P and Q Hopf components.
pub fn associated_link_parts(tree: &BipartitionedTree) -> Result<(LinkDiagram, Vec<[usize; 2]>), TreeError> {
    tree.validate().map_err(TreeError::Invalid)?;
    let mut b = Builder::new();
    let ports: Vec<PartPorts> = (0..tree.n).map(|v| add_hopf(&mut b, tree.negative[v]).2).collect();
    let mut sites = Sites { ports: ports.clone(), uses: vec![[0; 2]; tree.n] };
    for (i, u, w) in bfs_edges(tree, 0, |_| true) {
        let e = tree.edges[i];
        let host = sites.next(u, e.side_at(u).expect("incident"));
        let guest = sites.next(w, e.side_at(w).expect("incident"));
        splice(&mut b, host, guest);
    }
    let (d, map) = b.finish().expect("tree construction is well formed");
    let comp = |p: Port| {
        let q = map.port(p).expect("Hopf crossings survive");
        d.component_of_edge(d.label(q)).expect("labelled edge")
    };
    let parts = ports.iter().map(|pp| [comp(pp[0][0]), comp(pp[1][0])]).collect();
    Ok((d, parts))
}

/// One Hopf link per vertex, with a connected sum of the components named by
/// the bipartition along each edge. The result has one more component than
/// the tree has vertices.
pub fn associated_link(tree: &BipartitionedTree) -> Result<LinkDiagram, TreeError> {
    associated_link_parts(tree).map(|(d, _)| d)
}

/// Builder that also carries the symmetry on ports.
struct SymBuilder {
    b: Builder,
    sigma: Vec<(usize, SlotMap)>,
}

impl SymBuilder {
    fn image(&self, (c, s): Port) -> Port {
        let (x, m) = self.sigma[c];
        (x, m.apply(s))
    }

    /// A Hopf block and its mirror image across the axis.
    fn add_pair(&mut self, negative: bool) -> PartPorts {
        let (a, b, ports) = add_hopf(&mut self.b, negative);
        let a2 = self.b.add_crossing(negative as u8);
        let b2 = self.b.add_crossing(negative as u8);
        let m = SlotMap { reflect: true, shift: 1 };
        self.sigma.extend([(a2, m), (b2, m), (a, m), (b, m)]);
        for (i, s, j, t) in HOPF_WIRES {
            let x = [a2, b2];
            self.b.connect((x[i], m.apply(s)), (x[j], m.apply(t)));
        }
        ports
    }

    /// Splices `guest` in at `host`, and the image of `guest` at the image of
    /// `host`. Returns the guest port when the host edge crossed the axis,
    /// since the fixed point then moves to the edge leaving it.
    fn splice_pair(&mut self, host: Port, guest: Port) -> Option<Port> {
        let far = self.b.partner(host).expect("wired");
        let (ih, ig) = (self.image(host), self.image(guest));
        if far == ih {
            self.b.disconnect(host);
            let g_in = self.b.disconnect(guest);
            let ig_in = self.b.disconnect(ig);
            self.b.connect(host, g_in);
            self.b.connect(guest, ig);
            self.b.connect(ig_in, ih);
            Some(guest)
        } else {
            splice(&mut self.b, host, guest);
            splice(&mut self.b, ih, ig);
            None
        }
    }
}

fn model(weight: IntersectionType) -> SymmetricDiagram {
    let name = match weight {
        IntersectionType::BPlus => "hopf_b_plus",
        IntersectionType::BMinus => "hopf_b_minus",
        _ => "hopf_c",
    };
    corpus::sym(name).expect("bundled model")
}

/// A symmetric diagram of the associated link of a valid equivariant tree.
///
/// The fixed vertex uses the bundled symmetric Hopf model of its weight. Each
/// rho-pair of A vertices becomes a Hopf link and its image, and each
/// rho-pair of edges becomes a pair of symmetric connected sums.
pub fn associated_si_link(tree: &EquivariantTree) -> Result<SymmetricDiagram, TreeError> {
    let weight = tree.tree_type()?;
    let root = tree.fixed_vertices()[0];
    let root_model = model(weight);
    if tree.n() == 1 {
        return Ok(root_model);
    }
    let base = &tree.base;

    // one branch from each rho-pair of branches at the root goes on the right
    let order = bfs_edges(base, root, |_| true);
    let mut branch = vec![root; tree.n()];
    for &(_, u, w) in &order {
        branch[w] = if u == root { w } else { branch[u] };
    }
    let keep: Vec<bool> = (0..tree.n()).map(|w| w != root && branch[w] < tree.rho[branch[w]]).collect();
    let mut sb = SymBuilder { b: Builder::new(), sigma: Vec::new() };
    let md = &root_model.base;
    let offset = sb.b.absorb(md);
    for c in 0..md.n_crossings() {
        let m = root_model.slot_map(c).expect("bundled model is symmetric");
        sb.sigma.push((root_model.iota_crossing(c) + offset, m));
    }
    let tail = |e: u32| {
        let (t, _) = md.edge_ends(e).expect("model edge");
        (t.0 + offset, t.1)
    };
    let root_ports: PartPorts = std::array::from_fn(|k| {
        let comp = &md.components()[k];
        [tail(comp[0]), tail(comp[1])]
    });
    let mut fixed: Vec<Option<Port>> = root_model
        .axis
        .iter()
        .map(|ev| match ev {
            AxisEvent::FixedPoint(FixSite::Edge(e)) => Some(tail(*e)),
            _ => None,
        })
        .collect();

    let mut ports = vec![[[(0, 0); 2]; 2]; tree.n()];
    ports[root] = root_ports;
    let mut sites = Sites { ports, uses: vec![[0; 2]; tree.n()] };
    for (i, u, w) in bfs_edges(base, root, |w| keep[w]) {
        sites.ports[w] = sb.add_pair(base.negative[w]);
        let e = base.edges[i];
        let host = sites.next(u, e.side_at(u).expect("incident"));
        let guest = sites.next(w, e.side_at(w).expect("incident"));
        let partner = sb.b.partner(host).expect("wired");
        let moved = sb.splice_pair(host, guest);
        if let Some(g) = moved {
            for f in fixed.iter_mut().flatten() {
                if *f == host || *f == partner {
                    *f = g;
                }
            }
        }
    }

    let (d, map) = sb.b.finish().expect("symmetric construction is well formed");
    let builder_port = |(c, k): Port| (map.origin[c], (k + map.rotation[map.origin[c]]) % 4);
    let crossing_pairs: Vec<(usize, usize)> = (0..d.n_crossings())
        .filter_map(|c| {
            let img = map.new_index[sb.sigma[map.origin[c]].0].expect("image survives");
            (c < img).then_some((c, img))
        })
        .collect();
    let edge_pairs: Vec<(u32, u32)> = d
        .edges()
        .filter_map(|e| {
            let [p, _] = d.occurrences(e).expect("edge");
            let q = map.port(sb.image(builder_port(p))).expect("image survives");
            let f = d.label(q);
            (e < f).then_some((e, f))
        })
        .collect();
    let axis = root_model
        .axis
        .iter()
        .zip(&fixed)
        .map(|(ev, f)| match (ev, f) {
            (AxisEvent::OnAxis { crossing, kind }, _) => AxisEvent::OnAxis {
                crossing: map.new_index[crossing + offset].expect("model crossing survives"),
                kind: *kind,
            },
            (_, Some(p)) => AxisEvent::FixedPoint(FixSite::Edge(d.label(map.port(*p).expect("survives")))),
            (ev, None) => *ev,
        })
        .collect();
    SymmetricDiagram::new("si_link", d, &crossing_pairs, &edge_pairs, axis)
        .map_err(|e| TreeError::Parse { line: 0, msg: e.to_string() })
}
