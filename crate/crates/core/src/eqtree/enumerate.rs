//! Exhaustive families of small trees.

use std::collections::BTreeSet;

use super::{BipartitionedTree, EquivariantTree, Part, TreeEdge};
use crate::IntersectionType;

/// Edge list of a labelled tree from its Prüfer sequence.
fn from_pruefer(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Rooted canonical string of the subtree at `v`.
fn ahu(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| Some(w) != parent).map(|&w| ahu(adj, w, Some(v))).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn canonical(edges: &[(usize, usize)], n: usize) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n).map(|r| ahu(&adj, r, None)).min().unwrap_or_default()
}

/// One representative edge list per isomorphism class of trees on `n` vertices.
pub fn unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let edges = from_pruefer(&seq, n);
        if seen.insert(canonical(&edges, n)) {
            out.push(edges);
        }
        let Some(i) = seq.iter().rposition(|&x| x + 1 < n) else { break };
        seq[i] += 1;
        for x in &mut seq[i + 1..] {
            *x = 0;
        }
    }
    out
}

/// Every bipartition of the edges at every vertex, up to swapping the two
/// classes at a vertex. The first edge at each vertex is always in P.
pub fn bipartitions(n: usize, edges: &[(usize, usize)]) -> Vec<BipartitionedTree> {
    let incident: Vec<Vec<usize>> =
        (0..n).map(|v| (0..edges.len()).filter(|&i| edges[i].0 == v || edges[i].1 == v).collect()).collect();
    let free: Vec<(usize, usize)> =
        incident.iter().enumerate().flat_map(|(v, inc)| inc.iter().skip(1).map(move |&i| (v, i))).collect();
    (0u64..1 << free.len())
        .map(|mask| {
            let in_q = |v: usize, i: usize| free.iter().position(|&f| f == (v, i)).is_some_and(|k| mask >> k & 1 == 1);
            let side = |v: usize, i: usize| if in_q(v, i) { Part::Q } else { Part::P };
            let es = edges.iter().enumerate().map(|(i, &(a, b))| TreeEdge::new(a, b, side(a, i), side(b, i))).collect();
            BipartitionedTree::new(n, es)
        })
        .collect()
}

pub(crate) fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(rho: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(v) = rho.iter().position(Option::is_none) else {
            out.push(rho.iter().map(|r| r.expect("assigned")).collect());
            return;
        };
        for w in v..rho.len() {
            if rho[w].is_none() {
                rho[v] = Some(w);
                rho[w] = Some(v);
                go(rho, out);
                rho[v] = None;
                rho[w] = None;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut out);
    out
}

/// All valid equivariant trees on `n` vertices, one tree shape per
/// isomorphism class but every involution, bipartition and fixed weight.
pub fn equivariant_trees(n: usize) -> Vec<EquivariantTree> {
    let mut out = Vec::new();
    let rhos = involutions(n);
    for shape in unlabeled_trees(n) {
        let bps = bipartitions(n, &shape);
        for rho in rhos.iter().filter(|r| (0..n).filter(|&v| r[v] == v).count() == 1) {
            let fixed = (0..n).find(|&v| rho[v] == v).expect("one fixed vertex");
            for bp in &bps {
                for w in [IntersectionType::BPlus, IntersectionType::BMinus, IntersectionType::C] {
                    let mut weights = vec![IntersectionType::A; n];
                    weights[fixed] = w;
                    let t = EquivariantTree { base: bp.clone(), rho: rho.clone(), weights };
                    if t.validate().is_ok() {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}
