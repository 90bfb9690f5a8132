//! The acceptance criteria, one line of output each.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use eqslice::certify::{adjudicate, check_theorem, Convention, ImmersedDiskDescriptor};
use eqslice::corpus;
use eqslice::eqtree::{
    associated_link_parts, bipartitions, equivariant_trees, unlabeled_trees, BipartitionedTree, EquivariantTree, Part,
    TreeEdge,
};
use eqslice::invariants::{goeritz, jones, jones_determinant, try_unknot, UnknotStatus, DEFAULT_BUDGET};
use eqslice::plumbing::{ambient, builtin, symmetric_plumbings};
use eqslice::symdiag::{quotient, HalfAxis};
use eqslice::IntersectionType::{self, A, BMinus, BPlus, C};
use eqslice::LinkDiagram;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    ensure(start.elapsed() < limit, || format!("took {:?}, limit {limit:?}", start.elapsed()))
}

fn fig8_quotients() -> Check {
    let start = Instant::now();
    let sd = corpus::sym("fig8_tau").ok_or("fig8_tau missing")?;
    let t25 = corpus::pd("t25").ok_or("t25 missing")?;
    let k1 = quotient(&sd, HalfAxis::H1).map_err(|e| e.to_string())?;
    let (j1, j) = (jones(&k1).map_err(|e| e.to_string())?, jones(&t25).map_err(|e| e.to_string())?);
    ensure(j1 == j || j1 == j.invert(), || format!("K1 Jones {j1} is not {j} up to t <-> 1/t"))?;
    ensure(goeritz(&k1).0 == goeritz(&t25).0, || "determinants differ".into())?;
    let k2 = quotient(&sd, HalfAxis::H2).map_err(|e| e.to_string())?;
    ensure(try_unknot(&k2, DEFAULT_BUDGET) == UnknotStatus::ProvenUnknot, || "K2 not proven trivial".into())?;
    within(start, Duration::from_secs(1))
}

fn s2xs2_verdicts() -> Check {
    let start = Instant::now();
    let cases = [
        ("fig8_mirror_tau", "s2xs2_tau1", true),
        ("fig8_tau", "s2xs2_tau1", false),
        ("fig8_tau", "s2xs2_tau2", true),
        ("fig8_mirror_tau", "s2xs2_tau2", false),
    ];
    for (knot, tag, slice) in cases {
        let v = adjudicate(&corpus::sym(knot).unwrap(), &ambient(tag).unwrap(), 4, Convention::default())
            .map_err(|e| e.to_string())?;
        let ok = if slice { v.is_slice() } else { v.is_not_slice() };
        ensure(ok, || format!("{knot} in {tag}: {}", v.conclusion.label()))?;
    }
    within(start, Duration::from_secs(10))
}

fn three_s2xs2_family() -> Check {
    let start = Instant::now();
    for n in 1..=4 {
        let pt = builtin(&format!("three_s2xs2({n})")).map_err(|e| e.to_string())?;
        ensure(pt.n_spheres() == 2 * n + 2, || format!("three_s2xs2({n}) has {} spheres", pt.n_spheres()))?;
        let tight = ImmersedDiskDescriptor::from_counts(n, 0, 0, 1);
        ensure(tight.k == pt.n_spheres() - 1, || "descriptor is not boundary-tight".into())?;
        for convention in Convention::ALL {
            check_theorem(&tight, &pt, convention).map_err(|r| format!("n = {n}: {r}"))?;
            let over = ImmersedDiskDescriptor { k: 2 * n + 2, ..tight.clone() };
            let clause = check_theorem(&over, &pt, convention).err().map(|r| r.clause());
            ensure(clause == Some(1), || format!("n = {n}: k = {} gave {clause:?}", 2 * n + 2))?;
        }
    }
    within(start, Duration::from_secs(1))
}

fn existence_in_plumbings() -> Check {
    let mut total = 0;
    for n in 1..=8 {
        let family = symmetric_plumbings(n);
        ensure(n % 2 == 1 || !family.is_empty(), || format!("no plumbings on {n} spheres"))?;
        for pt in &family {
            pt.validate().map_err(|v| format!("{}: {v:?}", pt.name))?;
            let (t, _) = pt.derive_embedded_tree().map_err(|e| e.to_string())?;
            t.validate().map_err(|v| format!("derived tree: {v:?}"))?;
            ensure(t.n() == n - 1, || format!("{} vertices from {n} spheres", t.n()))?;
            ensure(t.tree_type().ok() == pt.plumbing_type().ok(), || "type differs".into())?;
        }
        total += family.len();
    }
    ensure(total > 0, || "empty family".into())
}

/// Hopf components joined across each edge, by union-find on (vertex, class).
fn union_find_classes(t: &BipartitionedTree) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..2 * t.n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let slot = |v: usize, s: Part| 2 * v + usize::from(s == Part::Q);
    for e in &t.edges {
        let (a, b) = (find(&mut parent, slot(e.a, e.side_a)), find(&mut parent, slot(e.b, e.side_b)));
        parent[a] = b;
    }
    (0..2 * t.n).map(|x| find(&mut parent, x)).collect()
}

fn component_law() -> Check {
    let start = Instant::now();
    let cases: Vec<BipartitionedTree> =
        (1..=6).flat_map(|n| unlabeled_trees(n).into_iter().flat_map(move |s| bipartitions(n, &s))).collect();
    cases.par_iter().try_for_each(|t| {
        let (d, parts) = associated_link_parts(t).map_err(|e| e.to_string())?;
        ensure(d.n_components() == t.n + 1, || format!("{} components on {} vertices", d.n_components(), t.n))?;
        let roots = union_find_classes(t);
        let same = |x: usize, y: usize| parts[x / 2][x % 2] == parts[y / 2][y % 2];
        let n = 2 * t.n;
        ensure((0..n).all(|x| (0..n).all(|y| same(x, y) == (roots[x] == roots[y]))), || format!("{t:?}"))
    })?;
    within(start, Duration::from_secs(60))
}

fn invariant_soundness() -> Check {
    let diagrams = corpus::all_diagrams();
    // walks of 10 applied moves from each diagram, 10,000 moves in all
    let walks = 10_000 / 10;
    let checked: usize = (0..walks)
        .into_par_iter()
        .map(|w| {
            let (name, base) = &diagrams[w % diagrams.len()];
            let target = jones(base).map_err(|e| e.to_string())?;
            let mut rng = ChaCha8Rng::seed_from_u64(w as u64);
            let mut d = base.clone();
            let mut applied = 0;
            for _ in 0..100 {
                if applied == 10 {
                    break;
                }
                let Some((mv, next)) = d.random_move(&mut rng) else { continue };
                let j = jones(&next).map_err(|e| e.to_string())?;
                ensure(j == target, || format!("{name}: {mv:?} changed Jones to {j}"))?;
                d = next;
                applied += 1;
            }
            Ok(applied)
        })
        .collect::<Result<Vec<usize>, String>>()?
        .into_iter()
        .sum();
    ensure(checked == 10_000, || format!("only {checked} moves applied"))?;
    for (name, d) in &diagrams {
        let (det, sig) = goeritz(d);
        let j = jones(d).map_err(|e| e.to_string())?;
        ensure(jones_determinant(&j) == det, || format!("{name}: det {det} but |J(-1)| = {}", jones_determinant(&j)))?;
        ensure(goeritz(&d.mirror()) == (det, -sig), || format!("{name}: mirror does not negate signature"))?;
    }
    let knots: Vec<&LinkDiagram> = diagrams.iter().map(|(_, d)| d).filter(|d| d.n_crossings() <= 8).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..50 {
        let (a, b) = (*knots.choose(&mut rng).unwrap(), *knots.choose(&mut rng).unwrap());
        let (ca, cb) = (rng.gen_range(0..a.n_components()), rng.gen_range(0..b.n_components()));
        let sum = LinkDiagram::connect_sum(a, ca, b, cb).map_err(|e| e.to_string())?;
        let (ja, jb) = (jones(a).map_err(|e| e.to_string())?, jones(b).map_err(|e| e.to_string())?);
        let js = jones(&sum).map_err(|e| e.to_string())?;
        ensure(js == &ja * &jb, || format!("J(a # b) = {js}, J(a) J(b) = {}", &ja * &jb))?;
    }
    Ok(())
}

/// Conditions 1 to 4 restated on edge lists.
fn oracle_valid(t: &EquivariantTree) -> bool {
    let n = t.n();
    if (0..n).filter(|&v| t.rho[v] == v).count() != 1 || (0..n).any(|v| t.rho[t.rho[v]] != v) {
        return false;
    }
    let find = |a: usize, b: usize| t.base.edges.iter().find(|e| (e.a, e.b) == (a, b) || (e.a, e.b) == (b, a));
    if t.base.edges.iter().any(|e| find(t.rho[e.a], t.rho[e.b]).is_none()) {
        return false;
    }
    (0..n).all(|v| {
        let kept: Vec<bool> = t
            .base
            .edges
            .iter()
            .filter_map(|e| Some(find(t.rho[e.a], t.rho[e.b])?.side_at(t.rho[v])? == e.side_at(v)?))
            .collect();
        let fixed = t.rho[v] == v;
        match t.weights[v] {
            A => !fixed && t.weights[t.rho[v]] == A && (kept.iter().all(|&k| k) || kept.iter().all(|&k| !k)),
            BPlus | BMinus => fixed && kept.iter().all(|&k| !k),
            C => fixed && kept.iter().all(|&k| k),
        }
    })
}

fn random_tree(rng: &mut ChaCha8Rng) -> EquivariantTree {
    let n = rng.gen_range(1..=7);
    let part = |b: bool| if b { Part::Q } else { Part::P };
    let edges =
        (1..n).map(|v| TreeEdge::new(rng.gen_range(0..v), v, part(rng.gen()), part(rng.gen()))).collect::<Vec<_>>();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rho: Vec<usize> = (0..n).collect();
    for pair in order.chunks(2).filter(|_| rng.gen_bool(0.8)) {
        if let [a, b] = *pair {
            rho[a] = b;
            rho[b] = a;
        }
    }
    let weights = (0..n).map(|_| *IntersectionType::ALL.choose(rng).unwrap()).collect();
    EquivariantTree { base: BipartitionedTree::new(n, edges), rho, weights }
}

/// A valid tree with one side or weight changed.
fn perturbed(valid: &[EquivariantTree], rng: &mut ChaCha8Rng) -> EquivariantTree {
    let mut t = valid.choose(rng).unwrap().clone();
    if t.base.edges.is_empty() || rng.gen_bool(0.3) {
        let v = rng.gen_range(0..t.n());
        t.weights[v] = *IntersectionType::ALL.choose(rng).unwrap();
    } else {
        let i = rng.gen_range(0..t.base.edges.len());
        let e = t.base.edges[i];
        let flip = |s: Part| if s == Part::P { Part::Q } else { Part::P };
        t.base.edges[i] = if rng.gen() { TreeEdge::new(e.a, e.b, flip(e.side_a), e.side_b) } else { TreeEdge::new(e.a, e.b, e.side_a, flip(e.side_b)) };
    }
    t
}

fn tree_axioms() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let valid: Vec<EquivariantTree> = [3, 5, 7].iter().flat_map(|&n| equivariant_trees(n)).collect();
    let mut accepted = 0;
    for i in 0..6000 {
        let t = if i % 2 == 0 { random_tree(&mut rng) } else { perturbed(&valid, &mut rng) };
        let ok = t.validate().is_ok();
        ensure(ok == oracle_valid(&t), || format!("validator says {ok} for {t:?}"))?;
        if ok {
            accepted += 1;
            ensure(t.n() % 2 == 1, || format!("accepted even tree {t:?}"))?;
        }
    }
    ensure(accepted > 100, || format!("only {accepted} accepted samples"))?;
    for _ in 0..1000 {
        let t = valid.choose(&mut rng).unwrap();
        let k = 2 * rng.gen_range(0..=t.n() / 2) + 1;
        let p = t.prune_to_size(k).map_err(|e| format!("k = {k}: {e}"))?;
        p.validate().map_err(|v| format!("pruned tree invalid: {v:?}"))?;
        ensure(p.n() == k && p.tree_type().ok() == t.tree_type().ok(), || format!("pruning to {k} broke {t:?}"))?;
    }
    Ok(())
}

fn convention_audit() -> Check {
    let mut plumbings = vec![builtin("s2xs2_tau1").unwrap(), builtin("s2xs2_tau2").unwrap()];
    plumbings.extend((1..=3).map(|n| builtin(&format!("three_s2xs2({n})")).unwrap()));
    plumbings.extend(symmetric_plumbings(6));
    for pt in &plumbings {
        let omega = pt.plumbing_type().map_err(|e| e.to_string())?;
        for disk_type in [BPlus, BMinus, C] {
            for a_pairs in 0..pt.n_spheres() / 2 {
                let (bp, bm, c) = (usize::from(disk_type == BPlus), usize::from(disk_type == BMinus), usize::from(disk_type == C));
                let d = ImmersedDiskDescriptor::from_counts(a_pairs, bp, bm, c);
                let stated = check_theorem(&d, pt, Convention::AsStated).is_ok();
                let mirrored = check_theorem(&d, pt, Convention::Mirrored).is_ok();
                let both_b = disk_type.is_b() && omega.is_b();
                ensure((stated != mirrored) == both_b, || {
                    format!("{} with disk {disk_type}, {a_pairs} A pairs: as-stated {stated}, mirrored {mirrored}", pt.name)
                })?;
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("figure-eight quotients", fig8_quotients),
        ("figure-eight verdicts in S2xS2", s2xs2_verdicts),
        ("three_s2xs2(n) certificates, n = 1..4", three_s2xs2_family),
        ("existence in plumbings, n <= 8", existence_in_plumbings),
        ("associated link component law", component_law),
        ("invariant suite soundness", invariant_soundness),
        ("equivariant tree axioms", tree_axioms),
        ("convention audit", convention_audit),
    ];
    let mut failed = Vec::new();
    let mut stdout = std::io::stdout();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let status = if result.is_ok() { "PASS" } else { "FAIL" };
        let detail = result.as_ref().err().map(|e| format!(": {e}")).unwrap_or_default();
        let _ = writeln!(stdout, "criterion {} {status} {name} ({:.2?}){detail}", i + 1, start.elapsed());
        if result.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
