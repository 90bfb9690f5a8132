use super::*;
use crate::eqtree::associated_si_link;
use crate::IntersectionType::{A, BMinus, BPlus, C};

fn two_spheres(kind: IntersectionType, sigma: Vec<usize>) -> PlumbingTree {
    let mut pt = builtin("s2xs2_tau1").unwrap();
    pt.points[0].kind = kind;
    pt.sigma = sigma;
    pt
}

#[test]
fn validation_examples() {
    assert_eq!(two_spheres(BPlus, vec![1, 0]).validate(), Ok(()));
    assert_eq!(two_spheres(C, vec![0, 1]).validate(), Ok(()));
    let errs = two_spheres(C, vec![1, 0]).validate().unwrap_err();
    assert!(matches!(errs[0], PlumbingViolation::FixedPointSheets { point: 1, kind: C, .. }));
    let errs = two_spheres(A, vec![1, 0]).validate().unwrap_err();
    assert_eq!(errs, vec![PlumbingViolation::FixedPointType { point: 1, kind: A }]);

    let mut odd = builtin("three_s2xs2(1)").unwrap();
    odd.spheres.pop();
    odd.points.pop();
    odd.sigma = vec![0, 1, 2];
    let errs = odd.validate().unwrap_err();
    assert!(errs.contains(&PlumbingViolation::OddSphereCount(3)));
}

#[test]
fn two_fixed_points_are_not_simple() {
    // a path of four spheres, each preserved
    let mut pt = builtin("three_s2xs2(1)").unwrap();
    pt.points = vec![
        PlumbingPoint { a: 0, b: 1, kind: C },
        PlumbingPoint { a: 1, b: 2, kind: C },
        PlumbingPoint { a: 2, b: 3, kind: A },
    ];
    pt.sigma = vec![0, 1, 2, 3];
    let errs = pt.validate().unwrap_err();
    assert!(errs.contains(&PlumbingViolation::FixedPointCount(3)));
}

#[test]
fn builtins_validate_with_their_types() {
    assert_eq!(builtin("s2xs2_tau1").unwrap().plumbing_type(), Ok(BPlus));
    assert_eq!(builtin("s2xs2_tau2").unwrap().plumbing_type(), Ok(BMinus));
    for n in 1..=5 {
        let pt = builtin(&format!("three_s2xs2({n})")).unwrap();
        assert_eq!(pt.n_spheres(), 2 * n + 2);
        assert_eq!(pt.plumbing_type(), Ok(C));
        assert_eq!(pt.points.iter().filter(|p| p.kind == A).count(), 2 * n);
    }
    assert!(matches!(builtin("three_s2xs2(0)"), Err(PlumbingError::BadParameter { n: 0, .. })));
    assert!(matches!(builtin("k3"), Err(PlumbingError::UnknownBuiltin(_))));
    assert_eq!(builtin("s2xs2_tau1").unwrap().ambient.quotient, QuotientTag::Cp2);
}

#[test]
fn ambients_list_their_plumbings() {
    for tag in AMBIENT_TAGS {
        let a = ambient(tag).unwrap();
        for pt in a.plumbings() {
            assert_eq!(pt.validate(), Ok(()));
            assert_eq!(pt.ambient, a);
        }
    }
    assert!(ambient("s4").unwrap().plumbings().is_empty());
    assert!(ambient("cp2").is_none());
}

#[test]
fn derived_trees() {
    let (t, map) = builtin("s2xs2_tau1").unwrap().derive_embedded_tree().unwrap();
    assert_eq!((t.n(), t.tree_type(), map), (1, Ok(BPlus), vec![0]));
    let (t, _) = builtin("three_s2xs2(1)").unwrap().derive_embedded_tree().unwrap();
    assert_eq!((t.n(), t.tree_type()), (3, Ok(C)));
    assert_eq!(t.weights.iter().filter(|&&w| w == A).count(), 2);
    let (t, _) = builtin("three_s2xs2(2)").unwrap().derive_embedded_tree().unwrap();
    assert_eq!(t.n(), 5);
}

/// Edges in one class at a vertex run along the same sphere.
fn classes_follow_spheres(pt: &PlumbingTree, t: &crate::eqtree::EquivariantTree, map: &[usize]) -> bool {
    let sphere_of = |e: &crate::eqtree::TreeEdge| {
        let (p, q) = (pt.points[map[e.a]], pt.points[map[e.b]]);
        [p.a, p.b].into_iter().find(|s| *s == q.a || *s == q.b)
    };
    (0..t.n()).all(|v| {
        [crate::eqtree::Part::P, crate::eqtree::Part::Q].iter().all(|&part| {
            let spheres: std::collections::BTreeSet<_> =
                t.base.class(v, part).into_iter().map(|i| sphere_of(&t.base.edges[i])).collect();
            spheres.len() <= 1 && !spheres.contains(&None)
        })
    })
}

#[test]
fn derived_trees_over_the_family() {
    for n in [2, 4, 6] {
        let family = symmetric_plumbings(n);
        assert!(!family.is_empty());
        for pt in family {
            assert_eq!(pt.validate(), Ok(()));
            let (t, map) = pt.derive_embedded_tree().unwrap();
            assert_eq!(t.validate(), Ok(()));
            assert_eq!(t.n(), n - 1);
            assert_eq!(t.tree_type().unwrap(), pt.plumbing_type().unwrap());
            let rho = pt.point_involution().unwrap();
            assert!((0..t.n()).all(|v| map[t.rho[v]] == rho[map[v]]));
            assert!(classes_follow_spheres(&pt, &t, &map));
        }
    }
}

#[test]
fn capacity() {
    let b = |n_type_a, omega| ImmersedSurfaceBudget { n_type_a, omega: Some(omega) };
    let single = crate::eqtree::EquivariantTree::single(BPlus);
    assert_eq!(capacity_check(b(0, BPlus), &single), Ok(()));
    let (t3, _) = builtin("three_s2xs2(1)").unwrap().derive_embedded_tree().unwrap();
    let (t5, _) = builtin("three_s2xs2(2)").unwrap().derive_embedded_tree().unwrap();
    assert_eq!(capacity_check(b(1, C), &t3), Ok(()));
    assert_eq!(capacity_check(b(1, C), &t5), Err(CapacityError::Insufficient { vertices: 5, capacity: 3 }));
    assert!(matches!(capacity_check(b(3, BMinus), &single), Err(CapacityError::OmegaMismatch { .. })));
    // pruning never breaks a fit
    for k in [1, 3] {
        assert_eq!(capacity_check(b(1, C), &t5.prune_to_size(k).unwrap()), Ok(()));
    }
}

#[test]
fn format_round_trip_and_dot() {
    for spec in ["s2xs2_tau1", "s2xs2_tau2", "three_s2xs2(3)"] {
        let pt = builtin(spec).unwrap();
        assert_eq!(parse_plumbing(&format_plumbing(&pt)).unwrap(), pt);
        let dot = plumbing_to_dot(&pt);
        assert_eq!(dot.matches("color=red").count(), 1);
    }
    assert!(matches!(parse_plumbing("ambient: k3"), Err(PlumbingError::UnknownAmbient(_))));
    assert!(matches!(parse_plumbing("ambient: s4\nsphere x 0"), Err(PlumbingError::Parse { line: 2, .. })));
}

#[test]
fn derived_tree_links_are_symmetric() {
    for spec in ["s2xs2_tau1", "three_s2xs2(1)", "three_s2xs2(2)"] {
        let (t, _) = builtin(spec).unwrap().derive_embedded_tree().unwrap();
        assert_eq!(associated_si_link(&t).unwrap().validate(), Ok(()));
    }
}
