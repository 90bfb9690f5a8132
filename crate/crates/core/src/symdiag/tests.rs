use super::*;
use crate::corpus;
use crate::invariants::{goeritz, jones, try_unknot, UnknotStatus, DEFAULT_BUDGET};
use crate::IntersectionType::{self, A, BMinus, BPlus, C};
use proptest::prelude::*;

fn sym(name: &str) -> SymmetricDiagram {
    corpus::sym(name).unwrap()
}

fn types(sd: &SymmetricDiagram) -> Vec<IntersectionType> {
    sd.sites().into_iter().map(|(_, t)| t).collect()
}

#[test]
fn corpus_validates() {
    for (name, _) in corpus::SYM {
        assert_eq!(sym(name).validate(), Ok(()), "{name}");
    }
}

#[test]
fn format_round_trip() {
    for (name, _) in corpus::SYM {
        let sd = sym(name);
        assert_eq!(parse_sym(&format_sym(&sd)).unwrap(), sd, "{name}");
    }
}

#[test]
fn one_fixed_point_is_rejected() {
    let sd = parse_sym("base: PD[] O\niota:\naxis: fix O1").unwrap();
    assert_eq!(sd.validate(), Err(vec![Violation::FixedPointCount { component: 1, count: 1 }]));
}

#[test]
fn structural_violations_are_reported() {
    // c2 fixed but not on the axis; edge 5 fixed without a fixed point
    let sd = parse_sym(
        "base: PD[X(5,10,6,1), X(8,2,9,1), X(2,8,3,7), X(6,4,7,3), X(9,4,10,5)]\n\
         iota: c1=c5, 1=9, 2=8, 3=7, 4=6\naxis: fix 10, B c3, B c4",
    )
    .unwrap();
    let errs = sd.validate().unwrap_err();
    assert!(errs.contains(&Violation::FixedNotOnAxis(2)));
    assert!(errs.contains(&Violation::UnlistedFixedEdge(5)));
    assert!(errs.contains(&Violation::FixedPointCount { component: 1, count: 1 }));
    // a map that does not respect the crossing structure
    let bad = parse_sym(
        "base: PD[X(5,10,6,1), X(8,2,9,1), X(2,8,3,7), X(6,4,7,3), X(9,4,10,5)]\n\
         iota: c1=c5, 1=8, 2=9, 3=7, 4=6\naxis: fix 10, fix 5, B c2, B c3, B c4",
    )
    .unwrap();
    let errs = bad.validate().unwrap_err();
    assert_eq!(errs, vec![Violation::NotAutomorphism(1), Violation::NotAutomorphism(3), Violation::NotAutomorphism(5)]);
}

#[test]
fn parse_errors_carry_lines() {
    assert!(matches!(parse_sym("base: PD[]\nfoo: 1"), Err(SymError::Parse { line: 2, .. })));
    assert!(matches!(parse_sym("base: PD[] O\naxis: fix"), Err(SymError::Parse { line: 2, .. })));
    assert!(matches!(parse_sym("base: PD[] O\naxis: B c3"), Err(SymError::UnknownCrossing(3))));
}

#[test]
fn classification_of_corpus_sites() {
    assert_eq!(types(&sym("fig8_tau")), vec![A, BMinus, BMinus, BMinus]);
    assert_eq!(types(&sym("fig8_mirror_tau")), vec![A, BPlus, BPlus, BPlus]);
    assert_eq!(types(&sym("hopf_b_plus")), vec![BPlus, BPlus]);
    assert_eq!(types(&sym("hopf_b_minus")), vec![BMinus, BMinus]);
    assert_eq!(types(&sym("hopf_c")), vec![A]);
    assert_eq!(types(&sym("clasp_c1")), vec![C]);
    assert_eq!(sym("clasp_c7").classify_move(6), Ok(C));
}

#[test]
fn classification_is_iota_invariant() {
    for (name, _) in corpus::SYM {
        let sd = sym(name);
        for c in 0..sd.base.n_crossings() {
            assert_eq!(sd.classify_move(c), sd.classify_move(sd.iota_crossing(c)), "{name} c{c}");
        }
    }
}

#[test]
fn b_sign_is_minus_the_diagram_sign_on_knots() {
    // iota reverses the knot, so transporting one strand's orientation to the
    // other disagrees with the knot orientation there
    for name in ["fig8_tau", "fig8_mirror_tau", "fig8_other_inversion"] {
        let sd = sym(name);
        for (site, t) in sd.sites() {
            if let Site::Axis(c) = site {
                let expect = if sd.base.sign(c) < 0 { BPlus } else { BMinus };
                assert_eq!(t, expect, "{name} {site}");
            }
        }
    }
}

#[test]
fn mirror_swaps_b_signs() {
    for (name, _) in corpus::SYM {
        let sd = sym(name);
        let m = sd.mirror_symmetric();
        assert_eq!(m.mirror_symmetric(), sd);
        let flipped: Vec<_> = types(&sd).into_iter().map(IntersectionType::mirror).collect();
        assert_eq!(types(&m), flipped, "{name}");
        assert_eq!(m.validate(), Ok(()));
    }
}

#[test]
fn moves_are_involutions_and_preserve_validity() {
    for (name, _) in corpus::SYM {
        let sd = sym(name);
        for (site, kind) in sd.sites() {
            let once = sd.apply_move(SymMove { site, kind }).unwrap();
            assert_eq!(once.validate(), Ok(()), "{name} {site}");
            let back = once.classify_site(site).unwrap();
            assert_eq!(back, if kind.is_b() { kind.mirror() } else { kind });
            assert_eq!(once.apply_move(SymMove { site, kind: back }).unwrap(), sd);
        }
    }
}

#[test]
fn declared_type_must_match() {
    let sd = sym("fig8_tau");
    let err = sd.apply_move(SymMove { site: Site::Axis(1), kind: BPlus }).unwrap_err();
    assert!(matches!(err, SymError::TypeMismatch { declared: BPlus, actual: BMinus, .. }));
    assert!(matches!(sd.apply_move(SymMove { site: Site::Axis(0), kind: A }), Err(SymError::BadSite(_))));
}

#[test]
fn c_move_on_clasp_stays_symmetric() {
    for name in ["clasp_c1", "clasp_c7"] {
        let sd = sym(name);
        let c = sd.axis.iter().find_map(|ev| match ev {
            AxisEvent::OnAxis { crossing, .. } => Some(*crossing),
            _ => None,
        });
        let moved = sd.apply_move(SymMove { site: Site::Axis(c.unwrap()), kind: C }).unwrap();
        assert_eq!(moved.validate(), Ok(()));
    }
}

#[test]
fn b_plus_change_unknots_mirror_figure_eight() {
    let sd = sym("fig8_mirror_tau");
    for (site, kind) in sd.sites().into_iter().filter(|(_, t)| *t == BPlus) {
        let moved = sd.apply_move(SymMove { site, kind }).unwrap();
        assert_eq!(try_unknot(&moved.base, DEFAULT_BUDGET), UnknotStatus::ProvenUnknot, "{site}");
    }
}

fn t25() -> crate::LinkDiagram {
    corpus::pd("t25").unwrap()
}

#[test]
fn figure_eight_quotients() {
    let sd = sym("fig8_tau");
    let k1 = quotient(&sd, HalfAxis::H1).unwrap();
    let j = jones(&k1).unwrap();
    let target = jones(&t25()).unwrap();
    assert!(j == target || j == target.invert(), "{j}");
    assert_eq!(goeritz(&k1).0, 5);
    let k2 = quotient(&sd, HalfAxis::H2).unwrap();
    assert_eq!(try_unknot(&k2, DEFAULT_BUDGET), UnknotStatus::ProvenUnknot);
}

#[test]
fn quotient_chirality_follows_the_diagram() {
    // fig8_tau has B- crossings and folds to the left-handed torus knot
    let left = jones(&t25()).unwrap().invert();
    assert_eq!(jones(&quotient(&sym("fig8_tau"), HalfAxis::H1).unwrap()).unwrap(), left);
    assert_eq!(jones(&quotient(&sym("fig8_mirror_tau"), HalfAxis::H1).unwrap()).unwrap(), left.invert());
}

#[test]
fn quotient_commutes_with_mirror() {
    for name in ["fig8_tau", "fig8_mirror_tau", "fig8_other_inversion"] {
        let sd = sym(name);
        for h in [HalfAxis::H1, HalfAxis::H2] {
            let q = quotient(&sd, h).unwrap();
            let qm = quotient(&sd.mirror_symmetric(), h).unwrap();
            assert_eq!(q.n_components(), 1);
            assert_eq!(jones(&qm).unwrap(), jones(&q).unwrap().invert(), "{name} {h}");
        }
    }
}

#[test]
fn unknot_quotients_are_trivial() {
    for h in [HalfAxis::H1, HalfAxis::H2] {
        assert_eq!(quotient(&sym("unknot_std"), h).unwrap(), crate::LinkDiagram::unknot());
    }
}

#[test]
fn c_crossings_cannot_be_folded() {
    assert!(matches!(quotient(&sym("clasp_c1"), HalfAxis::H1), Err(SymError::NotAxisNormal(_))));
    assert!(matches!(quotient(&sym("hopf_c"), HalfAxis::H1), Err(SymError::NotAKnot(2))));
}

#[test]
fn search_examples() {
    let mirror = sym("fig8_mirror_tau");
    match equivariant_unknotting_search(&mirror, 1, &[BPlus]) {
        SearchOutcome::Found(seq) => {
            assert_eq!(seq.moves.len(), 1);
            assert_eq!((seq.k_total, seq.k_b_plus), (1, 1));
            let end = seq.replay(&mirror).unwrap();
            assert_eq!(try_unknot(&end.base, DEFAULT_BUDGET), UnknotStatus::ProvenUnknot);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(equivariant_unknotting_search(&sym("fig8_tau"), 1, &[BPlus]), SearchOutcome::NotFound(_)));
    match equivariant_unknotting_search(&sym("unknot_std"), 3, &IntersectionType::ALL) {
        SearchOutcome::Found(seq) => assert!(seq.moves.is_empty()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn search_counts_self_intersections() {
    let sd = sym("fig8_tau");
    if let SearchOutcome::Found(seq) = equivariant_unknotting_search(&sd, 2, &[A]) {
        assert_eq!(seq.k_total, 2 * seq.k_a_pairs);
    }
    let seq = UnknottingSequence::from_moves(vec![
        SymMove { site: Site::Pair(0, 4), kind: A },
        SymMove { site: Site::Axis(1), kind: BMinus },
        SymMove { site: Site::Axis(2), kind: C },
    ]);
    assert_eq!((seq.k_total, seq.k_a_pairs, seq.k_b_minus, seq.k_c), (4, 1, 1, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_move_sequences_stay_symmetric(which in 0usize..9, picks in proptest::collection::vec(0usize..8, 0..5)) {
        let (name, _) = corpus::SYM[which];
        let mut sd = sym(name);
        for p in picks {
            let sites = sd.sites();
            if sites.is_empty() {
                break;
            }
            let (site, kind) = sites[p % sites.len()];
            sd = sd.apply_move(SymMove { site, kind }).unwrap();
            prop_assert_eq!(sd.validate(), Ok(()));
        }
        if sd.is_knot() && !sd.axis.iter().any(|e| matches!(e, AxisEvent::OnAxis { kind: OnAxisKind::C, .. })) {
            for h in [HalfAxis::H1, HalfAxis::H2] {
                let q = quotient(&sd, h).unwrap();
                prop_assert_eq!(q.n_components(), 1);
            }
        }
    }
}
