use super::*;
use crate::corpus;
use crate::plumbing::{ambient, builtin, symmetric_plumbings};
use crate::symdiag::{quotient, HalfAxis, UnknottingSequence};
use crate::IntersectionType::{A, BMinus, BPlus, C};

fn disk(a_pairs: usize, b_plus: usize, b_minus: usize, c: usize) -> ImmersedDiskDescriptor {
    ImmersedDiskDescriptor::from_counts(a_pairs, b_plus, b_minus, c)
}

#[test]
fn disks_from_sequences() {
    let empty = disk_from_sequence(&UnknottingSequence::default());
    assert_eq!((empty.k, empty.eligible(), empty.omega()), (0, true, None));
    let seq = UnknottingSequence { k_total: 1, k_b_plus: 1, ..Default::default() };
    let d = disk_from_sequence(&seq);
    assert_eq!((d.k, d.types()), (1, vec![BPlus]));
    let seq = UnknottingSequence { k_total: 5, k_a_pairs: 2, k_c: 1, ..Default::default() };
    let d = disk_from_sequence(&seq);
    assert_eq!((d.k, d.types()), (5, vec![C, A, A, A, A]));
    assert_eq!(d.omega(), Some(C));
    assert!(!disk(0, 1, 1, 0).eligible());
}

#[test]
fn convention_parses_and_defaults() {
    assert_eq!(Convention::default(), Convention::Mirrored);
    for c in Convention::ALL {
        assert_eq!(c.to_string().parse::<Convention>(), Ok(c));
    }
    assert!("both".parse::<Convention>().is_err());
}

#[test]
fn tubing_examples() {
    let tau1 = builtin("s2xs2_tau1").unwrap();
    let cert = check_theorem(&disk(0, 1, 0, 0), &tau1, Convention::AsStated).unwrap();
    assert_eq!(cert.tree.as_ref().unwrap().n(), 1);
    assert_eq!(cert.recheck(), Ok(()));
    let cert = check_theorem(&disk(0, 0, 1, 0), &tau1, Convention::Mirrored).unwrap();
    assert_eq!(cert.embedding, vec![0]);

    let err = check_theorem(&disk(1, 0, 0, 0), &tau1, Convention::AsStated).unwrap_err();
    assert_eq!(err.clause(), 1);
    let err = check_theorem(&disk(0, 0, 1, 0), &tau1, Convention::AsStated).unwrap_err();
    assert_eq!(err.clause(), 2);

    let pt = builtin("three_s2xs2(2)").unwrap();
    let err = check_theorem(&disk(1, 1, 0, 1), &pt, Convention::AsStated).unwrap_err();
    assert_eq!(err.clause(), 3);
    assert_eq!(check_theorem(&disk(0, 0, 0, 0), &pt, Convention::AsStated).unwrap().tree, None);
}

#[test]
fn three_s2xs2_family() {
    for n in 1..=4 {
        let pt = builtin(&format!("three_s2xs2({n})")).unwrap();
        for convention in Convention::ALL {
            let cert = check_theorem(&disk(n, 0, 0, 1), &pt, convention).unwrap();
            let tree = cert.tree.as_ref().unwrap();
            assert_eq!((tree.n(), tree.tree_type()), (2 * n + 1, Ok(C)));
            let over = ImmersedDiskDescriptor { k: 2 * n + 2, ..disk(n, 0, 0, 1) };
            assert_eq!(check_theorem(&over, &pt, convention).unwrap_err().clause(), 1);
        }
    }
}

#[test]
fn smaller_disks_prune_the_tree() {
    let pt = builtin("three_s2xs2(3)").unwrap();
    for a_pairs in 0..=3 {
        let cert = check_theorem(&disk(a_pairs, 0, 0, 1), &pt, Convention::Mirrored).unwrap();
        let tree = cert.tree.as_ref().unwrap();
        assert_eq!(tree.n(), 2 * a_pairs + 1);
        let rho = pt.point_involution().unwrap();
        assert!((0..tree.n()).all(|v| cert.embedding[tree.rho[v]] == rho[cert.embedding[v]]));
    }
}

/// Accepted exactly when the disk carries the required type and nothing else off the axis.
#[test]
fn convention_audit() {
    let plumbings = [builtin("s2xs2_tau1").unwrap(), builtin("s2xs2_tau2").unwrap(), builtin("three_s2xs2(1)").unwrap()];
    for pt in &plumbings {
        let omega = pt.plumbing_type().unwrap();
        for t in [BPlus, BMinus, C] {
            let d = match t {
                BPlus => disk(0, 1, 0, 0),
                BMinus => disk(0, 0, 1, 0),
                _ => disk(0, 0, 0, 1),
            };
            let stated = check_theorem(&d, pt, Convention::AsStated).is_ok();
            let mirrored = check_theorem(&d, pt, Convention::Mirrored).is_ok();
            assert_eq!(stated, t == omega);
            assert_eq!(mirrored, t == omega.mirror());
            assert_eq!(stated != mirrored, t.is_b() && omega.is_b());
        }
    }
}

#[test]
fn extending_a_plumbing_keeps_acceptance() {
    for n in 1..=3 {
        let small = builtin(&format!("three_s2xs2({n})")).unwrap();
        let large = builtin(&format!("three_s2xs2({})", n + 1)).unwrap();
        for a_pairs in 0..=n {
            if check_theorem(&disk(a_pairs, 0, 0, 1), &small, Convention::AsStated).is_ok() {
                assert!(check_theorem(&disk(a_pairs, 0, 0, 1), &large, Convention::AsStated).is_ok());
            }
        }
    }
}

#[test]
fn accepted_certificates_recheck_over_the_family() {
    for pt in symmetric_plumbings(6) {
        let omega = pt.plumbing_type().unwrap();
        let d = match omega {
            BPlus => disk(2, 1, 0, 0),
            BMinus => disk(2, 0, 1, 0),
            _ => disk(2, 0, 0, 1),
        };
        let cert = check_theorem(&d, &pt, Convention::AsStated).unwrap();
        assert_eq!(cert.recheck(), Ok(()));
    }
}

#[test]
fn bundled_database() {
    let db = parse_database(DEFAULT_DATABASE).unwrap();
    assert_eq!(db.len(), 1);
    assert_eq!(db[0].determinant, 5);
    assert_eq!(crate::invariants::jones_determinant(&db[0].jones), 5);
    assert!(matches!(parse_database("x | 1 | 5"), Err(CertifyError::Database { line: 1, .. })));
}

/// The database polynomial is the one computed from the left-handed quotient.
#[test]
fn database_matches_the_computed_quotient() {
    let q = quotient(&corpus::sym("fig8_tau").unwrap(), HalfAxis::H1).unwrap();
    let db = parse_database(DEFAULT_DATABASE).unwrap();
    assert_eq!(crate::invariants::jones(&q).unwrap(), db[0].jones);
    let right = crate::invariants::jones(&corpus::pd("t25").unwrap()).unwrap();
    assert_eq!(right.invert(), db[0].jones);
}

fn verdict(knot: &str, tag: &str, convention: Convention) -> Verdict {
    adjudicate(&corpus::sym(knot).unwrap(), &ambient(tag).unwrap(), 4, convention).unwrap()
}

#[test]
fn neither_set_contains_the_other() {
    for convention in Convention::ALL {
        assert!(verdict("fig8_mirror_tau", "s2xs2_tau1", convention).is_slice());
        assert!(verdict("fig8_tau", "s2xs2_tau1", convention).is_not_slice());
        assert!(verdict("fig8_tau", "s2xs2_tau2", convention).is_slice());
        assert!(verdict("fig8_mirror_tau", "s2xs2_tau2", convention).is_not_slice());
    }
}

#[test]
fn obstruction_examples() {
    let tau1 = ambient("s2xs2_tau1").unwrap();
    let v = quotient_obstruction(&corpus::sym("fig8_tau").unwrap(), &tau1).unwrap();
    let Conclusion::NotSlice(ob) = &v.conclusion else { panic!("{}", v.to_text()) };
    assert_eq!((ob.half_axis, ob.mirrored, ob.quotient_determinant), (HalfAxis::H1, false, 5));
    for tag in crate::plumbing::AMBIENT_TAGS {
        let v = quotient_obstruction(&corpus::sym("unknot_std").unwrap(), &ambient(tag).unwrap()).unwrap();
        assert!(matches!(v.conclusion, Conclusion::Inconclusive(_)));
    }
    let v = quotient_obstruction(&corpus::sym("fig8_mirror_tau").unwrap(), &ambient("s2xs2_tau2").unwrap()).unwrap();
    assert!(matches!(&v.conclusion, Conclusion::NotSlice(ob) if ob.mirrored));
}

#[test]
fn s4_is_inconclusive_and_unknot_is_slice() {
    let v = verdict("fig8_tau", "s4", Convention::Mirrored);
    assert!(matches!(v.conclusion, Conclusion::Inconclusive(_)));
    for tag in crate::plumbing::AMBIENT_TAGS {
        let v = verdict("unknot_std", tag, Convention::Mirrored);
        assert!(v.is_slice());
    }
}

#[test]
fn no_conflicts_over_the_corpus() {
    for (name, _) in corpus::SYM {
        let sd = corpus::sym(name).unwrap();
        if sd.check().is_err() || !sd.is_knot() {
            continue;
        }
        for tag in crate::plumbing::AMBIENT_TAGS {
            let r = adjudicate(&sd, &ambient(tag).unwrap(), 2, Convention::Mirrored);
            assert!(!matches!(r, Err(CertifyError::Conflict { .. })), "{name} in {tag}");
        }
    }
}

#[test]
fn verdict_text_and_json() {
    let v = verdict("fig8_mirror_tau", "s2xs2_tau1", Convention::Mirrored);
    let text = v.to_text();
    assert!(text.starts_with("conclusion: slice\nambient: s2xs2_tau1\nquotient: CP2\nsigma: S2\n"));
    assert!(text.contains("disk descriptor mirrored"));
    let json: serde_json::Value = serde_json::to_value(&v).unwrap();
    assert_eq!(json["conclusion"]["kind"], "slice");
    assert_eq!(json["conclusion"]["detail"]["convention"], "mirrored");
}
