use proptest::prelude::*;

use super::*;
use crate::error::Error;

fn braid(spec: &str) -> LinkDiagram {
    from_braid(&parse_braid(spec).unwrap())
}

#[test]
fn braid_closures_basic() {
    let unknot = braid("1:");
    assert_eq!(unknot.crossing_count(), 0);
    assert_eq!(unknot.components(), 1);

    let hopf = braid("2: 1 1");
    assert_eq!(hopf.crossing_count(), 2);
    assert_eq!(hopf.components(), 2);

    let trefoil = braid("braid 2: 1 1 1");
    assert_eq!(trefoil.crossing_count(), 3);
    assert_eq!(trefoil.components(), 1);

    // untouched strand closes into a free loop
    let split = braid("3: 1 1 1");
    assert_eq!(split.components(), 2);
    assert_eq!(split.free_loops(), 1);
}

#[test]
fn braid_word_validation() {
    assert!(parse_braid("2: 2").is_err());
    assert!(parse_braid("2: 0").is_err());
    assert!(parse_braid("0:").is_err());
    assert!(parse_braid("2 1 1").is_err());
    assert!(parse_braid("x: 1").is_err());
}

#[test]
fn parse_pd_unknot_and_trefoil() {
    let u = parse_pd("PD[]; loops=1").unwrap();
    assert_eq!(u.crossing_count(), 0);
    assert_eq!(u.components(), 1);

    let t = parse_pd("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]").unwrap();
    assert_eq!(t.crossing_count(), 3);
    assert_eq!(t.components(), 1);
    // sequential arc numbering makes every crossing here over b -> d
    assert_eq!(t.writhe().unwrap(), -3);
}

#[test]
fn parse_pd_errors() {
    assert!(matches!(parse_pd("PD[X(1,2,3)]"), Err(Error::Parse { .. })));
    assert!(matches!(
        parse_pd("PD[X(1,2,3,4,5)]"),
        Err(Error::Parse { .. })
    ));
    // arc appearing once
    assert!(matches!(
        parse_pd("PD[X(1,2,3,4)]"),
        Err(Error::Parse { .. })
    ));
    // empty link
    assert!(matches!(parse_pd("PD[]"), Err(Error::Parse { .. })));
    assert!(matches!(
        parse_pd("PD[X(1,1,2,2)]; loops"),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn parse_pd_kinks_have_expected_signs() {
    let pos = parse_pd("PD[X(1,1,2,2)]").unwrap();
    assert_eq!(pos.writhe().unwrap(), 1);
    let neg = parse_pd("PD[X(1,2,2,1)]").unwrap();
    assert_eq!(neg.writhe().unwrap(), -1);
}

#[test]
fn writhe_counts_signs() {
    assert_eq!(braid("2: 1 1 1").writhe().unwrap(), 3);
    assert_eq!(braid("2: -1 -1 -1").writhe().unwrap(), -3);
    assert_eq!(braid("3: 1 -2 1 -2").writhe().unwrap(), 0);
    let s = braid("2: 1 1").make_singular(0).unwrap();
    assert!(matches!(s.writhe(), Err(Error::SingularDiagram)));
}

#[test]
fn switch_is_an_involution_and_flips_writhe_contribution() {
    let d = braid("2: 1 1 1");
    let s = d.switch_crossing(1).unwrap();
    assert_eq!(s.writhe().unwrap(), 1);
    assert_eq!(s.switch_crossing(1).unwrap(), d);
    assert!(matches!(
        d.switch_crossing(7),
        Err(Error::InvalidCrossing(7))
    ));
}

#[test]
fn make_singular_then_resolve_is_the_vassiliev_pair() {
    let d = braid("2: 1 1 1");
    let sing = d.make_singular(0).unwrap();
    assert_eq!(sing.singular_count(), 1);
    assert_eq!(sing.components(), d.components());
    let res = sing.resolve_singulars();
    assert_eq!(res.len(), 2);
    assert_eq!(res[0].0, 1);
    assert_eq!(res[1].0, -1);
    assert_eq!(res[0].1, d); // positive crossing: L_+ is the original
    assert_eq!(res[1].1, d.switch_crossing(0).unwrap());

    // a negative crossing: L_+ is the switch
    let m = braid("2: -1 -1");
    let sing = m.make_singular(1).unwrap();
    let res = sing.resolve_singulars();
    assert_eq!(res[0].1, m.switch_crossing(1).unwrap());
    assert_eq!(res[1].1, m);

    assert!(matches!(
        sing.make_singular(1),
        Err(Error::AlreadySingular(1))
    ));
}

#[test]
fn resolve_singulars_counts_and_signs() {
    let d = braid("2: 1 1 1 1");
    assert_eq!(d.resolve_singulars().len(), 1); // s = 0: identity resolution
    let two = d.make_singular(0).unwrap().make_singular(2).unwrap();
    let res = two.resolve_singulars();
    assert_eq!(res.len(), 4);
    assert_eq!(
        res.iter().map(|(s, _)| *s).collect::<Vec<_>>(),
        vec![1, -1, -1, 1]
    );
    assert_eq!(res.iter().map(|(s, _)| s).sum::<i64>(), 0);
    for (_, r) in &res {
        assert_eq!(r.components(), d.components());
    }
}

#[test]
fn smooth_oriented_examples() {
    // smoothing one crossing of the Hopf braid closure gives the 1-crossing unknot
    let hopf = braid("2: 1 1");
    let s = hopf.smooth_oriented(1).unwrap();
    assert_eq!(s.crossing_count(), 1);
    assert_eq!(s.components(), 1);

    // smoothing a kink splits off a loop
    let kink = parse_pd("PD[X(1,1,2,2)]").unwrap();
    let s = kink.smooth_oriented(0).unwrap();
    assert_eq!(s.crossing_count(), 0);
    assert_eq!(s.components(), 2);

    let sing = hopf.make_singular(0).unwrap();
    assert!(matches!(
        sing.smooth_oriented(0),
        Err(Error::SingularCrossing(0))
    ));
}

#[test]
fn smooth_infinity_merges_with_reversal() {
    // Hopf+: the infinity smoothing at either crossing leaves a negative curl
    let hopf = braid("2: 1 1");
    for idx in 0..2 {
        let s = hopf.smooth_unoriented(idx, SmoothMode::Infinity).unwrap();
        assert_eq!(s.crossing_count(), 1);
        assert_eq!(s.components(), 1);
        assert_eq!(s.crossings()[0].kind, CrossingKind::Negative);
        let (red, exp) = reduce_regular(&s);
        assert_eq!(red.crossing_count(), 0);
        assert_eq!(red.components(), 1);
        assert_eq!(exp, -1);
    }

    // trefoil: infinity smoothing leaves two chained negative curls
    let tref = braid("2: 1 1 1");
    let s = tref.smooth_unoriented(2, SmoothMode::Infinity).unwrap();
    assert_eq!(s.crossing_count(), 2);
    assert_eq!(s.components(), 1);
    assert!(s
        .crossings()
        .iter()
        .all(|c| c.kind == CrossingKind::Negative));
    let (red, exp) = reduce_regular(&s);
    assert_eq!(red.crossing_count(), 0);
    assert_eq!(exp, -2);

    // zero mode coincides with the oriented smoothing
    assert_eq!(
        hopf.smooth_unoriented(0, SmoothMode::Zero).unwrap(),
        hopf.smooth_oriented(0).unwrap()
    );

    // infinity smoothing of a curl closes a single loop
    let kink = parse_pd("PD[X(1,1,2,2)]").unwrap();
    let s = kink.smooth_unoriented(0, SmoothMode::Infinity).unwrap();
    assert_eq!(s.crossing_count(), 0);
    assert_eq!(s.components(), 1);
}

#[test]
fn simplify_r2_pair_and_kinks() {
    let d = braid("2: 1 -1");
    let s = simplify(&d);
    assert_eq!(s.crossing_count(), 0);
    assert_eq!(s.components(), 2);
    assert_eq!(s.components(), d.components());

    let kink = parse_pd("PD[X(1,1,2,2)]").unwrap();
    assert_eq!(simplify(&kink).crossing_count(), 0);
    let (red, exp) = reduce_regular(&kink);
    assert_eq!((red.crossing_count(), exp), (0, 1));

    let u = LinkDiagram::unknot();
    assert_eq!(simplify(&u), u);

    // R2-inflated trefoil reduces to three crossings
    let fat = braid("2: 1 1 1 1 -1");
    let thin = simplify(&fat);
    assert_eq!(thin.crossing_count(), 3);
    assert_eq!(thin.components(), 1);
}

#[test]
fn simplify_leaves_singular_crossings_alone() {
    let d = braid("2: 1 -1").make_singular(0).unwrap();
    let s = simplify(&d);
    assert_eq!(s.singular_count(), 1);
    assert_eq!(s.crossing_count(), 2);
}

#[test]
fn serialize_parse_round_trip() {
    let diagrams = vec![
        LinkDiagram::unknot(),
        LinkDiagram::unlink(3),
        braid("2: 1 1"),
        braid("2: -1 -1"),
        braid("2: 1 1 1"),
        braid("3: 1 -2 1 -2"),
        braid("2: 1 1 1 1"),
        parse_pd("PD[X(1,1,2,2)]").unwrap(),
        braid("2: 1 1 1").make_singular(1).unwrap(),
        braid("3: 1 2 1 2")
            .make_singular(0)
            .unwrap()
            .make_singular(3)
            .unwrap(),
    ];
    for d in diagrams {
        let text = d.serialize_pd();
        let back = parse_pd(&text).unwrap();
        assert!(back.same_diagram(&d), "round trip failed for {text}");
        assert_eq!(back.components(), d.components());
        assert_eq!(back.singular_count(), d.singular_count());
    }
}

#[test]
fn canonical_key_is_relabel_invariant() {
    // same link, different arc labels through serialization of a rotation
    let t1 = braid("2: 1 1 1");
    let t2 = parse_pd(&t1.serialize_pd()).unwrap();
    assert_eq!(t1.canonical_key(), t2.canonical_key());
    assert!(t1.canonical_key() != braid("2: -1 -1 -1").canonical_key());
}

#[test]
fn descending_pivot_examples() {
    assert!(braid("2: 1 1").descending_pivot().is_some());
    assert_eq!(LinkDiagram::unknot().descending_pivot(), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_braid_invariants(strands in 2u32..4, letters in proptest::collection::vec((1i32..3, proptest::bool::ANY), 1..7)) {
        let word: Vec<i32> = letters
            .iter()
            .map(|&(l, neg)| {
                let l = l.min(strands as i32 - 1);
                if neg { -l } else { l }
            })
            .collect();
        let d = from_braid(&BraidWord::new(strands, word).unwrap());
        prop_assert!(d.validate().is_ok());
        let mu = d.components();

        for idx in 0..d.crossing_count() {
            let s = d.switch_crossing(idx).unwrap();
            prop_assert_eq!(s.components(), mu);
            prop_assert_eq!(&s.switch_crossing(idx).unwrap(), &d);
            let g = d.make_singular(idx).unwrap();
            prop_assert_eq!(g.components(), mu);
            let res = g.resolve_singulars();
            prop_assert_eq!(res.len(), 2);
            prop_assert_eq!(res.iter().map(|(s, _)| *s).sum::<i64>(), 0);

            let sm = d.smooth_unoriented(idx, SmoothMode::Infinity).unwrap();
            prop_assert!(sm.validate().is_ok());
            let sz = d.smooth_oriented(idx).unwrap();
            prop_assert!(sz.validate().is_ok());
        }

        let s = simplify(&d);
        prop_assert_eq!(s.components(), mu);
        prop_assert!(s.crossing_count() <= d.crossing_count());

        let back = parse_pd(&d.serialize_pd()).unwrap();
        prop_assert!(back.same_diagram(&d));
    }
}

#[test]
fn parse_pd_rejects_orientation_clashes() {
    // arc 1 would need two heads (incoming under at both crossings)
    let e = parse_pd("PD[X(1,2,3,4), X(1,4,3,2)]");
    assert!(matches!(e, Err(Error::Parse { .. })));
    let msg = format!("{}", e.unwrap_err());
    assert!(msg.contains("orientation") || msg.contains("head"), "{msg}");
}
