use super::*;
use crate::algebra::rat;
use crate::diagram::{from_braid, parse_braid, parse_pd};

fn braid(spec: &str) -> LinkDiagram {
    from_braid(&parse_braid(spec).unwrap())
}

fn vz(terms: &[((i64, i64), i64)]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(VarPair::VZ, terms.iter().map(|&(e, c)| (e, rat_int(c))))
}

fn az(terms: &[((i64, i64), i64)]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(VarPair::AZ, terms.iter().map(|&(e, c)| (e, rat_int(c))))
}

/// Independent oracle: same skein axioms, but pivoting on the *last*
/// violated crossing, with no simplification and no memoization.
fn naive_homflypt(d: &LinkDiagram) -> LaurentPoly2 {
    let pivot = {
        let heads = d.heads();
        let mut seen = vec![false; d.crossing_count()];
        let mut last = None;
        for walk in d.component_walks() {
            for a in walk {
                let (ci, ch) = heads[&a];
                if !seen[ci] {
                    seen[ci] = true;
                    if ch == crate::diagram::Channel::Under {
                        last = Some(ci);
                    }
                }
            }
        }
        last
    };
    match pivot {
        None => homflypt_delta().pow(d.components() - 1),
        Some(idx) => {
            let p_switch = naive_homflypt(&d.switch_crossing(idx).unwrap());
            let p_smooth = naive_homflypt(&d.smooth_oriented(idx).unwrap());
            if d.crossings()[idx].kind.sign().unwrap() > 0 {
                p_switch
                    .mul_mono(2, 0, &rat_int(1))
                    .add(&p_smooth.mul_mono(1, 1, &rat_int(1)))
                    .unwrap()
            } else {
                p_switch
                    .mul_mono(-2, 0, &rat_int(1))
                    .sub(&p_smooth.mul_mono(-1, 1, &rat_int(1)))
                    .unwrap()
            }
        }
    }
}

#[test]
fn homflypt_normalization_and_unlinks() {
    assert_eq!(
        homflypt(&LinkDiagram::unknot()).unwrap(),
        LaurentPoly2::one(VarPair::VZ)
    );
    assert_eq!(homflypt(&LinkDiagram::unlink(2)).unwrap(), homflypt_delta());
    assert_eq!(
        homflypt(&LinkDiagram::unlink(3)).unwrap(),
        homflypt_delta().pow(2)
    );
    // the clasp presentation of the 2-unlink gives the same value
    assert_eq!(homflypt(&braid("2: 1 -1")).unwrap(), homflypt_delta());
}

#[test]
fn homflypt_hand_oracles() {
    // one skein step on the Hopf braid closure, solved by hand
    assert_eq!(
        homflypt(&braid("2: 1 1")).unwrap(),
        vz(&[((1, -1), 1), ((3, -1), -1), ((1, 1), 1)])
    );
    assert_eq!(
        homflypt(&braid("2: -1 -1")).unwrap(),
        vz(&[((-3, -1), 1), ((-1, -1), -1), ((-1, 1), -1)])
    );
    // right trefoil: exactly the monomials v^2, v^4, v^2 z^2
    let t = homflypt(&braid("2: 1 1 1")).unwrap();
    assert_eq!(t, vz(&[((2, 0), 2), ((4, 0), -1), ((2, 2), 1)]));
    assert_eq!(
        homflypt(&braid("2: -1 -1 -1")).unwrap(),
        vz(&[((-2, 0), 2), ((-4, 0), -1), ((-2, 2), 1)])
    );
    // (2,4) torus link, expanded by hand from the Hopf and trefoil values
    assert_eq!(
        homflypt(&braid("2: 1 1 1 1")).unwrap(),
        vz(&[
            ((3, -1), 1),
            ((5, -1), -1),
            ((3, 1), 3),
            ((5, 1), -1),
            ((3, 3), 1)
        ])
    );
}

#[test]
fn homflypt_agrees_with_naive_engine() {
    for spec in [
        "2: 1 1",
        "2: -1 -1",
        "2: 1 1 1",
        "2: 1 1 1 1",
        "3: 1 -2 1 -2",
        "3: 1 2 1 2",
    ] {
        let d = braid(spec);
        assert_eq!(
            homflypt(&d).unwrap(),
            naive_homflypt(&d),
            "mismatch for {spec}"
        );
    }
}

#[test]
fn homflypt_is_a_link_invariant_on_presentations() {
    // the Knot Atlas PD of 3_1 is the left-handed trefoil in this convention
    let pd = parse_pd("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]").unwrap();
    assert_eq!(
        homflypt(&pd).unwrap(),
        homflypt(&braid("2: -1 -1 -1")).unwrap()
    );

    // R1- and R2-inflated presentations
    let t = homflypt(&braid("2: 1 1 1")).unwrap();
    assert_eq!(homflypt(&braid("2: 1 1 1 1 -1")).unwrap(), t);
    assert_eq!(homflypt(&simplify(&braid("2: 1 1 1 1 -1"))).unwrap(), t);

    // figure-eight is amphichiral; both chiralities must agree
    let f8 = homflypt(&braid("3: 1 -2 1 -2")).unwrap();
    let f8m = homflypt(&braid("3: -1 2 -1 2")).unwrap();
    assert_eq!(f8, f8m);
}

#[test]
fn homflypt_rejects_singular_and_capped_inputs() {
    let sing = braid("2: 1 1").make_singular(0).unwrap();
    assert!(matches!(homflypt(&sing), Err(Error::SingularDiagram)));
    let big = braid("2: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1");
    assert!(matches!(
        homflypt(&big),
        Err(Error::CrossingCap { count: 17, cap: 16 })
    ));
    let opts = SkeinOpts { crossing_cap: 2 };
    assert!(homflypt_with(&braid("2: 1 1 1"), &opts).is_err());
}

#[test]
fn homflypt_skein_identity_pointwise() {
    for spec in ["2: 1 1", "2: 1 1 1", "3: 1 -2 1 -2"] {
        let d = braid(spec);
        for idx in 0..d.crossing_count() {
            let plus = match d.crossings()[idx].kind {
                CrossingKind::Positive => d.clone(),
                _ => d.switch_crossing(idx).unwrap(),
            };
            let minus = plus.switch_crossing(idx).unwrap();
            let zero = plus.smooth_oriented(idx).unwrap();
            let lhs = homflypt(&plus)
                .unwrap()
                .mul_mono(-1, 0, &rat_int(1))
                .sub(&homflypt(&minus).unwrap().mul_mono(1, 0, &rat_int(1)))
                .unwrap();
            let rhs = homflypt(&zero).unwrap().mul_mono(0, 1, &rat_int(1));
            assert_eq!(lhs, rhs, "skein identity failed at {spec} crossing {idx}");
        }
    }
}

use crate::diagram::CrossingKind;

#[test]
fn warm_cache_matches_cold_cache() {
    let mut cache = Cache::new();
    let tref = simplify(&braid("2: 1 1 1"));
    let warmup = simplify(&braid("2: 1 1 1 1"));
    let _ = homflypt_rec(warmup, &mut cache);
    let warm = homflypt_rec(tref.clone(), &mut cache);
    let cold = homflypt(&braid("2: 1 1 1")).unwrap();
    assert_eq!(warm, cold);
}

#[test]
fn dubrovnik_delta_normalization_and_unlinks() {
    assert_eq!(
        dubrovnik_delta(&LinkDiagram::unknot()).unwrap(),
        LaurentPoly2::one(VarPair::AZ)
    );
    assert_eq!(
        dubrovnik_delta(&LinkDiagram::unlink(2)).unwrap(),
        dubrovnik_delta_factor()
    );
    // cross-check the split factor with one skein step on the clasp
    assert_eq!(
        dubrovnik_delta(&braid("2: 1 -1")).unwrap(),
        dubrovnik_delta_factor()
    );
}

#[test]
fn dubrovnik_delta_curl_axiom() {
    // positive curl multiplies by a, negative by a^-1
    let plus = parse_pd("PD[X(1,1,2,2)]").unwrap();
    let minus = parse_pd("PD[X(1,2,2,1)]").unwrap();
    assert_eq!(dubrovnik_delta(&plus).unwrap(), az(&[((1, 0), 1)]));
    assert_eq!(dubrovnik_delta(&minus).unwrap(), az(&[((-1, 0), 1)]));
    // writhe normalization kills the curl
    assert_eq!(dubrovnik(&plus).unwrap(), LaurentPoly2::one(VarPair::AZ));
    assert_eq!(dubrovnik(&minus).unwrap(), LaurentPoly2::one(VarPair::AZ));
}

#[test]
fn dubrovnik_delta_hand_oracles() {
    // Delta(Hopf+) = (a - a^-1) z^-1 + 1 + z (a - a^-1), by hand from the axioms
    assert_eq!(
        dubrovnik_delta(&braid("2: 1 1")).unwrap(),
        az(&[
            ((1, -1), 1),
            ((-1, -1), -1),
            ((0, 0), 1),
            ((1, 1), 1),
            ((-1, 1), -1)
        ])
    );
    // Delta(right trefoil) = 2a - a^-1 + z(1 - a^-2) + z^2 (a - a^-1)
    assert_eq!(
        dubrovnik_delta(&braid("2: 1 1 1")).unwrap(),
        az(&[
            ((1, 0), 2),
            ((-1, 0), -1),
            ((0, 1), 1),
            ((-2, 1), -1),
            ((1, 2), 1),
            ((-1, 2), -1)
        ])
    );
}

#[test]
fn dubrovnik_is_presentation_independent() {
    let f = dubrovnik(&braid("2: 1 1 1")).unwrap();
    // R2-inflated (5 crossings) and R1-inflated presentations
    assert_eq!(dubrovnik(&braid("2: 1 1 1 1 -1")).unwrap(), f);
    let f8 = dubrovnik(&braid("3: 1 -2 1 -2")).unwrap();
    let f8m = dubrovnik(&braid("3: -1 2 -1 2")).unwrap();
    assert_eq!(f8, f8m);
}

#[test]
fn dubrovnik_skein_identity_pointwise() {
    for spec in ["2: 1 1", "2: 1 1 1", "3: 1 -2 1 -2"] {
        let d = braid(spec);
        for idx in 0..d.crossing_count() {
            let plus = match d.crossings()[idx].kind {
                CrossingKind::Positive => d.clone(),
                _ => d.switch_crossing(idx).unwrap(),
            };
            let minus = plus.switch_crossing(idx).unwrap();
            let zero = plus.smooth_unoriented(idx, SmoothMode::Zero).unwrap();
            let inf = plus.smooth_unoriented(idx, SmoothMode::Infinity).unwrap();
            let lhs = dubrovnik_delta(&plus)
                .unwrap()
                .sub(&dubrovnik_delta(&minus).unwrap())
                .unwrap();
            let rhs = dubrovnik_delta(&zero)
                .unwrap()
                .sub(&dubrovnik_delta(&inf).unwrap())
                .unwrap()
                .mul_mono(0, 1, &rat_int(1));
            assert_eq!(
                lhs, rhs,
                "Dubrovnik identity failed at {spec} crossing {idx}"
            );
        }
    }
}

#[test]
fn kauffman_conversion_examples() {
    assert_eq!(
        kauffman_from_dubrovnik(&LaurentPoly2::one(VarPair::AZ), 1).unwrap(),
        LaurentPoly2::one(VarPair::AZ)
    );
    // 2-unlink: (a - a^-1) z^-1 + 1 becomes (a + a^-1) z^-1 - 1
    let unlink = dubrovnik_delta_factor();
    assert_eq!(
        kauffman_from_dubrovnik(&unlink, 2).unwrap(),
        az(&[((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)])
    );
    // a lone odd-parity monomial is not a Dubrovnik polynomial
    let bad = az(&[((1, 0), 1)]);
    assert!(matches!(
        kauffman_from_dubrovnik(&bad, 1),
        Err(Error::ImaginaryResidue { k: 1, j: 0 })
    ));
}

#[test]
fn kauffman_round_trip() {
    for spec in [
        "2: 1 1",
        "2: -1 -1",
        "2: 1 1 1",
        "3: 1 -2 1 -2",
        "2: 1 1 1 1",
    ] {
        let d = braid(spec);
        let mu = d.components();
        let f = dubrovnik(&d).unwrap();
        let k = kauffman_from_dubrovnik(&f, mu).unwrap();
        assert_eq!(
            dubrovnik_from_kauffman(&k, mu).unwrap(),
            f,
            "round trip failed for {spec}"
        );
    }
}

#[test]
fn rational_coefficients_survive_scaling() {
    // exercising non-integer coefficients through the conversion
    let f = LaurentPoly2::from_terms(VarPair::AZ, [((2, 0), rat(3, 2)), ((0, 2), rat(-1, 4))]);
    let k = kauffman_from_dubrovnik(&f, 2).unwrap();
    assert_eq!(k.coeff(2, 0), rat(-3, 2) * rat_int(-1));
    assert_eq!(k.coeff(0, 2), rat(1, 4) * rat_int(-1));
}
