use super::*;
use crate::algebra::rat_int;
use crate::approx::coeff_table_of;
use crate::corpus;
use crate::diagram::{from_braid, parse_braid};
use crate::skein::{homflypt, homflypt_delta};

fn braid(spec: &str) -> LinkDiagram {
    from_braid(&parse_braid(spec).unwrap())
}

#[test]
fn extend_to_singular_base_cases() {
    let p_of = |d: &LinkDiagram| homflypt(d).map(|p| p.coeff(2, 0));
    let tref = braid("2: 1 1 1");
    // s = 0: plain evaluation
    assert_eq!(extend_to_singular(&p_of, &tref).unwrap(), rat_int(2));
    // a crossing whose switch is an isotopy: both resolutions are unknots
    let curl = crate::diagram::parse_pd("PD[X(1,1,2,2)]").unwrap();
    let sing = curl.make_singular(0).unwrap();
    let unknot_inv = |d: &LinkDiagram| homflypt(d).map(|p| p.coeff(0, 0));
    assert_eq!(extend_to_singular(&unknot_inv, &sing).unwrap(), rat_int(0));
}

#[test]
fn extend_alternates_on_two_double_points() {
    // sum with signs +,-,-,+ of a staircase function equals 0 for constants
    let constant = |_: &LinkDiagram| Ok(rat_int(5));
    let d = braid("2: 1 1 1")
        .make_singular(0)
        .unwrap()
        .make_singular(1)
        .unwrap();
    assert_eq!(extend_to_singular(&constant, &d).unwrap(), rat_int(0));
}

#[test]
fn order_check_passes_constant_and_fails_writhe() {
    let samples = corpus::singular_samples(1);
    let constant = |_: &LinkDiagram| Ok(rat_int(1));
    let report = order_check("constant", &constant, 0, &samples);
    assert!(report.all_zero_at_q_plus_1);
    assert_eq!(report.samples.len(), samples.len());

    let writhe = |d: &LinkDiagram| Ok(crate::algebra::Rat::from_integer(d.writhe()?.into()));
    let report = order_check("writhe", &writhe, 0, &samples);
    assert!(!report.all_zero_at_q_plus_1);
    // writhe(L+) - writhe(L-) = 2 on every sample
    for s in &report.samples {
        assert_eq!(s.value.as_ref().unwrap(), &rat_int(2));
    }
}

#[test]
fn order_check_records_sample_mismatches() {
    let samples = corpus::singular_samples(2);
    let constant = |_: &LinkDiagram| Ok(rat_int(1));
    // claimed order 0 wants exactly 1 double point; these carry 2
    let report = order_check("constant", &constant, 0, &samples);
    assert!(!report.all_zero_at_q_plus_1);
    assert!(report.samples.iter().all(|s| s.value.is_err()));
}

#[test]
fn z_lowbound_examples() {
    assert!(z_lowbound_check(&LaurentPoly2::one(VarPair::VZ), 1));
    assert!(z_lowbound_check(&homflypt_delta(), 2));
    let bad = LaurentPoly2::mono(VarPair::VZ, 0, -2, rat_int(1));
    assert!(!z_lowbound_check(&bad, 2));
    assert!(z_lowbound_check(&LaurentPoly2::zero(VarPair::VZ), 1));
}

use crate::algebra::{LaurentPoly2, VarPair};

#[test]
fn delta_decompose_trivial_and_unlink() {
    let one = LaurentPoly2::one(VarPair::VZ);
    let dec = delta_basis_decompose(&one, 1, DeltaBasis::Homflypt).unwrap();
    assert_eq!(dec.parts.len(), 1);
    assert_eq!(dec.parts[&0], one);

    // homflypt(2-unlink) = delta^1 with coefficient 1
    let dec = delta_basis_decompose(&homflypt_delta(), 2, DeltaBasis::Homflypt).unwrap();
    assert_eq!(dec.parts.len(), 1);
    assert_eq!(dec.parts[&1], LaurentPoly2::one(VarPair::VZ));
    assert_eq!(dec.reconstruct(), homflypt_delta());

    // trefoil: no negative z-powers, pure polynomial part
    let t = homflypt(&braid("2: 1 1 1")).unwrap();
    let dec = delta_basis_decompose(&t, 1, DeltaBasis::Homflypt).unwrap();
    assert_eq!(dec.parts.keys().copied().collect::<Vec<_>>(), vec![0]);
}

#[test]
fn delta_decompose_dubrovnik_unlink() {
    let f = crate::skein::dubrovnik_delta_factor();
    let dec = delta_basis_decompose(&f, 2, DeltaBasis::Dubrovnik).unwrap();
    assert_eq!(dec.parts.len(), 1);
    assert_eq!(dec.parts[&1], LaurentPoly2::one(VarPair::AZ));
    assert_eq!(dec.reconstruct(), f);
}

#[test]
fn delta_decompose_reports_obstructions() {
    // z^-1 with mu = 1: power exceeds mu - 1
    let p = LaurentPoly2::mono(VarPair::VZ, 0, -1, rat_int(1));
    let err = delta_basis_decompose(&p, 1, DeltaBasis::Homflypt).unwrap_err();
    assert_eq!(err.power, 1);

    // v^2 z^-1 with mu = 2: layer not divisible by (v^-1 - v)
    let p = LaurentPoly2::mono(VarPair::VZ, 2, -1, rat_int(1));
    let err = delta_basis_decompose(&p, 2, DeltaBasis::Homflypt).unwrap_err();
    assert!(err.reason.contains("not divisible"));
}

#[test]
fn delta_decompose_handles_mixed_layers() {
    // delta^2 * v + delta * z^2 + 7: peel two layers then keep the rest
    let delta = DeltaBasis::Homflypt.element();
    let v = LaurentPoly2::mono(VarPair::VZ, 1, 0, rat_int(1));
    let z2 = LaurentPoly2::mono(VarPair::VZ, 0, 2, rat_int(1));
    let seven = LaurentPoly2::mono(VarPair::VZ, 0, 0, rat_int(7));
    let p = delta
        .pow(2)
        .mul(&v)
        .unwrap()
        .add(&delta.mul(&z2).unwrap())
        .unwrap()
        .add(&seven)
        .unwrap();
    let dec = delta_basis_decompose(&p, 3, DeltaBasis::Homflypt).unwrap();
    assert_eq!(dec.reconstruct(), p);
    assert_eq!(dec.parts[&2], v);
}

#[test]
fn dubrovnik_kauffman_identity_on_small_links() {
    for name in ["unknot", "hopf_plus", "trefoil_right", "torus_2_4"] {
        let d = corpus::diagram(name).unwrap();
        assert!(dubrovnik_kauffman_identity_check(&d).unwrap(), "{name}");
    }
}

#[test]
fn substitution_crosscheck_detects_faults() {
    let t = coeff_table_of(&braid("2: 1 1 1")).unwrap();
    assert!(substitution_crosscheck(&t, -2..=2, 0..=5));
    let bad = t.perturbed(0, &rat_int(1));
    assert!(!crosscheck_tables(&bad, &t, -2..=2, 0..=5));

    // a corrupted multi-component table violates the lemma prefix instead
    let unlink = coeff_table_of(&LinkDiagram::unlink(2)).unwrap();
    let bad = unlink.perturbed(0, &rat_int(1));
    assert!(!substitution_crosscheck(&bad, 1..=2, 0..=3));
}

#[test]
fn full_suite_passes_with_moderate_settings() {
    // smaller N keeps this unit-level; the acceptance suite runs the full one
    let cfg = SuiteConfig {
        n_max: 140,
        ..Default::default()
    };
    for check in run_suite(&cfg) {
        assert!(check.passed, "{}: {}", check.name, check.details);
    }
}

#[test]
fn mutation_breaks_the_identities() {
    let cfg = SuiteConfig {
        n_max: 60,
        mutate: 1,
        seed: 1,
        only: None,
        ..Default::default()
    };
    let res = run_suite(&cfg);
    let two_path = res.iter().find(|c| c.name == "two_path_w").unwrap();
    assert!(!two_path.passed, "fault must break the two-path identity");
    let round = res
        .iter()
        .find(|c| c.name == "vandermonde_roundtrip_b")
        .unwrap();
    assert!(!round.passed);
}

#[test]
fn recovered_b_invariants_are_finite_type_on_samples() {
    // B_{m,j} restricted to mu-component links is a combination of the
    // w_{N,q} with q = m + j, so its extension vanishes on samples carrying
    // q + 1 double points
    for s in 1..=3usize {
        let q = s as i64 - 1;
        for (id, d) in corpus::singular_samples(s) {
            let mu = d.components() as i64;
            for m in 0..=(q + mu - 1).max(0) as u32 {
                let j = q - m as i64;
                let inv = move |l: &LinkDiagram| -> crate::error::Result<crate::algebra::Rat> {
                    Ok(crate::approx::b_coeff(&coeff_table_of(l)?, m, j))
                };
                let v = extend_to_singular(&inv, &d).unwrap();
                assert!(v.is_zero(), "B_{{{m},{j}}} = {v} on {id}");
            }
        }
    }
}
