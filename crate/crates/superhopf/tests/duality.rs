use superhopf::catalog::tables::{all_tables, parse_scalar, TableId};
use superhopf::catalog::*;
use superhopf::duality::*;
use superhopf::hopfcore::{check_morphism, verify_axioms};
use superhopf::linalg::{LinearMap, Matrix};
use num_traits::{One, Zero};
use superhopf::CycRational as Q;

#[test]
fn dual_of_every_entry_verifies() {
    for e in catalog_list() {
        if e.printed_variant {
            continue;
        }
        let a = build_named::<Q>(&e.name, Some(3)).unwrap().hopf;
        let d = dual(&a);
        let r = verify_axioms(&d);
        assert!(r.passed(), "{}^*: {:?}", e.name, r.failures.first());
        let dd = dual(&d);
        assert_eq!(dd.mult_entries(), a.mult_entries(), "{}", e.name);
        assert_eq!(dd.comult_entries(), a.comult_entries(), "{}", e.name);
        assert_eq!(dd.antipode(), a.antipode(), "{}", e.name);
        evaluation_iso(&a).unwrap();
    }
}

#[test]
fn dual_of_group_algebra_is_commutative_function_algebra() {
    let s3 = build_named::<Q>("kS3", None).unwrap().hopf;
    let d = dual(&s3);
    assert!(superhopf::hopfcore::is_commutative(&d));
    assert!(!superhopf::hopfcore::is_cocommutative(&d));
    // the dual basis consists of orthogonal idempotents
    for i in 0..6 {
        let e = d.basis(i);
        assert_eq!(d.mul(&e, &e), e);
    }
}

#[test]
fn bosonization_commutes_with_duality() {
    for name in ["ext1", "ext2", "H_4^(2)", "H_8^(3)", "H_2p^(1)"] {
        let h = build_named::<Q>(name, Some(3)).unwrap().hopf;
        let p = bosonization_duality(&h);
        assert!(p.status.hopf_pairing, "{}: {:?}", name, p.status.failure);
        assert!(p.status.non_degenerate);
        pairing_to_morphism(&p).unwrap();
    }
}

#[test]
fn sign_free_bosonization_pairing_fails() {
    let h = build_named::<Q>("ext1", None).unwrap().hopf;
    let p = bosonization_duality(&h);
    let m = Matrix::from_rows((0..4).map(|i| (0..4).map(|j| p.matrix.get(i, j).clone()).map(|x| if x.is_zero() { x } else { Q::one() }).collect()).collect(), 4);
    let bad = HopfPairing::new(p.left.clone(), p.right.clone(), m).unwrap();
    assert!(!bad.status.hopf_pairing);
}

#[test]
fn table_pairings_are_non_degenerate_hopf_pairings() {
    for t in all_tables() {
        let p = if t.id == TableId::TwoP { 5 } else { 0 };
        for spec in &t.pairings {
            let l = build_named::<Q>(&spec.left, Some(5)).unwrap();
            let r = build_named::<Q>(&spec.right, Some(5)).unwrap();
            let values: Vec<(String, String, Q)> =
                spec.values.iter().map(|(a, b, s)| (a.clone(), b.clone(), parse_scalar(s, p, None).unwrap())).collect();
            let pr = pairing_from_generators(&l, &r, &values).unwrap();
            assert!(pr.status.hopf_pairing, "{} x {}: {:?}", spec.left, spec.right, pr.status.failure);
            assert!(pr.status.non_degenerate, "{} x {}", spec.left, spec.right);
            let f = pairing_to_morphism(&pr).unwrap();
            assert!(f.is_bijective());
        }
    }
}

#[test]
fn wrong_generator_value_breaks_the_pairing() {
    let l = build_named::<Q>("H_4^(2)", None).unwrap();
    let values = vec![("g".to_string(), "g".to_string(), Q::one()), ("z".to_string(), "z".to_string(), Q::one())];
    let pr = pairing_from_generators(&l, &l, &values).unwrap();
    // ⟨g, z⟩-type constraints force ⟨g, g⟩ = −1 here
    assert!(!pr.status.hopf_pairing || !pr.status.non_degenerate);
}

#[test]
fn unknown_generator_is_reported() {
    let l = build_named::<Q>("H_4^(2)", None).unwrap();
    let values = vec![("w".to_string(), "g".to_string(), Q::one())];
    assert!(matches!(pairing_from_generators(&l, &l, &values), Err(PairingError::UnknownGenerator(_))));
}

#[test]
fn identity_is_not_a_morphism_into_a_dual_of_a_noncommutative_algebra() {
    let h = build_named::<Q>("Taft_3", None).unwrap().hopf;
    let id = LinearMap::identity(h.dim());
    // Taft algebras are self-dual, but not through the identity matrix
    assert!(check_morphism(&h, &dual(&h), &id, true).is_err());
}

#[test]
fn printed_group_values_fail_where_recorded() {
    for t in all_tables() {
        for spec in &t.pairings {
            let Some(printed) = &spec.printed_values else { continue };
            let l = build_named::<Q>(&spec.left, Some(5)).unwrap();
            let r = build_named::<Q>(&spec.right, Some(5)).unwrap();
            let values: Vec<(String, String, Q)> =
                printed.iter().map(|(a, b, s)| (a.clone(), b.clone(), parse_scalar(s, 5, None).unwrap())).collect();
            let pr = pairing_from_generators(&l, &r, &values).unwrap();
            assert!(!pr.status.hopf_pairing, "{} x {}", spec.left, spec.right);
        }
    }
}
