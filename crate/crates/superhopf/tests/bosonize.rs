use num_traits::{One, Zero};
use superhopf::analysis::{fingerprint, fingerprints_equal, grouplikes, super_data, SuperDatum};
use superhopf::bosonize::*;
use superhopf::catalog::tables::all_tables;
use superhopf::catalog::*;
use superhopf::classify::match_presentation;
use superhopf::hopfcore::{check_morphism, is_cocommutative, is_commutative, verify_axioms, HopfSuperAlgebra, Parts};
use superhopf::linalg::unit_vec;
use superhopf::CycRational as Q;

fn class_names() -> Vec<String> {
    all_tables().iter().flat_map(|t| t.classes.iter().map(|c| c.name.clone())).collect()
}

fn datum(a: &Presented<Q>, g: &str) -> SuperDatum<Q> {
    let sd = super_data(&a.hopf, a.presentation.as_ref()).unwrap();
    sd.into_iter().find(|d| d.g_label == g).unwrap_or_else(|| panic!("no super-datum at {}", g))
}

#[test]
fn bosonization_of_every_table_entry() {
    for name in class_names() {
        let h = build_named::<Q>(&name, Some(3)).unwrap().hopf;
        let rec = bosonize(&h);
        let b = &rec.result;
        assert_eq!(b.dim(), 2 * h.dim());
        assert!(b.is_purely_even());
        let r = verify_axioms(b);
        assert!(r.passed(), "{}: {:?}", name, r.failures.first());
        // the odd part is nonzero in every table entry
        assert!(!is_commutative(b) && !is_cocommutative(b), "{}", name);
        // h ↦ h⊗e is multiplicative
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = rec.embedding.apply(&h.mul(&h.basis(i), &h.basis(j)));
                assert_eq!(lhs, b.mul(&rec.embedding.image_of_basis(i), &rec.embedding.image_of_basis(j)));
            }
        }
        // G(Ĥ) ≅ G(H) × C2
        let gh = grouplikes(&h).unwrap();
        let gb = grouplikes(b).unwrap();
        assert_eq!(gb.len(), 2 * gh.len(), "{}", name);
        if gh.abelian {
            let mut orders = gh.orders.clone();
            orders.extend(gh.orders.iter().map(|&o| num_integer::lcm(o, 2)));
            assert_eq!(gb.invariant_factors, superhopf::analysis::abelian_invariants(&orders), "{}", name);
        }
    }
}

#[test]
fn section_is_a_hopf_map() {
    let h = build_named::<Q>("H_8^(7)", None).unwrap().hopf;
    let rec = bosonize(&h);
    check_morphism(&group_z2::<Q>(), &rec.result, &rec.section, false).unwrap();
}

#[test]
fn printed_antipode_sign_fails() {
    for name in ["ext1", "H_4^(3)", "H_8^(18)"] {
        let h = build_named::<Q>(name, None).unwrap().hopf;
        let n = h.dim();
        let b = bosonize(&h).result;
        let mut parts: Parts<Q> = b.parts();
        let mut s = superhopf::linalg::Matrix::zeros(2 * n, 2 * n);
        // S(h⊗σ^i) = (−1)^{i+|h|} S(h)⊗σ^{i+|h|}
        for k in 0..n {
            for i in 0..2 {
                let sign = if (i + h.parity_of(k)) % 2 == 1 { -Q::one() } else { Q::one() };
                let block = (i + h.parity_of(k)) % 2;
                for r in 0..n {
                    let v = h.antipode().get(r, k).clone();
                    if !v.is_zero() {
                        s.set(block * n + r, i * n + k, sign.clone() * v);
                    }
                }
            }
        }
        parts.antipode = Some(s);
        let bad = HopfSuperAlgebra::from_parts(parts).unwrap();
        assert!(!verify_axioms(&bad).passed(), "{}", name);
    }
}

#[test]
fn exterior_bosonizes_to_taft_four() {
    let ext = build_named::<Q>("ext1", None).unwrap();
    let taft = build_named::<Q>("Taft_2", None).unwrap();
    let b = bosonize(&ext.hopf).result;
    // c ↦ σ, x ↦ z⊗e or zσ
    let sigma = unit_vec(4, 2);
    let ok = [1, 3].iter().any(|&k| match_presentation(&taft, &b, std::slice::from_ref(&sigma), &[unit_vec(4, k)]).is_ok());
    assert!(ok);
}

#[test]
fn projection_on_generators() {
    let a = build_named::<Q>("A^(2)", None).unwrap();
    let d = datum(&a, "c");
    let pi = projection_pi(&a.hopf, &d).unwrap();
    let idx = |l: &str| a.hopf.index_of(l).unwrap();
    assert_eq!(pi.image_of_basis(idx("1")), unit_vec(2, 0));
    assert_eq!(pi.image_of_basis(idx("c")), unit_vec(2, 1));
    for x in ["x1", "x2"] {
        assert!(pi.image_of_basis(idx(x)).iter().all(|v| v.is_zero()));
    }
}

#[test]
fn coinvariants_of_taft_four_are_exterior() {
    let taft = build_named::<Q>("Taft_2", None).unwrap();
    let d = datum(&taft, "c");
    let co = coinvariants(&taft.hopf, &d).unwrap();
    assert_eq!(co.hopf.dim(), 2);
    assert_eq!(co.hopf.parity_dims(), (1, 1));
    assert!(verify_axioms(&co.hopf).passed());
    let ext = build_named::<Q>("ext1", None).unwrap();
    match_presentation(&ext, &co.hopf, &[], &[unit_vec(2, 1)]).unwrap();
}

#[test]
fn coinvariants_of_a1_are_exterior_cubed() {
    let a = build_named::<Q>("A^(1)", None).unwrap();
    let d = datum(&a, "c");
    let co = coinvariants(&a.hopf, &d).unwrap();
    assert!(verify_axioms(&co.hopf).passed());
    let ext3 = build_named::<Q>("ext3", None).unwrap().hopf;
    assert!(fingerprints_equal(&fingerprint(&co.hopf).unwrap(), &fingerprint(&ext3).unwrap()));
    // the subalgebra structure is the restriction of A's
    for i in 0..co.hopf.dim() {
        for j in 0..co.hopf.dim() {
            let lhs = co.inclusion.apply(&co.hopf.mul(&co.hopf.basis(i), &co.hopf.basis(j)));
            let rhs = a.hopf.mul(&co.inclusion.image_of_basis(i), &co.inclusion.image_of_basis(j));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn generation_by_grouplikes_and_skew_generators() {
    let a = build_named::<Q>("A^(2)", None).unwrap();
    let v = |l: &str| unit_vec(16, a.hopf.index_of(l).unwrap());
    // α1: α(c) = −1, α(d) = 1
    let d = super_data(&a.hopf, a.presentation.as_ref())
        .unwrap()
        .into_iter()
        .find(|d| d.g_label == "c" && d.alpha_values[a.hopf.index_of("d").unwrap()].is_one())
        .unwrap();
    assert!(generation_check(&a.hopf, &d, &[v("d"), v("x1"), v("x2")]));
    assert!(!generation_check(&a.hopf, &d, &[v("d"), v("x1")]));
}

#[test]
fn commutative_group_algebra_has_no_super_datum() {
    // g is central in a commutative algebra, so there is no super-datum
    let k = build_named::<Q>("kC2", None).unwrap();
    assert!(super_data(&k.hopf, k.presentation.as_ref()).unwrap().is_empty());
}

#[test]
fn roundtrip_on_every_candidate() {
    for t in all_tables() {
        for c in &t.candidates {
            let a = build_named::<Q>(&c.name, Some(3)).unwrap();
            for d in super_data(&a.hopf, a.presentation.as_ref()).unwrap() {
                let (f, co) = roundtrip_iso(&a.hopf, &d).unwrap_or_else(|e| panic!("{} at {}: {}", c.name, d.g_label, e));
                assert_eq!(2 * co.hopf.dim(), a.hopf.dim());
                assert!(f.is_bijective());
                assert!(co.hopf.parity_dims().1 > 0);
            }
        }
    }
}

#[test]
fn bosonized_exterior_roundtrips_to_itself() {
    let ext = build_named::<Q>("ext1", None).unwrap().hopf;
    let b = bosonize(&ext).result;
    let sd = super_data(&b, None).unwrap();
    assert_eq!(sd.len(), 1);
    let (_, co) = roundtrip_iso(&b, &sd[0]).unwrap();
    assert!(fingerprints_equal(&fingerprint(&co.hopf).unwrap(), &fingerprint(&ext).unwrap()));
}

#[test]
fn a14_is_the_bosonization_of_h8_18() {
    let a = build_named::<Q>("A^(14)", None).unwrap();
    let d = datum(&a, "d");
    let (_, co) = roundtrip_iso(&a.hopf, &d).unwrap();
    let h18 = build_named::<Q>("H_8^(18)", None).unwrap().hopf;
    assert!(fingerprints_equal(&fingerprint(&co.hopf).unwrap(), &fingerprint(&h18).unwrap()));
    // and so bosonize(H_8^(18)) is A^(14), through the round trip
    let b = bosonize(&co.hopf).result;
    assert_eq!(b.dim(), 16);
}

#[test]
fn non_super_datum_is_rejected() {
    // g central: the coinvariants of the counit are everything
    let a = build_named::<Q>("kC2xC2", None).unwrap().hopf;
    let gl = grouplikes(&a).unwrap();
    let g = gl.elements[1].clone();
    let alpha: Vec<Q> = (0..4).map(|k| if k == 0 { Q::one() } else { Q::zero() }).collect();
    let d = SuperDatum { g: 1, g_label: gl.labels[1].clone(), g_vec: g, alpha: 0, alpha_values: alpha, admissible: false, is_super: false };
    assert!(coinvariants(&a, &d).is_err());
}
