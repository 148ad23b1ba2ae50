use num_traits::{One, Zero};
use proptest::prelude::*;
use superhopf::analysis::*;
use superhopf::catalog::*;
use superhopf::duality::dual;
use superhopf::hopfcore::{jacobson_radical, nilpotent_ideal_search, semisimple_abelian_rank, HopfSuperAlgebra};
use superhopf::linalg::{unit_vec, Matrix, Subspace, Vector};
use superhopf::{CycRational as Q, Field, RootField};

fn build(name: &str) -> Presented<Q> {
    build_named::<Q>(name, Some(3)).unwrap()
}

#[test]
fn taft_scan() {
    for n in [2u64, 3, 4, 5, 6, 8, 10] {
        let t = build(&format!("Taft_{}", n));
        let ad = admissible_data(&t.hopf, t.presentation.as_ref()).unwrap();
        let sd = super_from(&t.hopf, t.presentation.as_ref(), &ad).unwrap();
        if n % 4 == 2 {
            // g = c^{n/2}, α(c) = −1, α(x) = 0
            assert_eq!(ad.len(), 1, "Taft_{}", n);
            assert_eq!(sd.len(), 1, "Taft_{}", n);
            let g = unit_vec(t.hopf.dim(), t.hopf.index_of(&format!("c^{}", n / 2)).unwrap_or_else(|| {
                t.hopf.index_of(if n == 2 { "c" } else { "" }).unwrap()
            }));
            assert_eq!(sd[0].g_vec, g, "Taft_{}", n);
            let c = t.hopf.index_of("c").unwrap();
            assert_eq!(sd[0].alpha_values[c], -Q::one());
            let x = t.hopf.index_of("x").unwrap();
            assert!(sd[0].alpha_values[x].is_zero());
        } else {
            assert!(ad.is_empty(), "Taft_{}", n);
        }
    }
}

#[test]
fn characters_agree_between_routes() {
    for name in ["Taft_3", "Taft_4", "A^(2)", "A^(7)", "A^(13)", "H_8^(5)", "AN(-1,p,0)", "kC2xC2xC2"] {
        let a = build(name);
        let with = characters(&a.hopf, a.presentation.as_ref()).unwrap();
        let without = characters(&a.hopf, None).unwrap();
        assert_eq!(with.len(), without.len(), "{}", name);
        assert!(with.iter().all(|c| without.iter().any(|d| d.values == c.values)), "{}", name);
        assert_eq!(with.len(), semisimple_abelian_rank(&a.hopf), "{}", name);
    }
}

#[test]
fn character_counts_of_group_algebras() {
    // abelian G: |Ĝ| = |G|; S3 and D4, Q8 have |G/[G,G]| characters
    for (name, n) in [("kC4", 4), ("kC6", 6), ("kC4xC2", 8), ("kS3", 2), ("kD4", 4), ("kQ8", 4)] {
        let a = build(name);
        assert_eq!(characters(&a.hopf, None).unwrap().len(), n, "{}", name);
    }
}

#[test]
fn characters_form_a_group_under_convolution() {
    let a = build("A^(2)");
    let chars = characters(&a.hopf, a.presentation.as_ref()).unwrap();
    for f in &chars {
        for g in &chars {
            let fg = convolve(&a.hopf, &f.values, &g.values);
            assert!(chars.iter().any(|c| c.values == fg));
        }
    }
}

#[test]
fn grouplikes_of_duals() {
    let d = dual(&build("kC4").hopf);
    let gl = grouplikes(&d).unwrap();
    assert_eq!(gl.len(), 4);
    assert_eq!(gl.invariant_factors, vec![4]);
    let d = dual(&build("kS3").hopf);
    assert_eq!(grouplikes(&d).unwrap().len(), 2);
    let t = build("Taft_3").hopf;
    assert_eq!(grouplikes(&dual(&t)).unwrap().len(), 3);
}

#[test]
fn grouplikes_of_group_algebras() {
    let gl = grouplikes(&build("kD4").hopf).unwrap();
    assert_eq!(gl.len(), 8);
    assert!(!gl.abelian);
    let mut orders = gl.orders.clone();
    orders.sort();
    assert_eq!(orders, vec![1, 2, 2, 2, 2, 2, 4, 4]);
    let gl = grouplikes(&build("kQ8").hopf).unwrap();
    assert_eq!(gl.orders.iter().filter(|&&o| o == 2).count(), 1);
}

#[test]
fn no_super_data_on_a_prime_c4() {
    let a = build("A'_C4");
    assert!(super_data(&a.hopf, a.presentation.as_ref()).unwrap().is_empty());
}

#[test]
fn admissible_data_need_an_ordinary_algebra() {
    let h = build("ext1").hopf;
    assert!(matches!(admissible_data(&h, None), Err(AnalysisError::Precondition(_))));
}

#[test]
fn radical_agrees_with_brute_force_search() {
    for name in ["ext1", "ext2", "Taft_2", "H_4^(1)", "H_4^(3)", "kC2xC2", "kC3", "A_C2", "H_8^(7)", "A'_C4"] {
        let h = build(name).hopf;
        let j = jacobson_radical(&h);
        let s = nilpotent_ideal_search(&h);
        assert!(s.is_subspace_of(&j) && j.is_subspace_of(&s), "{}: {} vs {}", name, j.dim(), s.dim());
    }
}

/// Δ(z) = γ⊗z + z⊗1 solved on the full basis, then cut to parity ε.
fn skew_primitives_dense(h: &HopfSuperAlgebra<Q>, gamma: &[Q], eps: usize) -> Subspace<Q> {
    let n = h.dim();
    let mut m = Matrix::<Q>::zeros(n * n, n);
    for k in 0..n {
        let add = |m: &mut Matrix<Q>, r: usize, c: Q| {
            let v = m.get(r, k).clone() + c;
            m.set(r, k, v);
        };
        for (i, j, d) in h.comult_basis(k) {
            add(&mut m, i * n + j, d.clone());
        }
        for i in 0..n {
            if !gamma[i].is_zero() {
                add(&mut m, i * n + k, -gamma[i].clone());
            }
            if !h.unit()[i].is_zero() {
                add(&mut m, k * n + i, -h.unit()[i].clone());
            }
        }
    }
    let all = Subspace::span(n, m.kernel());
    let homog = Subspace::span(n, (0..n).filter(|&i| h.parity_of(i) == eps).map(|i| unit_vec(n, i)));
    all.intersect(&homog)
}

#[test]
fn skew_primitives_agree_with_dense_solve() {
    for name in ["Taft_3", "H_8^(18)", "H_8^(11)", "A^(1)", "A^(9)", "ext3"] {
        let h = build(name).hopf;
        let gl = grouplikes(&h).unwrap();
        for g in &gl.elements {
            for eps in 0..2 {
                let a = skew_primitives(&h, g, eps as u8);
                let b = skew_primitives_dense(&h, g, eps);
                assert!(a.is_subspace_of(&b) && b.is_subspace_of(&a), "{} at {}", name, h.format_vec(g));
                // 1 − γ is always (γ,1)-skew primitive and even
                if eps == 0 {
                    assert!(a.contains(&superhopf::linalg::sub_vec(h.unit(), g)));
                }
            }
        }
    }
}

#[test]
fn pointedness() {
    for p in [3u64, 5] {
        let h = build_named::<Q>("H_2p^(4)", Some(p)).unwrap().hopf;
        assert!(is_pointed(&h));
        assert!(!is_pointed(&dual(&h)), "dual of H_2p^(4), p = {}", p);
    }
    let h = build("H_8^(18)").hopf;
    assert!(is_pointed(&h));
    assert!(!is_pointed(&dual(&h)));
    for name in ["ext2", "H_4^(2)", "H_8^(3)", "H_2p^(1)"] {
        let h = build(name).hopf;
        assert!(is_pointed(&h) && is_pointed(&dual(&h)), "{}", name);
    }
}

#[test]
fn semisimplicity() {
    assert!(is_semisimple(&build("kS3").hopf));
    assert!(is_semisimple(&build("kQ8").hopf));
    // odd primitives make the bosonization non-semisimple
    assert!(!is_semisimple(&build("ext1").hopf));
    assert!(!is_semisimple(&build("H_4^(1)").hopf));
}

#[test]
fn fingerprint_separates_and_matches() {
    let a = fingerprint(&build("H_8^(1)").hopf).unwrap();
    let b = fingerprint(&build("H_8^(2)").hopf).unwrap();
    assert!(fingerprints_equal(&a, &a));
    assert!(!fingerprints_equal(&a, &b));
    // H ≅ H^{**}
    let h = build("H_8^(15)").hopf;
    let f1 = fingerprint(&h).unwrap();
    let f2 = fingerprint(&dual(&dual(&h))).unwrap();
    assert!(fingerprints_equal(&f1, &f2));
}

fn small_vec(n: usize) -> impl Strategy<Value = Vector<Q>> {
    prop::collection::vec(-3i64..4, n).prop_map(|v| v.into_iter().map(Q::from_i64).collect())
}

fn super_h() -> HopfSuperAlgebra<Q> {
    build("H_8^(18)").hopf
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn comultiplication_is_multiplicative(a in small_vec(8), b in small_vec(8)) {
        let h = super_h();
        let lhs = h.comult(&h.mul(&a, &b));
        let rhs = h.tensor_mul(&h.comult(&a), &h.comult(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_reverses_products_with_sign(i in 0usize..8, j in 0usize..8) {
        // S(ab) = (−1)^{|a||b|} S(b) S(a)
        let h = super_h();
        let (a, b) = (h.basis(i), h.basis(j));
        let sign = if h.parity_of(i) * h.parity_of(j) == 1 { -Q::one() } else { Q::one() };
        let lhs = h.apply_antipode(&h.mul(&a, &b));
        let rhs: Vector<Q> = h.mul(&h.apply_antipode(&b), &h.apply_antipode(&a)).into_iter().map(|x| x * sign.clone()).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn convolution_is_associative_with_counit_unit(f in small_vec(9), g in small_vec(9), k in small_vec(9)) {
        let h = build("Taft_3").hopf;
        let l = convolve(&h, &convolve(&h, &f, &g), &k);
        let r = convolve(&h, &f, &convolve(&h, &g, &k));
        prop_assert_eq!(l, r);
        prop_assert_eq!(convolve(&h, h.counit(), &f), f.clone());
        prop_assert_eq!(convolve(&h, &f, h.counit()), f);
    }

    #[test]
    fn hits_commute(i in 0usize..16) {
        let a = build("A^(2)");
        let chars = characters(&a.hopf, a.presentation.as_ref()).unwrap();
        let alpha = &chars[i % chars.len()].values;
        let l = hit_left(&a.hopf, alpha);
        let r = hit_right(&a.hopf, alpha);
        prop_assert_eq!(l.mul(&r), r.mul(&l));
    }

    #[test]
    fn counit_is_multiplicative(a in small_vec(16), b in small_vec(16)) {
        let h = build("A^(9)").hopf;
        prop_assert_eq!(h.counit_of(&h.mul(&a, &b)), h.counit_of(&a).mul_ref(&h.counit_of(&b)));
    }
}

#[test]
fn zeta_is_available_at_taft_conductors() {
    for n in [2u64, 3, 4, 5, 6, 8, 10] {
        assert!(<Q as RootField>::zeta(n, 1).is_some());
    }
}
