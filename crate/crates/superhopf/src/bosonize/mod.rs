//! Bosonization Ĥ = H # 𝕜ℤ₂ and its inverse through coinvariants.

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{conjugation, hit_right, SuperDatum};
use crate::catalog::{build_group_hopf, GroupData};
use crate::field::{Field, RootField};
use crate::hopfcore::{check_morphism, generated_subalgebra, HopfSuperAlgebra, Parts, StructureError};
use crate::linalg::{unit_vec, zero_vec, Frame, LinearMap, Matrix, Subspace, Vector};

#[derive(Debug, Error)]
pub enum BosonizeError {
    #[error("(g, α) is not a super-datum: {0}")]
    NotSuper(String),
    #[error("coinvariants are not closed under {0}")]
    NotClosed(String),
    #[error("second leg of Δ leaves the coinvariants at {0}")]
    SecondLeg(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("{what}: {detail}")]
    Morphism { what: &'static str, detail: String },
}

#[derive(Clone, Debug)]
pub struct BosonizationRecord<F> {
    pub source: HopfSuperAlgebra<F>,
    pub result: HopfSuperAlgebra<F>,
    /// h ↦ h⊗e.
    pub embedding: LinearMap<F>,
    /// σ^i ↦ 1⊗σ^i, from the basis (1, σ) of 𝕜ℤ₂.
    pub section: LinearMap<F>,
}

fn sign<F: Field>(odd: bool) -> F {
    if odd {
        -F::one()
    } else {
        F::one()
    }
}

/// Basis h⊗σ^i sits at index i·dim(H) + h.
pub fn bosonize<F: Field>(h: &HopfSuperAlgebra<F>) -> BosonizationRecord<F> {
    let n = h.dim();
    let par = |k: usize| h.parity_of(k);
    let mut mult = vec![];
    for (a, b, c, x) in h.mult_entries() {
        for i in 0..2 {
            for j in 0..2 {
                // (h⊗σ^i)(h'⊗σ^j) = (−1)^{i|h'|} hh'⊗σ^{i+j}
                let s = sign::<F>(i * par(b) % 2 == 1);
                mult.push((i * n + a, j * n + b, ((i + j) % 2) * n + c, s.mul_ref(&x)));
            }
        }
    }
    let mut comult = vec![];
    for (a, b, k, d) in h.comult_entries() {
        for i in 0..2 {
            // Δ(h⊗σ^i) = h_1⊗σ^{i+|h_2|} ⊗ h_2⊗σ^i
            comult.push((((i + par(b)) % 2) * n + a, i * n + b, i * n + k, d.clone()));
        }
    }
    let mut unit = zero_vec(2 * n);
    let mut counit = zero_vec(2 * n);
    for k in 0..n {
        unit[k] = h.unit()[k].clone();
        counit[k] = h.counit()[k].clone();
        counit[n + k] = h.counit()[k].clone();
    }
    // S(h⊗σ^i) = (−1)^{|h|(i+1)} S(h)⊗σ^{i+|h|}
    let mut s = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        let col = h.antipode().column(k);
        for i in 0..2 {
            let sg = sign::<F>(par(k) * (i + 1) % 2 == 1);
            let block = (i + par(k)) % 2;
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    s.set(block * n + r, i * n + k, sg.mul_ref(v));
                }
            }
        }
    }
    let labels = (0..2 * n)
        .map(|x| {
            let (i, k) = (x / n, x % n);
            match (i, h.label(k)) {
                (0, l) => l.to_string(),
                (_, "1") => "σ".to_string(),
                (_, l) => format!("{}σ", l),
            }
        })
        .collect();
    let parts = Parts {
        labels,
        parity: vec![0; 2 * n],
        mult,
        unit,
        comult,
        counit,
        antipode: Some(s),
        conductor: h.conductor(),
    };
    let result = HopfSuperAlgebra::from_parts(parts).expect("bosonization is well formed");
    let embedding = LinearMap::from_images(&(0..n).map(|k| unit_vec(2 * n, k)).collect::<Vec<_>>(), 2 * n);
    let mut sigma = zero_vec(2 * n);
    for k in 0..n {
        sigma[n + k] = h.unit()[k].clone();
    }
    let section = LinearMap::from_images(&[result.unit().clone(), sigma], 2 * n);
    BosonizationRecord { source: h.clone(), result, embedding, section }
}

/// 𝕜ℤ₂ with basis (e, σ).
pub fn group_z2<F: RootField>() -> HopfSuperAlgebra<F> {
    build_group_hopf::<F>(&GroupData::cyclic(2, "σ")).expect("group algebra").hopf
}

/// π(a) = (ε(a)/2)(e+σ) + (α(a)/2)(e−σ), verified as a Hopf map split by
/// σ ↦ g.
pub fn projection_pi<F: RootField>(a: &HopfSuperAlgebra<F>, d: &SuperDatum<F>) -> Result<LinearMap<F>, BosonizeError> {
    let n = a.dim();
    let half = F::from_ratio(1, 2);
    let mut m = Matrix::zeros(2, n);
    for k in 0..n {
        let (e, al) = (&a.counit()[k], &d.alpha_values[k]);
        m.set(0, k, half.mul_ref(&(e.clone() + al.clone())));
        m.set(1, k, half.mul_ref(&(e.clone() - al.clone())));
    }
    let pi = LinearMap::new(m);
    let z2 = group_z2::<F>();
    check_morphism(a, &z2, &pi, false)
        .map_err(|f| BosonizeError::Morphism { what: "π is not a Hopf map", detail: f.to_string() })?;
    let section = LinearMap::from_images(&[a.unit().clone(), d.g_vec.clone()], n);
    if pi.compose(&section) != LinearMap::identity(2) {
        return Err(BosonizeError::Morphism { what: "π∘section", detail: "not the identity".into() });
    }
    Ok(pi)
}

/// The coinvariant Hopf superalgebra with its inclusion into A.
#[derive(Clone, Debug)]
pub struct Coinvariants<F> {
    pub hopf: HopfSuperAlgebra<F>,
    /// Columns are the chosen basis of the carrier, in A's coordinates.
    pub inclusion: LinearMap<F>,
}

/// {b : α⇀b = b} as a subspace.
pub fn coinvariant_space<F: Field>(a: &HopfSuperAlgebra<F>, alpha: &[F]) -> Subspace<F> {
    let n = a.dim();
    let mut m = hit_right(a, alpha);
    for i in 0..n {
        let v = m.get(i, i).clone() - F::one();
        m.set(i, i, v);
    }
    Subspace::span(n, m.kernel())
}

fn graded_basis<F: Field>(a: &HopfSuperAlgebra<F>, d: &SuperDatum<F>) -> Vec<(Vector<F>, u8)> {
    let n = a.dim();
    let hr = hit_right(a, &d.alpha_values);
    let conj = conjugation(a, &d.g_vec);
    let mut out = vec![];
    for eps in 0..2u8 {
        let s = sign::<F>(eps == 1);
        let mut m = Matrix::zeros(2 * n, n);
        for i in 0..n {
            for j in 0..n {
                let mut x = hr.get(i, j).clone();
                let mut y = conj.get(i, j).clone();
                if i == j {
                    x -= &F::one();
                    y -= &s;
                }
                m.set(i, j, x);
                m.set(n + i, j, y);
            }
        }
        let space = Subspace::span(n, m.kernel());
        // prefer PBW monomials, then fill from the echelon basis
        let mut chosen = Subspace::zero(n);
        let mut vecs = vec![];
        for k in 0..n {
            let e = unit_vec(n, k);
            if space.contains(&e) && chosen.insert(e.clone()) {
                vecs.push(e);
            }
        }
        for v in space.basis() {
            if chosen.insert(v.clone()) {
                vecs.push(v.clone());
            }
        }
        out.extend(vecs.into_iter().map(|v| (v, eps)));
    }
    out.sort_by_key(|(v, _)| v.iter().position(|x| !x.is_zero()).unwrap_or(n));
    out
}

/// The coinvariants of A at a super-datum, with the induced structure
/// Δ_H(b) = Σ u_ε g^ε ⊗ v_ε and S_H(b) = (−1)^{|b|} S_A(b) g^{|b|}.
pub fn coinvariants<F: RootField>(a: &HopfSuperAlgebra<F>, d: &SuperDatum<F>) -> Result<Coinvariants<F>, BosonizeError> {
    let n = a.dim();
    let basis = graded_basis(a, d);
    let carrier = coinvariant_space(a, &d.alpha_values);
    if basis.len() != carrier.dim() {
        return Err(BosonizeError::NotSuper(format!("g-conjugation does not preserve the coinvariants at {}", d.g_label)));
    }
    if 2 * carrier.dim() != n {
        return Err(BosonizeError::NotSuper(format!("coinvariants have dimension {} in {}", carrier.dim(), n)));
    }
    let m = basis.len();
    let vectors: Vec<Vector<F>> = basis.iter().map(|(v, _)| v.clone()).collect();
    let parity: Vec<u8> = basis.iter().map(|(_, e)| *e).collect();
    let frame = Frame::new(vectors.clone(), n).expect("independent basis");
    let coords = |v: &Vector<F>, what: &str| {
        frame.coordinates(v).ok_or_else(|| BosonizeError::NotClosed(what.to_string()))
    };
    let g = &d.g_vec;
    let mut mult = vec![];
    for (i, x) in vectors.iter().enumerate() {
        for (j, y) in vectors.iter().enumerate() {
            let c = coords(&a.mul(x, y), "multiplication")?;
            for (k, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    mult.push((i, j, k, v));
                }
            }
        }
    }
    let mut comult = vec![];
    for (k, b) in vectors.iter().enumerate() {
        let t = a.comult(b);
        // rows of t by first leg
        let mut rows: std::collections::BTreeMap<usize, Vector<F>> = Default::default();
        for ((i, j), c) in &t {
            rows.entry(*i).or_insert_with(|| zero_vec(n))[*j] = c.clone();
        }
        // u_l = Σ_i coord_l(row_i) e_i
        let mut legs: Vec<Vector<F>> = vec![zero_vec(n); m];
        for (i, row) in rows {
            let c = frame.coordinates(&row).ok_or_else(|| BosonizeError::SecondLeg(a.format_vec(b)))?;
            for (l, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    legs[l][i] += &v;
                }
            }
        }
        for (l, u) in legs.into_iter().enumerate() {
            if u.iter().all(|x| x.is_zero()) {
                continue;
            }
            let u = if parity[l] == 1 { a.mul(&u, g) } else { u };
            let c = coords(&u, "the first leg of the induced coproduct")?;
            for (i, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    comult.push((i, l, k, v));
                }
            }
        }
    }
    let mut antipode = Matrix::zeros(m, m);
    for (k, b) in vectors.iter().enumerate() {
        let mut s = a.apply_antipode(b);
        if parity[k] == 1 {
            s = a.mul(&s, g).into_iter().map(|x| -x).collect();
        }
        for (i, v) in coords(&s, "the induced antipode")?.into_iter().enumerate() {
            antipode.set(i, k, v);
        }
    }
    let parts = Parts {
        labels: vectors.iter().map(|v| a.format_vec(v)).collect(),
        parity,
        mult,
        unit: coords(a.unit(), "the unit")?,
        comult,
        counit: vectors.iter().map(|v| a.counit_of(v)).collect(),
        antipode: Some(antipode),
        conductor: a.conductor(),
    };
    let hopf = HopfSuperAlgebra::from_parts(parts)?;
    Ok(Coinvariants { hopf, inclusion: LinearMap::from_images(&vectors, n) })
}

/// Whether the subalgebra generated by `gens` is the whole coinvariant space.
pub fn generation_check<F: RootField>(a: &HopfSuperAlgebra<F>, d: &SuperDatum<F>, gens: &[Vector<F>]) -> bool {
    let carrier = coinvariant_space(a, &d.alpha_values);
    generated_subalgebra(a, gens) == carrier
}

/// h⊗σ^i ↦ h g^i from the bosonization of the coinvariants back to A,
/// verified as a Hopf isomorphism.
pub fn roundtrip_iso<F: RootField>(
    a: &HopfSuperAlgebra<F>,
    d: &SuperDatum<F>,
) -> Result<(LinearMap<F>, Coinvariants<F>), BosonizeError> {
    let co = coinvariants(a, d)?;
    let b = bosonize(&co.hopf);
    let m = co.hopf.dim();
    let images: Vec<Vector<F>> = (0..2 * m)
        .map(|x| {
            let h = co.inclusion.image_of_basis(x % m);
            if x < m {
                h
            } else {
                a.mul(&h, &d.g_vec)
            }
        })
        .collect();
    let f = LinearMap::from_images(&images, a.dim());
    check_morphism(&b.result, a, &f, true)
        .map_err(|e| BosonizeError::Morphism { what: "round trip", detail: e.to_string() })?;
    Ok((f, co))
}

#[derive(Clone, Debug, Serialize)]
pub struct BosonizationSummary {
    pub source_dim: usize,
    pub dim: usize,
    pub commutative: bool,
    pub cocommutative: bool,
}

pub fn summary<F: Field>(rec: &BosonizationRecord<F>) -> BosonizationSummary {
    BosonizationSummary {
        source_dim: rec.source.dim(),
        dim: rec.result.dim(),
        commutative: crate::hopfcore::is_commutative(&rec.result),
        cocommutative: crate::hopfcore::is_cocommutative(&rec.result),
    }
}
