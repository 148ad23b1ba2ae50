//! Group-likes, characters, admissible and super data, skew-primitives,
//! pointedness and isomorphism invariants.

mod fingerprint;
mod groups;

pub use fingerprint::{fingerprint, fingerprints_equal, EigenBlock, Fingerprint, SkewBlock};
pub use groups::{abelian_invariants, GroupLikes};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::SkewPresentation;
use crate::field::{Field, RootField};
use crate::hopfcore::{
    center, is_commutative, jacobson_radical, semisimple_abelian_rank, Algebra, HopfSuperAlgebra, MultTable,
};
use crate::linalg::{unit_vec, zero_vec, Matrix, Subspace, Vector};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("found {found} {what} but the commutative quotient predicts {expected}: field too small or candidate set insufficient")]
    Certificate { what: &'static str, found: usize, expected: usize },
    #[error("super-datum routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("{0}")]
    Precondition(String),
}

/// An algebra map H → 𝕜, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Character<F> {
    pub values: Vector<F>,
    /// Values on the presentation generators (group, then skew), if known.
    pub on_generators: Option<Vec<F>>,
}

impl<F: Field> Character<F> {
    pub fn eval(&self, a: &[F]) -> F {
        crate::linalg::dot(&self.values, a)
    }

    pub fn is_counit(&self, h: &HopfSuperAlgebra<F>) -> bool {
        self.values == *h.counit()
    }
}

/// Convolution f*g of two functionals: (f*g)(a) = f(a_1) g(a_2).
pub fn convolve<F: Field>(h: &HopfSuperAlgebra<F>, f: &[F], g: &[F]) -> Vector<F> {
    (0..h.dim())
        .map(|k| {
            let mut s = F::zero();
            for (i, j, d) in h.comult_basis(k) {
                if !f[*i].is_zero() && !g[*j].is_zero() {
                    s.add_mul(d, &f[*i].mul_ref(&g[*j]));
                }
            }
            s
        })
        .collect()
}

/// Roots of unity of order dividing 2N together with 0.
fn candidate_values<F: RootField>(conductor: u64) -> Vec<F> {
    let n = 2 * conductor.max(1);
    let mut out = vec![F::zero()];
    out.extend((0..n as i64).filter_map(|k| F::zeta(n, k)));
    out
}

fn is_multiplicative<F: Field>(h: &HopfSuperAlgebra<F>, v: &[F]) -> bool {
    if crate::linalg::dot(v, h.unit()) != F::one() {
        return false;
    }
    let n = h.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let mut s = F::zero();
            for (k, c) in h.mult_basis(i, j) {
                s.add_mul(c, &v[*k]);
            }
            s == v[i].mul_ref(&v[j])
        })
    })
}

/// Basis elements generating H as an algebra, chosen greedily.
pub fn algebra_generators<F: Field, A: MultTable<F>>(a: &A) -> Vec<usize> {
    let n = a.dim();
    let mut gens: Vec<usize> = vec![];
    let mut span = crate::hopfcore::generated_subalgebra(a, &[]);
    for i in 0..n {
        if span.dim() == n {
            break;
        }
        if !span.contains(&unit_vec(n, i)) {
            gens.push(i);
            let vs: Vec<Vector<F>> = gens.iter().map(|&g| unit_vec(n, g)).collect();
            span = crate::hopfcore::generated_subalgebra(a, &vs);
        }
    }
    gens
}

/// Characters found as common eigen-covectors of right multiplication by
/// a generating set, restricted to covectors vanishing on H_1.
fn characters_by_eigenvectors<F: RootField>(h: &HopfSuperAlgebra<F>) -> Vec<Character<F>> {
    let n = h.dim();
    let gens = algebra_generators(h);
    let cands = candidate_values::<F>(h.conductor());
    // α(x e_g) = λ α(x): α is a left eigenvector of R_g, R_g[k][x] = coeff of e_k in e_x e_g
    let right: Vec<Matrix<F>> = gens
        .iter()
        .map(|&g| {
            let cols: Vec<Vector<F>> = (0..n).map(|x| h.mul(&unit_vec(n, x), &unit_vec(n, g))).collect();
            Matrix::from_columns(&cols, n)
        })
        .collect();
    let start: Vec<Vector<F>> = (0..n).filter(|&i| h.parity_of(i) == 0).map(|i| unit_vec(n, i)).collect();
    let mut level = vec![start];
    for r in &right {
        let next: Vec<Vec<Vector<F>>> = level
            .par_iter()
            .flat_map_iter(|w| {
                cands
                    .iter()
                    .filter_map(|lam| {
                        // rows c of W with (cW)(R − λ) = 0
                        let wr: Vec<Vector<F>> = w
                            .iter()
                            .map(|row| {
                                let mut v = r.apply_left(row);
                                for (a, b) in v.iter_mut().zip(row) {
                                    *a -= &lam.mul_ref(b);
                                }
                                v
                            })
                            .collect();
                        let m = Matrix::from_rows(wr, n).transpose();
                        let ker = m.kernel();
                        if ker.is_empty() {
                            return None;
                        }
                        Some(
                            ker.iter()
                                .map(|c| {
                                    let mut v = zero_vec(n);
                                    for (ci, row) in c.iter().zip(w) {
                                        crate::linalg::axpy(&mut v, ci, row);
                                    }
                                    v
                                })
                                .collect::<Vec<_>>(),
                        )
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        level = next;
    }
    let mut out: Vec<Character<F>> = level
        .into_iter()
        .flat_map(|w| w.into_iter())
        .filter_map(|v| {
            let at_one = crate::linalg::dot(&v, h.unit());
            let inv = at_one.inv()?;
            let v = crate::linalg::scale(&inv, &v);
            is_multiplicative(h, &v).then_some(Character { values: v, on_generators: None })
        })
        .collect();
    sort_characters(&mut out);
    out.dedup();
    out
}

fn sort_characters<F: Field>(v: &mut [Character<F>]) {
    v.sort_by_cached_key(|c| c.values.iter().map(|x| x.to_string()).collect::<Vec<_>>());
}

/// Characters from a presentation: candidate values on generators, the
/// skew ones forced to 0 when their conjugation character is nontrivial.
fn characters_by_presentation<F: RootField>(h: &HopfSuperAlgebra<F>, p: &SkewPresentation<F>) -> Vec<Character<F>> {
    let group = &p.group;
    let cands = candidate_values::<F>(h.conductor());
    let mut grids: Vec<Vec<F>> = group
        .factors
        .iter()
        .map(|&n| (0..n as i64).map(|k| F::zeta(n, k).expect("cyclotomic")).collect())
        .collect();
    for g in &p.gens {
        if g.parity == 1 || !group.char_is_trivial(&g.conj) {
            grids.push(vec![F::zero()]);
        } else {
            grids.push(cands.clone());
        }
    }
    let total: usize = grids.iter().map(|g| g.len()).product();
    let rank = group.rank();
    let mut out: Vec<Character<F>> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let vals: Vec<F> = grids
                .iter()
                .map(|g| {
                    let v = g[code % g.len()].clone();
                    code /= g.len();
                    v
                })
                .collect();
            let on_group = |idx: usize| -> F {
                let e = group.element(idx);
                e.iter().enumerate().fold(F::one(), |acc, (i, &k)| acc.mul_ref(&vals[i].pow(k)))
            };
            // power relations x^P = Σ c u_h
            for (i, g) in p.gens.iter().enumerate() {
                let lhs = vals[rank + i].pow(g.power as u64);
                let mut rhs = F::zero();
                for (hidx, c) in &g.power_value {
                    rhs.add_mul(c, &on_group(*hidx));
                }
                if lhs != rhs {
                    return None;
                }
            }
            let values: Vector<F> = (0..h.dim())
                .map(|idx| {
                    let (gi, a) = p.split(idx);
                    a.iter()
                        .enumerate()
                        .fold(on_group(gi), |acc, (i, &e)| acc.mul_ref(&vals[rank + i].pow(e as u64)))
                })
                .collect();
            is_multiplicative(h, &values).then_some(Character { values, on_generators: Some(vals) })
        })
        .collect();
    sort_characters(&mut out);
    out
}

/// All characters of H with the completeness certificate
/// #characters = dim(B̄/J(B̄)), B̄ = H/⟨H_1, [H,H]⟩.
pub fn characters<F: RootField>(
    h: &HopfSuperAlgebra<F>,
    p: Option<&SkewPresentation<F>>,
) -> Result<Vec<Character<F>>, AnalysisError> {
    let found = match p {
        Some(p) if p.dim() == h.dim() => characters_by_presentation(h, p),
        _ => characters_by_eigenvectors(h),
    };
    let expected = semisimple_abelian_rank(h);
    if found.len() != expected {
        return Err(AnalysisError::Certificate { what: "characters", found: found.len(), expected });
    }
    Ok(found)
}

/// The group-likes of H, computed as the characters of H^*.
pub fn grouplikes<F: RootField>(h: &HopfSuperAlgebra<F>) -> Result<GroupLikes<F>, AnalysisError> {
    let d = crate::duality::dual(h);
    let chars = characters(&d, None).map_err(|e| match e {
        AnalysisError::Certificate { found, expected, .. } => {
            AnalysisError::Certificate { what: "group-likes", found, expected }
        }
        e => e,
    })?;
    let elements: Vec<Vector<F>> = chars.into_iter().map(|c| c.values).collect();
    for g in &elements {
        debug_assert!(h.comult(g) == crate::hopfcore::tensor_of(g, g));
    }
    Ok(GroupLikes::new(h, elements))
}

/// (g, α) with its admissibility and super flags.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuperDatum<F> {
    /// Index into the group-likes.
    pub g: usize,
    pub g_label: String,
    pub g_vec: Vector<F>,
    /// Index into the character list.
    pub alpha: usize,
    pub alpha_values: Vector<F>,
    pub admissible: bool,
    #[serde(rename = "super")]
    pub is_super: bool,
}

fn require_even<F: Field>(h: &HopfSuperAlgebra<F>) -> Result<(), AnalysisError> {
    if h.is_purely_even() {
        Ok(())
    } else {
        Err(AnalysisError::Precondition("admissible data are defined for ordinary Hopf algebras".into()))
    }
}

/// g² = 1, α² = ε, α(g) = −1, enumerated over G(A) × characters.
pub fn admissible_from<F: RootField>(
    h: &HopfSuperAlgebra<F>,
    gl: &GroupLikes<F>,
    chars: &[Character<F>],
) -> Vec<SuperDatum<F>> {
    let mut out = vec![];
    let involutions: Vec<usize> = (0..gl.len()).filter(|&i| gl.orders[i] == 2).collect();
    for (ai, a) in chars.iter().enumerate() {
        if convolve(h, &a.values, &a.values) != *h.counit() {
            continue;
        }
        for &gi in &involutions {
            if a.eval(&gl.elements[gi]) == -F::one() {
                out.push(SuperDatum {
                    g: gi,
                    g_label: gl.labels[gi].clone(),
                    g_vec: gl.elements[gi].clone(),
                    alpha: ai,
                    alpha_values: a.values.clone(),
                    admissible: true,
                    is_super: false,
                });
            }
        }
    }
    out.sort_by_key(|d| (d.g, d.alpha));
    out
}

pub fn admissible_data<F: RootField>(
    h: &HopfSuperAlgebra<F>,
    p: Option<&SkewPresentation<F>>,
) -> Result<Vec<SuperDatum<F>>, AnalysisError> {
    require_even(h)?;
    let gl = grouplikes(h)?;
    let chars = characters(h, p)?;
    Ok(admissible_from(h, &gl, &chars))
}

/// b ↦ b_1 α(b_2) as a matrix.
pub fn hit_right<F: Field>(h: &HopfSuperAlgebra<F>, alpha: &[F]) -> Matrix<F> {
    let n = h.dim();
    let mut m = Matrix::<F>::zeros(n, n);
    for k in 0..n {
        for (i, j, d) in h.comult_basis(k) {
            if !alpha[*j].is_zero() {
                let mut v = m.get(*i, k).clone();
                v.add_mul(d, &alpha[*j]);
                m.set(*i, k, v);
            }
        }
    }
    m
}

/// b ↦ α(b_1) b_2 as a matrix.
pub fn hit_left<F: Field>(h: &HopfSuperAlgebra<F>, alpha: &[F]) -> Matrix<F> {
    let n = h.dim();
    let mut m = Matrix::<F>::zeros(n, n);
    for k in 0..n {
        for (i, j, d) in h.comult_basis(k) {
            if !alpha[*i].is_zero() {
                let mut v = m.get(*j, k).clone();
                v.add_mul(d, &alpha[*i]);
                m.set(*j, k, v);
            }
        }
    }
    m
}

/// b ↦ g b g.
pub fn conjugation<F: Field>(h: &HopfSuperAlgebra<F>, g: &[F]) -> Matrix<F> {
    let n = h.dim();
    let cols: Vec<Vector<F>> = (0..n).map(|i| h.mul(&h.mul(g, &unit_vec(n, i)), g)).collect();
    Matrix::from_columns(&cols, n)
}

fn is_central<F: Field>(h: &HopfSuperAlgebra<F>, g: &[F]) -> bool {
    let n = h.dim();
    (0..n).all(|i| {
        let e = unit_vec(n, i);
        h.mul(g, &e) == h.mul(&e, g)
    })
}

/// The basis route: g ∉ Z(A) and α⇀a↼α = gag for every basis element.
pub fn is_super_generic<F: Field>(h: &HopfSuperAlgebra<F>, g: &[F], alpha: &[F]) -> bool {
    !is_central(h, g) && hit_left(h, alpha).mul(&hit_right(h, alpha)) == conjugation(h, g)
}

/// The presentation route: for g = u_h, g ∉ Z(A) iff some χ_i(h) ≠ 1, and
/// g x_i g = α(u_{loc_i}) x_i reads χ_i(h) = α(u_{loc_i}).
pub fn is_super_presented<F: RootField>(p: &SkewPresentation<F>, h_idx: usize, alpha: &[F]) -> bool {
    let group = &p.group;
    let el = group.element(h_idx);
    let vals: Vec<F> = p.gens.iter().map(|x| group.char_value::<F>(&x.conj, &el)).collect();
    if vals.iter().all(|v| v.is_one()) {
        return false;
    }
    p.gens.iter().zip(&vals).all(|(x, v)| *v == alpha[p.index(x.loc, &vec![0; p.theta()])])
}

/// The group index h when g = u_h is a PBW monomial of the presentation.
fn as_group_element<F: RootField>(p: &SkewPresentation<F>, g: &[F]) -> Option<usize> {
    let idx = HopfSuperAlgebra::as_basis_index(g)?;
    if !g[idx].is_one() {
        return None;
    }
    let (gi, a) = p.split(idx);
    a.iter().all(|&e| e == 0).then_some(gi)
}

/// Super-data among the admissible ones; with a presentation both routes
/// are run and must agree.
pub fn super_from<F: RootField>(
    h: &HopfSuperAlgebra<F>,
    p: Option<&SkewPresentation<F>>,
    admissible: &[SuperDatum<F>],
) -> Result<Vec<SuperDatum<F>>, AnalysisError> {
    let p = p.filter(|p| p.dim() == h.dim() && p.coproduct.is_none());
    let mut out = vec![];
    for d in admissible {
        let generic = is_super_generic(h, &d.g_vec, &d.alpha_values);
        if let Some(p) = p {
            if let Some(hidx) = as_group_element(p, &d.g_vec) {
                let pres = is_super_presented(p, hidx, &d.alpha_values);
                if pres != generic {
                    return Err(AnalysisError::RouteDisagreement(format!(
                        "({}, α#{}): basis check {} vs presentation check {}",
                        d.g_label, d.alpha, generic, pres
                    )));
                }
            }
        }
        if generic {
            let mut d = d.clone();
            d.is_super = true;
            out.push(d);
        }
    }
    Ok(out)
}

pub fn super_data<F: RootField>(
    h: &HopfSuperAlgebra<F>,
    p: Option<&SkewPresentation<F>>,
) -> Result<Vec<SuperDatum<F>>, AnalysisError> {
    let ad = admissible_data(h, p)?;
    super_from(h, p, &ad)
}

/// {z ∈ H_ε : Δ(z) = γ⊗z + z⊗1}.
pub fn skew_primitives<F: Field>(h: &HopfSuperAlgebra<F>, gamma: &[F], eps: u8) -> Subspace<F> {
    let n = h.dim();
    let cols: Vec<usize> = (0..n).filter(|&i| h.parity_of(i) == eps as usize).collect();
    let mut keys = std::collections::BTreeMap::new();
    let tensors: Vec<_> = cols
        .iter()
        .map(|&k| {
            let e = unit_vec(n, k);
            let mut t = h.comult(&e);
            let mut rhs = crate::hopfcore::tensor_of(gamma, &e);
            for (key, v) in crate::hopfcore::tensor_of(&e, h.unit()) {
                crate::hopfcore::tensor_add(&mut rhs, key, v);
            }
            t = crate::hopfcore::tensor_sub(&t, &rhs);
            for key in t.keys() {
                let len = keys.len();
                keys.entry(*key).or_insert(len);
            }
            t
        })
        .collect();
    let mut m = Matrix::zeros(keys.len(), cols.len());
    for (c, t) in tensors.iter().enumerate() {
        for (key, v) in t {
            m.set(keys[key], c, v.clone());
        }
    }
    let ker = m.kernel();
    Subspace::span(
        n,
        ker.into_iter().map(|coef| {
            let mut v = zero_vec(n);
            for (c, &k) in coef.iter().zip(&cols) {
                v[k] = c.clone();
            }
            v
        }),
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointedReport {
    pub pointed: bool,
    pub semisimple: bool,
    /// dim B/J(B) for B = (Ĥ)^*.
    pub dual_quotient_dim: usize,
    /// dim J(Ĥ).
    pub radical_dim: usize,
}

/// Pointedness and semisimplicity through the bosonization: H is pointed
/// iff B/J(B) is commutative for B = (Ĥ)^*, semisimple iff J(Ĥ) = 0.
pub fn pointed_report<F: RootField>(h: &HopfSuperAlgebra<F>) -> PointedReport {
    let hat = crate::bosonize::bosonize(h).result;
    let b = crate::duality::dual(&hat);
    let j = jacobson_radical(&b);
    let quot = Algebra::quotient(&b, &j);
    let radical_dim = jacobson_radical(&hat).dim();
    PointedReport { pointed: is_commutative(&quot), semisimple: radical_dim == 0, dual_quotient_dim: quot.dim(), radical_dim }
}

pub fn is_pointed<F: RootField>(h: &HopfSuperAlgebra<F>) -> bool {
    pointed_report(h).pointed
}

pub fn is_semisimple<F: RootField>(h: &HopfSuperAlgebra<F>) -> bool {
    jacobson_radical(&crate::bosonize::bosonize(h).result).dim() == 0
}

pub fn center_dim<F: Field>(h: &HopfSuperAlgebra<F>) -> usize {
    center(h).dim()
}
