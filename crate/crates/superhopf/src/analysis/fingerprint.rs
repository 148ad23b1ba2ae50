//! Isomorphism invariants. Unequal fingerprints certify non-isomorphism;
//! equal ones prove nothing.

use serde::Serialize;

use super::groups::group_isomorphisms;
use super::{grouplikes, skew_primitives, AnalysisError, GroupLikes};
use crate::field::RootField;
use crate::hopfcore::{center, jacobson_radical, power_filtration, HopfSuperAlgebra};
use crate::linalg::{is_zero_vec, sub_vec, Matrix, Subspace, Vector};

/// One joint eigenspace of the conjugation action of G(H) on P'_{γ,ε}.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenBlock<F> {
    /// χ(u) for each group-like u, in the order of the group-like list.
    pub character: Vec<F>,
    pub multiplicity: usize,
    /// For a line spanned by z with N = ord((−1)^ε χ(γ)) > 1: whether z^N = 0.
    pub nilpotent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkewBlock<F> {
    pub gamma: usize,
    pub gamma_label: String,
    pub parity: u8,
    /// dim of (γ-skew primitives of parity ε)/𝕜(γ−1).
    pub dim: usize,
    /// Empty when G(H) is not abelian.
    pub eigen: Vec<EigenBlock<F>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fingerprint<F> {
    pub dim: usize,
    pub parity_dims: (usize, usize),
    pub group_order: usize,
    pub group_abelian: bool,
    pub invariant_factors: Vec<u64>,
    pub radical_filtration: Vec<usize>,
    pub center_dim: usize,
    pub skew: Vec<SkewBlock<F>>,
    #[serde(skip)]
    group_table: Vec<Vec<usize>>,
    #[serde(skip)]
    group_identity: usize,
    #[serde(skip)]
    group_orders: Vec<u64>,
}

fn eigen_blocks<F: RootField>(
    h: &HopfSuperAlgebra<F>,
    gl: &GroupLikes<F>,
    space: &Subspace<F>,
) -> Vec<(Vec<F>, Subspace<F>)> {
    let n = h.dim();
    // conjugation u z u^{-1}
    let ops: Vec<Matrix<F>> = (0..gl.len())
        .map(|u| {
            let inv = &gl.elements[gl.inverse(u)];
            let cols: Vec<Vector<F>> =
                space.basis().iter().map(|z| h.mul(&h.mul(&gl.elements[u], z), inv)).collect();
            Matrix::from_columns(&cols, n)
        })
        .collect();
    let mut blocks: Vec<(Vec<F>, Subspace<F>)> = vec![(vec![], space.clone())];
    for (u, op) in ops.iter().enumerate() {
        let order = gl.orders[u];
        let mut next = vec![];
        for (vals, sub) in blocks {
            for k in 0..order as i64 {
                let lam = F::zeta(order, k).expect("cyclotomic");
                // kernel of (conj_u − λ) on sub, computed in ambient coordinates
                let coords: Vec<Vector<F>> = sub
                    .basis()
                    .iter()
                    .map(|v| {
                        let c = space.coordinates(v).expect("inside space");
                        let img = op.apply(&c);
                        sub_vec(&img, &crate::linalg::scale(&lam, v))
                    })
                    .collect();
                let m = Matrix::from_columns(&coords, n);
                let ker = m.kernel();
                if ker.is_empty() {
                    continue;
                }
                let vecs = ker.into_iter().map(|c| {
                    let mut v = crate::linalg::zero_vec(n);
                    for (ci, b) in c.iter().zip(sub.basis()) {
                        crate::linalg::axpy(&mut v, ci, b);
                    }
                    v
                });
                let mut nv = vals.clone();
                nv.push(lam);
                next.push((nv, Subspace::span(n, vecs)));
            }
        }
        blocks = next;
    }
    blocks
}

pub fn fingerprint<F: RootField>(h: &HopfSuperAlgebra<F>) -> Result<Fingerprint<F>, AnalysisError> {
    let n = h.dim();
    let gl = grouplikes(h)?;
    let j = jacobson_radical(h);
    let mut skew = vec![];
    for (gi, gamma) in gl.elements.iter().enumerate() {
        for eps in 0..2u8 {
            let p = skew_primitives(h, gamma, eps);
            let trivial = sub_vec(gamma, h.unit());
            let has_trivial = eps == 0 && !is_zero_vec(&trivial);
            let dim = p.dim() - usize::from(has_trivial);
            if dim == 0 {
                continue;
            }
            let mut eigen = vec![];
            if gl.abelian {
                for (character, sub) in eigen_blocks(h, &gl, &p) {
                    let is_trivial_char = character.iter().all(|x| x.is_one());
                    let mult = sub.dim() - usize::from(has_trivial && is_trivial_char);
                    if mult == 0 {
                        continue;
                    }
                    let mut nilpotent = None;
                    if mult == 1 && !(has_trivial && is_trivial_char) {
                        let z = &sub.basis()[0];
                        let mut q = character[gi].clone();
                        if eps == 1 {
                            q = -q;
                        }
                        if let Some(order) = q.unity_order().filter(|&o| o > 1) {
                            nilpotent = Some(is_zero_vec(&h.pow(z, order as usize)));
                        }
                    }
                    eigen.push(EigenBlock { character, multiplicity: mult, nilpotent });
                }
            }
            skew.push(SkewBlock { gamma: gi, gamma_label: gl.labels[gi].clone(), parity: eps, dim, eigen });
        }
    }
    Ok(Fingerprint {
        dim: n,
        parity_dims: h.parity_dims(),
        group_order: gl.len(),
        group_abelian: gl.abelian,
        invariant_factors: gl.invariant_factors.clone(),
        radical_filtration: power_filtration(h, &j),
        center_dim: center(h).dim(),
        skew,
        group_table: gl.table.clone(),
        group_identity: gl.identity,
        group_orders: gl.orders.clone(),
    })
}

fn blocks_match<F: RootField>(a: &SkewBlock<F>, b: &SkewBlock<F>, phi: &[usize]) -> bool {
    if a.parity != b.parity || a.dim != b.dim || phi[a.gamma] != b.gamma || a.eigen.len() != b.eigen.len() {
        return false;
    }
    // χ_b(φ(u)) = χ_a(u)
    let mut used = vec![false; b.eigen.len()];
    for ea in &a.eigen {
        let hit = b.eigen.iter().enumerate().position(|(k, eb)| {
            !used[k]
                && ea.multiplicity == eb.multiplicity
                && ea.nilpotent == eb.nilpotent
                && (0..phi.len()).all(|u| ea.character[u] == eb.character[phi[u]])
        });
        match hit {
            Some(k) => used[k] = true,
            None => return false,
        }
    }
    true
}

/// Equality up to a group isomorphism aligning the skew-primitive data.
pub fn fingerprints_equal<F: RootField>(a: &Fingerprint<F>, b: &Fingerprint<F>) -> bool {
    if a.dim != b.dim
        || a.parity_dims != b.parity_dims
        || a.group_order != b.group_order
        || a.group_abelian != b.group_abelian
        || a.invariant_factors != b.invariant_factors
        || a.radical_filtration != b.radical_filtration
        || a.center_dim != b.center_dim
        || a.skew.len() != b.skew.len()
    {
        return false;
    }
    let isos = group_isomorphisms(
        &a.group_table,
        a.group_identity,
        &a.group_orders,
        &b.group_table,
        b.group_identity,
        &b.group_orders,
    );
    isos.iter().any(|phi| {
        a.skew.iter().all(|sa| b.skew.iter().any(|sb| sa.parity == sb.parity && blocks_match(sa, sb, phi)))
    })
}
