//! The antipode as the convolution inverse of the identity.
//!
//! Most presented algebras are triangular: Δ(e_k) contains a term e_k⊗w with
//! w invertible and every other first leg already solved. That case is
//! propagated directly; anything left over goes to one dense linear system.

use super::{HopfSuperAlgebra, StructureError};
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vec, zero_vec, Matrix, Vector};

fn inverse_element<F: Field>(h: &HopfSuperAlgebra<F>, w: &[F], cache: &mut Vec<(Vector<F>, Vector<F>)>) -> Option<Vector<F>> {
    if let Some((_, inv)) = cache.iter().find(|(k, _)| k.as_slice() == w) {
        return Some(inv.clone());
    }
    let n = h.dim();
    let one = h.one();
    // powers first: group-likes are invertible of finite order
    let mut p = w.to_vec();
    let mut prev = one.clone();
    let mut found = None;
    for _ in 0..=n {
        if p == one {
            found = Some(prev.clone());
            break;
        }
        prev = p.clone();
        p = h.mul(&p, w);
    }
    let inv = match found {
        Some(v) => v,
        None => {
            let lw = h.left_mult_matrix(w);
            let y = lw.solve(&one)?;
            if h.mul(&y, w) != one {
                return None;
            }
            y
        }
    };
    cache.push((w.to_vec(), inv.clone()));
    Some(inv)
}

/// Solves m(S⊗id)Δ = uε for S; the result is checked against the right
/// identity as well.
pub fn solve_antipode<F: Field>(h: &HopfSuperAlgebra<F>) -> Result<Matrix<F>, StructureError> {
    let n = h.dim();
    let mut solved: Vec<Option<Vector<F>>> = vec![None; n];
    let mut cache = Vec::new();
    loop {
        let mut progress = false;
        for k in 0..n {
            if solved[k].is_some() {
                continue;
            }
            let terms = h.comult_basis(k);
            if terms.iter().any(|(i, _, _)| *i != k && solved[*i].is_none()) {
                continue;
            }
            let mut w = zero_vec::<F>(n);
            let mut rhs: Vector<F> = h.unit().iter().map(|u| u.mul_ref(&h.counit()[k])).collect();
            for (i, j, d) in terms {
                if *i == k {
                    w[*j] += d;
                } else {
                    let t = h.mul(solved[*i].as_ref().unwrap(), &h.basis(*j));
                    axpy(&mut rhs, &(-d.clone()), &t);
                }
            }
            if is_zero_vec(&w) {
                continue;
            }
            let Some(winv) = inverse_element(h, &w, &mut cache) else {
                continue;
            };
            solved[k] = Some(h.mul(&rhs, &winv));
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let unknown: Vec<usize> = (0..n).filter(|k| solved[*k].is_none()).collect();
    if !unknown.is_empty() {
        dense_fill(h, &mut solved, &unknown)?;
    }
    let cols: Vec<Vector<F>> = solved.into_iter().map(|s| s.unwrap()).collect();
    let s = Matrix::from_columns(&cols, n);
    let mut probe = h.clone();
    *probe.antipode_mut() = s.clone();
    let (l, r) = super::verify::check_antipode(&probe);
    if let Some((w, d)) = l.or(r) {
        return Err(StructureError::NoAntipode(format!("{} at {:?}", d, w)));
    }
    Ok(s)
}

/// Unknown columns S(e_k), k ∈ unknown, from the left identity on every
/// basis vector whose coproduct involves them.
fn dense_fill<F: Field>(h: &HopfSuperAlgebra<F>, solved: &mut [Option<Vector<F>>], unknown: &[usize]) -> Result<(), StructureError> {
    let n = h.dim();
    let u = unknown.len();
    let pos = |k: usize| unknown.iter().position(|&x| x == k);
    let vars = u * n;
    let mut rows: Vec<Vector<F>> = Vec::new();
    let mut rhs: Vec<F> = Vec::new();
    for k in 0..n {
        let terms = h.comult_basis(k);
        if !terms.iter().any(|(i, _, _)| pos(*i).is_some()) {
            continue;
        }
        // coefficient of e_m in Σ d S(e_i) e_j
        let mut eq: Vec<Vector<F>> = vec![zero_vec(vars); n];
        let mut constant: Vector<F> = h.unit().iter().map(|x| x.mul_ref(&h.counit()[k])).collect();
        for (i, j, d) in terms {
            match pos(*i) {
                Some(p) => {
                    for a in 0..n {
                        for (m, c) in h.mult_basis(a, *j) {
                            eq[*m][p * n + a].add_mul(d, c);
                        }
                    }
                }
                None => {
                    let t = h.mul(solved[*i].as_ref().unwrap(), &h.basis(*j));
                    axpy(&mut constant, &(-d.clone()), &t);
                }
            }
        }
        for m in 0..n {
            rows.push(std::mem::take(&mut eq[m]));
            rhs.push(constant[m].clone());
        }
    }
    let mat = Matrix::from_rows(rows, vars);
    let x = mat.solve(&rhs).ok_or_else(|| StructureError::NoAntipode("convolution inverse of id does not exist".into()))?;
    if mat.rank() < vars {
        return Err(StructureError::NoAntipode("antipode equations are underdetermined".into()));
    }
    for (p, &k) in unknown.iter().enumerate() {
        solved[k] = Some(x[p * n..(p + 1) * n].to_vec());
    }
    Ok(())
}

/// Uniqueness of the convolution inverse: the homogeneous system
/// m(T⊗id)Δ = 0 has only T = 0.
pub fn antipode_is_unique<F: Field>(h: &HopfSuperAlgebra<F>) -> bool {
    let n = h.dim();
    let vars = n * n;
    let mut rows = Vec::new();
    for k in 0..n {
        let mut eq: Vec<Vector<F>> = vec![zero_vec(vars); n];
        for (i, j, d) in h.comult_basis(k) {
            for a in 0..n {
                for (m, c) in h.mult_basis(a, *j) {
                    eq[*m][*i * n + a].add_mul(d, c);
                }
            }
        }
        rows.extend(eq);
    }
    Matrix::from_rows(rows, vars).rank() == vars
}
