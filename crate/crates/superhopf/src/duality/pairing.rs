use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use super::dual;
use crate::analysis::convolve;
use crate::bosonize::bosonize;
use crate::catalog::{presentation::extend_generator_map, Presented};
use crate::field::{Field, RootField};
use crate::hopfcore::{check_morphism, HopfSuperAlgebra};
use crate::linalg::{LinearMap, Matrix, Vector};

#[derive(Debug, Error)]
pub enum PairingError {
    #[error("{0} has no presentation")]
    NoPresentation(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("pairing matrix has shape {0}x{1}, expected {2}x{3}")]
    Shape(usize, usize, usize, usize),
    #[error("induced map: {0}")]
    Morphism(String),
}

/// Which of the pairing identities hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingStatus {
    pub parity: bool,
    /// ⟨xy, a⟩ = ⟨x, a_1⟩⟨y, a_2⟩
    pub product_left: bool,
    /// ⟨x, ab⟩ = ⟨x_1, a⟩⟨x_2, b⟩
    pub product_right: bool,
    /// ⟨1, a⟩ = ε(a)
    pub unit_left: bool,
    /// ⟨x, 1⟩ = ε(x)
    pub unit_right: bool,
    pub hopf_pairing: bool,
    pub non_degenerate: bool,
    pub failure: Option<String>,
}

/// ⟨e_i, f_j⟩ = matrix[i][j] between the bases of `left` and `right`.
#[derive(Clone, Debug)]
pub struct HopfPairing<F> {
    pub left: HopfSuperAlgebra<F>,
    pub right: HopfSuperAlgebra<F>,
    pub matrix: Matrix<F>,
    pub status: PairingStatus,
}

impl<F: Field> HopfPairing<F> {
    pub fn new(left: HopfSuperAlgebra<F>, right: HopfSuperAlgebra<F>, matrix: Matrix<F>) -> Result<Self, PairingError> {
        if matrix.rows != left.dim() || matrix.cols != right.dim() {
            return Err(PairingError::Shape(matrix.rows, matrix.cols, left.dim(), right.dim()));
        }
        let status = verify_hopf_pairing(&left, &right, &matrix);
        Ok(HopfPairing { left, right, matrix, status })
    }
}

/// Checks every identity exactly on basis elements.
pub fn verify_hopf_pairing<F: Field>(
    h: &HopfSuperAlgebra<F>,
    a: &HopfSuperAlgebra<F>,
    m: &Matrix<F>,
) -> PairingStatus {
    let (n, k) = (h.dim(), a.dim());
    let mut failure = None;
    let mut note = |what: String| {
        if failure.is_none() {
            failure = Some(what);
        }
    };
    let parity = (0..n).all(|i| (0..k).all(|j| h.parity_of(i) == a.parity_of(j) || m.get(i, j).is_zero()));
    if !parity {
        note("pairing mixes parities".into());
    }
    let mut product_left = true;
    'pl: for x in 0..n {
        for y in 0..n {
            for f in 0..k {
                let mut lhs = F::zero();
                for (l, c) in h.mult_basis(x, y) {
                    lhs.add_mul(c, m.get(*l, f));
                }
                let mut rhs = F::zero();
                for (p, q, d) in a.comult_basis(f) {
                    rhs.add_mul(d, &m.get(x, *p).mul_ref(m.get(y, *q)));
                }
                if lhs != rhs {
                    product_left = false;
                    note(format!("⟨{}·{}, {}⟩", h.label(x), h.label(y), a.label(f)));
                    break 'pl;
                }
            }
        }
    }
    let mut product_right = true;
    'pr: for x in 0..n {
        for f in 0..k {
            for g in 0..k {
                let mut lhs = F::zero();
                for (l, c) in a.mult_basis(f, g) {
                    lhs.add_mul(c, m.get(x, *l));
                }
                let mut rhs = F::zero();
                for (p, q, d) in h.comult_basis(x) {
                    rhs.add_mul(d, &m.get(*p, f).mul_ref(m.get(*q, g)));
                }
                if lhs != rhs {
                    product_right = false;
                    note(format!("⟨{}, {}·{}⟩", h.label(x), a.label(f), a.label(g)));
                    break 'pr;
                }
            }
        }
    }
    let unit_left = m.apply_left(h.unit()) == *a.counit();
    if !unit_left {
        note("⟨1, a⟩ ≠ ε(a)".into());
    }
    let unit_right = m.apply(a.unit()) == *h.counit();
    if !unit_right {
        note("⟨x, 1⟩ ≠ ε(x)".into());
    }
    let non_degenerate = n == k && m.rank() == n;
    PairingStatus {
        parity,
        product_left,
        product_right,
        unit_left,
        unit_right,
        hopf_pairing: parity && product_left && product_right && unit_left && unit_right,
        non_degenerate,
        failure,
    }
}

/// x ↦ ⟨x, −⟩ as a map into the dual of the right algebra, checked as a
/// Hopf map (and as an isomorphism when the pairing is non-degenerate).
pub fn pairing_to_morphism<F: Field>(p: &HopfPairing<F>) -> Result<LinearMap<F>, PairingError> {
    let k = p.right.dim();
    let images: Vec<Vector<F>> = (0..p.left.dim()).map(|i| p.matrix.row(i).to_vec()).collect();
    let f = LinearMap::from_images(&images, k);
    check_morphism(&p.left, &dual(&p.right), &f, p.status.non_degenerate)
        .map_err(|e| PairingError::Morphism(e.to_string()))?;
    Ok(f)
}

/// The canonical H → H^** is the identity in dual bases; checked.
pub fn evaluation_iso<F: Field>(h: &HopfSuperAlgebra<F>) -> Result<(), PairingError> {
    check_morphism(h, &dual(&dual(h)), &LinearMap::identity(h.dim()), true)
        .map_err(|e| PairingError::Morphism(e.to_string()))
}

/// (f⊗σ^i, h⊗σ^j) ↦ (−1)^{ij} f(h) between bosonize(H^*) and bosonize(H).
pub fn bosonization_duality<F: Field>(h: &HopfSuperAlgebra<F>) -> HopfPairing<F> {
    let n = h.dim();
    let left = bosonize(&dual(h)).result;
    let right = bosonize(h).result;
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..2 {
        for j in 0..2 {
            let s = if i * j == 1 { -F::one() } else { F::one() };
            for a in 0..n {
                m.set(i * n + a, j * n + a, s.clone());
            }
        }
    }
    HopfPairing::new(left, right, m).expect("square by construction")
}

/// A pairing fixed by its values on generators. Group generators of the
/// left algebra act as characters of the right one, skew generators z
/// (Δz = u⊗z + z⊗1) as twisted derivations f_z(ab) = f_u(a) f_z(b) + f_z(a) ε(b).
/// Unlisted generator pairs pair to zero.
pub fn pairing_from_generators<F: RootField>(
    left: &Presented<F>,
    right: &Presented<F>,
    values: &[(String, String, F)],
) -> Result<HopfPairing<F>, PairingError> {
    let pl = left.presentation.as_ref().ok_or_else(|| PairingError::NoPresentation(left.name.clone()))?;
    let pr = right.presentation.as_ref().ok_or_else(|| PairingError::NoPresentation(right.name.clone()))?;
    let r = &right.hopf;
    let k = r.dim();
    let left_names: Vec<&str> =
        pl.group.names.iter().map(|s| s.as_str()).chain(pl.gens.iter().map(|g| g.name.as_str())).collect();
    let right_names: Vec<&str> =
        pr.group.names.iter().map(|s| s.as_str()).chain(pr.gens.iter().map(|g| g.name.as_str())).collect();
    let mut table: HashMap<(usize, usize), F> = HashMap::new();
    for (a, b, v) in values {
        let i = left_names.iter().position(|x| x == a).ok_or_else(|| PairingError::UnknownGenerator(a.clone()))?;
        let j = right_names.iter().position(|x| x == b).ok_or_else(|| PairingError::UnknownGenerator(b.clone()))?;
        table.insert((i, j), v.clone());
    }
    let val = |i: usize, j: usize| table.get(&(i, j)).cloned().unwrap_or_else(F::zero);
    let rank_r = pr.group.rank();
    // letters of a PBW basis element of the right algebra, as generator indices
    let letters = |idx: usize| -> Vec<usize> {
        let (g, a) = pr.split(idx);
        let mut w = vec![];
        for (j, &e) in pr.group.element(g).iter().enumerate() {
            w.extend(std::iter::repeat_n(j, e as usize));
        }
        for (i, &e) in a.iter().enumerate() {
            w.extend(std::iter::repeat_n(rank_r + i, e));
        }
        w
    };
    let letter_index = |l: usize| -> usize {
        if l < rank_r {
            pr.index(pr.group.index(&pr.group.generator(l)), &vec![0; pr.theta()])
        } else {
            let mut a = vec![0; pr.theta()];
            a[l - rank_r] = 1;
            pr.index(0, &a)
        }
    };
    // index of the word after dropping its first letter
    let tail = |idx: usize| -> usize {
        let (g, mut a) = pr.split(idx);
        let mut e = pr.group.element(g);
        if let Some(j) = e.iter().position(|&x| x > 0) {
            e[j] -= 1;
            return pr.index(pr.group.index(&e), &a);
        }
        let i = a.iter().position(|&x| x > 0).expect("nonempty word");
        a[i] -= 1;
        pr.index(g, &a)
    };
    let word_product = |gen_vals: &dyn Fn(usize) -> F| -> Vector<F> {
        (0..k).map(|idx| letters(idx).iter().fold(F::one(), |acc, &l| acc.mul_ref(&gen_vals(l)))).collect()
    };
    let group_chars: Vec<Vector<F>> = (0..pl.group.rank()).map(|i| word_product(&|l| val(i, l))).collect();
    let char_of = |h: usize| -> Vector<F> {
        let mut acc = r.counit().clone();
        for (j, &e) in pl.group.element(h).iter().enumerate() {
            for _ in 0..e {
                acc = convolve(r, &acc, &group_chars[j]);
            }
        }
        acc
    };
    let rank_l = pl.group.rank();
    let mut skew_funcs = vec![];
    for (zi, z) in pl.gens.iter().enumerate() {
        let fu = char_of(z.loc);
        let mut f = vec![F::zero(); k];
        // words by length so tails are known first
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| letters(i).len());
        for idx in order {
            let w = letters(idx);
            if w.is_empty() {
                continue;
            }
            let first = letter_index(w[0]);
            let t = tail(idx);
            let mut v = fu[first].mul_ref(&f[t]);
            v.add_mul(&val(rank_l + zi, w[0]), &r.counit()[t]);
            f[idx] = v;
        }
        skew_funcs.push(f);
    }
    let d = dual(r);
    let images = extend_generator_map(pl, k, r.counit(), |x, y| d.mul(x, y), &group_chars, &skew_funcs);
    let m = Matrix::from_rows(images, k);
    HopfPairing::new(left.hopf.clone(), r.clone(), m)
}
