//! Structure-constant representation of Hopf superalgebras.
//!
//! A purely even algebra (all parities zero) is an ordinary Hopf algebra;
//! there is no separate type for it.

mod antipode;
mod structure;
mod tensor;
mod verify;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::field::Field;
use crate::linalg::{axpy, zero_vec, Matrix, Vector};

pub use antipode::{antipode_is_unique, solve_antipode};
pub use structure::{
    center, check_morphism, commutator_ideal, generated_subalgebra, ideal_closure, is_commutative,
    is_cocommutative, jacobson_radical, nilpotent_ideal_search, power_filtration, product_space,
    semisimple_abelian_rank, Algebra, MorphismFailure, MultTable,
};
pub use tensor::{tensor_product, trivial_hopf};
pub use verify::{verify_axioms, Axiom, AxiomFailure, AxiomReport};
pub(crate) use verify::check_associativity as check_associativity_witness;

/// Sparse element: sorted (index, coefficient) pairs with nonzero coefficients.
pub type Sparse<F> = Vec<(usize, F)>;

/// Element of H⊗H keyed by basis index pairs.
pub type Tensor2<F> = BTreeMap<(usize, usize), F>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StructureError {
    #[error("malformed structure at {path}: {reason}")]
    Malformed { path: String, reason: String },
    #[error("no antipode: {0}")]
    NoAntipode(String),
}

fn malformed(path: impl Into<String>, reason: impl Into<String>) -> StructureError {
    StructureError::Malformed { path: path.into(), reason: reason.into() }
}

/// Raw ingredients of a Hopf superalgebra. Without an antipode the
/// constructor solves for one.
#[derive(Clone, Debug)]
pub struct Parts<F> {
    pub labels: Vec<String>,
    pub parity: Vec<u8>,
    pub mult: Vec<(usize, usize, usize, F)>,
    pub unit: Vector<F>,
    pub comult: Vec<(usize, usize, usize, F)>,
    pub counit: Vector<F>,
    pub antipode: Option<Matrix<F>>,
    pub conductor: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfSuperAlgebra<F> {
    labels: Vec<String>,
    parity: Vec<u8>,
    mult: Vec<Vec<Sparse<F>>>,
    unit: Vector<F>,
    /// comult[k] lists (i, j, d) with Δ(e_k) = Σ d e_i⊗e_j.
    comult: Vec<Vec<(usize, usize, F)>>,
    counit: Vector<F>,
    /// Column k is S(e_k).
    antipode: Matrix<F>,
    conductor: u64,
}

fn push_sparse<F: Field>(v: &mut Sparse<F>, k: usize, c: F) {
    match v.binary_search_by_key(&k, |(i, _)| *i) {
        Ok(pos) => {
            v[pos].1 += &c;
            if v[pos].1.is_zero() {
                v.remove(pos);
            }
        }
        Err(pos) => {
            if !c.is_zero() {
                v.insert(pos, (k, c));
            }
        }
    }
}

impl<F: Field> HopfSuperAlgebra<F> {
    pub fn from_parts(parts: Parts<F>) -> Result<Self, StructureError> {
        let n = parts.labels.len();
        if n == 0 {
            return Err(malformed("dim", "dimension must be positive"));
        }
        if parts.parity.len() != n {
            return Err(malformed("parity", format!("expected {} entries, got {}", n, parts.parity.len())));
        }
        if let Some(i) = parts.parity.iter().position(|&p| p > 1) {
            return Err(malformed(format!("parity/{}", i), "parity must be 0 or 1"));
        }
        if parts.unit.len() != n {
            return Err(malformed("unit", format!("expected {} entries", n)));
        }
        if parts.counit.len() != n {
            return Err(malformed("counit", format!("expected {} entries", n)));
        }
        let mut mult = vec![vec![Sparse::new(); n]; n];
        for (idx, (i, j, k, c)) in parts.mult.into_iter().enumerate() {
            if i >= n || j >= n || k >= n {
                return Err(malformed(format!("mult/{}", idx), "index out of range"));
            }
            push_sparse(&mut mult[i][j], k, c);
        }
        let mut comult_acc: Vec<Tensor2<F>> = vec![Tensor2::new(); n];
        for (idx, (i, j, k, c)) in parts.comult.into_iter().enumerate() {
            if i >= n || j >= n || k >= n {
                return Err(malformed(format!("comult/{}", idx), "index out of range"));
            }
            *comult_acc[k].entry((i, j)).or_insert_with(F::zero) += &c;
        }
        let comult = comult_acc
            .into_iter()
            .map(|t| t.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect())
            .collect();
        let mut h = HopfSuperAlgebra {
            labels: parts.labels,
            parity: parts.parity,
            mult,
            unit: parts.unit,
            comult,
            counit: parts.counit,
            antipode: Matrix::zeros(n, n),
            conductor: parts.conductor,
        };
        match parts.antipode {
            Some(s) => {
                if s.rows != n || s.cols != n {
                    return Err(malformed("antipode", format!("expected {}x{} matrix", n, n)));
                }
                h.antipode = s;
            }
            None => {
                h.antipode = solve_antipode(&h)?;
            }
        }
        Ok(h)
    }

    /// Structural parity homogeneity check used by deserialization.
    pub fn parity_violation(&self) -> Option<String> {
        verify::parity_violation(self)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn parity_of(&self, i: usize) -> usize {
        self.parity[i] as usize
    }

    pub fn is_purely_even(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }

    pub fn parity_dims(&self) -> (usize, usize) {
        let odd = self.parity.iter().filter(|&&p| p == 1).count();
        (self.dim() - odd, odd)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.mult[i][j]
    }

    pub fn unit(&self) -> &Vector<F> {
        &self.unit
    }

    pub fn counit(&self) -> &Vector<F> {
        &self.counit
    }

    pub fn comult_basis(&self, k: usize) -> &[(usize, usize, F)] {
        &self.comult[k]
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    /// All nonzero (i, j, k, m[i][j][k]).
    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (k, c) in v {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// All nonzero (i, j, k, d[i][j][k]).
    pub fn comult_entries(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for (k, terms) in self.comult.iter().enumerate() {
            for (i, j, c) in terms {
                out.push((*i, *j, k, c.clone()));
            }
        }
        out.sort_by_key(|e| (e.0, e.1, e.2));
        out
    }

    pub fn parts(&self) -> Parts<F> {
        Parts {
            labels: self.labels.clone(),
            parity: self.parity.clone(),
            mult: self.mult_entries(),
            unit: self.unit.clone(),
            comult: self.comult_entries(),
            counit: self.counit.clone(),
            antipode: Some(self.antipode.clone()),
            conductor: self.conductor,
        }
    }

    pub fn basis(&self, i: usize) -> Vector<F> {
        crate::linalg::unit_vec(self.dim(), i)
    }

    pub fn one(&self) -> Vector<F> {
        self.unit.clone()
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vector<F> {
        let mut out = zero_vec::<F>(self.dim());
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.mul_ref(bj);
                for (k, m) in &self.mult[i][j] {
                    out[*k].add_mul(&c, m);
                }
            }
        }
        out
    }

    pub fn mul_basis_vec(&self, i: usize, b: &[F]) -> Vector<F> {
        let mut out = zero_vec::<F>(self.dim());
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for (k, m) in &self.mult[i][j] {
                out[*k].add_mul(bj, m);
            }
        }
        out
    }

    pub fn pow(&self, a: &[F], e: usize) -> Vector<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vector<F>> = (0..n).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(&cols, n)
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vector<F>> = (0..n).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn comult(&self, a: &[F]) -> Tensor2<F> {
        let mut out = Tensor2::new();
        for (k, ak) in a.iter().enumerate() {
            if ak.is_zero() {
                continue;
            }
            for (i, j, d) in &self.comult[k] {
                tensor_add(&mut out, (*i, *j), ak.mul_ref(d));
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[F]) -> F {
        crate::linalg::dot(&self.counit, a)
    }

    pub fn apply_antipode(&self, a: &[F]) -> Vector<F> {
        self.antipode.apply(a)
    }

    /// Product in the super tensor square:
    /// (a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd.
    pub fn tensor_mul(&self, x: &Tensor2<F>, y: &Tensor2<F>) -> Tensor2<F> {
        let mut out = Tensor2::new();
        for ((a, b), cx) in x {
            for ((c, d), cy) in y {
                let ac = &self.mult[*a][*c];
                let bd = &self.mult[*b][*d];
                if ac.is_empty() || bd.is_empty() {
                    continue;
                }
                let mut coef = cx.mul_ref(cy);
                if self.parity[*b] == 1 && self.parity[*c] == 1 {
                    coef = -coef;
                }
                for (k, m1) in ac {
                    let c1 = coef.mul_ref(m1);
                    for (l, m2) in bd {
                        tensor_add(&mut out, (*k, *l), c1.mul_ref(m2));
                    }
                }
            }
        }
        out
    }

    /// True if `a` is a homogeneous element of the given parity.
    pub fn is_homogeneous(&self, a: &[F], parity: usize) -> bool {
        a.iter().enumerate().all(|(i, c)| c.is_zero() || self.parity_of(i) == parity)
    }

    /// Parity of a nonzero homogeneous element.
    pub fn parity_of_vec(&self, a: &[F]) -> Option<usize> {
        let mut p = None;
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = self.parity_of(i);
            match p {
                None => p = Some(q),
                Some(old) if old != q => return None,
                _ => {}
            }
        }
        p
    }

    /// Renders an element in terms of the basis labels.
    pub fn format_vec(&self, a: &[F]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({})·{}", c, self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Whether `a` is a single basis vector with coefficient one.
    pub fn as_basis_index(a: &[F]) -> Option<usize> {
        let mut found = None;
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_one() || found.is_some() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    pub(crate) fn antipode_mut(&mut self) -> &mut Matrix<F> {
        &mut self.antipode
    }
}

pub fn tensor_add<F: Field>(t: &mut Tensor2<F>, key: (usize, usize), c: F) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match t.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// a⊗b as a sparse tensor.
pub fn tensor_of<F: Field>(a: &[F], b: &[F]) -> Tensor2<F> {
    let mut t = Tensor2::new();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                tensor_add(&mut t, (i, j), x.mul_ref(y));
            }
        }
    }
    t
}

pub fn tensor_sub<F: Field>(a: &Tensor2<F>, b: &Tensor2<F>) -> Tensor2<F> {
    let mut out = a.clone();
    for (k, c) in b {
        tensor_add(&mut out, *k, -c.clone());
    }
    out
}

/// Scalar-weighted sum of basis images, used when a map is given on a basis.
pub fn combine<F: Field>(dim: usize, terms: &[(F, Vector<F>)]) -> Vector<F> {
    let mut out = zero_vec(dim);
    for (c, v) in terms {
        axpy(&mut out, c, v);
    }
    out
}
