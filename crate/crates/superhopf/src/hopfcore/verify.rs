use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{tensor_of, HopfSuperAlgebra, Tensor2};
use crate::field::Field;
use crate::linalg::{zero_vec, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    Parity,
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Bialgebra,
    AntipodeLeft,
    AntipodeRight,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Parity,
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::Bialgebra,
        Axiom::AntipodeLeft,
        Axiom::AntipodeRight,
    ];
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    /// Basis indices at which the identity fails.
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub checked: Vec<Axiom>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.failures.iter().all(|f| f.axiom != axiom)
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.checked {
            match self.failure(*a) {
                None => writeln!(f, "{:?}: pass", a)?,
                Some(fail) => writeln!(f, "{:?}: FAIL at {:?} ({})", a, fail.witness, fail.detail)?,
            }
        }
        Ok(())
    }
}

type Acc<F> = BTreeMap<usize, F>;

fn acc_add<F: Field>(m: &mut Acc<F>, k: usize, c: F) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k).or_insert_with(F::zero);
    *e += &c;
    if e.is_zero() {
        m.remove(&k);
    }
}

fn first_failure<F, G>(n: usize, check: G) -> Option<(Vec<usize>, String)>
where
    F: Field,
    G: Fn(usize) -> Option<(Vec<usize>, String)> + Sync,
{
    // parallel over the first index, smallest failing index wins
    (0..n).into_par_iter().filter_map(|i| check(i).map(|w| (i, w))).min_by_key(|(i, _)| *i).map(|(_, w)| w)
}

pub(crate) fn parity_violation<F: Field>(h: &HopfSuperAlgebra<F>) -> Option<String> {
    let p = |i: usize| h.parity_of(i);
    for (i, j, k, _) in h.mult_entries() {
        if p(k) != (p(i) + p(j)) % 2 {
            return Some(format!("mult[{}][{}][{}] joins parities {}+{} into {}", i, j, k, p(i), p(j), p(k)));
        }
    }
    for (i, j, k, _) in h.comult_entries() {
        if p(k) != (p(i) + p(j)) % 2 {
            return Some(format!("comult[{}][{}][{}] splits parity {} into {}+{}", i, j, k, p(k), p(i), p(j)));
        }
    }
    for (i, c) in h.unit().iter().enumerate() {
        if !c.is_zero() && p(i) == 1 {
            return Some(format!("unit has odd component {}", i));
        }
    }
    for (i, c) in h.counit().iter().enumerate() {
        if !c.is_zero() && p(i) == 1 {
            return Some(format!("counit nonzero on odd basis vector {}", i));
        }
    }
    let s = h.antipode();
    for k in 0..h.dim() {
        for i in 0..h.dim() {
            if !s.get(i, k).is_zero() && p(i) != p(k) {
                return Some(format!("antipode sends basis {} to a component in {}", k, i));
            }
        }
    }
    None
}

/// Checks every Hopf superalgebra identity exactly on all basis tuples.
pub fn verify_axioms<F: Field>(h: &HopfSuperAlgebra<F>) -> AxiomReport {
    let mut failures = Vec::new();
    let mut record = |axiom: Axiom, r: Option<(Vec<usize>, String)>| {
        if let Some((witness, detail)) = r {
            failures.push(AxiomFailure { axiom, witness, detail });
        }
    };
    record(Axiom::Parity, parity_violation(h).map(|d| (vec![], d)));
    record(Axiom::Associativity, check_associativity(h));
    record(Axiom::Unit, check_unit(h));
    record(Axiom::Coassociativity, check_coassociativity(h));
    record(Axiom::Counit, check_counit(h));
    record(Axiom::Bialgebra, check_bialgebra(h));
    let (left, right) = check_antipode(h);
    record(Axiom::AntipodeLeft, left);
    record(Axiom::AntipodeRight, right);
    AxiomReport { checked: Axiom::ALL.to_vec(), failures }
}

pub(crate) fn check_associativity<F: Field>(h: &HopfSuperAlgebra<F>) -> Option<(Vec<usize>, String)> {
    let n = h.dim();
    first_failure::<F, _>(n, |i| {
        for j in 0..n {
            let ij = h.mult_basis(i, j);
            for k in 0..n {
                let mut lhs = Acc::new();
                for (l, c) in ij {
                    for (m, d) in h.mult_basis(*l, k) {
                        acc_add(&mut lhs, *m, c.mul_ref(d));
                    }
                }
                let mut rhs = Acc::new();
                for (l, c) in h.mult_basis(j, k) {
                    for (m, d) in h.mult_basis(i, *l) {
                        acc_add(&mut rhs, *m, c.mul_ref(d));
                    }
                }
                if lhs != rhs {
                    return Some((vec![i, j, k], "(e_i e_j) e_k != e_i (e_j e_k)".into()));
                }
            }
        }
        None
    })
}

fn check_unit<F: Field>(h: &HopfSuperAlgebra<F>) -> Option<(Vec<usize>, String)> {
    let one = h.unit();
    for k in 0..h.dim() {
        let e = h.basis(k);
        if h.mul(one, &e) != e {
            return Some((vec![k], "1·e_k != e_k".into()));
        }
        if h.mul(&e, one) != e {
            return Some((vec![k], "e_k·1 != e_k".into()));
        }
    }
    None
}

fn check_coassociativity<F: Field>(h: &HopfSuperAlgebra<F>) -> Option<(Vec<usize>, String)> {
    first_failure::<F, _>(h.dim(), |k| {
        let mut lhs: BTreeMap<(usize, usize, usize), F> = BTreeMap::new();
        let mut rhs: BTreeMap<(usize, usize, usize), F> = BTreeMap::new();
        let add = |m: &mut BTreeMap<(usize, usize, usize), F>, key, c: F| {
            let e = m.entry(key).or_insert_with(F::zero);
            *e += &c;
        };
        for (i, j, d) in h.comult_basis(k) {
            for (a, b, d2) in h.comult_basis(*i) {
                add(&mut lhs, (*a, *b, *j), d.mul_ref(d2));
            }
            for (a, b, d2) in h.comult_basis(*j) {
                add(&mut rhs, (*i, *a, *b), d.mul_ref(d2));
            }
        }
        lhs.retain(|_, c| !c.is_zero());
        rhs.retain(|_, c| !c.is_zero());
        if lhs != rhs {
            Some((vec![k], "(Δ⊗id)Δ(e_k) != (id⊗Δ)Δ(e_k)".into()))
        } else {
            None
        }
    })
}

fn check_counit<F: Field>(h: &HopfSuperAlgebra<F>) -> Option<(Vec<usize>, String)> {
    let n = h.dim();
    let eps = h.counit();
    for k in 0..n {
        let mut left = zero_vec::<F>(n);
        let mut right = zero_vec::<F>(n);
        for (i, j, d) in h.comult_basis(k) {
            left[*j].add_mul(&eps[*i], d);
            right[*i].add_mul(&eps[*j], d);
        }
        let e = h.basis(k);
        if left != e {
            return Some((vec![k], "(ε⊗id)Δ(e_k) != e_k".into()));
        }
        if right != e {
            return Some((vec![k], "(id⊗ε)Δ(e_k) != e_k".into()));
        }
    }
    None
}

fn check_bialgebra<F: Field>(h: &HopfSuperAlgebra<F>) -> Option<(Vec<usize>, String)> {
    let n = h.dim();
    let one = h.unit();
    if h.comult(one) != tensor_of(one, one) {
        return Some((vec![], "Δ(1) != 1⊗1".into()));
    }
    if !h.counit_of(one).is_one() {
        return Some((vec![], "ε(1) != 1".into()));
    }
    let deltas: Vec<Tensor2<F>> = (0..n).map(|k| h.comult(&h.basis(k))).collect();
    let eps = h.counit();
    first_failure::<F, _>(n, |i| {
        for j in 0..n {
            let ij: Vector<F> = {
                let mut v = zero_vec(n);
                for (k, c) in h.mult_basis(i, j) {
                    v[*k] = c.clone();
                }
                v
            };
            if h.counit_of(&ij) != eps[i].mul_ref(&eps[j]) {
                return Some((vec![i, j], "ε(e_i e_j) != ε(e_i)ε(e_j)".into()));
            }
            if h.comult(&ij) != h.tensor_mul(&deltas[i], &deltas[j]) {
                return Some((vec![i, j], "Δ(e_i e_j) != Δ(e_i)Δ(e_j)".into()));
            }
        }
        None
    })
}

type Check = Option<(Vec<usize>, String)>;

pub(crate) fn check_antipode<F: Field>(h: &HopfSuperAlgebra<F>) -> (Check, Check) {
    let n = h.dim();
    let s: Vec<Vector<F>> = (0..n).map(|k| h.antipode().column(k)).collect();
    let mut left = None;
    let mut right = None;
    for k in 0..n {
        let target: Vector<F> = h.unit().iter().map(|u| u.mul_ref(&h.counit()[k])).collect();
        let mut l = zero_vec::<F>(n);
        let mut r = zero_vec::<F>(n);
        for (i, j, d) in h.comult_basis(k) {
            let sl = h.mul(&s[*i], &h.basis(*j));
            crate::linalg::axpy(&mut l, d, &sl);
            let sr = h.mul(&h.basis(*i), &s[*j]);
            crate::linalg::axpy(&mut r, d, &sr);
        }
        if left.is_none() && l != target {
            left = Some((vec![k], "m(S⊗id)Δ(e_k) != ε(e_k)1".into()));
        }
        if right.is_none() && r != target {
            right = Some((vec![k], "m(id⊗S)Δ(e_k) != ε(e_k)1".into()));
        }
    }
    (left, right)
}
