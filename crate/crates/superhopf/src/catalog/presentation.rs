//! Structure constants from a skew-group presentation by PBW rewriting.
//!
//! Normal form is u_g x_1^{a_1}⋯x_θ^{a_θ} with 0 ≤ a_i < P_i. Products are
//! formed by moving group elements left past skew generators and then
//! appending the letters of the right factor one at a time.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use super::group::{CharExp, GroupData};
use crate::field::RootField;
use crate::hopfcore::{
    solve_antipode, tensor_add, verify_axioms, AxiomReport, HopfSuperAlgebra, Parts, StructureError, Tensor2,
};
use crate::linalg::{axpy, zero_vec, Matrix, Vector};

/// A skew generator x with u_h x = χ(h) x u_h, x^P = power_value and, under
/// the default coproduct, Δ(x) = u_loc⊗x + x⊗1.
#[derive(Clone, Debug)]
pub struct SkewGen<F> {
    pub name: String,
    pub parity: u8,
    pub power: usize,
    /// Group-algebra element as (group index, coefficient).
    pub power_value: Vec<(usize, F)>,
    pub conj: CharExp,
    pub loc: usize,
}

/// x_j x_i = q x_i x_j + t for i < j, t in the group algebra.
#[derive(Clone, Debug)]
pub struct CrossRel<F> {
    pub i: usize,
    pub j: usize,
    pub q: F,
    pub t: Vec<(usize, F)>,
}

/// A PBW monomial u_g X^a written by exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub group: Vec<u64>,
    pub skew: Vec<usize>,
}

/// Coproduct values on generators, each a sum of c·(left ⊗ right).
#[derive(Clone, Debug)]
pub struct ExplicitCoproduct<F> {
    pub group_gens: Vec<Vec<(F, Monomial, Monomial)>>,
    pub skew_gens: Vec<Vec<(F, Monomial, Monomial)>>,
}

#[derive(Clone, Debug)]
pub struct SkewPresentation<F> {
    pub group: GroupData,
    pub gens: Vec<SkewGen<F>>,
    pub cross: Vec<CrossRel<F>>,
    pub coproduct: Option<ExplicitCoproduct<F>>,
    pub conductor: u64,
}

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("rewriting is not confluent at {witness:?}: {detail}")]
    NonConfluent { witness: Vec<String>, detail: String },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("axioms fail:\n{0}")]
    Axioms(AxiomReport),
}

/// Outcome of checking a presentation that may not define a Hopf algebra.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationCheck {
    pub confluent: bool,
    pub antipode_solved: bool,
    pub report: AxiomReport,
}

impl<F: RootField> SkewPresentation<F> {
    pub fn theta(&self) -> usize {
        self.gens.len()
    }

    fn skew_size(&self) -> usize {
        self.gens.iter().map(|g| g.power).product()
    }

    pub fn dim(&self) -> usize {
        self.group.order() * self.skew_size()
    }

    pub fn index(&self, g: usize, a: &[usize]) -> usize {
        let mut m = 0;
        let mut stride = 1;
        for (i, gen) in self.gens.iter().enumerate() {
            m += a[i] * stride;
            stride *= gen.power;
        }
        g * self.skew_size() + m
    }

    pub fn split(&self, idx: usize) -> (usize, Vec<usize>) {
        let s = self.skew_size();
        let (g, mut m) = (idx / s, idx % s);
        let a = self
            .gens
            .iter()
            .map(|gen| {
                let e = m % gen.power;
                m /= gen.power;
                e
            })
            .collect();
        (g, a)
    }

    pub fn monomial_index(&self, m: &Monomial) -> usize {
        self.index(self.group.index(&m.group), &m.skew)
    }

    pub fn label(&self, idx: usize) -> String {
        let (g, a) = self.split(idx);
        let mut s = String::new();
        let gl = self.group.label(&self.group.element(g));
        if gl != "1" {
            s.push_str(&gl);
        }
        for (i, &e) in a.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&self.gens[i].name),
                _ => s.push_str(&format!("{}^{}", self.gens[i].name, e)),
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    pub fn parity_of(&self, idx: usize) -> u8 {
        let (_, a) = self.split(idx);
        (a.iter().zip(&self.gens).map(|(e, g)| e * g.parity as usize).sum::<usize>() % 2) as u8
    }

    pub fn group_index(&self, g: usize) -> usize {
        self.index(g, &vec![0; self.theta()])
    }

    /// Basis index of the generator x_i.
    pub fn skew_index(&self, i: usize) -> usize {
        let mut a = vec![0; self.theta()];
        a[i] = 1;
        self.index(0, &a)
    }

    fn char_value(&self, chi: &[i64], h: usize) -> F {
        let v: F = self.group.char_value(chi, &self.group.element(h));
        v.with_conductor(self.conductor)
    }

    fn validate(&self) -> Result<(), PresentationError> {
        let n = self.theta();
        let ord = self.group.order();
        for (i, g) in self.gens.iter().enumerate() {
            if g.power == 0 {
                return Err(PresentationError::Invalid(format!("{}: power must be positive", g.name)));
            }
            if g.parity > 1 {
                return Err(PresentationError::Invalid(format!("{}: parity must be 0 or 1", g.name)));
            }
            if g.loc >= ord || g.power_value.iter().any(|(h, _)| *h >= ord) {
                return Err(PresentationError::Invalid(format!("{}: group index out of range", g.name)));
            }
            if g.conj.len() != self.group.rank() {
                return Err(PresentationError::Invalid(format!("generator {} has a malformed character", i)));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let found = self.cross.iter().filter(|r| r.i == i && r.j == j).count();
                if found != 1 {
                    return Err(PresentationError::Invalid(format!(
                        "need exactly one cross relation for ({}, {}), found {}",
                        self.gens[i].name, self.gens[j].name, found
                    )));
                }
            }
        }
        if let Some(c) = &self.coproduct {
            if c.group_gens.len() != self.group.rank() || c.skew_gens.len() != n {
                return Err(PresentationError::Invalid("explicit coproduct must cover every generator".into()));
            }
        }
        Ok(())
    }
}

struct Rewriter<'a, F> {
    p: &'a SkewPresentation<F>,
    dim: usize,
    /// chi_inv[i][h] = χ_i(h)^{-1}
    chi_inv: Vec<Vec<F>>,
    cross: HashMap<(usize, usize), (F, Vec<(usize, F)>)>,
    memo: HashMap<(usize, usize), Vector<F>>,
}

impl<'a, F: RootField> Rewriter<'a, F> {
    fn new(p: &'a SkewPresentation<F>) -> Self {
        let chi_inv = p
            .gens
            .iter()
            .map(|g| (0..p.group.order()).map(|h| p.char_value(&g.conj, h).inv().expect("root of unity")).collect())
            .collect();
        let cross = p.cross.iter().map(|r| ((r.i, r.j), (r.q.clone(), r.t.clone()))).collect();
        Rewriter { p, dim: p.dim(), chi_inv, cross, memo: HashMap::new() }
    }

    /// (u_g X^a) · u_h = χ^{-a}(h) u_{gh} X^a
    fn times_group(&self, idx: usize, h: usize, coef: &F, out: &mut Vector<F>) {
        let (g, a) = self.p.split(idx);
        let mut c = coef.clone();
        for (i, &e) in a.iter().enumerate() {
            if e > 0 {
                c = c.mul_ref(&self.chi_inv[i][h].pow(e as u64));
            }
        }
        let gh = self.p.group.mul_idx(g, h);
        out[self.p.index(gh, &a)] += &c;
    }

    fn times_group_elem(&self, idx: usize, t: &[(usize, F)], out: &mut Vector<F>) {
        for (h, c) in t {
            self.times_group(idx, *h, c, out);
        }
    }

    /// Normal form of (basis idx) · x_i.
    fn times_letter(&mut self, idx: usize, i: usize) -> Vector<F> {
        if let Some(v) = self.memo.get(&(idx, i)) {
            return v.clone();
        }
        let (g, a) = self.p.split(idx);
        let last = a.iter().rposition(|&e| e > 0);
        let mut out = zero_vec::<F>(self.dim);
        match last {
            Some(k) if k > i => {
                // u_g X^{a-e_k} x_k x_i = q (u_g X^{a-e_k} x_i) x_k + u_g X^{a-e_k} t
                let mut b = a.clone();
                b[k] -= 1;
                let prefix = self.p.index(g, &b);
                let (q, t) = self.cross[&(i, k)].clone();
                let first = self.times_letter(prefix, i);
                for (m, c) in first.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let w = self.times_letter(m, k);
                    axpy(&mut out, &q.mul_ref(c), &w);
                }
                self.times_group_elem(prefix, &t, &mut out);
            }
            _ => {
                let mut b = a.clone();
                b[i] += 1;
                if b[i] < self.p.gens[i].power {
                    out[self.p.index(g, &b)] = F::one();
                } else {
                    b[i] = 0;
                    let base = self.p.index(g, &b);
                    let pv = self.p.gens[i].power_value.clone();
                    self.times_group_elem(base, &pv, &mut out);
                }
            }
        }
        self.memo.insert((idx, i), out.clone());
        out
    }

    fn product(&mut self, x: usize, y: usize) -> Vector<F> {
        let (h, b) = self.p.split(y);
        let mut cur = zero_vec::<F>(self.dim);
        self.times_group(x, h, &F::one(), &mut cur);
        for (i, &e) in b.iter().enumerate() {
            for _ in 0..e {
                let mut next = zero_vec::<F>(self.dim);
                for (m, c) in cur.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let w = self.times_letter(m, i);
                    axpy(&mut next, c, &w);
                }
                cur = next;
            }
        }
        cur
    }
}

/// Multiplication, unit, counit and coproduct of a presentation; the
/// algebra part is not checked here.
fn synthesize<F: RootField>(p: &SkewPresentation<F>) -> Result<HopfSuperAlgebra<F>, PresentationError> {
    p.validate()?;
    let n = p.dim();
    let mut rw = Rewriter::new(p);
    let mut mult = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for (k, c) in rw.product(x, y).into_iter().enumerate() {
                if !c.is_zero() {
                    mult.push((x, y, k, c));
                }
            }
        }
    }
    let labels: Vec<String> = (0..n).map(|i| p.label(i)).collect();
    let parity: Vec<u8> = (0..n).map(|i| p.parity_of(i)).collect();
    let mut unit = zero_vec::<F>(n);
    unit[0] = F::one();
    let counit: Vector<F> = (0..n).map(|i| if p.split(i).1.iter().all(|&e| e == 0) { F::one() } else { F::zero() }).collect();
    let bare = HopfSuperAlgebra::from_parts(Parts {
        labels: labels.clone(),
        parity: parity.clone(),
        mult: mult.clone(),
        unit: unit.clone(),
        comult: vec![],
        counit: counit.clone(),
        antipode: Some(Matrix::zeros(n, n)),
        conductor: p.conductor,
    })?;
    let comult = coproduct_table(p, &bare);
    Ok(HopfSuperAlgebra::from_parts(Parts {
        labels,
        parity,
        mult,
        unit,
        comult,
        counit,
        antipode: Some(Matrix::zeros(n, n)),
        conductor: p.conductor,
    })?)
}

fn monomial_tensor<F: RootField>(p: &SkewPresentation<F>, terms: &[(F, Monomial, Monomial)]) -> Tensor2<F> {
    let mut t = Tensor2::new();
    for (c, l, r) in terms {
        tensor_add(&mut t, (p.monomial_index(l), p.monomial_index(r)), c.clone());
    }
    t
}

fn coproduct_table<F: RootField>(p: &SkewPresentation<F>, bare: &HopfSuperAlgebra<F>) -> Vec<(usize, usize, usize, F)> {
    let n = p.dim();
    let skew_images: Vec<Tensor2<F>> = match &p.coproduct {
        Some(c) => c.skew_gens.iter().map(|t| monomial_tensor(p, t)).collect(),
        None => (0..p.theta())
            .map(|i| {
                let x = p.skew_index(i);
                let mut t = Tensor2::new();
                tensor_add(&mut t, (p.group_index(p.gens[i].loc), x), F::one());
                tensor_add(&mut t, (x, 0), F::one());
                t
            })
            .collect(),
    };
    let group_images: Option<Vec<Tensor2<F>>> =
        p.coproduct.as_ref().map(|c| c.group_gens.iter().map(|t| monomial_tensor(p, t)).collect());
    let mut out = Vec::new();
    for k in 0..n {
        let (g, a) = p.split(k);
        let mut cur = Tensor2::new();
        match &group_images {
            None => {
                let u = p.group_index(g);
                tensor_add(&mut cur, (u, u), F::one());
            }
            Some(imgs) => {
                tensor_add(&mut cur, (0, 0), F::one());
                for (j, &e) in p.group.element(g).iter().enumerate() {
                    for _ in 0..e {
                        cur = bare.tensor_mul(&cur, &imgs[j]);
                    }
                }
            }
        }
        for (i, &e) in a.iter().enumerate() {
            for _ in 0..e {
                cur = bare.tensor_mul(&cur, &skew_images[i]);
            }
        }
        for ((i, j), c) in cur {
            out.push((i, j, k, c));
        }
    }
    out
}

/// Builds the Hopf superalgebra of a presentation, failing unless the
/// rewriting is confluent and every axiom holds.
pub fn build_from_presentation<F: RootField>(p: &SkewPresentation<F>) -> Result<HopfSuperAlgebra<F>, PresentationError> {
    let bare = synthesize(p)?;
    if let Some((w, detail)) = crate::hopfcore::check_associativity_witness(&bare) {
        return Err(PresentationError::NonConfluent { witness: w.iter().map(|&i| bare.label(i).to_string()).collect(), detail });
    }
    let s = solve_antipode(&bare)?;
    let mut parts = bare.parts();
    parts.antipode = Some(s);
    let h = HopfSuperAlgebra::from_parts(parts)?;
    let report = verify_axioms(&h);
    if !report.passed() {
        return Err(PresentationError::Axioms(report));
    }
    Ok(h)
}

/// Runs the axiom checks on whatever a presentation defines, without
/// requiring success. A missing antipode is replaced by zero so the report
/// still covers the other identities.
pub fn check_presentation<F: RootField>(p: &SkewPresentation<F>) -> Result<PresentationCheck, PresentationError> {
    let bare = synthesize(p)?;
    let confluent = crate::hopfcore::check_associativity_witness(&bare).is_none();
    let (h, solved) = match solve_antipode(&bare) {
        Ok(s) => {
            let mut parts = bare.parts();
            parts.antipode = Some(s);
            (HopfSuperAlgebra::from_parts(parts)?, true)
        }
        Err(_) => (bare, false),
    };
    Ok(PresentationCheck { confluent, antipode_solved: solved, report: verify_axioms(&h) })
}

/// Extends generator images to a linear map on the PBW basis:
/// u_g X^a ↦ ∏ φ(c_j)^{g_j} ∏ φ(x_i)^{a_i}, computed with `mul` in the
/// target. No relation is checked here; `check_morphism` does that.
pub fn extend_generator_map<F: RootField>(
    p: &SkewPresentation<F>,
    target_dim: usize,
    one: &[F],
    mul: impl Fn(&[F], &[F]) -> Vector<F>,
    group_images: &[Vector<F>],
    skew_images: &[Vector<F>],
) -> Vec<Vector<F>> {
    assert_eq!(group_images.len(), p.group.rank());
    assert_eq!(skew_images.len(), p.theta());
    let pow = |v: &Vector<F>, e: usize| {
        let mut acc = one.to_vec();
        for _ in 0..e {
            acc = mul(&acc, v);
        }
        acc
    };
    (0..p.dim())
        .map(|k| {
            let (g, a) = p.split(k);
            let mut acc = one.to_vec();
            for (j, &e) in p.group.element(g).iter().enumerate() {
                if e > 0 {
                    acc = mul(&acc, &pow(&group_images[j], e as usize));
                }
            }
            for (i, &e) in a.iter().enumerate() {
                if e > 0 {
                    acc = mul(&acc, &pow(&skew_images[i], e));
                }
            }
            debug_assert_eq!(acc.len(), target_dim);
            acc
        })
        .collect()
}
