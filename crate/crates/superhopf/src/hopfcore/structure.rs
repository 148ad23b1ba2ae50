//! Algebra-level structure: radical, center, ideals, quotients, morphisms.

use serde::Serialize;

use super::{HopfSuperAlgebra, Sparse};
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vec, sub_vec, unit_vec, zero_vec, LinearMap, Matrix, Subspace, Vector};

/// Anything with an associative multiplication table and a unit.
pub trait MultTable<F: Field> {
    fn dim(&self) -> usize;
    fn mult_basis(&self, i: usize, j: usize) -> &Sparse<F>;
    fn unit(&self) -> &Vector<F>;

    fn mul(&self, a: &[F], b: &[F]) -> Vector<F> {
        let n = self.dim();
        let mut out = zero_vec::<F>(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul_ref(y);
                for (k, c) in self.mult_basis(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    fn left_mult(&self, a: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vector<F>> = (0..n).map(|j| self.mul(a, &unit_vec(n, j))).collect();
        Matrix::from_columns(&cols, n)
    }
}

impl<F: Field> MultTable<F> for HopfSuperAlgebra<F> {
    fn dim(&self) -> usize {
        HopfSuperAlgebra::dim(self)
    }
    fn mult_basis(&self, i: usize, j: usize) -> &Sparse<F> {
        HopfSuperAlgebra::mult_basis(self, i, j)
    }
    fn unit(&self) -> &Vector<F> {
        HopfSuperAlgebra::unit(self)
    }
}

/// A bare unital algebra, typically a quotient of a Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F> {
    mult: Vec<Vec<Sparse<F>>>,
    unit: Vector<F>,
}

impl<F: Field> MultTable<F> for Algebra<F> {
    fn dim(&self) -> usize {
        self.unit.len()
    }
    fn mult_basis(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.mult[i][j]
    }
    fn unit(&self) -> &Vector<F> {
        &self.unit
    }
}

fn to_sparse<F: Field>(v: Vector<F>) -> Sparse<F> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl<F: Field> Algebra<F> {
    pub fn of<A: MultTable<F>>(a: &A) -> Self {
        let n = a.dim();
        let mult = (0..n).map(|i| (0..n).map(|j| a.mult_basis(i, j).clone()).collect()).collect();
        Algebra { mult, unit: a.unit().clone() }
    }

    /// A/I for a two-sided ideal I; the quotient basis is the image of the
    /// non-pivot basis vectors of I.
    pub fn quotient<A: MultTable<F>>(a: &A, ideal: &Subspace<F>) -> Self {
        let keep = ideal.complement_indices();
        let n = a.dim();
        let project = |v: &[F]| -> Vector<F> {
            let r = ideal.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mult = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| to_sparse(project(&a.mul(&unit_vec(n, i), &unit_vec(n, j)))))
                    .collect()
            })
            .collect();
        Algebra { mult, unit: project(a.unit()) }
    }
}

/// J(A) via the trace form T(x, y) = tr(L_{xy}), valid in characteristic zero.
pub fn jacobson_radical<F: Field, A: MultTable<F>>(a: &A) -> Subspace<F> {
    let n = a.dim();
    let traces: Vec<F> = (0..n)
        .map(|m| {
            let mut t = F::zero();
            for k in 0..n {
                for (l, c) in a.mult_basis(m, k) {
                    if *l == k {
                        t += c;
                    }
                }
            }
            t
        })
        .collect();
    let mut form = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut t = F::zero();
            for (m, c) in a.mult_basis(i, j) {
                t.add_mul(c, &traces[*m]);
            }
            form.set(i, j, t);
        }
    }
    Subspace::span(n, form.kernel())
}

/// span{uv : u ∈ U, v ∈ V}.
pub fn product_space<F: Field, A: MultTable<F>>(a: &A, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
    let mut s = Subspace::zero(a.dim());
    for x in u.basis() {
        for y in v.basis() {
            s.insert(a.mul(x, y));
        }
    }
    s
}

/// dim J, dim J², … down to the first zero power (or the point where the
/// powers stop shrinking, which means J was not nilpotent).
pub fn power_filtration<F: Field, A: MultTable<F>>(a: &A, j: &Subspace<F>) -> Vec<usize> {
    let mut dims = Vec::new();
    let mut p = j.clone();
    while p.dim() > 0 {
        dims.push(p.dim());
        let next = product_space(a, &p, j);
        if next.dim() == p.dim() {
            break;
        }
        p = next;
    }
    dims
}

/// The two-sided ideal generated by `gens`.
pub fn ideal_closure<F: Field, A: MultTable<F>>(a: &A, gens: &[Vector<F>]) -> Subspace<F> {
    let n = a.dim();
    let mut s = Subspace::zero(n);
    let mut queue: Vec<Vector<F>> = gens.to_vec();
    while let Some(v) = queue.pop() {
        if !s.insert(v.clone()) {
            continue;
        }
        for b in 0..n {
            let e = unit_vec(n, b);
            queue.push(a.mul(&e, &v));
            queue.push(a.mul(&v, &e));
        }
    }
    s
}

/// The ideal generated by all commutators e_i e_j − e_j e_i.
pub fn commutator_ideal<F: Field, A: MultTable<F>>(a: &A) -> Subspace<F> {
    let n = a.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = sub_vec(&a.mul(&unit_vec(n, i), &unit_vec(n, j)), &a.mul(&unit_vec(n, j), &unit_vec(n, i)));
            if !is_zero_vec(&c) {
                gens.push(c);
            }
        }
    }
    ideal_closure(a, &gens)
}

/// The unsigned center {x : xb = bx for every b}.
pub fn center<F: Field, A: MultTable<F>>(a: &A) -> Subspace<F> {
    let n = a.dim();
    let mut rows = Vec::new();
    for b in 0..n {
        // coefficient of e_m in Σ_i x_i (e_i e_b − e_b e_i)
        let mut eq: Vec<Vector<F>> = vec![zero_vec(n); n];
        for i in 0..n {
            for (m, c) in a.mult_basis(i, b) {
                eq[*m][i] += c;
            }
            for (m, c) in a.mult_basis(b, i) {
                eq[*m][i] -= c;
            }
        }
        rows.extend(eq.into_iter().filter(|r| !is_zero_vec(r)));
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::span(n, Matrix::from_rows(rows, n).kernel())
}

pub fn is_commutative<F: Field, A: MultTable<F>>(a: &A) -> bool {
    let n = a.dim();
    (0..n).all(|i| (i + 1..n).all(|j| a.mult_basis(i, j) == a.mult_basis(j, i)))
}

/// Plain cocommutativity, Δ = τ∘Δ with the unsigned flip.
pub fn is_cocommutative<F: Field>(h: &HopfSuperAlgebra<F>) -> bool {
    (0..h.dim()).all(|k| {
        let d = h.comult(&h.basis(k));
        d.iter().all(|((i, j), c)| d.get(&(*j, *i)) == Some(c))
    })
}

/// The subalgebra generated by `gens` (always contains 1).
pub fn generated_subalgebra<F: Field, A: MultTable<F>>(a: &A, gens: &[Vector<F>]) -> Subspace<F> {
    let n = a.dim();
    let mut s = Subspace::zero(n);
    let mut queue = vec![a.unit().clone()];
    while let Some(v) = queue.pop() {
        if !s.insert(v.clone()) {
            continue;
        }
        for g in gens {
            queue.push(a.mul(&v, g));
        }
    }
    s
}

/// dim of (H/⟨H_1, [H,H]⟩) / J: the number of characters a splitting field
/// would see.
pub fn semisimple_abelian_rank<F: Field>(h: &HopfSuperAlgebra<F>) -> usize {
    let n = h.dim();
    let mut gens: Vec<Vector<F>> = (0..n).filter(|&i| h.parity_of(i) == 1).map(|i| unit_vec(n, i)).collect();
    gens.extend(commutator_ideal(h).basis().iter().cloned());
    let ideal = ideal_closure(h, &gens);
    let quot = Algebra::quotient(h, &ideal);
    if quot.dim() == 0 {
        return 0;
    }
    quot.dim() - jacobson_radical(&quot).dim()
}

fn is_nilpotent_elem<F: Field, A: MultTable<F>>(a: &A, x: &[F]) -> bool {
    let mut p = x.to_vec();
    for _ in 0..a.dim() {
        if is_zero_vec(&p) {
            return true;
        }
        p = a.mul(&p, x);
    }
    is_zero_vec(&p)
}

fn is_nilpotent_space<F: Field, A: MultTable<F>>(a: &A, s: &Subspace<F>) -> bool {
    let mut p = s.clone();
    for _ in 0..=a.dim() {
        if p.dim() == 0 {
            return true;
        }
        p = product_space(a, &p, s);
    }
    p.dim() == 0
}

/// Largest nilpotent ideal found by brute force: every coefficient vector
/// in {−1, 0, 1}^dim that is a nilpotent element generates an ideal, and
/// the nilpotent ones are summed. Independent of the trace form; meant as
/// an oracle for small dimensions.
pub fn nilpotent_ideal_search<F: Field, A: MultTable<F>>(a: &A) -> Subspace<F> {
    let n = a.dim();
    let vals = [F::zero(), F::one(), -F::one()];
    let mut found = Subspace::zero(n);
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut c = code;
        let x: Vector<F> = (0..n)
            .map(|_| {
                let v = vals[c % 3].clone();
                c /= 3;
                v
            })
            .collect();
        if found.contains(&x) || !is_nilpotent_elem(a, &x) {
            continue;
        }
        let ideal = ideal_closure(a, &[x]);
        if is_nilpotent_space(a, &ideal) {
            found = found.sum(&ideal);
        }
    }
    found
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MorphismFailure {
    pub property: &'static str,
    pub witness: Vec<usize>,
}

impl std::fmt::Display for MorphismFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails at {:?}", self.property, self.witness)
    }
}

fn fail(property: &'static str, witness: Vec<usize>) -> Result<(), MorphismFailure> {
    Err(MorphismFailure { property, witness })
}

/// Checks that f: H → K is a morphism of Hopf superalgebras.
pub fn check_morphism<F: Field>(
    h: &HopfSuperAlgebra<F>,
    k: &HopfSuperAlgebra<F>,
    f: &LinearMap<F>,
    require_iso: bool,
) -> Result<(), MorphismFailure> {
    let (n, m) = (h.dim(), k.dim());
    if f.source != n || f.target != m {
        return fail("shape", vec![f.source, f.target]);
    }
    let img: Vec<Vector<F>> = (0..n).map(|i| f.image_of_basis(i)).collect();
    for i in 0..n {
        if !k.is_homogeneous(&img[i], h.parity_of(i)) {
            return fail("parity", vec![i]);
        }
    }
    if f.apply(h.unit()) != *k.unit() {
        return fail("unit", vec![]);
    }
    for i in 0..n {
        if k.counit_of(&img[i]) != h.counit()[i] {
            return fail("counit", vec![i]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut lhs = zero_vec(m);
            for (l, c) in h.mult_basis(i, j) {
                axpy(&mut lhs, c, &img[*l]);
            }
            if lhs != k.mul(&img[i], &img[j]) {
                return fail("multiplication", vec![i, j]);
            }
        }
    }
    for l in 0..n {
        let mut lhs = super::Tensor2::new();
        for (i, j, d) in h.comult_basis(l) {
            for (a, x) in img[*i].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let dx = d.mul_ref(x);
                for (b, y) in img[*j].iter().enumerate() {
                    if !y.is_zero() {
                        super::tensor_add(&mut lhs, (a, b), dx.mul_ref(y));
                    }
                }
            }
        }
        if lhs != k.comult(&img[l]) {
            return fail("comultiplication", vec![l]);
        }
    }
    for i in 0..n {
        let s = h.antipode().column(i);
        if f.apply(&s) != k.apply_antipode(&img[i]) {
            return fail("antipode", vec![i]);
        }
    }
    if require_iso && !f.is_bijective() {
        return fail("bijectivity", vec![]);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{tensor_product, trivial_hopf, verify_axioms, Parts};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    /// Sweedler's algebra on 1, c, x, cx.
    fn sweedler() -> HopfSuperAlgebra<Q> {
        let mut mult = vec![];
        // basis index = 2*a + s for c^s x^a
        for s1 in 0..2usize {
            for a1 in 0..2usize {
                for s2 in 0..2usize {
                    for a2 in 0..2usize {
                        if a1 + a2 > 1 {
                            continue;
                        }
                        // x^a1 c^s2 = (-1)^{a1 s2} c^s2 x^a1
                        let sign = if a1 * s2 == 1 { -1 } else { 1 };
                        mult.push((2 * a1 + s1, 2 * a2 + s2, 2 * (a1 + a2) + (s1 + s2) % 2, q(sign)));
                    }
                }
            }
        }
        let comult = vec![
            (0, 0, 0, q(1)),
            (1, 1, 1, q(1)),
            (1, 2, 2, q(1)),
            (2, 0, 2, q(1)),
            (0, 3, 3, q(1)),
            (3, 1, 3, q(1)),
        ];
        HopfSuperAlgebra::from_parts(Parts {
            labels: vec!["1".into(), "c".into(), "x".into(), "cx".into()],
            parity: vec![0; 4],
            mult,
            unit: vec![q(1), q(0), q(0), q(0)],
            comult,
            counit: vec![q(1), q(1), q(0), q(0)],
            antipode: None,
            conductor: 2,
        })
        .unwrap()
    }

    #[test]
    fn sweedler_structure() {
        let h = sweedler();
        assert!(verify_axioms(&h).passed(), "{}", verify_axioms(&h));
        let j = jacobson_radical(&h);
        assert_eq!(j, Subspace::span(4, vec![unit_vec(4, 2), unit_vec(4, 3)]));
        assert_eq!(nilpotent_ideal_search(&h), j);
        assert_eq!(center(&h).dim(), 1);
        assert_eq!(power_filtration(&h, &j), vec![2]);
        assert!(!is_commutative(&h));
        assert!(!is_cocommutative(&h));
        assert_eq!(semisimple_abelian_rank(&h), 2);
        let quot = Algebra::quotient(&h, &j);
        assert_eq!(jacobson_radical(&quot).dim(), 0);
        assert_eq!(generated_subalgebra(&h, &[unit_vec(4, 1)]).dim(), 2);
    }

    #[test]
    fn morphisms() {
        let h = sweedler();
        assert!(check_morphism(&h, &h, &LinearMap::identity(4), true).is_ok());
        // swapping c and x breaks parity-free structure at once
        let mut m = Matrix::identity(4);
        m.set(1, 1, q(0));
        m.set(2, 2, q(0));
        m.set(1, 2, q(1));
        m.set(2, 1, q(1));
        assert!(check_morphism(&h, &h, &LinearMap::new(m), true).is_err());
        let t = tensor_product(&h, &trivial_hopf(2));
        assert!(check_morphism(&h, &t, &LinearMap::identity(4), true).is_ok());
    }
}
