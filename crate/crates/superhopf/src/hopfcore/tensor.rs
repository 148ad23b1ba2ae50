use super::{HopfSuperAlgebra, Parts};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::scalars::sign;

/// The one-dimensional Hopf algebra 𝕜.
pub fn trivial_hopf<F: Field>(conductor: u64) -> HopfSuperAlgebra<F> {
    HopfSuperAlgebra::from_parts(Parts {
        labels: vec!["1".into()],
        parity: vec![0],
        mult: vec![(0, 0, 0, F::one())],
        unit: vec![F::one()],
        comult: vec![(0, 0, 0, F::one())],
        counit: vec![F::one()],
        antipode: Some(Matrix::identity(1)),
        conductor,
    })
    .expect("trivial Hopf algebra")
}

fn join_label(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", _) => b.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{}⊗{}", a, b),
    }
}

/// H⊗K with Koszul signs; e_i⊗f_j sits at index i·dim(K) + j.
pub fn tensor_product<F: Field>(h: &HopfSuperAlgebra<F>, k: &HopfSuperAlgebra<F>) -> HopfSuperAlgebra<F> {
    let (n, m) = (h.dim(), k.dim());
    let idx = |i: usize, j: usize| i * m + j;
    let mut labels = Vec::with_capacity(n * m);
    let mut parity = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            labels.push(join_label(h.label(i), k.label(j)));
            parity.push(((h.parity_of(i) + k.parity_of(j)) % 2) as u8);
        }
    }
    let mut mult = Vec::new();
    for (a, a2, a3, c1) in h.mult_entries() {
        for (b, b2, b3, c2) in k.mult_entries() {
            // (e_a⊗f_b)(e_a2⊗f_b2) = (-1)^{|f_b||e_a2|} e_a e_a2 ⊗ f_b f_b2
            let s: F = sign(k.parity_of(b) * h.parity_of(a2));
            mult.push((idx(a, b), idx(a2, b2), idx(a3, b3), s.mul_ref(&c1.mul_ref(&c2))));
        }
    }
    let mut comult = Vec::new();
    for (a1, a2, a, c1) in h.comult_entries() {
        for (b1, b2, b, c2) in k.comult_entries() {
            // Δ(e⊗f) = (-1)^{|e_(2)||f_(1)|} (e_(1)⊗f_(1))⊗(e_(2)⊗f_(2))
            let s: F = sign(h.parity_of(a2) * k.parity_of(b1));
            comult.push((idx(a1, b1), idx(a2, b2), idx(a, b), s.mul_ref(&c1.mul_ref(&c2))));
        }
    }
    let mut unit = vec![F::zero(); n * m];
    let mut counit = vec![F::zero(); n * m];
    for i in 0..n {
        for j in 0..m {
            unit[idx(i, j)] = h.unit()[i].mul_ref(&k.unit()[j]);
            counit[idx(i, j)] = h.counit()[i].mul_ref(&k.counit()[j]);
        }
    }
    let mut antipode = Matrix::zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..m {
            let si = h.antipode().column(i);
            let sj = k.antipode().column(j);
            for (a, x) in si.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (b, y) in sj.iter().enumerate() {
                    if !y.is_zero() {
                        antipode.set(idx(a, b), idx(i, j), x.mul_ref(y));
                    }
                }
            }
        }
    }
    HopfSuperAlgebra::from_parts(Parts {
        labels,
        parity,
        mult,
        unit,
        comult,
        counit,
        antipode: Some(antipode),
        conductor: num_integer::lcm(h.conductor(), k.conductor()),
    })
    .expect("tensor product of well-formed algebras")
}
