//! Dual Hopf superalgebras and Hopf pairings.

mod pairing;

pub use pairing::{
    bosonization_duality, evaluation_iso, pairing_from_generators, pairing_to_morphism, verify_hopf_pairing,
    HopfPairing, PairingError, PairingStatus,
};

use crate::field::Field;
use crate::hopfcore::{HopfSuperAlgebra, Parts};

/// H^* in the dual basis: multiplication and comultiplication transposed,
/// unit and counit exchanged, antipode transposed. No extra signs.
pub fn dual<F: Field>(h: &HopfSuperAlgebra<F>) -> HopfSuperAlgebra<F> {
    // both tables are stored as (i, j, k, c): e_i e_j ∋ c e_k, Δ(e_k) ∋ c e_i⊗e_j
    let mult = h.comult_entries();
    let comult = h.mult_entries();
    let parts = Parts {
        labels: h.labels().iter().map(|l| dual_label(l)).collect(),
        parity: h.parity().to_vec(),
        mult,
        unit: h.counit().clone(),
        comult,
        counit: h.unit().clone(),
        antipode: Some(h.antipode().transpose()),
        conductor: h.conductor(),
    };
    HopfSuperAlgebra::from_parts(parts).expect("transposed structure is well formed")
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) if !base.is_empty() => base.to_string(),
        _ => format!("{}*", l),
    }
}
