use serde::{Deserialize, Serialize};

use super::group::{CharExp, GroupData};
use super::presentation::{CrossRel, PresentationError, SkewGen, SkewPresentation};
use super::Presented;
use crate::field::RootField;

/// One entry (g_i, χ_i, μ_i; ε_i) of a datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumEntry {
    pub g: Vec<u64>,
    pub chi: CharExp,
    pub mu: u8,
    pub eps: u8,
}

impl DatumEntry {
    pub fn new(g: &[u64], chi: &[i64], mu: u8, eps: u8) -> Self {
        DatumEntry { g: g.to_vec(), chi: chi.to_vec(), mu, eps }
    }

    pub fn describe(&self, group: &GroupData) -> String {
        format!("({}, {}, {}; {})", group.label(&self.g), char_label(group, &self.chi), self.mu, self.eps)
    }
}

/// χ with exponents k renders as a product of the dual generators.
pub fn char_label(group: &GroupData, chi: &[i64]) -> String {
    let mut s = String::new();
    for (i, &n) in group.factors.iter().enumerate() {
        let k = chi[i].rem_euclid(n as i64);
        let name = if group.rank() == 1 { "χ".to_string() } else { format!("χ{}", i + 1) };
        match k {
            0 => {}
            1 => s.push_str(&name),
            _ => s.push_str(&format!("{}^{}", name, k)),
        }
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DatumViolation {
    pub condition: u8,
    pub indices: Vec<usize>,
    pub detail: String,
}

/// N_i = ord((-1)^{ε_i} χ_i(g_i)).
pub fn nilpotency_orders<F: RootField>(group: &GroupData, datum: &[DatumEntry]) -> Vec<Option<u64>> {
    datum
        .iter()
        .map(|d| {
            let v: F = group.char_value(&d.chi, &d.g);
            let v = if d.eps == 1 { -v } else { v };
            v.unity_order()
        })
        .collect()
}

/// Checks conditions (1)–(3); on success returns the N_i.
pub fn validate_datum<F: RootField>(group: &GroupData, datum: &[DatumEntry]) -> Result<Vec<u64>, Vec<DatumViolation>> {
    let mut out = Vec::new();
    for (i, d) in datum.iter().enumerate() {
        if d.g.len() != group.rank() || d.chi.len() != group.rank() || d.mu > 1 || d.eps > 1 {
            out.push(DatumViolation { condition: 0, indices: vec![i], detail: "malformed entry".into() });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }
    let ns = nilpotency_orders::<F>(group, datum);
    for (i, d) in datum.iter().enumerate() {
        let n = ns[i].expect("character values are roots of unity");
        if d.eps == 1 && !n.is_multiple_of(2) {
            out.push(DatumViolation {
                condition: 1,
                indices: vec![i],
                detail: format!("odd generator with N = {}", n),
            });
        }
        if d.mu != 0 && !group.char_is_trivial(&group.char_pow(&d.chi, n as i64)) {
            out.push(DatumViolation { condition: 2, indices: vec![i], detail: "μ ≠ 0 but χ^N ≠ 1".into() });
        }
    }
    let e = group.exponent() as i64;
    for i in 0..datum.len() {
        for j in i + 1..datum.len() {
            let t = group.char_exp(&datum[i].chi, &datum[j].g) + group.char_exp(&datum[j].chi, &datum[i].g);
            if t % e != 0 {
                out.push(DatumViolation {
                    condition: 3,
                    indices: vec![i, j],
                    detail: "χ_i(g_j)χ_j(g_i) ≠ 1".into(),
                });
            }
        }
    }
    if out.is_empty() {
        Ok(ns.into_iter().map(|n| n.unwrap()).collect())
    } else {
        Err(out)
    }
}

fn skew_names(theta: usize) -> Vec<String> {
    if theta == 1 {
        vec!["z".into()]
    } else {
        (1..=theta).map(|i| format!("z{}", i)).collect()
    }
}

/// The presentation of 𝒜(Γ,𝒟).
pub fn datum_presentation<F: RootField>(
    group: &GroupData,
    datum: &[DatumEntry],
) -> Result<SkewPresentation<F>, PresentationError> {
    let ns = validate_datum::<F>(group, datum).map_err(|v| {
        PresentationError::Invalid(
            v.iter().map(|x| format!("condition ({}) at {:?}: {}", x.condition, x.indices, x.detail)).collect::<Vec<_>>().join("; "),
        )
    })?;
    let conductor = num_integer::lcm(2, group.exponent());
    let names = skew_names(datum.len());
    let gens = datum
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let n = ns[i];
            let mut pv = Vec::new();
            if d.mu == 1 {
                let h = group.index(&group.pow(&d.g, n as i64));
                if h != 0 {
                    pv.push((0, F::one()));
                    pv.push((h, -F::one()));
                }
            }
            SkewGen {
                name: names[i].clone(),
                parity: d.eps,
                power: n as usize,
                power_value: pv,
                conj: d.chi.clone(),
                loc: group.index(&d.g),
            }
        })
        .collect();
    let mut cross = Vec::new();
    for i in 0..datum.len() {
        for j in i + 1..datum.len() {
            // z_i z_j = (-1)^{ε_iε_j} χ_j(g_i) z_j z_i
            let mut c: F = group.char_value(&datum[j].chi, &datum[i].g);
            if datum[i].eps * datum[j].eps == 1 {
                c = -c;
            }
            cross.push(CrossRel { i, j, q: c.inv().expect("root of unity"), t: vec![] });
        }
    }
    Ok(SkewPresentation { group: group.clone(), gens, cross, coproduct: None, conductor })
}

pub fn build_a_gamma_d<F: RootField>(group: &GroupData, datum: &[DatumEntry]) -> Result<Presented<F>, PresentationError> {
    Presented::from_presentation(datum_presentation(group, datum)?)
}
