//! The shared structure-constant JSON format. Scalars are exact strings
//! (`a0 + a1*z @N` for ℚ(ζ_N)); purely even algebras have all-zero parity.
//!
//! ```json
//! { "conductor": 4, "dim": 4, "labels": [...], "parity": [0, 0, 1, 1],
//!   "mult": [[i, j, k, "c"], ...], "unit": [...],
//!   "comult": [[i, j, k, "d"], ...], "counit": [...],
//!   "antipode": [[row 0], [row 1], ...] }
//! ```
//! `mult` entries read e_i e_j ∋ c e_k, `comult` entries Δ(e_k) ∋ d e_i⊗e_j,
//! and `antipode[r][k]` is the coefficient of e_r in S(e_k).

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;
use crate::hopfcore::{HopfSuperAlgebra, Parts, StructureError};
use crate::linalg::{Matrix, Vector};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON at {path}: {reason}")]
    Schema { path: String, reason: String },
    #[error("structural error at {path}: {reason}")]
    Structure { path: String, reason: String },
    #[error(transparent)]
    Build(#[from] StructureError),
}

impl JsonError {
    /// True for errors in the data itself rather than in the document shape.
    pub fn is_structural(&self) -> bool {
        !matches!(self, JsonError::Schema { .. })
    }
}

pub type Entry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDoc {
    pub conductor: u64,
    pub dim: usize,
    pub labels: Vec<String>,
    pub parity: Vec<u8>,
    pub mult: Vec<Entry>,
    pub unit: Vec<String>,
    pub comult: Vec<Entry>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

fn schema(path: impl Into<String>, reason: impl ToString) -> JsonError {
    JsonError::Schema { path: path.into(), reason: reason.to_string() }
}

fn structure(path: impl Into<String>, reason: impl ToString) -> JsonError {
    JsonError::Structure { path: path.into(), reason: reason.to_string() }
}

fn strings<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn to_doc<F: Field>(h: &HopfSuperAlgebra<F>) -> HopfDoc {
    let entry = |(i, j, k, c): (usize, usize, usize, F)| (i, j, k, c.to_string());
    HopfDoc {
        conductor: h.conductor(),
        dim: h.dim(),
        labels: h.labels().to_vec(),
        parity: h.parity().to_vec(),
        mult: h.mult_entries().into_iter().map(entry).collect(),
        unit: strings(h.unit()),
        comult: h.comult_entries().into_iter().map(entry).collect(),
        counit: strings(h.counit()),
        antipode: matrix_to_rows(h.antipode()),
    }
}

fn scalar<F: FromStr>(s: &str, path: String) -> Result<F, JsonError>
where
    F::Err: std::fmt::Display,
{
    s.parse().map_err(|e: F::Err| schema(path, e))
}

fn vector<F: FromStr>(v: &[String], path: &str) -> Result<Vector<F>, JsonError>
where
    F::Err: std::fmt::Display,
{
    v.iter().enumerate().map(|(i, s)| scalar(s, format!("{}/{}", path, i))).collect()
}

fn entries<F: FromStr>(v: &[Entry], n: usize, path: &str) -> Result<Vec<(usize, usize, usize, F)>, JsonError>
where
    F::Err: std::fmt::Display,
{
    v.iter()
        .enumerate()
        .map(|(idx, (i, j, k, s))| {
            if *i >= n || *j >= n || *k >= n {
                return Err(structure(format!("{}/{}", path, idx), format!("index out of range for dim {}", n)));
            }
            Ok((*i, *j, *k, scalar(s, format!("{}/{}/3", path, idx))?))
        })
        .collect()
}

pub fn from_doc<F: Field + FromStr>(doc: &HopfDoc) -> Result<HopfSuperAlgebra<F>, JsonError>
where
    F::Err: std::fmt::Display,
{
    let n = doc.dim;
    for (name, len) in [
        ("/labels", doc.labels.len()),
        ("/parity", doc.parity.len()),
        ("/unit", doc.unit.len()),
        ("/counit", doc.counit.len()),
        ("/antipode", doc.antipode.len()),
    ] {
        if len != n {
            return Err(schema(name, format!("expected {} entries, got {}", n, len)));
        }
    }
    if let Some(i) = doc.parity.iter().position(|&p| p > 1) {
        return Err(schema(format!("/parity/{}", i), "parity must be 0 or 1"));
    }
    let p = |i: usize| doc.parity[i] as usize;
    let mult = entries::<F>(&doc.mult, n, "/mult")?;
    let comult = entries::<F>(&doc.comult, n, "/comult")?;
    for (path, list) in [("/mult", &mult), ("/comult", &comult)] {
        if let Some(idx) = list.iter().position(|(i, j, k, c)| !c.is_zero() && p(*k) != (p(*i) + p(*j)) % 2) {
            let (i, j, k, _) = &list[idx];
            return Err(structure(
                format!("{}/{}", path, idx),
                format!("parities {}+{} do not match {}", p(*i), p(*j), p(*k)),
            ));
        }
    }
    let antipode = matrix_from_rows::<F>(&doc.antipode, "/antipode")?;
    if antipode.cols != n {
        return Err(schema("/antipode/0", format!("expected {} columns", n)));
    }
    let h = HopfSuperAlgebra::from_parts(Parts {
        labels: doc.labels.clone(),
        parity: doc.parity.clone(),
        mult,
        unit: vector(&doc.unit, "/unit")?,
        comult,
        counit: vector(&doc.counit, "/counit")?,
        antipode: Some(antipode),
        conductor: doc.conductor,
    })?;
    if let Some(reason) = h.parity_violation() {
        return Err(structure("", reason));
    }
    Ok(h)
}

pub fn matrix_to_rows<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows).map(|i| strings(m.row(i))).collect()
}

pub fn matrix_from_rows<F: Field + FromStr>(rows: &[Vec<String>], path: &str) -> Result<Matrix<F>, JsonError>
where
    F::Err: std::fmt::Display,
{
    let cols = rows.first().map_or(0, |r| r.len());
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != cols {
                return Err(schema(format!("{}/{}", path, i), format!("expected {} entries", cols)));
            }
            vector(r, &format!("{}/{}", path, i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed, cols))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, JsonError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(if path == "." { "(root)".to_string() } else { path }, e.into_inner())
    })
}

pub fn serialize<F: Field>(h: &HopfSuperAlgebra<F>) -> String {
    serde_json::to_string_pretty(&to_doc(h)).expect("documents are plain data")
}

pub fn deserialize<F: Field + FromStr>(text: &str) -> Result<HopfSuperAlgebra<F>, JsonError>
where
    F::Err: std::fmt::Display,
{
    from_doc(&parse_json::<HopfDoc>(text)?)
}

pub fn serialize_matrix<F: Field>(m: &Matrix<F>) -> String {
    serde_json::to_string_pretty(&matrix_to_rows(m)).expect("matrices are plain data")
}

pub fn deserialize_matrix<F: Field + FromStr>(text: &str) -> Result<Matrix<F>, JsonError>
where
    F::Err: std::fmt::Display,
{
    matrix_from_rows(&parse_json::<Vec<Vec<String>>>(text)?, "")
}
