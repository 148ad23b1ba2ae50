//! The expected classification tables, loaded from `data/tables.json`.
//!
//! Integers in the data may be expressions in the odd prime `p`
//! ("(p+1)/2", "2*p"); labels may embed such expressions in braces
//! ("c^{p}"). Scalars use the small grammar of [`parse_scalar`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::datum::DatumEntry;
use super::group::GroupData;
use super::CatalogError;
use crate::field::RootField;

const TABLES_JSON: &str = include_str!("../../data/tables.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableId {
    #[serde(rename = "4")]
    Four,
    #[serde(rename = "8")]
    Eight,
    #[serde(rename = "2p")]
    TwoP,
}

impl std::str::FromStr for TableId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "4" => Ok(TableId::Four),
            "8" => Ok(TableId::Eight),
            "2p" => Ok(TableId::TwoP),
            _ => Err(format!("unknown table '{}', expected 4, 8 or 2p", s)),
        }
    }
}

impl std::fmt::Display for TableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TableId::Four => "4",
            TableId::Eight => "8",
            TableId::TwoP => "2p",
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Expr(String),
}

impl Num {
    pub fn eval(&self, p: u64) -> Result<i64, CatalogError> {
        match self {
            Num::Int(n) => Ok(*n),
            Num::Expr(s) => eval_expr(s, p),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<Num>,
    pub names: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatumSpec {
    pub g: Vec<Num>,
    pub chi: Vec<Num>,
    pub mu: u8,
    pub eps: u8,
}

impl DatumSpec {
    pub fn eval(&self, p: u64) -> Result<DatumEntry, CatalogError> {
        let g = self.g.iter().map(|n| n.eval(p).map(|v| v as u64)).collect::<Result<Vec<_>, _>>()?;
        let chi = self.chi.iter().map(|n| n.eval(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(DatumEntry { g, chi, mu: self.mu, eps: self.eps })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassSpec {
    pub name: String,
    pub group: String,
    pub datum: Vec<DatumSpec>,
    /// "self", another class name, or "non-pointed".
    pub dual: String,
    #[serde(default)]
    pub description: String,
    /// The datum as printed when it differs from the one used.
    #[serde(default)]
    pub printed_datum: Option<Vec<DatumSpec>>,
    #[serde(default)]
    pub note: Option<String>,
}

impl ClassSpec {
    pub fn datum_entries(&self, p: u64) -> Result<Vec<DatumEntry>, CatalogError> {
        self.datum.iter().map(|d| d.eval(p)).collect()
    }

    pub fn printed_entries(&self, p: u64) -> Result<Option<Vec<DatumEntry>>, CatalogError> {
        self.printed_datum.as_ref().map(|v| v.iter().map(|d| d.eval(p)).collect()).transpose()
    }
}

/// A linear combination written as [scalar, label] pairs.
pub type TermSpec = Vec<(String, String)>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AutoSpec {
    pub name: String,
    pub group: Vec<TermSpec>,
    pub skew: Vec<TermSpec>,
    /// Name of the scalar parameter for families (sampled at −1 and 2).
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default = "yes")]
    pub expect_valid: bool,
    #[serde(default)]
    pub note: Option<String>,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepSpec {
    pub g: String,
    pub alpha: String,
    /// Target class; the coinvariants are matched against its 𝒜(Γ,𝒟).
    pub class: String,
    pub group_images: Vec<TermSpec>,
    pub skew_images: Vec<TermSpec>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default)]
    pub ad: Option<usize>,
    pub sd: usize,
    #[serde(default)]
    pub orbits: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CandidateSpec {
    pub name: String,
    /// Expected counts as stated in the literature.
    pub expected: Expected,
    /// Named characters by exponents on the group generators.
    #[serde(default)]
    pub characters: BTreeMap<String, Vec<Num>>,
    /// Super-data as printed, when a listed set is available.
    #[serde(default)]
    pub sd_printed: Option<Vec<(String, String)>>,
    #[serde(default)]
    pub automorphisms: Vec<AutoSpec>,
    #[serde(default)]
    pub representatives: Vec<RepSpec>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairingSpec {
    pub left: String,
    pub right: String,
    /// ⟨left generator, right generator⟩ = scalar; unlisted pairs are 0.
    pub values: Vec<(String, String, String)>,
    /// "explicit" when printed, "derived" when only the duality is claimed.
    pub source: String,
    /// The values as printed when they differ from `values`.
    #[serde(default)]
    pub printed_values: Option<Vec<(String, String, String)>>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table {
    pub id: TableId,
    pub dim: String,
    pub expected_classes: usize,
    pub groups: BTreeMap<String, GroupSpec>,
    pub classes: Vec<ClassSpec>,
    pub candidates: Vec<CandidateSpec>,
    pub pairings: Vec<PairingSpec>,
    #[serde(default)]
    pub non_pointed_duals: Vec<String>,
}

impl Table {
    pub fn group(&self, name: &str, p: u64) -> Result<GroupData, CatalogError> {
        let g = self.groups.get(name).ok_or_else(|| CatalogError::Data(format!("unknown group {}", name)))?;
        let factors = g.factors.iter().map(|n| n.eval(p).map(|v| v as u64)).collect::<Result<Vec<_>, _>>()?;
        Ok(GroupData { factors, names: g.names.clone() })
    }

    pub fn class(&self, name: &str) -> Option<&ClassSpec> {
        self.classes.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Deserialize)]
struct TablesFile {
    #[allow(dead_code)]
    version: u32,
    tables: Vec<Table>,
}

pub fn all_tables() -> &'static [Table] {
    static T: OnceLock<Vec<Table>> = OnceLock::new();
    T.get_or_init(|| {
        let f: TablesFile = serde_json::from_str(TABLES_JSON).expect("embedded table data parses");
        f.tables
    })
}

pub fn table(id: TableId) -> &'static Table {
    all_tables().iter().find(|t| t.id == id).expect("every table id has data")
}

pub fn find_class(name: &str) -> Option<(&'static Table, &'static ClassSpec)> {
    all_tables().iter().find_map(|t| t.class(name).map(|c| (t, c)))
}

/// Integer expressions over `p`: + - * / with parentheses.
pub fn eval_expr(s: &str, p: u64) -> Result<i64, CatalogError> {
    let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let v = expr(&toks, &mut pos, p as i64)?;
    if pos != toks.len() {
        return Err(CatalogError::Data(format!("trailing input in '{}'", s)));
    }
    Ok(v)
}

fn expr(t: &[char], pos: &mut usize, p: i64) -> Result<i64, CatalogError> {
    let mut v = term(t, pos, p)?;
    while *pos < t.len() && (t[*pos] == '+' || t[*pos] == '-') {
        let op = t[*pos];
        *pos += 1;
        let r = term(t, pos, p)?;
        v = if op == '+' { v + r } else { v - r };
    }
    Ok(v)
}

fn term(t: &[char], pos: &mut usize, p: i64) -> Result<i64, CatalogError> {
    let mut v = atom(t, pos, p)?;
    while *pos < t.len() && (t[*pos] == '*' || t[*pos] == '/') {
        let op = t[*pos];
        *pos += 1;
        let r = atom(t, pos, p)?;
        v = if op == '*' {
            v * r
        } else {
            if r == 0 || v % r != 0 {
                return Err(CatalogError::Data("inexact division in expression".into()));
            }
            v / r
        };
    }
    Ok(v)
}

fn atom(t: &[char], pos: &mut usize, p: i64) -> Result<i64, CatalogError> {
    match t.get(*pos) {
        Some('(') => {
            *pos += 1;
            let v = expr(t, pos, p)?;
            if t.get(*pos) != Some(&')') {
                return Err(CatalogError::Data("unbalanced parenthesis".into()));
            }
            *pos += 1;
            Ok(v)
        }
        Some('p') => {
            *pos += 1;
            Ok(p)
        }
        Some('-') => {
            *pos += 1;
            Ok(-atom(t, pos, p)?)
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while *pos < t.len() && t[*pos].is_ascii_digit() {
                *pos += 1;
            }
            Ok(t[start..*pos].iter().collect::<String>().parse().unwrap())
        }
        _ => Err(CatalogError::Data("malformed expression".into())),
    }
}

/// Replaces every `{expr}` in a label by its value.
pub fn expand_label(s: &str, p: u64) -> Result<String, CatalogError> {
    let mut out = String::new();
    let mut rest = s;
    while let Some(i) = rest.find('{') {
        out.push_str(&rest[..i]);
        let j = rest[i..].find('}').ok_or_else(|| CatalogError::Data(format!("unclosed brace in '{}'", s)))? + i;
        out.push_str(&eval_expr(&rest[i + 1..j], p)?.to_string());
        rest = &rest[j + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Scalars in the data: `[-][n[/d]][*]z(N,k)` for n/d·ζ_N^k, a plain
/// rational, or a family parameter name.
pub fn parse_scalar<F: RootField>(s: &str, p: u64, param: Option<(&str, &F)>) -> Result<F, CatalogError> {
    let s = s.trim();
    if let Some((name, v)) = param {
        if s == name {
            return Ok(v.clone());
        }
        if s.strip_prefix('-') == Some(name) {
            return Ok(-v.clone());
        }
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (coef, root) = match body.find("z(") {
        Some(i) => (body[..i].trim_end_matches('*'), Some(&body[i..])),
        None => (body, None),
    };
    let mut v = if coef.is_empty() {
        F::one()
    } else {
        let (n, d) = match coef.split_once('/') {
            Some((n, d)) => (eval_expr(n, p)?, eval_expr(d, p)?),
            None => (eval_expr(coef, p)?, 1),
        };
        F::from_ratio(n, d)
    };
    if let Some(r) = root {
        let inner = r.strip_prefix("z(").and_then(|r| r.strip_suffix(')')).ok_or_else(|| CatalogError::Data(format!("bad scalar '{}'", s)))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| CatalogError::Data(format!("bad scalar '{}'", s)))?;
        let n = eval_expr(a, p)?;
        let k = eval_expr(b, p)?;
        let z = F::zeta(n as u64, k).ok_or_else(|| CatalogError::Data(format!("ζ_{} not in the scalar field", n)))?;
        v = v.mul_ref(&z);
    }
    Ok(if neg { -v } else { v })
}
