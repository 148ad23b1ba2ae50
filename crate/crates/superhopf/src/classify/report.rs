use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    character_index, match_presentation, named_character, orbits, parse_element, to_coinvariant_coords,
    verify_automorphisms, AutomorphismSpec, ClassifyError,
};
use crate::analysis::{
    admissible_from, characters, fingerprint, fingerprints_equal, grouplikes, is_pointed, super_from, Fingerprint,
};
use crate::bosonize::{roundtrip_iso, Coinvariants};
use crate::catalog::tables::{expand_label, parse_scalar, table, CandidateSpec, Expected, Table, TableId};
use crate::catalog::{build_named, validate_datum, Presented};
use crate::duality::{bosonization_duality, dual, pairing_from_generators, pairing_to_morphism};
use crate::hopfcore::verify_axioms;
use crate::linalg::Vector;

#[derive(Clone, Debug, Serialize)]
pub struct RepresentativeRow {
    pub g: String,
    pub alpha: String,
    pub class: String,
    pub in_sd: bool,
    pub roundtrip: bool,
    pub matched: bool,
    pub failure: Option<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateReport {
    pub name: String,
    pub dim: usize,
    pub group_order: usize,
    pub characters: usize,
    /// (g label, character index) pairs.
    pub ad: Vec<(String, usize)>,
    pub sd: Vec<(String, usize)>,
    /// SD written with the character names of the table data, where known.
    pub sd_named: Vec<(String, String)>,
    pub orbits: Vec<Vec<usize>>,
    pub automorphisms: Vec<AutomorphismSpec<crate::CycRational>>,
    pub expected: Expected,
    /// The printed SD set agrees with the computed one (when printed).
    pub sd_printed_agrees: Option<bool>,
    /// Every super-datum round-trips and has coinvariants of half dimension.
    pub roundtrip_all: bool,
    /// Coinvariants along each orbit have equal fingerprints.
    pub orbit_fingerprints_agree: bool,
    pub representatives: Vec<RepresentativeRow>,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub name: String,
    pub group: String,
    pub datum: String,
    pub dual: String,
    pub found: bool,
    pub axioms: bool,
    pub pointed: bool,
    pub dual_pointed: bool,
    pub bosonization_duality: bool,
    pub fingerprint: Fingerprint<crate::CycRational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingRow {
    pub left: String,
    pub right: String,
    pub source: String,
    pub hopf_pairing: bool,
    pub non_degenerate: bool,
    pub isomorphism: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub table: TableId,
    pub p: Option<u64>,
    pub candidates: Vec<CandidateReport>,
    pub classes: Vec<ClassRow>,
    /// Classes reached by a representative, in order of first appearance.
    pub found_classes: Vec<String>,
    pub expected_classes: usize,
    pub fingerprints_distinct: bool,
    pub pairings: Vec<PairingRow>,
    pub mismatches: Vec<String>,
    pub passed: bool,
}

type Q = crate::CycRational;

fn candidate_report(t: &Table, spec: &CandidateSpec, p: u64) -> Result<(CandidateReport, Vec<String>), ClassifyError> {
    let a: Presented<Q> = build_named(&spec.name, Some(p))?;
    let h = &a.hopf;
    let pres = a.presentation.as_ref();
    let mut mismatches = vec![];
    let gl = grouplikes(h)?;
    let chars = characters(h, pres)?;
    let ad = admissible_from(h, &gl, &chars);
    let sd = super_from(h, pres, &ad)?;
    let autos = verify_automorphisms(&a, &spec.automorphisms, p)?;
    for x in &autos {
        if x.verified != x.expect_valid {
            mismatches.push(format!(
                "{}: automorphism {} verified = {}, expected {}",
                spec.name, x.name, x.verified, x.expect_valid
            ));
        }
    }
    let orb = orbits(&sd, &autos)?;
    let mut names: Vec<(String, usize)> = vec![];
    for (name, exps) in &spec.characters {
        let v = named_character(&a, exps, p)?;
        match character_index(&chars, &v) {
            Some(i) => names.push((name.clone(), i)),
            None => mismatches.push(format!("{}: named character {} is not a character", spec.name, name)),
        }
    }
    let char_name = |i: usize| names.iter().find(|(_, j)| *j == i).map(|(n, _)| n.clone()).unwrap_or(format!("#{}", i));
    let sd_named: Vec<(String, String)> = sd.iter().map(|d| (d.g_label.clone(), char_name(d.alpha))).collect();
    let sd_printed_agrees = match &spec.sd_printed {
        Some(list) => {
            let printed: BTreeSet<(String, String)> =
                list.iter().map(|(g, a)| Ok((expand_label(g, p)?, a.clone()))).collect::<Result<_, ClassifyError>>()?;
            Some(printed == sd_named.iter().cloned().collect())
        }
        None => None,
    };
    if let Some(n) = spec.expected.ad {
        if n != ad.len() {
            mismatches.push(format!("{}: |AD| = {}, table says {}", spec.name, ad.len(), n));
        }
    }
    if spec.expected.sd != sd.len() {
        mismatches.push(format!("{}: |SD| = {}, table says {}", spec.name, sd.len(), spec.expected.sd));
    }
    if let Some(n) = spec.expected.orbits {
        if n != orb.len() {
            mismatches.push(format!("{}: {} orbits, table says {}", spec.name, orb.len(), n));
        }
    }
    // every super-datum: round trip and fingerprint of the coinvariants
    let trips: Vec<Result<(Coinvariants<Q>, Fingerprint<Q>), String>> = sd
        .par_iter()
        .map(|d| {
            let (_, co) = roundtrip_iso(h, d).map_err(|e| e.to_string())?;
            if 2 * co.hopf.dim() != h.dim() {
                return Err(format!("coinvariants of dimension {}", co.hopf.dim()));
            }
            let f = fingerprint(&co.hopf).map_err(|e| e.to_string())?;
            Ok((co, f))
        })
        .collect();
    let mut roundtrip_all = true;
    for (d, r) in sd.iter().zip(&trips) {
        if let Err(e) = r {
            roundtrip_all = false;
            mismatches.push(format!("{}: round trip at ({}, #{}) fails: {}", spec.name, d.g_label, d.alpha, e));
        }
    }
    let orbit_fingerprints_agree = orb.iter().all(|o| {
        o.iter().all(|&i| match (&trips[o[0]], &trips[i]) {
            (Ok((_, f)), Ok((_, g))) => fingerprints_equal(f, g),
            _ => false,
        })
    });
    if !orbit_fingerprints_agree {
        mismatches.push(format!("{}: fingerprints differ inside an orbit", spec.name));
    }
    let mut reps = vec![];
    let mut classes_found = vec![];
    let mut covered = vec![false; orb.len()];
    for r in &spec.representatives {
        let g = expand_label(&r.g, p)?;
        let mut row = RepresentativeRow {
            g: g.clone(),
            alpha: r.alpha.clone(),
            class: r.class.clone(),
            in_sd: false,
            roundtrip: false,
            matched: false,
            failure: None,
            note: r.note.clone(),
        };
        let alpha = names.iter().find(|(n, _)| *n == r.alpha).map(|(_, i)| *i);
        let pos = sd.iter().position(|d| d.g_label == g && Some(d.alpha) == alpha);
        if let Some(k) = pos {
            row.in_sd = true;
            if let Some(o) = orb.iter().position(|o| o.contains(&k)) {
                if covered[o] {
                    mismatches.push(format!("{}: two representatives in one orbit", spec.name));
                }
                covered[o] = true;
            }
            if let Ok((co, _)) = &trips[k] {
                row.roundtrip = true;
                match match_representative(co, h, &r.class, &r.group_images, &r.skew_images, p) {
                    Ok(()) => {
                        row.matched = true;
                        classes_found.push(r.class.clone());
                    }
                    Err(e) => row.failure = Some(e.to_string()),
                }
            }
        } else {
            row.failure = Some("not a super-datum".into());
        }
        if !row.matched {
            mismatches.push(format!(
                "{}: representative ({}, {}) → {} not established: {}",
                spec.name,
                row.g,
                row.alpha,
                row.class,
                row.failure.clone().unwrap_or_default()
            ));
        }
        if t.class(&r.class).is_none() {
            mismatches.push(format!("{}: representative ({}, {}) gives {}, which is not in the table", spec.name, row.g, row.alpha, r.class));
        }
        reps.push(row);
    }
    if covered.iter().any(|c| !c) {
        mismatches.push(format!("{}: some orbit has no representative in the table data", spec.name));
    }
    let report = CandidateReport {
        name: spec.name.clone(),
        dim: h.dim(),
        group_order: gl.len(),
        characters: chars.len(),
        ad: ad.iter().map(|d| (d.g_label.clone(), d.alpha)).collect(),
        sd: sd.iter().map(|d| (d.g_label.clone(), d.alpha)).collect(),
        sd_named,
        orbits: orb,
        automorphisms: autos,
        expected: spec.expected.clone(),
        sd_printed_agrees,
        roundtrip_all,
        orbit_fingerprints_agree,
        representatives: reps,
        mismatches,
    };
    Ok((report, classes_found))
}

/// The coinvariants at a representative against the class 𝒜(Γ,𝒟), with
/// generator images given in the parent algebra.
fn match_representative(
    co: &Coinvariants<Q>,
    parent: &crate::hopfcore::HopfSuperAlgebra<Q>,
    class: &str,
    group_images: &[crate::catalog::tables::TermSpec],
    skew_images: &[crate::catalog::tables::TermSpec],
    p: u64,
) -> Result<(), ClassifyError> {
    let target: Presented<Q> = build_named(class, Some(p))?;
    let lift = |terms: &crate::catalog::tables::TermSpec| -> Result<Vector<Q>, ClassifyError> {
        let v = parse_element(parent, terms, p, None)?;
        to_coinvariant_coords(co, &v).ok_or_else(|| ClassifyError::Data(format!("{:?} is not coinvariant", terms)))
    };
    let gi = group_images.iter().map(lift).collect::<Result<Vec<_>, _>>()?;
    let si = skew_images.iter().map(lift).collect::<Result<Vec<_>, _>>()?;
    match_presentation(&target, &co.hopf, &gi, &si).map(|_| ())
}

fn class_row(t: &Table, name: &str, p: u64) -> Result<ClassRow, ClassifyError> {
    let c = t.class(name).ok_or_else(|| ClassifyError::Data(format!("unknown class {}", name)))?;
    let a: Presented<Q> = build_named(name, Some(p))?;
    let group = t.group(&c.group, p)?;
    let datum = c.datum_entries(p)?;
    validate_datum::<Q>(&group, &datum)
        .map_err(|v| ClassifyError::Data(format!("{}: datum violates condition ({})", name, v[0].condition)))?;
    let bd = bosonization_duality(&a.hopf);
    Ok(ClassRow {
        name: name.to_string(),
        group: c.group.clone(),
        datum: datum.iter().map(|d| d.describe(&group)).collect::<Vec<_>>().join(", "),
        dual: c.dual.clone(),
        found: false,
        axioms: verify_axioms(&a.hopf).passed(),
        pointed: is_pointed(&a.hopf),
        dual_pointed: is_pointed(&dual(&a.hopf)),
        bosonization_duality: bd.status.hopf_pairing && bd.status.non_degenerate && pairing_to_morphism(&bd).is_ok(),
        fingerprint: fingerprint(&a.hopf)?,
    })
}

fn pairing_row(spec: &crate::catalog::tables::PairingSpec, p: u64) -> Result<PairingRow, ClassifyError> {
    let l: Presented<Q> = build_named(&spec.left, Some(p))?;
    let r: Presented<Q> = build_named(&spec.right, Some(p))?;
    let values = spec
        .values
        .iter()
        .map(|(a, b, s)| Ok((a.clone(), b.clone(), parse_scalar::<Q>(s, p, None)?)))
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let pr = pairing_from_generators(&l, &r, &values).map_err(|e| ClassifyError::Data(e.to_string()))?;
    let iso = pr.status.hopf_pairing && pairing_to_morphism(&pr).is_ok();
    Ok(PairingRow {
        left: spec.left.clone(),
        right: spec.right.clone(),
        source: spec.source.clone(),
        hopf_pairing: pr.status.hopf_pairing,
        non_degenerate: pr.status.non_degenerate,
        isomorphism: iso && pr.status.non_degenerate,
        failure: pr.status.failure.clone(),
    })
}

/// Runs the three-step program on one table: super-data and orbits of every
/// candidate, coinvariants at the representatives matched against the
/// classes, then fingerprints, duality and pointedness of the classes.
/// Mismatches are collected, never fatal.
pub fn run_classification(id: TableId, p: Option<u64>) -> Result<ClassificationReport, ClassifyError> {
    let t = table(id);
    let pv = match id {
        TableId::TwoP => p.ok_or_else(|| ClassifyError::Data("the 2p table needs --p".into()))?,
        _ => 0,
    };
    let mut mismatches = vec![];
    let results: Vec<_> = t.candidates.par_iter().map(|c| candidate_report(t, c, pv)).collect();
    let mut candidates = vec![];
    let mut found: Vec<String> = vec![];
    for (spec, r) in t.candidates.iter().zip(results) {
        match r {
            Ok((rep, cls)) => {
                mismatches.extend(rep.mismatches.iter().cloned());
                for c in cls {
                    if !found.contains(&c) {
                        found.push(c);
                    }
                }
                candidates.push(rep);
            }
            Err(e) => mismatches.push(format!("{}: {}", spec.name, e)),
        }
    }
    let rows: Vec<_> = t.classes.par_iter().map(|c| class_row(t, &c.name, pv)).collect();
    let mut classes = vec![];
    for (c, r) in t.classes.iter().zip(rows) {
        match r {
            Ok(mut row) => {
                row.found = found.contains(&row.name);
                if !row.found {
                    mismatches.push(format!("{}: no candidate produces this class", row.name));
                }
                if !row.axioms {
                    mismatches.push(format!("{}: axioms fail", row.name));
                }
                if !row.pointed {
                    mismatches.push(format!("{}: not pointed", row.name));
                }
                let expect_dual_pointed = row.dual != "non-pointed";
                if row.dual_pointed != expect_dual_pointed {
                    mismatches.push(format!(
                        "{}: dual pointed = {}, table says {}",
                        row.name, row.dual_pointed, row.dual
                    ));
                }
                if !row.bosonization_duality {
                    mismatches.push(format!("{}: bosonization duality fails", row.name));
                }
                classes.push(row);
            }
            Err(e) => mismatches.push(format!("{}: {}", c.name, e)),
        }
    }
    // extra classes reached by representatives outside the table
    let mut extra_prints: Vec<(String, Fingerprint<Q>)> = vec![];
    for name in found.iter().filter(|n| t.class(n).is_none()) {
        let a: Presented<Q> = build_named(name, Some(pv))?;
        extra_prints.push((name.clone(), fingerprint(&a.hopf)?));
    }
    if found.len() != t.expected_classes {
        mismatches.push(format!("{} classes found, table lists {}", found.len(), t.expected_classes));
    }
    let prints: Vec<(&str, &Fingerprint<Q>)> = classes
        .iter()
        .map(|c| (c.name.as_str(), &c.fingerprint))
        .chain(extra_prints.iter().map(|(n, f)| (n.as_str(), f)))
        .collect();
    let mut fingerprints_distinct = true;
    for i in 0..prints.len() {
        for j in i + 1..prints.len() {
            if fingerprints_equal(prints[i].1, prints[j].1) {
                fingerprints_distinct = false;
                mismatches.push(format!("{} and {} have equal fingerprints", prints[i].0, prints[j].0));
            }
        }
    }
    let mut pairings = vec![];
    for spec in &t.pairings {
        match pairing_row(spec, pv) {
            Ok(row) => {
                if !(row.hopf_pairing && row.non_degenerate && row.isomorphism) {
                    mismatches.push(format!("pairing {} × {} fails: {:?}", row.left, row.right, row.failure));
                }
                let partner = t.class(&row.left).map(|c| c.dual.clone()).unwrap_or_default();
                let consistent = (partner == "self" && row.left == row.right) || partner == row.right;
                if !consistent {
                    mismatches.push(format!("pairing {} × {} disagrees with the dual column", row.left, row.right));
                }
                pairings.push(row);
            }
            Err(e) => mismatches.push(format!("pairing {} × {}: {}", spec.left, spec.right, e)),
        }
    }
    for c in &t.classes {
        if c.dual == "non-pointed" {
            continue;
        }
        let partner = if c.dual == "self" { c.name.clone() } else { c.dual.clone() };
        let covered = t
            .pairings
            .iter()
            .any(|s| (s.left == c.name && s.right == partner) || (s.right == c.name && s.left == partner));
        if !covered {
            mismatches.push(format!("{}: no pairing with {} in the data", c.name, partner));
        }
    }
    for name in &t.non_pointed_duals {
        if let Some(row) = classes.iter().find(|c| &c.name == name) {
            if row.dual_pointed {
                mismatches.push(format!("{}: dual is pointed", name));
            }
        }
    }
    let passed = mismatches.is_empty();
    Ok(ClassificationReport {
        table: id,
        p,
        candidates,
        classes,
        found_classes: found,
        expected_classes: t.expected_classes,
        fingerprints_distinct,
        pairings,
        mismatches,
        passed,
    })
}

/// A text rendering in the layout of the tables.
pub fn render_report(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "table {}{}: {} classes found, {} expected",
        r.table,
        r.p.map(|p| format!(" (p = {})", p)).unwrap_or_default(),
        r.found_classes.len(),
        r.expected_classes
    );
    let _ = writeln!(s, "{:<12} {:<7} {:<40} {:<12} status", "class", "Γ", "𝒟", "dual");
    for c in &r.classes {
        let ok = c.found && c.axioms && c.pointed && c.bosonization_duality && c.dual_pointed == (c.dual != "non-pointed");
        let _ = writeln!(s, "{:<12} {:<7} {:<40} {:<12} {}", c.name, c.group, c.datum, c.dual, if ok { "ok" } else { "MISMATCH" });
    }
    for extra in r.found_classes.iter().filter(|n| !r.classes.iter().any(|c| &c.name == *n)) {
        let _ = writeln!(s, "{:<12} {:<7} {:<40} {:<12} EXTRA", extra, "", "(not in table)", "");
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "{:<16} {:>4} {:>4} {:>7}  expected", "candidate", "|AD|", "|SD|", "orbits");
    for c in &r.candidates {
        let e = &c.expected;
        let _ = writeln!(
            s,
            "{:<16} {:>4} {:>4} {:>7}  ad {} sd {} orbits {}",
            c.name,
            c.ad.len(),
            c.sd.len(),
            c.orbits.len(),
            e.ad.map(|x| x.to_string()).unwrap_or("-".into()),
            e.sd,
            e.orbits.map(|x| x.to_string()).unwrap_or("-".into())
        );
    }
    let _ = writeln!(s);
    for p in &r.pairings {
        let _ = writeln!(
            s,
            "pairing {} × {} ({}): {}",
            p.left,
            p.right,
            p.source,
            if p.hopf_pairing && p.non_degenerate && p.isomorphism { "non-degenerate Hopf pairing" } else { "FAILS" }
        );
    }
    let _ = writeln!(s, "fingerprints pairwise distinct: {}", r.fingerprints_distinct);
    if r.mismatches.is_empty() {
        let _ = writeln!(s, "result: PASS");
    } else {
        let _ = writeln!(s, "result: {} mismatch(es)", r.mismatches.len());
        for m in &r.mismatches {
            let _ = writeln!(s, "  - {}", m);
        }
    }
    s
}
