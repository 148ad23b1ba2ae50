//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use superhopf::analysis::*;
use superhopf::bosonize::{bosonize, roundtrip_iso};
use superhopf::catalog::tables::{all_tables, parse_scalar, table};
use superhopf::catalog::*;
use superhopf::classify::{match_presentation, run_classification, ClassificationReport};
use superhopf::duality::*;
use superhopf::hopfcore::{jacobson_radical, nilpotent_ideal_search, semisimple_abelian_rank, verify_axioms, HopfSuperAlgebra};
use superhopf::linalg::{sub_vec, unit_vec, Matrix, Subspace};
use superhopf::CycRational as Q;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn entries_at(p: u64) -> Vec<String> {
    catalog_list()
        .into_iter()
        .filter(|e| !e.printed_variant && (p == 3 || e.dim.contains('p')))
        .map(|e| e.name)
        .collect()
}

fn class_names() -> Vec<String> {
    all_tables().iter().flat_map(|t| t.classes.iter().map(|c| c.name.clone())).collect()
}

fn axiom_suite() -> Outcome {
    let mut checked = 0;
    for p in [3u64, 5] {
        let names = entries_at(p);
        let fails: Vec<String> = names
            .par_iter()
            .filter_map(|n| {
                let h = build_named::<Q>(n, Some(p)).ok()?.hopf;
                let r = verify_axioms(&h);
                (!r.passed()).then(|| format!("{} (p={}): {:?}", n, p, r.failures.first()))
            })
            .collect();
        ensure!(fails.is_empty(), "{}", fails.join("; "));
        for n in &names {
            ensure!(build_named::<Q>(n, Some(p)).is_ok(), "{} does not build", n);
        }
        checked += names.len();
    }
    for required in ["Taft_2", "Taft_3", "Taft_4", "Taft_6", "ext0", "ext1", "ext2", "ext3", "kD4", "kQ8", "A_exotic"] {
        ensure!(entries_at(3).iter().any(|n| n == required), "{} missing from the catalog", required);
    }
    Ok(format!("{} algebras verified", checked))
}

fn pairs_verified(r: &ClassificationReport) -> Result<(), String> {
    for c in &r.classes {
        if c.dual == "self" || table(r.table).class(&c.dual).is_some() {
            let partner = if c.dual == "self" { c.name.clone() } else { c.dual.clone() };
            let ok = r.pairings.iter().any(|p| {
                p.hopf_pairing
                    && p.non_degenerate
                    && p.isomorphism
                    && ((p.left == c.name && p.right == partner) || (p.right == c.name && p.left == partner))
            });
            ensure!(ok, "no verified pairing for {} and {}", c.name, partner);
        }
    }
    Ok(())
}

fn table_four() -> Outcome {
    let r = run_classification(TableId::Four, None).map_err(|e| e.to_string())?;
    ensure!(r.passed, "mismatches: {:?}", r.mismatches);
    ensure!(r.found_classes.len() == 4, "{} classes", r.found_classes.len());
    ensure!(r.fingerprints_distinct, "fingerprints collide");
    let duals: Vec<(&str, &str)> = r.classes.iter().map(|c| (c.name.as_str(), c.dual.as_str())).collect();
    ensure!(
        duals == [("H_4^(1)", "self"), ("H_4^(2)", "self"), ("H_4^(3)", "H_4^(4)"), ("H_4^(4)", "H_4^(3)")],
        "dual column {:?}",
        duals
    );
    pairs_verified(&r)?;
    Ok("4 classes, duals (1,1) (2,2) (3,4)".into())
}

fn table_eight() -> Outcome {
    let r = run_classification(TableId::Eight, None).map_err(|e| e.to_string())?;
    let expected: [(&str, usize, Option<usize>); 14] = [
        ("A^(1)", 1, Some(1)),
        ("A^(2)", 3, Some(3)),
        ("A^(3)", 2, Some(1)),
        ("A^(4)", 2, Some(1)),
        ("A^(5)", 2, Some(1)),
        ("A^(6)", 0, None),
        ("A^(7)", 10, Some(4)),
        ("A^(8)", 0, None),
        ("A^(9)", 2, Some(1)),
        ("A^(10)", 0, None),
        ("A^(11)", 4, Some(4)),
        ("A^(12)", 2, Some(1)),
        ("A^(13)", 0, None),
        ("A^(14)", 2, Some(1)),
    ];
    let mut bad = vec![];
    for (name, sd, orb) in expected {
        let c = r.candidates.iter().find(|c| c.name == name).ok_or(format!("{} not run", name))?;
        if c.sd.len() != sd || orb.is_some_and(|o| o != c.orbits.len()) {
            bad.push(format!("|SD({})| = {} in {} orbits, expected {}", name, c.sd.len(), c.orbits.len(), sd));
        }
    }
    if r.found_classes.len() != 18 {
        bad.push(format!("{} classes found, expected 18", r.found_classes.len()));
    }
    if !r.fingerprints_distinct {
        bad.push("fingerprints collide".into());
    }
    if let Err(e) = pairs_verified(&r) {
        bad.push(e);
    }
    ensure!(bad.is_empty() && r.passed, "{}", bad.join("; "));
    Ok("18 classes".into())
}

fn table_two_p() -> Outcome {
    for p in [3u64, 5] {
        let r = run_classification(TableId::TwoP, Some(p)).map_err(|e| e.to_string())?;
        ensure!(r.passed, "p = {}: {:?}", p, r.mismatches);
        ensure!(r.found_classes.len() == 4, "p = {}: {} classes", p, r.found_classes.len());
        pairs_verified(&r)?;
        for c in &r.candidates {
            let big = c.dim == 2 * (p * p) as usize;
            if big {
                ensure!(c.sd.is_empty(), "SD({}) nonempty at p = {}", c.name, p);
            } else {
                // exactly one datum, at the involution c^ℓ
                let a = build_named::<Q>(&c.name, Some(p)).unwrap();
                let sd = super_data(&a.hopf, a.presentation.as_ref()).map_err(|e| e.to_string())?;
                ensure!(sd.len() == 1, "|SD({})| = {} at p = {}", c.name, sd.len(), p);
                let g = &sd[0].g_vec;
                ensure!(a.hopf.mul(g, g) == *a.hopf.unit(), "SD({}) at a non-involution", c.name);
            }
        }
    }
    Ok("4 classes at p = 3 and p = 5; 2p² candidates carry no super-datum".into())
}

fn taft_scan() -> Outcome {
    for n in [2u64, 3, 4, 5, 6, 8, 10] {
        let t = build_named::<Q>(&format!("Taft_{}", n), None).map_err(|e| e.to_string())?;
        let ad = admissible_data(&t.hopf, t.presentation.as_ref()).map_err(|e| e.to_string())?;
        let sd = super_from(&t.hopf, t.presentation.as_ref(), &ad).map_err(|e| e.to_string())?;
        if [2, 6, 10].contains(&n) {
            ensure!(ad.len() == 1 && sd.len() == 1, "Taft_{}: |AD| = {}, |SD| = {}", n, ad.len(), sd.len());
            let c = unit_vec(t.hopf.dim(), t.hopf.index_of("c").unwrap());
            ensure!(sd[0].g_vec == t.hopf.pow(&c, n as usize / 2), "Taft_{}: g = {}", n, sd[0].g_label);
        } else {
            ensure!(ad.is_empty(), "Taft_{}: |AD| = {}", n, ad.len());
        }
    }
    Ok("n ∈ {2,6,10}: one super-datum; n ∈ {3,4,5,8}: none".into())
}

fn duality_suite() -> Outcome {
    let mut count = 0;
    for t in all_tables() {
        let ps: &[u64] = if t.id == TableId::TwoP { &[3, 5] } else { &[3] };
        for &p in ps {
            for spec in &t.pairings {
                let l = build_named::<Q>(&spec.left, Some(p)).map_err(|e| e.to_string())?;
                let r = build_named::<Q>(&spec.right, Some(p)).map_err(|e| e.to_string())?;
                let values = spec
                    .values
                    .iter()
                    .map(|(a, b, s)| Ok((a.clone(), b.clone(), parse_scalar::<Q>(s, p, None)?)))
                    .collect::<Result<Vec<_>, CatalogError>>()
                    .map_err(|e| e.to_string())?;
                let pr = pairing_from_generators(&l, &r, &values).map_err(|e| e.to_string())?;
                ensure!(pr.status.hopf_pairing && pr.status.non_degenerate, "{} × {}: {:?}", spec.left, spec.right, pr.status.failure);
                let f = pairing_to_morphism(&pr).map_err(|e| e.to_string())?;
                ensure!(f.is_bijective(), "{} × {} does not induce an isomorphism", spec.left, spec.right);
                count += 1;
            }
        }
    }
    let fails: Vec<String> = class_names()
        .par_iter()
        .filter_map(|n| {
            let h = build_named::<Q>(n, Some(3)).ok()?.hopf;
            let s = bosonization_duality(&h).status;
            (!(s.hopf_pairing && s.non_degenerate)).then(|| n.clone())
        })
        .collect();
    ensure!(fails.is_empty(), "bosonization duality fails on {:?}", fails);
    for n in 1..=3 {
        let e = build_named::<Q>(&format!("ext{}", n), None).map_err(|e| e.to_string())?;
        let d = dual(&e.hopf);
        let p = e.presentation.as_ref().unwrap();
        let skew: Vec<_> = p.gens.iter().map(|x| unit_vec(d.dim(), e.hopf.index_of(&x.name).unwrap())).collect();
        match_presentation(&e, &d, &[], &skew).map_err(|err| format!("dual(ext{}): {}", n, err))?;
    }
    Ok(format!("{} pairings, {} bosonization dualities, exterior duals", count, class_names().len()))
}

fn non_pointedness() -> Outcome {
    for p in [3u64, 5] {
        let h = build_named::<Q>("H_2p^(4)", Some(p)).unwrap().hopf;
        ensure!(!is_pointed(&dual(&h)), "dual(H_2p^(4)) pointed at p = {}", p);
    }
    ensure!(!is_pointed(&dual(&build_named::<Q>("H_8^(18)", None).unwrap().hopf)), "dual(H_8^(18)) pointed");
    let fails: Vec<String> = all_tables()
        .iter()
        .flat_map(|t| t.classes.iter())
        .collect::<Vec<_>>()
        .par_iter()
        .filter_map(|c| {
            let h = build_named::<Q>(&c.name, Some(3)).ok()?.hopf;
            if !is_pointed(&h) {
                return Some(format!("{} not pointed", c.name));
            }
            let paired = c.dual != "non-pointed";
            (paired && !is_pointed(&dual(&h))).then(|| format!("dual of {} not pointed", c.name))
        })
        .collect();
    ensure!(fails.is_empty(), "{}", fails.join("; "));
    Ok("two non-pointed duals; every other entry and dual pointed".into())
}

fn roundtrip() -> Outcome {
    let mut jobs = vec![];
    for t in all_tables() {
        let ps: &[u64] = if t.id == TableId::TwoP { &[3, 5] } else { &[3] };
        for &p in ps {
            jobs.extend(t.candidates.iter().map(|c| (c.name.clone(), p)));
        }
    }
    let results: Vec<Result<usize, String>> = jobs
        .par_iter()
        .map(|(n, p)| {
            let a = build_named::<Q>(n, Some(*p)).map_err(|e| e.to_string())?;
            let sd = super_data(&a.hopf, a.presentation.as_ref()).map_err(|e| e.to_string())?;
            for d in &sd {
                let (_, co) = roundtrip_iso(&a.hopf, d).map_err(|e| format!("{} at {}: {}", n, d.g_label, e))?;
                ensure!(2 * co.hopf.dim() == a.hopf.dim(), "{}: coinvariants of dim {}", n, co.hopf.dim());
            }
            Ok(sd.len())
        })
        .collect();
    let mut total = 0;
    for r in results {
        total += r?;
    }
    for n in class_names() {
        let h = build_named::<Q>(&n, Some(3)).unwrap().hopf;
        let gh = grouplikes(&h).map_err(|e| e.to_string())?;
        let gb = grouplikes(&bosonize(&h).result).map_err(|e| e.to_string())?;
        ensure!(gb.len() == 2 * gh.len() && gh.abelian == gb.abelian, "{}: |G(Ĥ)| = {}", n, gb.len());
        if gh.abelian {
            let mut orders = gh.orders.clone();
            orders.extend(gh.orders.iter().map(|&o| num_integer::lcm(o, 2)));
            ensure!(gb.invariant_factors == abelian_invariants(&orders), "{}: G(Ĥ) ≇ G(H)×C2", n);
        }
    }
    Ok(format!("{} super-data round-trip", total))
}

fn dense_skew(h: &HopfSuperAlgebra<Q>, gamma: &[Q], eps: usize) -> Subspace<Q> {
    let n = h.dim();
    let mut m = Matrix::<Q>::zeros(n * n, n);
    let mut add = |r: usize, k: usize, c: Q| {
        let v = m.get(r, k).clone() + c;
        m.set(r, k, v);
    };
    for k in 0..n {
        for (i, j, d) in h.comult_basis(k) {
            add(i * n + j, k, d.clone());
        }
        for i in 0..n {
            add(i * n + k, k, -gamma[i].clone());
            add(k * n + i, k, -h.unit()[i].clone());
        }
    }
    let homog = Subspace::span(n, (0..n).filter(|&i| h.parity_of(i) == eps).map(|i| unit_vec(n, i)));
    Subspace::span(n, m.kernel()).intersect(&homog)
}

fn oracles() -> Outcome {
    let mut names: Vec<(String, u64)> = vec![];
    for p in [3u64, 5] {
        for n in entries_at(p) {
            names.push((n, p));
        }
    }
    let names: Vec<(String, u64)> =
        names.into_iter().filter(|(n, p)| build_named::<Q>(n, Some(*p)).map(|a| a.hopf.dim() <= 8).unwrap_or(false)).collect();
    let fails: Vec<String> = names
        .par_iter()
        .filter_map(|(n, p)| {
            let a = build_named::<Q>(n, Some(*p)).ok()?;
            let h = &a.hopf;
            let j = jacobson_radical(h);
            let s = nilpotent_ideal_search(h);
            if !(j.is_subspace_of(&s) && s.is_subspace_of(&j)) {
                return Some(format!("{}: radical {} vs search {}", n, j.dim(), s.dim()));
            }
            let gl = match grouplikes(h) {
                Ok(g) => g,
                Err(e) => return Some(format!("{}: {}", n, e)),
            };
            for g in &gl.elements {
                for eps in 0..2 {
                    let x = skew_primitives(h, g, eps as u8);
                    let y = dense_skew(h, g, eps);
                    if !(x.is_subspace_of(&y) && y.is_subspace_of(&x)) {
                        return Some(format!("{}: skew-primitives at {}", n, h.format_vec(g)));
                    }
                }
                if !skew_primitives(h, g, 0).contains(&sub_vec(h.unit(), g)) {
                    return Some(format!("{}: 1 − g missing", n));
                }
            }
            match characters(h, a.presentation.as_ref()) {
                Ok(c) if c.len() == semisimple_abelian_rank(h) => None,
                Ok(c) => Some(format!("{}: {} characters", n, c.len())),
                Err(e) => Some(format!("{}: {}", n, e)),
            }
        })
        .collect();
    ensure!(fails.is_empty(), "{}", fails.join("; "));
    Ok(format!("{} algebras of dim ≤ 8", names.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("axiom suite", axiom_suite),
        ("table of dimension 4", table_four),
        ("table of dimension 8", table_eight),
        ("table of dimension 2p", table_two_p),
        ("Taft scan", taft_scan),
        ("duality suite", duality_suite),
        ("non-pointedness", non_pointedness),
        ("round trip", roundtrip),
        ("oracle equivalence", oracles),
    ];
    // keep panics from individual checks off the summary
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    let start = Instant::now();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {} ({}): PASS [{:.1}s] {}", i + 1, name, secs, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({}): FAIL [{:.1}s] {}", i + 1, name, secs, why);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
