use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use superhopf::analysis;
use superhopf::catalog::build_named;
use superhopf::json as sj;
use superhopf::{Hopf, Scalar};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superhopf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(dir: &Path, name: &str, p: Option<u64>) -> PathBuf {
    let path = dir.join(format!("{}.json", name.replace(['^', '(', ')', '\''], "_")));
    let mut args = vec!["catalog", "build", name, "-o", path.to_str().unwrap()];
    let ps;
    if let Some(p) = p {
        ps = p.to_string();
        args.extend(["--p", &ps]);
    }
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn lib(name: &str) -> Hopf {
    build_named::<Scalar>(name, Some(3)).unwrap().hopf
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).unwrap())
}

#[test]
fn catalog_build_matches_library() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "A^(14)", None);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), format!("{}\n", sj::serialize(&lib("A^(14)"))));
    let o = run(&["catalog", "list"]);
    assert!(stdout(&o).contains("\"H_8^(18)\""));
}

#[test]
fn verify_passes_on_h8_7() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "H_8^(7)", None);
    let o = run(&["verify", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), pretty(&superhopf::hopfcore::verify_axioms(&lib("H_8^(7)"))));
}

#[test]
fn analysis_verbs_match_library() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "A^(2)", None);
    let fs = f.to_str().unwrap();
    let h = lib("A^(2)");
    assert_eq!(stdout(&run(&["grouplikes", fs])), pretty(&analysis::grouplikes(&h).unwrap()));
    assert_eq!(stdout(&run(&["characters", fs])), pretty(&analysis::characters(&h, None).unwrap()));
    assert_eq!(stdout(&run(&["admissible", fs])), pretty(&analysis::admissible_data(&h, None).unwrap()));
    assert_eq!(stdout(&run(&["superdata", fs])), pretty(&analysis::super_data(&h, None).unwrap()));
    assert_eq!(stdout(&run(&["fingerprint", fs])), pretty(&analysis::fingerprint(&h).unwrap()));
    assert_eq!(stdout(&run(&["pointed", fs])), pretty(&analysis::pointed_report(&h)));
    let sp = stdout(&run(&["skewprim", fs, "--g", "c"]));
    let rows: serde_json::Value = serde_json::from_str(&sp).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);
    assert!(run(&["skewprim", fs, "--g", "nope"]).status.code() == Some(5));
}

#[test]
fn superdata_on_a_prime_c4_is_empty() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "A'_C4", None);
    let o = run(&["superdata", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn bosonize_dual_and_coinvariants() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "H_8^(18)", None);
    let fs = f.to_str().unwrap();
    let h = lib("H_8^(18)");
    let b = d.path().join("b.json");
    assert!(run(&["bosonize", fs, "-o", b.to_str().unwrap()]).status.success());
    let bh: Hopf = sj::deserialize(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(bh, superhopf::bosonize::bosonize(&h).result);
    let dual = stdout(&run(&["dual", fs]));
    assert_eq!(dual, format!("{}\n", sj::serialize(&superhopf::duality::dual(&h))));
    // back from the bosonization
    let sd = analysis::super_data(&bh, None).unwrap();
    assert!(!sd.is_empty());
    let (g, a) = (sd[0].g_label.clone(), sd[0].alpha.to_string());
    let o = run(&["roundtrip", b.to_str().unwrap(), "--g", &g, "--alpha", &a]);
    assert!(o.status.success(), "{}", stdout(&o));
    let co = stdout(&run(&["coinv", b.to_str().unwrap(), "--g", &g, "--alpha", &a]));
    let coh: Hopf = sj::deserialize(&co).unwrap();
    assert_eq!(coh.dim(), 8);
    assert!(run(&["coinv", b.to_str().unwrap(), "--g", &g, "--alpha", "999"]).status.code() == Some(5));
}

#[test]
fn pairing_verbs() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "ext1", None);
    let fs = f.to_str().unwrap();
    let o = run(&["bosondual", fs]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"]["hopf_pairing"], true);
    // feed the matrix back through `pair`
    let m = d.path().join("m.json");
    std::fs::write(&m, serde_json::to_string(&v["matrix"]).unwrap()).unwrap();
    let h = lib("ext1");
    let l = d.path().join("l.json");
    let r = d.path().join("r.json");
    std::fs::write(&l, sj::serialize(&superhopf::bosonize::bosonize(&h).result)).unwrap();
    std::fs::write(&r, sj::serialize(&superhopf::bosonize::bosonize(&superhopf::duality::dual(&h)).result)).unwrap();
    let args = ["pair", l.to_str().unwrap(), r.to_str().unwrap(), "--matrix", m.to_str().unwrap()];
    assert!(run(&args).status.success());
    // the identity matrix is not a Hopf pairing here
    let id: Vec<Vec<String>> =
        (0..4).map(|i| (0..4).map(|j| if i == j { "1 @1" } else { "0 @1" }.to_string()).collect()).collect();
    std::fs::write(&m, serde_json::to_string(&id).unwrap()).unwrap();
    assert_eq!(run(&args).status.code(), Some(1));
}

#[test]
fn semisimple_verb() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "kS3", None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["semisimple", f.to_str().unwrap()]))).unwrap();
    assert_eq!(v["semisimple"], true);
}

#[test]
fn conductor_override() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "kC2", None);
    let fs = f.to_str().unwrap();
    assert!(run(&["--conductor", "4", "characters", fs]).status.success());
    assert_eq!(run(&["--conductor", "3", "characters", fs]).status.code(), Some(5));
}

#[test]
fn exit_codes_distinguish_errors() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(run(&["verify", d.path().join("missing.json").to_str().unwrap()]).status.code(), Some(3));
    let bad = d.path().join("bad.json");
    std::fs::write(&bad, "{\"dim\": 1}").unwrap();
    assert_eq!(run(&["verify", bad.to_str().unwrap()]).status.code(), Some(4));
    // parity violation: structural, not an axiom failure
    let h = lib("H_4^(1)");
    let mut doc = sj::to_doc(&h);
    let odd = h.parity().iter().position(|&p| p == 1).unwrap();
    doc.mult.push((0, 0, odd, "1 @1".into()));
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/mult/"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn classify_table_four() {
    let d = tempfile::tempdir().unwrap();
    let out = d.path().join("r.json");
    let o = run(&["classify", "--table", "4", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("PASS"));
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["classes"].as_array().unwrap().len(), 4);
    assert_eq!(r["passed"], true);
}

#[test]
fn classify_table_eight_reports_mismatch() {
    let o = run(&["classify", "--table", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("A^(6)"));
}

#[test]
fn classify_two_p_requires_p() {
    assert_eq!(run(&["classify", "--table", "2p"]).status.code(), Some(5));
    assert!(run(&["classify", "--table", "2p", "--p", "3"]).status.success());
}

#[test]
fn reports_are_reproducible_from_emitted_json() {
    let d = tempfile::tempdir().unwrap();
    let f = build(d.path(), "Taft_3", None);
    let once = stdout(&run(&["fingerprint", f.to_str().unwrap()]));
    let g = d.path().join("again.json");
    let h: Hopf = sj::deserialize(&std::fs::read_to_string(&f).unwrap()).unwrap();
    std::fs::write(&g, sj::serialize(&h)).unwrap();
    assert_eq!(stdout(&run(&["fingerprint", g.to_str().unwrap()])), once);
}
