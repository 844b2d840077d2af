use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;

use homalg::chain::ChainComplex;
use homalg::exactlin::Matrix;
use homalg::fpmod::FpModule;
use homalg::json::JsonForm;
use homalg::resolve::Resolution;
use proptest::prelude::*;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("homalg").chain(args.iter().copied());
    let code = homalg::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert!(code <= 1, "{err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?} printed invalid JSON: {e}\n{out}"))
}

fn file_with(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn documented_outputs() {
    let (code, out, _) = run(&["snf", &data("matrix.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("invariant factors: 2, 6, 12"));
    assert_eq!(run(&["decompose", &data("module.json")]).1.trim(), "Z ⊕ Z/2 ⊕ Z/6");
    assert_eq!(run(&["homology", "--simplicial", &data("tetra_hollow.txt")]).1.trim(), "H0 = Z, H1 = 0, H2 = Z");
    assert_eq!(run(&["homology", "--simplicial", &data("rp2.txt")]).1.trim(), "H0 = Z, H1 = Z/2, H2 = 0");
    assert_eq!(run(&["tor", &data("a.json"), &data("b.json")]), (0, "Z/2\n".into(), String::new()));
    assert_eq!(run(&["tor", "--side", "left", &data("a.json"), &data("b.json")]).1, "Z/2\n");
    assert_eq!(run(&["tor", "--degree", "0", &data("a.json"), &data("b.json")]).1, "Z/2\n");
    assert_eq!(run(&["tor", "--degree", "2", &data("a.json"), &data("b.json")]).1, "0\n");

    let (code, out, _) = run(&["les", &data("ses.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("H_0(B) = Z/2") && out.contains("exact at all 6 interior positions"), "{out}");

    assert_eq!(run(&["check-exact", &data("bad.json")]).0, 1);
    assert_eq!(run(&["check-exact", &data("bad.json")]).1, "not exact at degree 1\n");
    assert_eq!(run(&["homotopy", &data("id_split.json")]).0, 0);
    assert_eq!(run(&["homotopy", &data("id_double.json")]), (1, "no homotopy exists\n".into(), String::new()));
    assert_eq!(run(&["homotopy", &data("zero_split.json")]).0, 0);
    assert_eq!(run(&["homotopy", &data("id_split.json"), &data("id_split.json")]).0, 0);

    let (code, out, _) = run(&["resolve", &data("z2_over_z4.json"), "--depth", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ranks: 1 1 1 1\ncomplete: false"), "{out}");

    let (code, out, _) = run(&["tor", "--table", "6", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("25 cases, all agree"), "{out}");
}

#[test]
fn json_output_reparses() {
    let snf = json(&["snf", &data("matrix.json")]);
    assert_eq!(snf["rank"], 3);
    let d = Matrix::from_json(&snf["d"]).unwrap();
    let u = Matrix::from_json(&snf["u"]).unwrap();
    let v = Matrix::from_json(&snf["v"]).unwrap();
    let a = Matrix::from_json_str(&std::fs::read_to_string(data("matrix.json")).unwrap()).unwrap();
    assert_eq!(&(&u * &a) * &v, d);

    let dec = json(&["decompose", &data("module.json")]);
    assert_eq!(dec["free_rank"], 1);
    let m = FpModule::from_json(&dec["module"]).unwrap();
    assert_eq!(m.decomposition().to_string(), "Z ⊕ Z/2 ⊕ Z/6");

    let h = json(&["homology", &data("bad.json")]);
    let h1 = FpModule::from_json(&h["homology"]["1"]["module"]).unwrap();
    assert_eq!(h1.decomposition().to_string(), "Z/2");
    let h = json(&["homology", "--simplicial", &data("rp2.txt")]);
    assert_eq!(h["homology"]["1"]["decomposition"], "Z/2");

    let les = json(&["les", &data("ses.json")]);
    assert_eq!(les["exact"], true);
    for map in les["maps"].as_array().unwrap() {
        homalg::fpmod::ModuleHom::from_json(map).unwrap();
    }

    let res = Resolution::from_json(&json(&["resolve", &data("z2_over_z4.json"), "--depth", "2"])).unwrap();
    assert_eq!(res.free_ranks, vec![1, 1, 1]);

    let s = json(&["homotopy", &data("id_split.json")]);
    let f = homalg::chain::ChainMap::from_json_str(&std::fs::read_to_string(data("id_split.json")).unwrap()).unwrap();
    let s = homalg::json::degree_raising_from_json(&s, f.source(), f.target()).unwrap();
    assert!(homalg::homotopy::verify_null_homotopy(&f, &s));

    assert_eq!(json(&["check-exact", &data("bad.json")])["inexact_degrees"], serde_json::json!([1]));
    let table = json(&["tor", "--table", "4", "4"]);
    assert!(table.as_array().unwrap().iter().all(|r| r["agree"] == true));
    let report = json(&["report", "--quick"]);
    assert_eq!(report.as_array().unwrap().len(), 8);
}

#[test]
fn exit_code_contract() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["snf"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["decompose", "/no/such/file.json"]).0, 2);
    assert_eq!(run(&["snf", &data("rp2.txt")]).0, 2);
    assert_eq!(run(&["tor", &data("a.json")]).0, 2);
    assert_eq!(run(&["tor", "--ring", "Z/4", &data("a.json"), &data("b.json")]).0, 2);
    assert_eq!(run(&["tor", "--ring", "Q", &data("a.json"), &data("b.json")]).0, 2);
    assert_eq!(run(&["homology", &data("bad.json"), "--simplicial", &data("rp2.txt")]).0, 2);
    let (code, _, err) = run(&["check-exact", &data("not_complex.json")]);
    assert_eq!(code, 1);
    assert!(err.contains("degree 2"), "{err}");
    let broken = file_with("0 1\n1 two\n");
    let (code, _, err) = run(&["homology", "--simplicial", broken.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    // A map Z/2 -> Z/4 sending 1 to 1 is not well defined.
    let bad_hom = file_with(
        r#"{"source": {"ring": "Z", "degrees": [0], "modules": {"0": {"ring": "Z", "generators": 1,
            "relations": {"ring": "Z", "rows": 1, "cols": 1, "entries": [["2"]]}}}, "boundaries": {}},
           "target": {"ring": "Z", "degrees": [0], "modules": {"0": {"ring": "Z", "generators": 1,
            "relations": {"ring": "Z", "rows": 1, "cols": 1, "entries": [["4"]]}}}, "boundaries": {}},
           "levels": {"0": {"ring": "Z", "rows": 1, "cols": 1, "entries": [["1"]]}}}"#,
    );
    assert_eq!(run(&["homotopy", bad_hom.path().to_str().unwrap()]).0, 1);
}

#[test]
fn binary_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_homalg");
    let out = Command::new(bin).args(["decompose", &data("module.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Z ⊕ Z/2 ⊕ Z/6");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.txt");
    std::fs::write(&path, "0 1\n1 2\n0 2\n").unwrap();
    let out = Command::new(bin).args(["homology", "--simplicial"]).arg(&path).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "H0 = Z, H1 = Z");

    let out = Command::new(bin).args(["check-exact", &data("bad.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

const VERBS: [&str; 6] = ["snf", "decompose", "homology", "check-exact", "les", "resolve"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Malformed files are usage errors.
    #[test]
    fn garbage_files_exit_two(verb in 0usize..VERBS.len(), body in "[\\[\\]{}\",:0-9a-zZ ]{0,60}") {
        prop_assume!(serde_json::from_str::<Value>(&body).is_err());
        let f = file_with(&body);
        prop_assert_eq!(run(&[VERBS[verb], f.path().to_str().unwrap()]).0, 2);
    }

    #[test]
    fn truncated_files_exit_two(verb in 0usize..3, cut in 1usize..120) {
        let (verb, src) = [("les", "ses.json"), ("homotopy", "id_split.json"), ("check-exact", "bad.json")][verb];
        let text = std::fs::read_to_string(data(src)).unwrap();
        let f = file_with(&text[..cut.min(text.len() - 1)]);
        prop_assert_eq!(run(&[verb, f.path().to_str().unwrap()]).0, 2);
    }

    /// Well-formed complexes with d∘d ≠ 0 are domain errors.
    #[test]
    fn non_complexes_exit_one(a in 1i64..9, b in 1i64..9) {
        let text = format!(
            r#"{{"ring": "Z", "degrees": [0, 2],
                "modules": {{"0": {{"ring": "Z", "generators": 1, "relations": {{"ring": "Z", "rows": 1, "cols": 0, "entries": [[]]}}}},
                             "1": {{"ring": "Z", "generators": 1, "relations": {{"ring": "Z", "rows": 1, "cols": 0, "entries": [[]]}}}},
                             "2": {{"ring": "Z", "generators": 1, "relations": {{"ring": "Z", "rows": 1, "cols": 0, "entries": [[]]}}}}}},
                "boundaries": {{"1": {{"ring": "Z", "rows": 1, "cols": 1, "entries": [["{a}"]]}},
                                "2": {{"ring": "Z", "rows": 1, "cols": 1, "entries": [["{b}"]]}}}}}}"#
        );
        prop_assert!(ChainComplex::from_json_str(&text).is_err());
        let f = file_with(&text);
        for verb in ["homology", "check-exact"] {
            prop_assert_eq!(run(&[verb, f.path().to_str().unwrap()]).0, 1);
        }
    }
}
