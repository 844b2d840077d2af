mod common;

use homalg::chain::{ChainComplex, ChainMap};
use homalg::diagram::ShortExactSeqComplexes;
use homalg::exactlin::Matrix;
use homalg::fixtures::{self, random_ring};
use homalg::fpmod::{FpModule, ModuleHom};
use homalg::json::{degree_raising_from_json, degree_raising_to_json, JsonError, JsonForm};
use homalg::resolve::{free_resolution, Resolution};
use proptest::prelude::*;
use serde_json::{json, Value};

fn round_trip<T: JsonForm>(x: &T) -> T {
    let text = x.to_json_string();
    let back = T::from_json_str(&text).unwrap();
    assert_eq!(back.to_json(), x.to_json());
    back
}

/// Every ring element in the encoding is a string.
fn numbers_are_strings(v: &Value, key: Option<&str>) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| numbers_are_strings(x, key)),
        Value::Object(o) => o.iter().all(|(k, x)| numbers_are_strings(x, Some(k))),
        Value::Number(_) => !matches!(key, Some("entries")),
        _ => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn algebraic_objects_round_trip(seed in any::<u64>()) {
        let mut rng = fixtures::rng(seed);
        let ring = random_ring(&mut rng);

        let a = fixtures::random_matrix(&mut rng, &ring, 3, 4, 1_000_000);
        prop_assert_eq!(round_trip(&a), a.clone());
        prop_assert!(numbers_are_strings(&a.to_json(), None));

        let m = fixtures::random_module(&mut rng, &ring, 3);
        let n = fixtures::random_module(&mut rng, &ring, 3);
        prop_assert_eq!(round_trip(&m), m.clone());
        let h = fixtures::random_hom(&mut rng, &m, &n);
        let h2 = round_trip(&h);
        prop_assert_eq!(h2.map(), h.map());
        prop_assert_eq!(h2.domain(), h.domain());

        let c = fixtures::random_complex(&mut rng, &ring);
        let d = fixtures::random_complex(&mut rng, &ring);
        prop_assert!(round_trip(&c) == c);
        let u = fixtures::random_chain_map(&mut rng, &c, &d);
        prop_assert!(round_trip(&u) == u);

        let s = fixtures::random_raising(&mut rng, &c, &d);
        let back = degree_raising_from_json(&degree_raising_to_json(&s), &c, &d).unwrap();
        prop_assert_eq!(degree_raising_to_json(&back), degree_raising_to_json(&s));

        let ses = fixtures::random_ses_complexes(&mut rng, &ring);
        let ses2: ShortExactSeqComplexes = round_trip(&ses);
        prop_assert!(ses2.a == ses.a && ses2.b == ses.b && ses2.c == ses.c);

        let r = free_resolution(&m, 3);
        let r2: Resolution = round_trip(&r);
        prop_assert_eq!(r2.free_ranks, r.free_ranks);
    }

    #[test]
    fn garbage_is_a_parse_error(s in "[\\[\\]{}\",:0-9a-z ]{0,40}") {
        if let Err(e) = ChainComplex::from_json_str(&s) {
            prop_assert!(e.is_parse_error(), "{s:?}: {e}");
        }
        if let Err(e) = FpModule::from_json_str(&s) {
            prop_assert!(e.is_parse_error(), "{s:?}: {e}");
        }
    }

    #[test]
    fn truncated_documents_fail_to_parse(cut in 1usize..200) {
        let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/ses.json")).unwrap();
        let cut = cut.min(text.len() - 1);
        let err = ShortExactSeqComplexes::from_json_str(&text[..cut]).err().unwrap();
        prop_assert!(matches!(err, JsonError::Syntax(_)));
    }
}

#[test]
fn accepts_integer_or_string_entries() {
    let a = Matrix::from_json(&json!({"ring": "Z", "rows": 1, "cols": 2, "entries": [[3, "-4"]]})).unwrap();
    assert_eq!(common::entries_i64(&a), vec![vec![3, -4]]);
    let big = Matrix::from_json(&json!({"ring": "Z", "rows": 1, "cols": 1, "entries": [["123456789012345678901234567890"]]}))
        .unwrap();
    assert_eq!(big.to_json()["entries"][0][0], json!("123456789012345678901234567890"));
    let m = FpModule::from_json(&json!({"ring": {"Zmod": "4"}, "generators": 1, "relations": {"rows": 1, "cols": 1, "entries": [["2"]]}}))
        .unwrap();
    assert_eq!(m.ring(), &common::zmod(4));
    assert_eq!(m.to_json()["ring"], json!({"Zmod": "4"}));
}

#[test]
fn shape_and_algebra_errors_are_distinguished() {
    let wrong_rows = json!({"ring": "Z", "rows": 2, "cols": 1, "entries": [["1"]]});
    assert!(Matrix::from_json(&wrong_rows).unwrap_err().is_parse_error());
    let bad_ring = json!({"ring": "Q", "rows": 1, "cols": 1, "entries": [["1"]]});
    assert!(Matrix::from_json(&bad_ring).unwrap_err().is_parse_error());

    let data = |f: &str| std::fs::read_to_string(format!("{}/data/{f}", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let err = ChainComplex::from_json_str(&data("not_complex.json")).unwrap_err();
    assert!(!err.is_parse_error(), "{err}");
    assert!(ChainComplex::from_json_str(&data("bad.json")).is_ok());

    // Z/2 -> Z/4: 1 -> 2 is well defined, 1 -> 1 is not.
    let hom = |img: &str| {
        json!({
            "domain": {"ring": "Z", "generators": 1, "relations": {"rows": 1, "cols": 1, "entries": [["2"]]}},
            "codomain": {"ring": "Z", "generators": 1, "relations": {"rows": 1, "cols": 1, "entries": [["4"]]}},
            "map": {"ring": "Z", "rows": 1, "cols": 1, "entries": [[img]]}
        })
    };
    assert!(ModuleHom::from_json(&hom("2")).is_ok());
    assert!(!ModuleHom::from_json(&hom("1")).unwrap_err().is_parse_error());

    let c = ChainComplex::from_json_str(&data("bad.json")).unwrap();
    let mut v = ChainMap::identity(&c).to_json();
    v["levels"]["1"]["entries"][0][0] = json!("2");
    assert!(!ChainMap::from_json(&v).unwrap_err().is_parse_error());
}
