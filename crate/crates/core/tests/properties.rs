use proptest::collection::{btree_map, btree_set, vec};
use proptest::prelude::*;
use serde_json::{json, Value};
use softset::io::{canonicalize, parse_document, parse_softset, serialize_softset};

// Labels with quotes, escapes, whitespace and non-ASCII code points.
fn label() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-z][a-z0-9]{0,3}",
        "\\PC{1,6}",
        Just("\"quoted\"".to_string()),
        Just("back\\slash".to_string()),
        Just(" padded ".to_string()),
        Just("α₁".to_string()),
    ]
}

fn document() -> impl Strategy<Value = Value> {
    btree_set(label(), 1..5).prop_flat_map(|universe| {
        let universe: Vec<String> = universe.into_iter().collect();
        let inner = btree_map(label(), image(&universe), 0..4);
        let t1 = btree_map(label(), image(&universe), 0..4).prop_map({
            let universe = universe.clone();
            move |assignments| json!({"kind": "t1ss", "universe": universe, "assignments": assignments})
        });
        let t2 = btree_map(label(), inner, 0..4).prop_map({
            let universe = universe.clone();
            move |primary| {
                let primary: Vec<Value> = primary
                    .into_iter()
                    .map(|(param, assignments)| json!({"param": param, "assignments": assignments}))
                    .collect();
                json!({"kind": "t2ss", "universe": universe, "primary": primary})
            }
        });
        prop_oneof![t1, t2]
    })
}

fn image(universe: &[String]) -> impl Strategy<Value = Vec<String>> {
    proptest::sample::subsequence(universe.to_vec(), 0..=universe.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn arbitrary_text_never_panics(text in "\\PC{0,200}") {
        let _ = parse_softset(&text);
    }

    #[test]
    fn arbitrary_json_never_panics(
        kind in prop_oneof![Just("t1ss".to_string()), Just("t2ss".to_string()), Just("t3ss".to_string()), "[a-z]{0,4}"],
        universe in vec("\\PC{0,3}", 0..4),
        extra in proptest::option::of("[a-z]{1,6}"),
    ) {
        let mut doc = json!({"kind": kind, "universe": universe, "assignments": {}, "primary": []});
        if let Some(key) = extra {
            doc[key] = json!(1);
        }
        let _ = parse_softset(&doc.to_string());
    }

    #[test]
    fn wellformed_documents_round_trip(doc in document()) {
        let text = doc.to_string();
        let parsed = parse_softset(&text).unwrap();
        let written = serialize_softset(&parsed);
        prop_assert_eq!(parse_softset(&written).unwrap(), parsed);
        prop_assert_eq!(parse_document(&written).unwrap().kind(), doc["kind"].as_str().unwrap());
    }

    #[test]
    fn canonical_form_is_a_fixed_point(doc in document()) {
        let once = canonicalize(&serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        prop_assert_eq!(canonicalize(&once).unwrap(), once);
    }
}
