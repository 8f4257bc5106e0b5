//! Worked-example values computed by the reference evaluator, frozen, and
//! checked against the library.

mod common;

use common::q;
use num_rational::BigRational;
use softset::examples::{deterministic, houses, kharal_triple, pantries};
use softset::measures::{self, DistanceMeasureId};

fn big(r: num_rational::Rational64) -> BigRational {
    q(*r.numer(), *r.denom())
}

#[test]
fn reference_reproduces_house_example() {
    let (f, g) = houses();
    assert_eq!(common::big_dp(&f, &g), q(6, 1));
    assert_eq!(common::big_dm(&f, &g), q(7, 1));
    assert_eq!(common::norm_dp(&f, &g), q(2, 25));
    assert_eq!(common::norm_dm(&f, &g), q(7, 75));
    assert_eq!(common::sd(common::norm_dm(&f, &g)), q(75, 82));
    assert_eq!(common::sm(&f, &g), q(1, 6));
    assert_eq!(common::entropy(&f), q(7, 17));
    assert_eq!(common::se(&f, &g), q(2, 77));
}

#[test]
fn library_matches_frozen_house_values() {
    let (f, g) = houses();
    assert_eq!(measures::dp_t2(&f, &g).unwrap(), 6);
    assert_eq!(measures::dm_t2(&f, &g).unwrap(), 7);
    assert_eq!(big(measures::ndp_t2(&f, &g).unwrap()), q(2, 25));
    assert_eq!(big(measures::ndm_t2(&f, &g).unwrap()), q(7, 75));
    assert_eq!(
        big(measures::similarity_sd(&f, &g, DistanceMeasureId::NormMatrixT2).unwrap()),
        q(75, 82)
    );
    assert_eq!(measures::similarity_sm(&f, &g).unwrap(), q(1, 6));
    assert_eq!(big(measures::entropy_t2(&f)), q(7, 17));
    assert_eq!(big(measures::similarity_se(&f, &g).unwrap()), q(2, 77));
}

#[test]
fn kharal_triple_values() {
    let [f, g, h] = kharal_triple();
    assert_eq!(common::euclidean(&f, &g), 3.0);
    assert_eq!(common::euclidean(&g, &h), 2.0);
    assert_eq!(common::euclidean(&f, &h), 7.0);
    // q(F, G) has no shared parameter: 3 / sqrt(3).
    assert_eq!(common::normalized_euclidean_parts(&f, &g), (q(3, 1), q(0, 1)));
    assert_eq!(common::normalized_euclidean_parts(&g, &h), (q(1, 3), q(1, 3)));
    assert_eq!(common::normalized_euclidean_parts(&f, &h), (q(4, 3), q(5, 1)));
    for (a, b) in [(&f, &g), (&g, &h), (&f, &h)] {
        assert_eq!(measures::kharal_euclidean(a, b).unwrap(), common::euclidean(a, b));
        let diff = measures::kharal_normalized_euclidean(a, b).unwrap() - common::normalized_euclidean(a, b);
        assert!(diff.abs() < 1e-12);
        assert_eq!(q(measures::dp_t1(a, b).unwrap() as i64, 1), common::dp(a, b));
        assert_eq!(q(measures::dm_t1(a, b).unwrap() as i64, 1), common::dm(a, b));
    }
    assert_eq!(common::dp(&f, &g), q(5, 1));
}

#[test]
fn deterministic_example_has_zero_entropy() {
    assert_eq!(common::entropy(&deterministic()), q(0, 1));
    assert_eq!(big(measures::entropy_t2(&deterministic())), q(0, 1));
}

#[test]
fn pantry_profiles() {
    let (ideal, [p1, p2]) = pantries();
    let expect = |p, want: [(&str, BigRational); 4]| {
        let mut want: Vec<(String, BigRational)> = want.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        want.sort();
        assert_eq!(common::profile(&ideal, p), want);
        let lib: Vec<(String, BigRational)> = measures::similarity_profile(&ideal, p)
            .unwrap()
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        assert_eq!(lib, want);
    };
    expect(
        &p1,
        [
            ("breakfast", q(2, 9)),
            ("lunch", q(1, 3)),
            ("dinner", q(11, 18)),
            ("supper", q(0, 1)),
        ],
    );
    expect(
        &p2,
        [
            ("breakfast", q(3, 8)),
            ("lunch", q(1, 12)),
            ("dinner", q(7, 24)),
            ("supper", q(1, 6)),
        ],
    );
}

fn t2(text: &str) -> softset::TypeTwoSoftSet {
    match softset::io::parse_softset(text).unwrap() {
        softset::lab::Instance::T2(s) => s,
        softset::lab::Instance::T1(_) => panic!("expected t2ss"),
    }
}

#[test]
fn padding_an_absolute_set_keeps_equivalence_but_not_entropy() {
    let f = t2(r#"{"kind":"t2ss","universe":["x1"],"primary":[
        {"param":"α1","assignments":{"β1":["x1"]}},
        {"param":"α2","assignments":{"β2":["x1"]}}]}"#);
    let g = t2(r#"{"kind":"t2ss","universe":["x1"],"primary":[
        {"param":"α1","assignments":{"β1":["x1"],"β2":[]}},
        {"param":"α2","assignments":{"β2":["x1"]}}]}"#);
    assert!(softset::are_equivalent(&f, &g).unwrap().is_some());
    assert!(f.is_absolute() && !g.is_absolute());
    assert_eq!(common::entropy(&f), q(1, 1));
    assert_eq!(common::entropy(&g), q(1, 2));
    assert_eq!(big(measures::entropy_t2(&g)), q(1, 2));
}
