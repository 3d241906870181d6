mod common;

use common::{all_vectors, raw_code, symplectic_code, RawCode};
use proptest::prelude::*;
use subsysforge::enumerate::{min_weight, min_weight_in_difference, weight_distribution};
use subsysforge::{AdditiveCode, EnumConfig, Layout};

fn naive_min(big: &AdditiveCode, small: &AdditiveCode) -> Option<usize> {
    all_vectors(big).into_iter().filter(|v| !small.contains(v)).map(|v| v.weight()).min()
}

/// A code together with a random subcode of it (possibly zero).
fn nested(layout: Layout) -> impl Strategy<Value = (RawCode, Vec<bool>)> {
    raw_code(vec![2, 3, 4], layout, 5, 7)
        .prop_filter("small enough to list", |c| c.code().dim() <= 14)
        .prop_flat_map(|c| {
            let n = c.rows.len();
            (Just(c), prop::collection::vec(any::<bool>(), n))
        })
}

fn split(raw: &RawCode, keep: &[bool]) -> (AdditiveCode, AdditiveCode) {
    let big = raw.code();
    let sub = RawCode {
        rows: raw.rows.iter().zip(keep).filter(|(_, &k)| k).map(|(r, _)| r.clone()).collect(),
        ..raw.clone()
    };
    (big, sub.code())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn difference_minimum_matches_naive((raw, keep) in nested(Layout::Symplectic)) {
        let (big, small) = split(&raw, &keep);
        let cfg = EnumConfig::default();
        prop_assert_eq!(min_weight_in_difference(&big, &small, &cfg).unwrap(), naive_min(&big, &small));
        let zero = AdditiveCode::zero(big.field(), big.layout(), big.length());
        prop_assert_eq!(min_weight(&big, &cfg).unwrap(), naive_min(&big, &zero));
    }

    #[test]
    fn hamming_minimum_matches_naive((raw, keep) in nested(Layout::Plain)) {
        let (big, small) = split(&raw, &keep);
        prop_assert_eq!(min_weight_in_difference(&big, &small, &EnumConfig::default()).unwrap(), naive_min(&big, &small));
    }

    #[test]
    fn distribution_counts_the_difference((raw, keep) in nested(Layout::Symplectic)) {
        let (big, small) = split(&raw, &keep);
        let dist = weight_distribution(&big, &small, &EnumConfig::default()).unwrap();
        let mut naive = vec![0u128; big.qudits() + 1];
        for v in all_vectors(&big).into_iter().filter(|v| !small.contains(v)) {
            naive[v.weight()] += 1;
        }
        prop_assert_eq!(dist, naive);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn worker_count_does_not_change_results(raw in symplectic_code(6)) {
        let big = raw.code();
        let small = AdditiveCode::zero(big.field(), big.layout(), big.length());
        let base = weight_distribution(&big, &small, &EnumConfig { workers: Some(1), ..EnumConfig::default() }).unwrap();
        for w in [Some(2), Some(5), None] {
            let cfg = EnumConfig { workers: w, ..EnumConfig::default() };
            prop_assert_eq!(&weight_distribution(&big, &small, &cfg).unwrap(), &base);
            prop_assert_eq!(
                min_weight(&big, &cfg).unwrap(),
                min_weight(&big, &EnumConfig { workers: Some(1), ..cfg }).unwrap()
            );
        }
    }
}

#[test]
fn cap_is_enforced() {
    let f = subsysforge::FieldSpec::new(2).unwrap();
    let full = AdditiveCode::full(&f, Layout::Symplectic, 10);
    let zero = AdditiveCode::zero(&f, Layout::Symplectic, 10);
    assert!(min_weight_in_difference(&full, &zero, &EnumConfig::with_cap(1 << 9)).is_err());
    assert_eq!(min_weight_in_difference(&full, &zero, &EnumConfig::with_cap(1 << 10)).unwrap(), Some(1));
}
