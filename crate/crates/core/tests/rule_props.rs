mod common;

use common::raw_code;
use proptest::prelude::*;
use subsysforge::catalog::families::{family_tuples, Family, FamilySpec};
use subsysforge::error::Error;
use subsysforge::params::Rule;
use subsysforge::propagation::{
    extend_param, generic_trades, rule_closure, shorten_param, shrink_k_param, trade_gauge, TradeDirection,
};
use subsysforge::{Bound, DistanceMode, EnumConfig, Layout, ParamTuple, Purity, SubsystemCode};

fn seed_tuple() -> impl Strategy<Value = ParamTuple> {
    (prop::sample::select(vec![2u32, 3, 4]), 2u32..=7, 0i64..=6, 0i64..=6, 1u32..=4, any::<bool>())
        .prop_map(|(q, n, k, r, d, pure)| {
            let purity = if pure { Purity::Pure } else { Purity::Unknown };
            ParamTuple::new(q, n, k, r, Bound::Exact(d), purity)
        })
        .prop_filter("valid tuple", |t| t.validate().is_ok())
}

fn summary(ts: &[ParamTuple]) -> Vec<(String, Vec<subsysforge::params::Step>)> {
    ts.iter().map(|t| (t.describe(), t.provenance.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_levels_compose(seeds in prop::collection::vec(seed_tuple(), 1..=3)) {
        let once = rule_closure(&seeds, 1);
        prop_assert_eq!(summary(&rule_closure(&once, 1)), summary(&rule_closure(&seeds, 2)));
        prop_assert_eq!(summary(&rule_closure(&seeds, 0)), summary(&seeds));
        let mut rev = seeds.clone();
        rev.reverse();
        prop_assert_eq!(summary(&rule_closure(&rev, 2)), summary(&rule_closure(&seeds, 2)));
        let keys: Vec<_> = once.iter().map(|t| t.key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(keys, sorted);
    }

    #[test]
    fn derived_tuples_record_their_step(t in seed_tuple()) {
        type One = fn(&ParamTuple) -> subsysforge::Result<ParamTuple>;
        let rules: [(Rule, One); 3] = [(Rule::Extend, extend_param), (Rule::Shorten, shorten_param), (Rule::ShrinkK, shrink_k_param)];
        for (rule, f) in rules {
            if let Ok(out) = f(&t) {
                prop_assert_eq!(out.provenance.len(), t.provenance.len() + 1);
                let last = out.provenance.last().unwrap();
                prop_assert_eq!(last.rule, rule);
                prop_assert_eq!(&last.from, &vec![t.to_string()]);
                prop_assert!(out.validate().is_ok());
            }
        }
        for out in generic_trades(&t) {
            prop_assert_eq!(out.k + out.r, t.k + t.r);
            prop_assert_eq!(out.provenance.last().unwrap().from.clone(), vec![t.to_string()]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn constructive_trades_round_trip(raw in raw_code(vec![2, 3], Layout::Symplectic, 5, 6)) {
        let c = raw.code();
        prop_assume!(!c.is_zero());
        let cfg = EnumConfig::default();
        let code = SubsystemCode::from_gauge_code(c, DistanceMode::Compute(cfg)).unwrap();
        let p = code.params().clone();
        match trade_gauge(&code, TradeDirection::KToR, &cfg) {
            Ok(up) => {
                let a = up.code.params();
                prop_assert_eq!((a.n, a.k + a.r), (p.n, p.k + p.r));
                prop_assert_eq!(a.r, p.r + 1);
                prop_assert!(a.d.lower() >= p.d.lower());
                if up.code.is_pure() {
                    let down = trade_gauge(&up.code, TradeDirection::RToK, &cfg).unwrap();
                    prop_assert_eq!(down.code.params().key(), p.key());
                }
            }
            Err(Error::Precondition(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
        match trade_gauge(&code, TradeDirection::RToK, &cfg) {
            Ok(down) => {
                let a = down.code.params();
                prop_assert_eq!((a.k, a.r), (p.k + 1, p.r - 1));
                prop_assert_eq!(a.d, p.d);
            }
            Err(Error::Precondition(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn family_tuples_fit_in_n(
        family in prop::sample::select(Family::ALL.to_vec()),
        q in prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]),
        vals in prop::collection::vec(0u32..=12, 8),
    ) {
        let spec = FamilySpec {
            n: Some(vals[0] + 1),
            m: Some(vals[1]),
            d: Some(vals[2]),
            delta: Some(vals[3]),
            nu: Some(vals[4]),
            alpha: Some(vals[5]),
            s: Some(vals[6]),
            power: Some(vals[7] % 4 + 1),
            ..FamilySpec::new(family, q)
        };
        if let Ok(ts) = family_tuples(&spec, 0..=12) {
            for t in &ts {
                prop_assert!(t.k >= num_rational::Ratio::from_integer(1));
                prop_assert!(t.k + t.r <= num_rational::Ratio::from_integer(t.n as i64));
                prop_assert_eq!(t.provenance.len(), 1);
                prop_assert_eq!(t.provenance[0].rule, Rule::Family);
            }
        }
    }
}
