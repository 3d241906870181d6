mod common;

use common::{all_vectors, raw_code, symplectic_code, RawCode};
use proptest::prelude::*;
use subsysforge::additive_code::{trace_symplectic_product, Form};
use subsysforge::enumerate::min_weight;
use subsysforge::{AdditiveCode, CodeVector, EnumConfig, Layout, Linearity};

fn linear_plain(qs: Vec<u32>) -> impl Strategy<Value = RawCode> {
    raw_code(qs, Layout::Plain, 6, 6).prop_map(|mut c| {
        c.linear = true;
        c
    })
}

fn symplectic_pair(max_n: usize) -> impl Strategy<Value = (RawCode, RawCode)> {
    symplectic_code(max_n).prop_flat_map(|a| {
        let (q, len) = (a.q, a.len);
        let b = (prop::collection::vec(prop::collection::vec(0..q, len), 0..=len), any::<bool>())
            .prop_map(move |(rows, linear)| RawCode { q, layout: Layout::Symplectic, len, rows, linear });
        (Just(a), b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symplectic_dual_size_and_involution(raw in symplectic_code(6)) {
        let c = raw.code();
        let d = c.dual(Form::TraceSymplectic).unwrap();
        prop_assert_eq!(c.dim() + d.dim(), c.width());
        prop_assert_eq!(d.dual(Form::TraceSymplectic).unwrap(), c.clone());
        if c.is_fq_linear() {
            prop_assert!(d.is_fq_linear());
        }
    }

    #[test]
    fn euclidean_and_hermitian_duals(raw in linear_plain(vec![2, 3, 4, 5, 9])) {
        let c = raw.code();
        let e = c.dual(Form::Euclidean).unwrap();
        prop_assert_eq!(c.dim() + e.dim(), c.width());
        prop_assert_eq!(e.dual(Form::Euclidean).unwrap(), c.clone());
        if c.field().half_degree().is_ok() {
            for form in [Form::Hermitian, Form::TraceAlternating] {
                let h = c.dual(form).unwrap();
                prop_assert_eq!(c.dim() + h.dim(), c.width());
                prop_assert_eq!(h.dual(form).unwrap(), c.clone());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn extend_alpha_commutes_with_dual(raw in symplectic_code(5)) {
        let c = raw.code();
        let lhs = c.extend_alpha().unwrap().dual(Form::TraceSymplectic).unwrap();
        let rhs = c.dual(Form::TraceSymplectic).unwrap().extend_alpha().unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(c.extend_alpha().unwrap().dim(), c.dim() + c.field().m());
    }

    #[test]
    fn direct_sum_dual((a, b) in symplectic_pair(3)) {
        let (a, b) = (a.code(), b.code());
        let f = Form::TraceSymplectic;
        let lhs = AdditiveCode::direct_sum(&a, &b).unwrap().dual(f).unwrap();
        let rhs = AdditiveCode::direct_sum(&a.dual(f).unwrap(), &b.dual(f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn modular_law((a, b) in symplectic_pair(4)) {
        let (a, b) = (a.code(), b.code());
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subcode_of(&a) && i.is_subcode_of(&b));
        prop_assert!(a.is_subcode_of(&s) && b.is_subcode_of(&s));
    }

    #[test]
    fn presentation_independence(raw in symplectic_code(4), seed in any::<u64>()) {
        let c = raw.code();
        let f = raw.field();
        let mut rows: Vec<CodeVector> =
            raw.rows.iter().map(|r| CodeVector::from_values(&f, raw.layout, r).unwrap()).collect();
        // Append sums of neighbours and reverse or rotate the list.
        let extra: Vec<CodeVector> = rows.windows(2).map(|w| w[0].add(&w[1]).unwrap()).collect();
        rows.extend(extra);
        if seed % 2 == 0 {
            rows.reverse();
        } else if !rows.is_empty() {
            let k = seed as usize % rows.len();
            rows.rotate_left(k);
        }
        let lin = if raw.linear { Linearity::FqLinear } else { Linearity::Additive };
        let again = AdditiveCode::span_in(&f, raw.layout, raw.len, &rows, lin).unwrap();
        prop_assert_eq!(again.generator_matrix(), c.generator_matrix());
        let from_gens = AdditiveCode::span_in(&f, raw.layout, raw.len, &c.generators(), Linearity::Additive).unwrap();
        prop_assert_eq!(from_gens, c);
    }

    #[test]
    fn shorten_removes_two_coordinates_worth(raw in symplectic_code(4)) {
        let d = raw.code();
        let dual_min = min_weight(&d.dual(Form::TraceSymplectic).unwrap(), &EnumConfig::default()).unwrap();
        if dual_min.is_none_or(|w| w >= 2) {
            let m = d.field().m();
            for i in 0..d.qudits() {
                prop_assert_eq!(d.shorten(&[i]).unwrap().dim() + 2 * m, d.dim());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_matches_brute_force(raw in raw_code(vec![2, 3, 4], Layout::Symplectic, 2, 3)) {
        let c = raw.code();
        let d = c.dual(Form::TraceSymplectic).unwrap();
        let gens = c.generators();
        let full = AdditiveCode::full(c.field(), Layout::Symplectic, c.length());
        let mut count = 0usize;
        for v in all_vectors(&full) {
            let orth = gens.iter().all(|g| trace_symplectic_product(&v, g).unwrap() == 0);
            prop_assert_eq!(orth, d.contains(&v));
            count += orth as usize;
        }
        prop_assert_eq!(Some(count as u128), d.size());
    }
}
