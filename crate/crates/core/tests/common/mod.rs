//! Strategies shared by the property suites.
#![allow(dead_code)]

use proptest::prelude::*;
use subsysforge::{AdditiveCode, CodeVector, FieldSpec, Layout, Linearity};

/// `(q, entries per row, rows, linearity)` for a random code.
#[derive(Clone, Debug)]
pub struct RawCode {
    pub q: u32,
    pub layout: Layout,
    pub len: usize,
    pub rows: Vec<Vec<u32>>,
    pub linear: bool,
}

impl RawCode {
    pub fn field(&self) -> FieldSpec {
        FieldSpec::new(self.q).unwrap()
    }

    pub fn code(&self) -> AdditiveCode {
        let f = self.field();
        let rows: Vec<CodeVector> =
            self.rows.iter().map(|r| CodeVector::from_values(&f, self.layout, r).unwrap()).collect();
        let lin = if self.linear { Linearity::FqLinear } else { Linearity::Additive };
        AdditiveCode::span_in(&f, self.layout, self.len, &rows, lin).unwrap()
    }
}

pub fn raw_code(qs: Vec<u32>, layout: Layout, max_n: usize, max_rows: usize) -> impl Strategy<Value = RawCode> {
    (prop::sample::select(qs), 1..=max_n, any::<bool>()).prop_flat_map(move |(q, n, linear)| {
        let len = match layout {
            Layout::Plain => n,
            Layout::Symplectic => 2 * n,
        };
        prop::collection::vec(prop::collection::vec(0..q, len), 0..=max_rows)
            .prop_map(move |rows| RawCode { q, layout, len, rows, linear })
    })
}

pub fn symplectic_code(max_n: usize) -> impl Strategy<Value = RawCode> {
    raw_code(vec![2, 3, 4], Layout::Symplectic, max_n, 2 * max_n)
}

/// Every vector of `code` by brute force.
pub fn all_vectors(code: &AdditiveCode) -> Vec<CodeVector> {
    code.expanded_elements()
        .map(|v| CodeVector::from_expanded(code.field(), code.layout(), &v).unwrap())
        .collect()
}
