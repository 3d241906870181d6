//! Pauli strings over {I, X, Y, Z} as binary symplectic vectors:
//! I = (0|0), X = (1|0), Z = (0|1), Y = (1|1).

use crate::additive_code::{AdditiveCode, CodeVector, Layout, Linearity};
use crate::error::{Error, Result};
use crate::finite_field::FieldSpec;

pub fn parse_pauli_row(row: &str) -> Result<CodeVector> {
    let f2 = FieldSpec::new(2)?;
    let mut x = Vec::with_capacity(row.len());
    let mut z = Vec::with_capacity(row.len());
    for (i, ch) in row.chars().enumerate() {
        let (a, b) = match ch {
            'I' => (0, 0),
            'X' => (1, 0),
            'Z' => (0, 1),
            'Y' => (1, 1),
            _ => return Err(Error::Parse { line: 0, msg: format!("invalid Pauli symbol {ch:?} at position {}", i + 1) }),
        };
        x.push(a);
        z.push(b);
    }
    CodeVector::symplectic(&f2, &x, &z)
}

/// Additive span of the rows' symplectic images.
pub fn parse_pauli_matrix<S: AsRef<str>>(rows: &[S]) -> Result<AdditiveCode> {
    let vecs = rows.iter().map(|r| parse_pauli_row(r.as_ref())).collect::<Result<Vec<_>>>()?;
    let Some(first) = vecs.first() else {
        return Err(Error::Parse { line: 0, msg: "empty Pauli matrix".into() });
    };
    if let Some(bad) = vecs.iter().find(|v| v.len() != first.len()) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("Pauli rows of lengths {} and {}", first.qudits(), bad.qudits()),
        });
    }
    AdditiveCode::span(&vecs, Linearity::Additive)
}

/// Inverse of [`parse_pauli_row`] for binary symplectic vectors.
pub fn to_pauli(v: &CodeVector) -> Result<String> {
    if v.field().q() != 2 || v.layout() != Layout::Symplectic {
        return Err(Error::LayoutMismatch("Pauli strings need a binary symplectic vector".into()));
    }
    Ok(v.x()
        .iter()
        .zip(v.y())
        .map(|(a, b)| match (a.value(), b.value()) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (0, _) => 'Z',
            _ => 'Y',
        })
        .collect())
}
