//! Additive (GF(p)-linear) codes over GF(q)^N and the inner products used
//! to dualize them.
//!
//! A code is stored as a reduced row-echelon basis over GF(p) in the
//! m-expanded coordinate space, so equality of codes is equality of bases.
//! In the symplectic layout a vector `(x|y)` of length 2n keeps `x` in
//! entries `0..n` and `y` in entries `n..2n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::finite_field::{FieldElement, FieldSpec};
use crate::linalg::{Echelon, Fp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layout {
    /// A plain vector in GF(q)^n.
    Plain,
    /// A pair `(x|y)` in GF(q)^{2n}.
    Symplectic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Linearity {
    Additive,
    FqLinear,
}

/// Bilinear forms a code can be dualized under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `sum x_i y_i`, GF(q)-valued, plain layout.
    Euclidean,
    /// `sum x_i^s y_i` over GF(s^2), GF(q)-valued, plain layout.
    Hermitian,
    /// `tr(a'.b - a.b')` for `u = (a|b)`, `v = (a'|b')`, symplectic layout.
    TraceSymplectic,
    /// `tr((u.conj(v) - conj(u).v) / (beta - conj(beta)))` over GF(s^2),
    /// plain layout. `beta` is the field generator.
    TraceAlternating,
}

impl Form {
    fn layout(self) -> Layout {
        match self {
            Form::TraceSymplectic => Layout::Symplectic,
            _ => Layout::Plain,
        }
    }
}

/// A vector over GF(q) tagged with its layout.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeVector {
    field: FieldSpec,
    layout: Layout,
    entries: Vec<FieldElement>,
}

impl fmt::Debug for CodeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CodeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[FieldElement]| s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
        match self.layout {
            Layout::Plain => write!(f, "{}", join(&self.entries)),
            Layout::Symplectic => {
                let n = self.entries.len() / 2;
                write!(f, "{} | {}", join(&self.entries[..n]), join(&self.entries[n..]))
            }
        }
    }
}

impl CodeVector {
    pub fn new(field: &FieldSpec, layout: Layout, entries: Vec<FieldElement>) -> Result<Self> {
        if layout == Layout::Symplectic && !entries.len().is_multiple_of(2) {
            return Err(Error::LayoutMismatch(format!("symplectic vector of odd length {}", entries.len())));
        }
        if let Some(bad) = entries.iter().find(|e| e.value() >= field.q()) {
            return Err(Error::ElementOutOfRange { value: bad.value(), q: field.q() });
        }
        Ok(Self { field: field.clone(), layout, entries })
    }

    pub fn from_values(field: &FieldSpec, layout: Layout, values: &[u32]) -> Result<Self> {
        let entries = values.iter().map(|&v| field.element(v)).collect::<Result<Vec<_>>>()?;
        Self::new(field, layout, entries)
    }

    pub fn plain(field: &FieldSpec, values: &[u32]) -> Result<Self> {
        Self::from_values(field, Layout::Plain, values)
    }

    pub fn symplectic(field: &FieldSpec, x: &[u32], y: &[u32]) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LayoutMismatch(format!("halves of length {} and {}", x.len(), y.len())));
        }
        let all: Vec<u32> = x.iter().chain(y).copied().collect();
        Self::from_values(field, Layout::Symplectic, &all)
    }

    pub fn zero(field: &FieldSpec, layout: Layout, len: usize) -> Self {
        Self { field: field.clone(), layout, entries: vec![FieldElement::ZERO; len] }
    }

    pub fn from_expanded(field: &FieldSpec, layout: Layout, coords: &[u8]) -> Result<Self> {
        Self::new(field, layout, field.prime_basis_collapse(coords)?)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Number of qudit positions: n for both layouts.
    pub fn qudits(&self) -> usize {
        match self.layout {
            Layout::Plain => self.entries.len(),
            Layout::Symplectic => self.entries.len() / 2,
        }
    }

    pub fn x(&self) -> &[FieldElement] {
        &self.entries[..self.qudits()]
    }

    pub fn y(&self) -> &[FieldElement] {
        match self.layout {
            Layout::Plain => &[],
            Layout::Symplectic => &self.entries[self.qudits()..],
        }
    }

    pub fn expand(&self) -> Vec<u8> {
        self.field.prime_basis_expand(&self.entries)
    }

    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// Number of positions `i` with `(x_i, y_i) != (0, 0)`.
    pub fn symplectic_weight(&self) -> Result<usize> {
        self.require(Layout::Symplectic)?;
        Ok(self.x().iter().zip(self.y()).filter(|(a, b)| !a.is_zero() || !b.is_zero()).count())
    }

    /// Weight appropriate to the layout: symplectic weight or Hamming weight.
    pub fn weight(&self) -> usize {
        match self.layout {
            Layout::Plain => self.hamming_weight(),
            Layout::Symplectic => self.symplectic_weight().unwrap_or(0),
        }
    }

    pub fn scale(&self, c: FieldElement) -> CodeVector {
        let entries = self.entries.iter().map(|&e| self.field.mul(c, e)).collect();
        Self { field: self.field.clone(), layout: self.layout, entries }
    }

    pub fn add(&self, other: &CodeVector) -> Result<CodeVector> {
        check_pair(self, other, self.layout)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(Self { field: self.field.clone(), layout: self.layout, entries })
    }

    fn require(&self, layout: Layout) -> Result<()> {
        if self.layout == layout {
            Ok(())
        } else {
            Err(Error::LayoutMismatch(format!("expected {layout:?}, got {:?}", self.layout)))
        }
    }
}

fn check_pair(u: &CodeVector, v: &CodeVector, layout: Layout) -> Result<()> {
    if u.field != v.field {
        return Err(Error::FieldMismatch(u.field.q(), v.field.q()));
    }
    u.require(layout)?;
    v.require(layout)?;
    if u.len() != v.len() {
        return Err(Error::AmbientMismatch(format!("lengths {} and {}", u.len(), v.len())));
    }
    Ok(())
}

fn dot(f: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `<u|v>_s = tr(a'.b - a.b')` for `u = (a|b)`, `v = (a'|b')`.
pub fn trace_symplectic_product(u: &CodeVector, v: &CodeVector) -> Result<u8> {
    check_pair(u, v, Layout::Symplectic)?;
    let f = &u.field;
    let val = f.sub(dot(f, v.x(), u.y()), dot(f, u.x(), v.y()));
    Ok(f.trace_to_prime(val))
}

/// `<x|y> = sum x_i y_i`.
pub fn euclidean_product(x: &CodeVector, y: &CodeVector) -> Result<FieldElement> {
    check_pair(x, y, Layout::Plain)?;
    Ok(dot(&x.field, &x.entries, &y.entries))
}

/// `<x|y>_h = sum x_i^s y_i` over GF(s^2).
pub fn hermitian_product(x: &CodeVector, y: &CodeVector) -> Result<FieldElement> {
    check_pair(x, y, Layout::Plain)?;
    let f = &x.field;
    let mut acc = FieldElement::ZERO;
    for (&a, &b) in x.entries.iter().zip(&y.entries) {
        acc = f.add(acc, f.mul(f.conjugate(a)?, b));
    }
    Ok(acc)
}

/// Trace-alternating form over GF(s^2):
/// `tr_{s/p}((u.conj(v) - conj(u).v) / (beta - conj(beta)))` with `beta` the
/// field generator.
///
/// Writing entries as `a + b beta` with `a, b` in GF(s) turns this into the
/// trace-symplectic product of `(a|b)` over GF(s).
pub fn trace_alternating_product(u: &CodeVector, v: &CodeVector) -> Result<u8> {
    check_pair(u, v, Layout::Plain)?;
    let f = &u.field;
    let half = f.half_degree()?;
    let mut z = FieldElement::ZERO;
    for (&a, &b) in u.entries.iter().zip(&v.entries) {
        let t = f.sub(f.mul(a, f.conjugate(b)?), f.mul(f.conjugate(a)?, b));
        z = f.add(z, t);
    }
    let beta = f.generator();
    let denom = f.sub(beta, f.conjugate(beta)?);
    Ok(f.trace_over(f.mul(z, f.inv(denom)?), half))
}

pub fn symplectic_weight(v: &CodeVector) -> Result<usize> {
    v.symplectic_weight()
}

/// An additive code: a GF(p)-subspace of GF(q)^N.
#[derive(Clone, PartialEq, Eq)]
pub struct AdditiveCode {
    field: FieldSpec,
    layout: Layout,
    length: usize,
    basis: Echelon,
    linearity: Linearity,
}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "AdditiveCode(GF({}), {:?}, N={}, dim_p={}, {:?})",
            self.field.q(),
            self.layout,
            self.length,
            self.dim(),
            self.linearity
        )?;
        for g in self.generators() {
            writeln!(f, "  {g}")?;
        }
        Ok(())
    }
}

impl AdditiveCode {
    /// The zero code of length `length` (entries, so 2n for symplectic).
    pub fn zero(field: &FieldSpec, layout: Layout, length: usize) -> Self {
        let width = length * field.m();
        Self::from_echelon(field, layout, length, Echelon::zero(Fp::new(field.p()), width))
    }

    pub fn full(field: &FieldSpec, layout: Layout, length: usize) -> Self {
        let width = length * field.m();
        Self::from_echelon(field, layout, length, Echelon::full(Fp::new(field.p()), width))
    }

    /// Smallest code of the requested linearity containing `rows`. Rows must
    /// agree on field, layout and length; an empty list needs [`zero`](Self::zero).
    pub fn span(rows: &[CodeVector], linearity: Linearity) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::AmbientMismatch("span of an empty row list has no ambient space".into()))?;
        Self::span_in(&first.field, first.layout, first.len(), rows, linearity)
    }

    /// Like [`span`](Self::span) with an explicit ambient space, so the row
    /// list may be empty.
    pub fn span_in(
        field: &FieldSpec,
        layout: Layout,
        length: usize,
        rows: &[CodeVector],
        linearity: Linearity,
    ) -> Result<Self> {
        let mut basis = Echelon::zero(Fp::new(field.p()), length * field.m());
        let scalars = scalar_basis(field, linearity);
        for r in rows {
            if r.field != *field {
                return Err(Error::FieldMismatch(field.q(), r.field.q()));
            }
            if r.layout != layout || r.len() != length {
                return Err(Error::AmbientMismatch(format!(
                    "row of length {} ({:?}) in a {:?} code of length {length}",
                    r.len(),
                    r.layout,
                    layout
                )));
            }
            for &c in &scalars {
                basis.insert(r.scale(c).expand());
            }
        }
        Ok(Self::from_echelon(field, layout, length, basis))
    }

    pub(crate) fn from_expanded_rows<I: IntoIterator<Item = Vec<u8>>>(
        field: &FieldSpec,
        layout: Layout,
        length: usize,
        rows: I,
    ) -> Self {
        let basis = Echelon::from_rows(Fp::new(field.p()), length * field.m(), rows);
        Self::from_echelon(field, layout, length, basis)
    }

    fn from_echelon(field: &FieldSpec, layout: Layout, length: usize, basis: Echelon) -> Self {
        let mut code = Self { field: field.clone(), layout, length, basis, linearity: Linearity::Additive };
        if code.closed_under_scalars() {
            code.linearity = Linearity::FqLinear;
        }
        code
    }

    fn closed_under_scalars(&self) -> bool {
        if self.field.is_prime_field() {
            return true;
        }
        let g = self.field.generator();
        self.basis.rows.iter().all(|row| {
            let v = self.field.prime_basis_collapse(row).expect("row width is a multiple of m");
            let scaled: Vec<FieldElement> = v.iter().map(|&e| self.field.mul(g, e)).collect();
            self.basis.contains(&self.field.prime_basis_expand(&scaled))
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    /// Length N in GF(q) entries.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of qudits: N for plain codes, N/2 for symplectic codes.
    pub fn qudits(&self) -> usize {
        match self.layout {
            Layout::Plain => self.length,
            Layout::Symplectic => self.length / 2,
        }
    }

    pub fn linearity(&self) -> Linearity {
        self.linearity
    }

    pub fn is_fq_linear(&self) -> bool {
        self.linearity == Linearity::FqLinear
    }

    /// `log_p |C|`.
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Width of the expanded coordinate space, `N * m`.
    pub fn width(&self) -> usize {
        self.basis.width
    }

    /// `|C|`, if it fits in a u128.
    pub fn size(&self) -> Option<u128> {
        (self.field.p() as u128).checked_pow(self.dim() as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.width()
    }

    pub(crate) fn basis(&self) -> &Echelon {
        &self.basis
    }

    pub(crate) fn fp(&self) -> Fp {
        self.basis.fp
    }

    /// The canonical generators (reduced echelon rows over GF(p)).
    pub fn generators(&self) -> Vec<CodeVector> {
        self.basis
            .rows
            .iter()
            .map(|r| CodeVector::from_expanded(&self.field, self.layout, r).expect("canonical row"))
            .collect()
    }

    /// Canonical generator matrix in expanded GF(p) coordinates.
    pub fn generator_matrix(&self) -> &[Vec<u8>] {
        &self.basis.rows
    }

    pub fn contains(&self, v: &CodeVector) -> bool {
        v.field == self.field && v.layout == self.layout && v.len() == self.length && self.basis.contains(&v.expand())
    }

    pub(crate) fn contains_expanded(&self, v: &[u8]) -> bool {
        self.basis.contains(v)
    }

    pub fn is_subcode_of(&self, other: &AdditiveCode) -> bool {
        self.same_ambient(other).is_ok() && other.basis.contains_space(&self.basis)
    }

    pub(crate) fn same_ambient(&self, other: &AdditiveCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.q(), other.field.q()));
        }
        if self.layout != other.layout || self.length != other.length {
            return Err(Error::AmbientMismatch(format!(
                "{:?} length {} vs {:?} length {}",
                self.layout, self.length, other.layout, other.length
            )));
        }
        Ok(())
    }

    pub fn intersect(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        self.same_ambient(other)?;
        Ok(Self::from_echelon(&self.field, self.layout, self.length, self.basis.intersect(&other.basis)))
    }

    pub fn sum(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        self.same_ambient(other)?;
        Ok(Self::from_echelon(&self.field, self.layout, self.length, self.basis.sum(&other.basis)))
    }

    /// Adds vectors (and, for an F_q-linear result, their scalar multiples).
    pub fn extend_by(&self, vectors: &[CodeVector], linearity: Linearity) -> Result<AdditiveCode> {
        let extra = Self::span_in(&self.field, self.layout, self.length, vectors, linearity)?;
        self.sum(&extra)
    }

    /// Dual under `form`: all `v` with `form(v, g) = 0` for every generator `g`.
    pub fn dual(&self, form: Form) -> Result<AdditiveCode> {
        if form.layout() != self.layout {
            return Err(Error::LayoutMismatch(format!("{form:?} needs the {:?} layout", form.layout())));
        }
        if matches!(form, Form::Hermitian | Form::TraceAlternating) {
            self.field.half_degree()?;
        }
        let fp = self.fp();
        let unit_vectors: Vec<CodeVector> = (0..self.width())
            .map(|j| {
                let mut e = vec![0u8; self.width()];
                e[j] = 1;
                CodeVector::from_expanded(&self.field, self.layout, &e).expect("unit vector")
            })
            .collect();
        let mut functionals = Echelon::zero(fp, self.width());
        for g in self.generators() {
            match form {
                Form::TraceSymplectic | Form::TraceAlternating => {
                    let mut row = Vec::with_capacity(self.width());
                    for e in &unit_vectors {
                        row.push(match form {
                            Form::TraceSymplectic => trace_symplectic_product(e, &g)?,
                            _ => trace_alternating_product(e, &g)?,
                        });
                    }
                    functionals.insert(row);
                }
                Form::Euclidean | Form::Hermitian => {
                    let mut rows = vec![Vec::with_capacity(self.width()); self.field.m()];
                    for e in &unit_vectors {
                        let val = match form {
                            Form::Euclidean => euclidean_product(e, &g)?,
                            _ => hermitian_product(e, &g)?,
                        };
                        for (t, c) in self.field.coeffs(val).into_iter().enumerate() {
                            rows[t].push(c);
                        }
                    }
                    for r in rows {
                        functionals.insert(r);
                    }
                }
            }
        }
        Ok(Self::from_echelon(&self.field, self.layout, self.length, functionals.annihilator()))
    }

    /// Remove the given qudit positions (from both halves in the symplectic
    /// layout). Positions are 0-based.
    pub fn puncture(&self, coords: &[usize]) -> Result<AdditiveCode> {
        let n = self.qudits();
        for &c in coords {
            if c >= n {
                return Err(Error::CoordinateOutOfRange { index: c, length: n });
            }
        }
        let keep = self.kept_columns(coords);
        let new_len = match self.layout {
            Layout::Plain => n - dedup_count(coords),
            Layout::Symplectic => 2 * (n - dedup_count(coords)),
        };
        let rows = self.basis.rows.iter().map(|r| keep.iter().map(|&j| r[j]).collect::<Vec<u8>>());
        Ok(Self::from_expanded_rows(&self.field, self.layout, new_len, rows))
    }

    /// Subcode vanishing on `coords`, with those positions then removed.
    pub fn shorten(&self, coords: &[usize]) -> Result<AdditiveCode> {
        let n = self.qudits();
        let m = self.field.m();
        let mut constraints = Echelon::zero(self.fp(), self.width());
        for &c in coords {
            if c >= n {
                return Err(Error::CoordinateOutOfRange { index: c, length: n });
            }
            let halves: &[usize] = match self.layout {
                Layout::Plain => &[0],
                Layout::Symplectic => &[0, 1],
            };
            for &h in halves {
                for t in 0..m {
                    let mut e = vec![0u8; self.width()];
                    e[(h * n + c) * m + t] = 1;
                    constraints.insert(e);
                }
            }
        }
        let vanishing = self.basis.intersect(&constraints.annihilator());
        let sub = Self::from_echelon(&self.field, self.layout, self.length, vanishing);
        sub.puncture(coords)
    }

    fn kept_columns(&self, coords: &[usize]) -> Vec<usize> {
        let n = self.qudits();
        let m = self.field.m();
        let halves = match self.layout {
            Layout::Plain => 1,
            Layout::Symplectic => 2,
        };
        let mut keep = Vec::new();
        for h in 0..halves {
            for i in (0..n).filter(|i| !coords.contains(i)) {
                for t in 0..m {
                    keep.push((h * n + i) * m + t);
                }
            }
        }
        keep
    }

    /// `X' = {(a alpha | b 0) : (a|b) in X, alpha in GF(q)}`, one qudit longer.
    pub fn extend_alpha(&self) -> Result<AdditiveCode> {
        if self.layout != Layout::Symplectic {
            return Err(Error::LayoutMismatch("extend_alpha acts on symplectic codes".into()));
        }
        let n = self.qudits();
        let m = self.field.m();
        let new_width = 2 * (n + 1) * m;
        let remap = |r: &Vec<u8>| {
            let mut v = vec![0u8; new_width];
            v[..n * m].copy_from_slice(&r[..n * m]);
            v[(n + 1) * m..(n + 1) * m + n * m].copy_from_slice(&r[n * m..]);
            v
        };
        let mut rows: Vec<Vec<u8>> = self.basis.rows.iter().map(remap).collect();
        for t in 0..m {
            let mut v = vec![0u8; new_width];
            v[n * m + t] = 1;
            rows.push(v);
        }
        Ok(Self::from_expanded_rows(&self.field, self.layout, 2 * (n + 1), rows))
    }

    /// `{ uv : u in a, v in b }`; in the symplectic layout the halves are
    /// concatenated separately, `(x_u x_v | y_u y_v)`.
    pub fn direct_sum(a: &AdditiveCode, b: &AdditiveCode) -> Result<AdditiveCode> {
        Self::check_combinable(a, b)?;
        let (na, nb) = (a.qudits(), b.qudits());
        let m = a.field.m();
        let new_n = na + nb;
        let halves = a.halves();
        let place = |r: &Vec<u8>, offset: usize, own: usize| {
            let mut v = vec![0u8; halves * new_n * m];
            for h in 0..halves {
                let src = &r[h * own * m..(h + 1) * own * m];
                let dst = (h * new_n + offset) * m;
                v[dst..dst + own * m].copy_from_slice(src);
            }
            v
        };
        let rows = a
            .basis
            .rows
            .iter()
            .map(|r| place(r, 0, na))
            .chain(b.basis.rows.iter().map(|r| place(r, na, nb)));
        Ok(Self::from_expanded_rows(&a.field, a.layout, halves * new_n, rows.collect::<Vec<_>>()))
    }

    /// `{ (u, u + v) : u in a, v in b }` for codes of equal length; halves are
    /// treated separately in the symplectic layout.
    pub fn uuv(a: &AdditiveCode, b: &AdditiveCode) -> Result<AdditiveCode> {
        a.same_ambient(b)?;
        let n = a.qudits();
        let m = a.field.m();
        let halves = a.halves();
        let place = |r: &Vec<u8>, first: bool| {
            let mut v = vec![0u8; halves * 2 * n * m];
            for h in 0..halves {
                let src = &r[h * n * m..(h + 1) * n * m];
                let lo = h * 2 * n * m;
                if first {
                    v[lo..lo + n * m].copy_from_slice(src);
                }
                v[lo + n * m..lo + 2 * n * m].copy_from_slice(src);
            }
            v
        };
        let rows = a
            .basis
            .rows
            .iter()
            .map(|r| place(r, true))
            .chain(b.basis.rows.iter().map(|r| place(r, false)))
            .collect::<Vec<_>>();
        Ok(Self::from_expanded_rows(&a.field, a.layout, halves * 2 * n, rows))
    }

    /// `{(a|b) : a in x_part, b in y_part}` from two plain codes of equal length.
    pub fn from_halves(x_part: &AdditiveCode, y_part: &AdditiveCode) -> Result<AdditiveCode> {
        x_part.same_ambient(y_part)?;
        if x_part.layout != Layout::Plain {
            return Err(Error::LayoutMismatch("from_halves takes plain codes".into()));
        }
        let w = x_part.width();
        let rows = x_part
            .basis
            .rows
            .iter()
            .map(|r| {
                let mut v = r.clone();
                v.resize(2 * w, 0);
                v
            })
            .chain(y_part.basis.rows.iter().map(|r| {
                let mut v = vec![0u8; w];
                v.extend_from_slice(r);
                v
            }))
            .collect::<Vec<_>>();
        Ok(Self::from_expanded_rows(&x_part.field, Layout::Symplectic, 2 * x_part.length, rows))
    }

    /// The GF(Q)-span of this code inside GF(Q)^N for an extension field Q.
    pub fn extend_scalars(&self, big: &FieldSpec) -> Result<AdditiveCode> {
        let embed = big.embedding_of(&self.field)?;
        let rows: Vec<CodeVector> = self
            .generators()
            .iter()
            .map(|g| CodeVector::new(big, self.layout, g.entries().iter().map(|e| embed[e.value() as usize]).collect()))
            .collect::<Result<_>>()?;
        Self::span_in(big, self.layout, self.length, &rows, Linearity::FqLinear)
    }

    fn halves(&self) -> usize {
        match self.layout {
            Layout::Plain => 1,
            Layout::Symplectic => 2,
        }
    }

    fn check_combinable(a: &AdditiveCode, b: &AdditiveCode) -> Result<()> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.q(), b.field.q()));
        }
        if a.layout != b.layout {
            return Err(Error::LayoutMismatch(format!("{:?} vs {:?}", a.layout, b.layout)));
        }
        Ok(())
    }

    /// Every codeword, in expanded coordinates. Only sensible for small codes.
    pub fn expanded_elements(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let p = self.field.p();
        let k = self.dim();
        let total = (p as u128).pow(k as u32);
        (0..total).map(move |mut idx| {
            let mut coeffs = vec![0u8; k];
            for c in coeffs.iter_mut().rev() {
                *c = (idx % p as u128) as u8;
                idx /= p as u128;
            }
            self.basis.combine(&coeffs)
        })
    }
}

fn dedup_count(coords: &[usize]) -> usize {
    let mut c = coords.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Scalars whose multiples generate the closure of a row: `{1}` for additive
/// spans, `{1, x, ..., x^{m-1}}` for F_q-linear spans.
fn scalar_basis(field: &FieldSpec, linearity: Linearity) -> Vec<FieldElement> {
    match linearity {
        Linearity::Additive => vec![FieldElement::ONE],
        Linearity::FqLinear => {
            let g = field.generator();
            (0..field.m() as u64).map(|e| if field.is_prime_field() { FieldElement::ONE } else { field.pow(g, e) }).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> FieldSpec {
        FieldSpec::new(q).unwrap()
    }

    #[test]
    fn span_examples() {
        let f2 = f(2);
        let z = AdditiveCode::zero(&f2, Layout::Plain, 2);
        assert_eq!(z.dim(), 0);
        let full = AdditiveCode::span(
            &[CodeVector::plain(&f2, &[1, 0]).unwrap(), CodeVector::plain(&f2, &[0, 1]).unwrap()],
            Linearity::Additive,
        )
        .unwrap();
        assert_eq!(full.size(), Some(4));
        assert!(full.is_full());

        let f4 = f(4);
        let w = CodeVector::plain(&f4, &[2]).unwrap();
        let add = AdditiveCode::span(std::slice::from_ref(&w), Linearity::Additive).unwrap();
        assert_eq!(add.size(), Some(2));
        assert!(!add.is_fq_linear());
        assert!(add.contains(&w));
        assert!(!add.contains(&CodeVector::plain(&f4, &[1]).unwrap()));
        let lin = AdditiveCode::span(&[w], Linearity::FqLinear).unwrap();
        assert_eq!(lin.size(), Some(4));
        assert!(lin.is_fq_linear());
    }

    #[test]
    fn span_rejects_inconsistent_rows() {
        let f2 = f(2);
        let rows = [CodeVector::plain(&f2, &[1, 0]).unwrap(), CodeVector::plain(&f2, &[1, 0, 1]).unwrap()];
        assert!(matches!(AdditiveCode::span(&rows, Linearity::Additive), Err(Error::AmbientMismatch(_))));
        let rows = [CodeVector::plain(&f2, &[1, 0]).unwrap(), CodeVector::plain(&f(3), &[1, 0]).unwrap()];
        assert!(matches!(AdditiveCode::span(&rows, Linearity::Additive), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn product_examples() {
        let f2 = f(2);
        let u = CodeVector::symplectic(&f2, &[1], &[0]).unwrap();
        let v = CodeVector::symplectic(&f2, &[0], &[1]).unwrap();
        assert_eq!(trace_symplectic_product(&u, &v).unwrap(), 1);
        assert_eq!(trace_symplectic_product(&u, &u).unwrap(), 0);
        let a = CodeVector::plain(&f2, &[1, 1, 1]).unwrap();
        let b = CodeVector::plain(&f2, &[1, 1, 0]).unwrap();
        assert_eq!(euclidean_product(&a, &b).unwrap(), FieldElement::ZERO);
        assert_eq!(euclidean_product(&CodeVector::zero(&f2, Layout::Plain, 3), &b).unwrap(), FieldElement::ZERO);
        assert!(trace_symplectic_product(&a, &b).is_err());

        let f4 = f(4);
        let w = CodeVector::plain(&f4, &[2]).unwrap();
        // w^2 * w = w^3 = 1
        assert_eq!(hermitian_product(&w, &w).unwrap(), FieldElement::ONE);
        assert_eq!(trace_alternating_product(&w, &w).unwrap(), 0);
        // u = omega = 0 + 1*beta -> (0|1); v = 1 -> (1|0): tr(1*1 - 0*0) = 1
        let one = CodeVector::plain(&f4, &[1]).unwrap();
        assert_eq!(trace_alternating_product(&w, &one).unwrap(), 1);
        assert!(trace_alternating_product(&CodeVector::plain(&f(8), &[1]).unwrap(), &CodeVector::plain(&f(8), &[2]).unwrap()).is_err());
    }

    #[test]
    fn symplectic_weight_examples() {
        let f2 = f(2);
        assert_eq!(CodeVector::symplectic(&f2, &[0], &[0]).unwrap().symplectic_weight().unwrap(), 0);
        let v = CodeVector::symplectic(&f2, &[1, 0, 1], &[1, 1, 0]).unwrap();
        assert_eq!(v.symplectic_weight().unwrap(), 3);
        assert!(CodeVector::plain(&f2, &[1]).unwrap().symplectic_weight().is_err());
    }

    #[test]
    fn dual_of_trivial_codes() {
        for q in [2, 3, 4] {
            let fq = f(q);
            let z = AdditiveCode::zero(&fq, Layout::Symplectic, 6);
            let full = AdditiveCode::full(&fq, Layout::Symplectic, 6);
            assert_eq!(z.dual(Form::TraceSymplectic).unwrap(), full);
            assert_eq!(full.dual(Form::TraceSymplectic).unwrap(), z);
        }
        let z = AdditiveCode::zero(&f(2), Layout::Plain, 3);
        assert!(z.dual(Form::TraceSymplectic).is_err());
        assert!(z.dual(Form::Hermitian).is_err());
    }

    #[test]
    fn hermitian_and_euclidean_duals() {
        // The F4 repetition code has a 2-dimensional Euclidean and Hermitian dual.
        let f4 = f(4);
        let rep = AdditiveCode::span(&[CodeVector::plain(&f4, &[1, 1, 1]).unwrap()], Linearity::FqLinear).unwrap();
        let e = rep.dual(Form::Euclidean).unwrap();
        let h = rep.dual(Form::Hermitian).unwrap();
        assert_eq!(e.dim(), 4);
        assert_eq!(h.dim(), 4);
        assert!(e.contains(&CodeVector::plain(&f4, &[1, 1, 0]).unwrap()));
        assert!(!e.contains(&CodeVector::plain(&f4, &[1, 0, 0]).unwrap()));
    }

    #[test]
    fn structural_operations() {
        let f2 = f(2);
        let zero = AdditiveCode::zero(&f2, Layout::Symplectic, 4);
        let ext = zero.extend_alpha().unwrap();
        assert_eq!(ext.size(), Some(2));
        assert!(ext.contains(&CodeVector::symplectic(&f2, &[0, 0, 1], &[0, 0, 0]).unwrap()));

        let c = AdditiveCode::span(
            &[CodeVector::symplectic(&f2, &[1, 1], &[0, 1]).unwrap()],
            Linearity::Additive,
        )
        .unwrap();
        let p = c.puncture(&[0]).unwrap();
        assert_eq!(p.length(), 2);
        assert!(p.contains(&CodeVector::symplectic(&f2, &[1], &[1]).unwrap()));
        assert!(matches!(c.puncture(&[2]), Err(Error::CoordinateOutOfRange { .. })));
        let s = c.shorten(&[0]).unwrap();
        assert!(s.is_zero());

        let ds = AdditiveCode::direct_sum(&c, &c).unwrap();
        assert_eq!(ds.dim(), 2);
        assert!(ds.contains(&CodeVector::symplectic(&f2, &[1, 1, 0, 0], &[0, 1, 0, 0]).unwrap()));
        assert!(ds.contains(&CodeVector::symplectic(&f2, &[0, 0, 1, 1], &[0, 0, 0, 1]).unwrap()));

        let u = AdditiveCode::uuv(&c, &c).unwrap();
        assert_eq!(u.dim(), 2);
        assert!(u.contains(&CodeVector::symplectic(&f2, &[1, 1, 1, 1], &[0, 1, 0, 1]).unwrap()));
        assert!(u.contains(&CodeVector::symplectic(&f2, &[0, 0, 1, 1], &[0, 0, 0, 1]).unwrap()));
    }

    #[test]
    fn extend_scalars_keeps_dimension_over_fq() {
        let f2 = f(2);
        let c = AdditiveCode::span(
            &[CodeVector::symplectic(&f2, &[1, 1], &[0, 1]).unwrap()],
            Linearity::Additive,
        )
        .unwrap();
        let big = c.extend_scalars(&f(4)).unwrap();
        assert_eq!(big.dim(), 2);
        assert!(big.is_fq_linear());
    }
}
