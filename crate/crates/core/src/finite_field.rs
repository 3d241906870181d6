//! Exact arithmetic in GF(p^m) for q = p^m <= 16.
//!
//! Elements are stored as base-p packed integers: the polynomial
//! `c0 + c1 x + ... + c_{m-1} x^{m-1}` is the integer `c0 + c1 p + ...`.
//! This packing is also the external text encoding used by code files.
//!
//! The default moduli are the Conway polynomials, so the packed encodings
//! agree with other tools that use Conway presentations:
//!
//! | q  | modulus (low to high) | polynomial      |
//! |----|-----------------------|-----------------|
//! | 2  | 1 1                   | x + 1           |
//! | 3  | 1 1                   | x + 1           |
//! | 4  | 1 1 1                 | x^2 + x + 1     |
//! | 5  | 3 1                   | x + 3           |
//! | 7  | 4 1                   | x + 4           |
//! | 8  | 1 1 0 1               | x^3 + x + 1     |
//! | 9  | 2 2 1                 | x^2 + 2x + 2    |
//! | 11 | 9 1                   | x + 9           |
//! | 13 | 11 1                  | x + 11          |
//! | 16 | 1 1 0 0 1             | x^4 + x + 1     |

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const CONWAY: &[(u32, u8, &[u8])] = &[
    (2, 2, &[1, 1]),
    (3, 3, &[1, 1]),
    (4, 2, &[1, 1, 1]),
    (5, 5, &[3, 1]),
    (7, 7, &[4, 1]),
    (8, 2, &[1, 1, 0, 1]),
    (9, 3, &[2, 2, 1]),
    (11, 11, &[9, 1]),
    (13, 13, &[11, 1]),
    (16, 2, &[1, 1, 0, 0, 1]),
];

/// Field orders with a built-in modulus.
pub fn supported_orders() -> impl Iterator<Item = u32> {
    CONWAY.iter().map(|&(q, _, _)| q)
}

/// An element of some GF(q), packed as an integer in `[0, q)`.
///
/// Elements carry no reference to their field; all arithmetic goes through
/// [`FieldSpec`], which validates values on entry via [`FieldSpec::element`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u8,
    m: u8,
    q: u8,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// A finite field GF(p^m) with a fixed irreducible modulus.
///
/// Cloning is cheap; the arithmetic tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    t: Arc<Tables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || (self.t.p == other.t.p && self.t.modulus == other.t.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{:?}]", self.q(), self.t.modulus)
    }
}

impl FieldSpec {
    /// The field of order `q` with its Conway modulus.
    pub fn new(q: u32) -> Result<Self> {
        let &(_, p, modulus) = CONWAY
            .iter()
            .find(|&&(order, _, _)| order == q)
            .ok_or(Error::UnsupportedField(q))?;
        Self::with_modulus(p, modulus)
    }

    /// A field with an explicit modulus, given low-to-high and monic.
    pub fn with_modulus(p: u8, modulus: &[u8]) -> Result<Self> {
        if !is_prime(p as u32) {
            return Err(Error::UnsupportedField(p as u32));
        }
        let m = modulus.len().saturating_sub(1);
        if m == 0 || modulus[m] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::ReducibleModulus(modulus.to_vec(), p));
        }
        let q = (p as u32).pow(m as u32);
        if q > 16 {
            return Err(Error::UnsupportedField(q));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus(modulus.to_vec(), p));
        }
        Ok(Self { t: Arc::new(Tables::build(p, m as u8, modulus.to_vec())) })
    }

    pub fn p(&self) -> u8 {
        self.t.p
    }

    pub fn m(&self) -> usize {
        self.t.m as usize
    }

    pub fn q(&self) -> u32 {
        self.t.q as u32
    }

    pub fn modulus(&self) -> &[u8] {
        &self.t.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.t.m == 1
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q() {
            Ok(FieldElement(value as u8))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.q() })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.t.q).map(FieldElement)
    }

    /// The class of `x` modulo the modulus. For m = 1 this is the root of the
    /// linear modulus, a primitive element for the Conway choice.
    pub fn generator(&self) -> FieldElement {
        if self.t.m == 1 {
            FieldElement((self.t.p - self.t.modulus[0]) % self.t.p)
        } else {
            FieldElement(self.t.p)
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.t.add[a.0 as usize * self.t.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.t.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.t.mul[a.0 as usize * self.t.q as usize + b.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(FieldElement(self.t.inv[a.0 as usize]))
        }
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.t.p as u64)
    }

    /// Absolute trace `a + a^p + ... + a^{p^{m-1}}`, returned as a residue mod p.
    pub fn trace_to_prime(&self, a: FieldElement) -> u8 {
        self.trace_over(a, self.m())
    }

    /// `a + a^p + ... + a^{p^{terms-1}}` read as an element of GF(p); only
    /// meaningful when the sum is known to land in the prime field.
    pub(crate) fn trace_over(&self, a: FieldElement, terms: usize) -> u8 {
        let mut acc = FieldElement::ZERO;
        let mut cur = a;
        for _ in 0..terms {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur);
        }
        debug_assert!(acc.0 < self.t.p, "trace left the prime field");
        acc.0
    }

    /// Degree of GF(q) over the subfield GF(sqrt q), if q is an even power of p.
    pub fn half_degree(&self) -> Result<usize> {
        if self.t.m.is_multiple_of(2) {
            Ok(self.m() / 2)
        } else {
            Err(Error::NotQuadratic(self.q()))
        }
    }

    /// Order of the subfield over which this field is quadratic.
    pub fn subfield_order(&self) -> Result<u32> {
        Ok((self.t.p as u32).pow(self.half_degree()? as u32))
    }

    /// Conjugation `a -> a^s` for GF(s^2) over GF(s).
    pub fn conjugate(&self, a: FieldElement) -> Result<FieldElement> {
        let s = self.subfield_order()?;
        Ok(self.pow(a, s as u64))
    }

    /// Coefficients of `a` in the basis `1, x, ..., x^{m-1}`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u8> {
        let p = self.t.p;
        let mut v = a.0;
        (0..self.t.m)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u8]) -> Result<FieldElement> {
        let p = self.t.p as u32;
        if coeffs.len() != self.m() || coeffs.iter().any(|&c| c as u32 >= p) {
            return Err(Error::ElementOutOfRange {
                value: coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c as u32),
                q: self.q(),
            });
        }
        Ok(FieldElement(coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c as u32) as u8))
    }

    /// Expand a vector over GF(q) into its prime-field coordinates
    /// (m coordinates per entry, low-to-high).
    pub fn prime_basis_expand(&self, v: &[FieldElement]) -> Vec<u8> {
        let mut out = Vec::with_capacity(v.len() * self.m());
        for &a in v {
            out.extend(self.coeffs(a));
        }
        out
    }

    /// Inverse of [`prime_basis_expand`](Self::prime_basis_expand).
    pub fn prime_basis_collapse(&self, v: &[u8]) -> Result<Vec<FieldElement>> {
        if !v.len().is_multiple_of(self.m()) {
            return Err(Error::AmbientMismatch(format!(
                "length {} is not a multiple of m = {}",
                v.len(),
                self.m()
            )));
        }
        v.chunks(self.m()).map(|c| self.from_coeffs(c)).collect()
    }

    /// Embedding of `sub` into this field as a table indexed by the packed
    /// value of each `sub` element. The generator of `sub` maps to
    /// `x^((q-1)/(s-1))` when that is a root of the modulus of `sub`
    /// (Conway compatibility); otherwise to the smallest root.
    pub fn embedding_of(&self, sub: &FieldSpec) -> Result<Vec<FieldElement>> {
        if sub.p() != self.p() || !self.m().is_multiple_of(sub.m()) {
            return Err(Error::NotSubfield { sub: sub.q(), big: self.q() });
        }
        let is_root = |z: FieldElement| {
            let mut acc = FieldElement::ZERO;
            for &c in sub.modulus().iter().rev() {
                acc = self.add(self.mul(acc, z), FieldElement(c));
            }
            acc.is_zero()
        };
        let preferred = self.pow(self.generator(), ((self.q() - 1) / (sub.q() - 1)) as u64);
        let root = if is_root(preferred) {
            preferred
        } else {
            self.elements()
                .find(|&z| is_root(z))
                .ok_or(Error::NotSubfield { sub: sub.q(), big: self.q() })?
        };
        Ok(sub
            .elements()
            .map(|a| {
                sub.coeffs(a).iter().rev().fold(FieldElement::ZERO, |acc, &c| {
                    self.add(self.mul(acc, root), FieldElement(c))
                })
            })
            .collect())
    }
}

impl Tables {
    fn build(p: u8, m: u8, modulus: Vec<u8>) -> Self {
        let q = (p as u32).pow(m as u32) as u8;
        let qs = q as usize;
        let to_poly = |v: u8| -> Vec<u8> {
            let mut v = v;
            (0..m)
                .map(|_| {
                    let c = v % p;
                    v /= p;
                    c
                })
                .collect()
        };
        let from_poly = |c: &[u8]| -> u8 {
            let mut c = c.to_vec();
            c.resize(m as usize, 0);
            c.iter().rev().fold(0u32, |acc, &d| acc * p as u32 + d as u32) as u8
        };
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..q {
            let pa = to_poly(a);
            neg[a as usize] = from_poly(&pa.iter().map(|&c| (p - c) % p).collect::<Vec<_>>());
            for b in 0..q {
                let pb = to_poly(b);
                let s: Vec<u8> = pa.iter().zip(&pb).map(|(&x, &y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = from_poly(&s);
                mul[a as usize * qs + b as usize] = from_poly(&poly_mulmod(&pa, &pb, &modulus, p));
            }
            if a != 0 {
                inv[a as usize] = from_poly(&poly_inverse(&pa, &modulus, p));
            }
        }
        Tables { p, m, q, modulus, add, mul, neg, inv }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub(crate) fn inv_mod(a: u8, p: u8) -> u8 {
    // Fermat; p is tiny.
    let mut acc = 1u32;
    for _ in 0..p - 2 {
        acc = acc * a as u32 % p as u32;
    }
    acc as u8
}

fn trim(mut v: Vec<u8>) -> Vec<u8> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo `b` over GF(p); `b` nonzero.
fn poly_rem(a: &[u8], b: &[u8], p: u8) -> Vec<u8> {
    poly_divrem(a, b, p).1
}

fn poly_divrem(a: &[u8], b: &[u8], p: u8) -> (Vec<u8>, Vec<u8>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut quot = vec![0u8; r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (*r.last().unwrap() as u32 * lead_inv as u32 % p as u32) as u8;
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            let idx = i + shift;
            r[idx] = ((r[idx] as u32 + (p - c) as u32 * bc as u32) % p as u32) as u8;
        }
        r = trim(r);
    }
    (trim(quot), r)
}

fn poly_mul(a: &[u8], b: &[u8], p: u8) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x as u32 * y as u32;
        }
    }
    trim(out.into_iter().map(|c| (c % p as u32) as u8).collect())
}

fn poly_sub(a: &[u8], b: &[u8], p: u8) -> Vec<u8> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0);
                let y = *b.get(i).unwrap_or(&0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn poly_mulmod(a: &[u8], b: &[u8], modulus: &[u8], p: u8) -> Vec<u8> {
    poly_rem(&poly_mul(&trim(a.to_vec()), &trim(b.to_vec()), p), modulus, p)
}

/// Inverse of `a` modulo an irreducible `modulus` by the extended Euclidean
/// algorithm.
fn poly_inverse(a: &[u8], modulus: &[u8], p: u8) -> Vec<u8> {
    let (mut r0, mut r1) = (modulus.to_vec(), trim(a.to_vec()));
    let (mut s0, mut s1) = (Vec::new(), vec![1u8]);
    while !r1.is_empty() {
        let (quot, rem) = poly_divrem(&r0, &r1, p);
        let s2 = poly_sub(&s0, &poly_mul(&quot, &s1, p), p);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant.
    let c = inv_mod(r0[0], p);
    poly_rem(&s0.iter().map(|&x| (x as u32 * c as u32 % p as u32) as u8).collect::<Vec<_>>(), modulus, p)
}

/// Trial division by every monic polynomial of degree 1..=m/2.
fn is_irreducible(modulus: &[u8], p: u8) -> bool {
    let m = modulus.len() - 1;
    for deg in 1..=m / 2 {
        let count = (p as u32).pow(deg as u32);
        for lower in 0..count {
            let mut cand = Vec::with_capacity(deg + 1);
            let mut v = lower;
            for _ in 0..deg {
                cand.push((v % p as u32) as u8);
                v /= p as u32;
            }
            cand.push(1);
            if poly_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &FieldSpec, v: u32) -> FieldElement {
        f.element(v).unwrap()
    }

    #[test]
    fn small_examples() {
        let f2 = FieldSpec::new(2).unwrap();
        assert_eq!(f2.add(el(&f2, 1), el(&f2, 1)), el(&f2, 0));
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(f3.add(el(&f3, 2), el(&f3, 2)), el(&f3, 1));
        assert_eq!(f3.mul(el(&f3, 2), el(&f3, 2)), el(&f3, 1));
        assert_eq!(f3.inv(el(&f3, 2)).unwrap(), el(&f3, 2));
        let f7 = FieldSpec::new(7).unwrap();
        assert_eq!(f7.inv(el(&f7, 3)).unwrap(), el(&f7, 5));

        // GF(4): omega = x packs to 2, omega + 1 packs to 3.
        let f4 = FieldSpec::new(4).unwrap();
        let w = el(&f4, 2);
        assert_eq!(f4.add(w, FieldElement::ONE), el(&f4, 3));
        assert_eq!(f4.coeffs(el(&f4, 3)), vec![1, 1]);
        assert_eq!(f4.mul(w, w), el(&f4, 3));
        assert_eq!(f4.inv(w).unwrap(), el(&f4, 3));
        assert_eq!(f4.trace_to_prime(w), 1);
        assert_eq!(f4.trace_to_prime(FieldElement::ONE), 0);
        assert_eq!(f2.trace_to_prime(FieldElement::ONE), 1);
        assert_eq!(f4.conjugate(w).unwrap(), el(&f4, 3));
        assert_eq!(f4.conjugate(FieldElement::ZERO).unwrap(), FieldElement::ZERO);
        assert_eq!(f4.prime_basis_expand(&[w]), vec![0, 1]);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f5 = FieldSpec::new(5).unwrap();
        assert_eq!(f5.inv(FieldElement::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(matches!(FieldSpec::new(6), Err(Error::UnsupportedField(6))));
        assert!(matches!(FieldSpec::new(32), Err(Error::UnsupportedField(32))));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(FieldSpec::with_modulus(2, &[1, 0, 1]), Err(Error::ReducibleModulus(..))));
        assert!(FieldSpec::with_modulus(3, &[1, 0, 1]).is_ok());
        assert!(FieldSpec::new(3).unwrap().conjugate(FieldElement::ONE).is_err());
        assert!(FieldSpec::new(8).unwrap().half_degree().is_err());
    }

    #[test]
    fn gf9_conjugate_is_cube() {
        let f9 = FieldSpec::new(9).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.conjugate(a).unwrap(), f9.mul(a, f9.mul(a, a)));
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in supported_orders().filter(|&q| q <= 9) {
            let f = FieldSpec::new(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, FieldElement::ZERO), a);
                assert_eq!(f.mul(a, FieldElement::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                    assert_eq!(f.pow(a, q as u64 - 1), FieldElement::ONE, "Fermat in GF({q})");
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_linear_and_surjective() {
        for q in supported_orders() {
            let f = FieldSpec::new(q).unwrap();
            let p = f.p();
            let mut hit = vec![false; p as usize];
            for a in f.elements() {
                hit[f.trace_to_prime(a) as usize] = true;
                for b in f.elements() {
                    assert_eq!(
                        f.trace_to_prime(f.add(a, b)),
                        (f.trace_to_prime(a) + f.trace_to_prime(b)) % p
                    );
                }
            }
            assert!(hit.iter().all(|&h| h), "trace onto GF({p}) from GF({q})");
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism() {
        for q in [4, 9, 16] {
            let f = FieldSpec::new(q).unwrap();
            for a in f.elements() {
                let c = f.conjugate(a).unwrap();
                assert_eq!(f.conjugate(c).unwrap(), a);
                for b in f.elements() {
                    assert_eq!(f.conjugate(f.mul(a, b)).unwrap(), f.mul(c, f.conjugate(b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn conway_generators_are_primitive() {
        for q in supported_orders() {
            let f = FieldSpec::new(q).unwrap();
            let g = f.generator();
            let order = (1..q as u64).find(|&e| f.pow(g, e) == FieldElement::ONE).unwrap();
            assert_eq!(order, q as u64 - 1, "GF({q})");
        }
    }

    #[test]
    fn subfield_embeddings_are_homomorphisms() {
        for (big, sub) in [(4, 2), (16, 4), (16, 2), (9, 3), (8, 2)] {
            let fb = FieldSpec::new(big).unwrap();
            let fs = FieldSpec::new(sub).unwrap();
            let e = fb.embedding_of(&fs).unwrap();
            for a in fs.elements() {
                for b in fs.elements() {
                    assert_eq!(e[fs.add(a, b).0 as usize], fb.add(e[a.0 as usize], e[b.0 as usize]));
                    assert_eq!(e[fs.mul(a, b).0 as usize], fb.mul(e[a.0 as usize], e[b.0 as usize]));
                }
            }
        }
        // GF(16) with x^4+x+1: omega maps to x^5 = x^2 + x, packed 6.
        let e = FieldSpec::new(16).unwrap().embedding_of(&FieldSpec::new(4).unwrap()).unwrap();
        assert_eq!(e[2].value(), 6);
        assert!(FieldSpec::new(8).unwrap().embedding_of(&FieldSpec::new(4).unwrap()).is_err());
    }

    #[test]
    fn expand_collapse_roundtrip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q in supported_orders() {
            let f = FieldSpec::new(q).unwrap();
            for _ in 0..20 {
                let v: Vec<_> = (0..rng.gen_range(0..9)).map(|_| el(&f, rng.gen_range(0..q))).collect();
                let e = f.prime_basis_expand(&v);
                assert_eq!(e.len(), v.len() * f.m());
                assert_eq!(f.prime_basis_collapse(&e).unwrap(), v);
            }
        }
        let f2 = FieldSpec::new(2).unwrap();
        assert_eq!(f2.prime_basis_expand(&[el(&f2, 1), el(&f2, 0)]), vec![1, 0]);
    }
}
