//! Dense linear algebra over a prime field GF(p), p < 256.

use crate::finite_field::inv_mod;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Fp {
    pub p: u8,
}

impl Fp {
    pub fn new(p: u8) -> Self {
        Self { p }
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        if s >= self.p as u16 {
            (s - self.p as u16) as u8
        } else {
            s as u8
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a as u16 * b as u16 % self.p as u16) as u8
    }

    pub fn inv(self, a: u8) -> u8 {
        inv_mod(a, self.p)
    }

    /// `dst += c * src`
    pub fn axpy(self, dst: &mut [u8], c: u8, src: &[u8]) {
        if c == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, self.mul(c, s));
        }
    }

    pub fn dot(self, a: &[u8], b: &[u8]) -> u8 {
        let acc: u32 = a.iter().zip(b).map(|(&x, &y)| x as u32 * y as u32).sum();
        (acc % self.p as u32) as u8
    }
}

/// A subspace of GF(p)^width stored as a reduced row-echelon basis.
///
/// Rows are sorted by pivot column, every pivot is 1, and pivot columns are
/// zero in all other rows, so two equal subspaces have identical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Echelon {
    pub fp: Fp,
    pub width: usize,
    pub rows: Vec<Vec<u8>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn zero(fp: Fp, width: usize) -> Self {
        Self { fp, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(fp: Fp, width: usize) -> Self {
        let rows = (0..width)
            .map(|i| {
                let mut r = vec![0; width];
                r[i] = 1;
                r
            })
            .collect();
        Self { fp, width, rows, pivots: (0..width).collect() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<u8>>>(fp: Fp, width: usize, rows: I) -> Self {
        let mut e = Self::zero(fp, width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` in place against the basis; the result is zero iff `v` was
    /// in the span.
    pub fn reduce(&self, v: &mut [u8]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                self.fp.axpy(v, self.fp.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }

    /// Insert a vector, keeping the basis fully reduced. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, mut v: Vec<u8>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let s = self.fp.inv(v[piv]);
        for c in v.iter_mut() {
            *c = self.fp.mul(*c, s);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                self.fp.axpy(row, self.fp.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        true
    }

    /// Basis of `{ x : row . x = 0 for every row }` under the standard dot
    /// product.
    pub fn annihilator(&self) -> Echelon {
        let fp = self.fp;
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.width).filter(|&f| !is_pivot[f]).map(|f| {
            let mut v = vec![0u8; self.width];
            v[f] = 1;
            for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                v[piv] = fp.neg(row[f]);
            }
            v
        });
        Echelon::from_rows(fp, self.width, basis)
    }

    pub fn sum(&self, other: &Echelon) -> Echelon {
        let mut e = self.clone();
        for r in &other.rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn intersect(&self, other: &Echelon) -> Echelon {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    pub fn contains_space(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Linear combination of basis rows with the given coefficients.
    pub fn combine(&self, coeffs: &[u8]) -> Vec<u8> {
        let mut v = vec![0u8; self.width];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            self.fp.axpy(&mut v, c, row);
        }
        v
    }
}
