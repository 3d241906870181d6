//! Streaming enumeration of code vectors for weight questions.
//!
//! Vectors of `big` are visited without materializing a list. Over GF(2)
//! vectors are bitmasks visited in Gray-code order with incrementally
//! updated syndromes against the parity checks of `small`; other primes use
//! an odometer over expansion coefficients. The space is split on the top
//! coefficients and the pieces run on a rayon pool. Results are minima or
//! counts, so they do not depend on how the work was split.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::additive_code::{AdditiveCode, Layout};
use crate::error::{Error, Result};
use crate::linalg::Echelon;

pub const DEFAULT_CAP: u128 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    /// Maximum number of vectors (`p^dim`) an enumeration may visit.
    pub cap: u128,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, workers: None }
    }
}

impl EnumConfig {
    pub fn with_cap(cap: u128) -> Self {
        Self { cap, ..Self::default() }
    }

    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(w) if w > 0 => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            _ => f(),
        }
    }
}

/// Minimum weights found by one pass over `big`. `None` means no vector
/// qualified (an infinite minimum).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub min_nonzero: Option<usize>,
    pub min_outside: Option<usize>,
}

/// Minimum weight (symplectic or Hamming per layout) over vectors of `big`
/// that are not in `small`; `None` when `big` is contained in `small`.
pub fn min_weight_in_difference(big: &AdditiveCode, small: &AdditiveCode, cfg: &EnumConfig) -> Result<Option<usize>> {
    Ok(scan(big, small, cfg)?.min_outside)
}

/// Minimum weight over nonzero vectors of `code`.
pub fn min_weight(code: &AdditiveCode, cfg: &EnumConfig) -> Result<Option<usize>> {
    let zero = AdditiveCode::zero(code.field(), code.layout(), code.length());
    Ok(scan(code, &zero, cfg)?.min_nonzero)
}

/// One pass computing both the minimum nonzero weight of `big` and the
/// minimum weight of `big \ small`.
pub fn scan(big: &AdditiveCode, small: &AdditiveCode, cfg: &EnumConfig) -> Result<ScanResult> {
    let job = Job::new(big, small, cfg)?;
    let best_nz = AtomicUsize::new(usize::MAX);
    let best_out = AtomicUsize::new(usize::MAX);
    let visit = |w: usize, nonzero: bool, outside: bool| {
        if nonzero {
            best_nz.fetch_min(w, Ordering::Relaxed);
        }
        if outside {
            best_out.fetch_min(w, Ordering::Relaxed);
        }
    };
    // Weight 1 is the smallest a nonzero vector can have.
    let stop = || best_nz.load(Ordering::Relaxed) <= 1 && best_out.load(Ordering::Relaxed) <= 1;
    cfg.install(|| job.run(&visit, &stop));
    let get = |a: &AtomicUsize| Some(a.load(Ordering::Relaxed)).filter(|&w| w != usize::MAX);
    Ok(ScanResult { min_nonzero: get(&best_nz), min_outside: get(&best_out) })
}

/// Number of vectors of each weight `0..=n` in `big \ small`.
pub fn weight_distribution(big: &AdditiveCode, small: &AdditiveCode, cfg: &EnumConfig) -> Result<Vec<u128>> {
    let job = Job::new(big, small, cfg)?;
    let counts: Vec<AtomicUsize> = (0..=job.n).map(|_| AtomicUsize::new(0)).collect();
    let visit = |w: usize, _nonzero: bool, outside: bool| {
        if outside {
            counts[w].fetch_add(1, Ordering::Relaxed);
        }
    };
    cfg.install(|| job.run(&visit, &|| false));
    Ok(counts.into_iter().map(|c| c.into_inner() as u128).collect())
}

/// Lexicographically smallest vector of `code` (in expanded GF(p)
/// coordinates) satisfying `pred`.
///
/// Over a reduced echelon basis the coordinate at the i-th pivot is the i-th
/// coefficient and earlier coordinates depend only on earlier coefficients,
/// so lexicographic order on vectors is lexicographic order on coefficient
/// tuples and an odometer with the last coefficient fastest visits vectors
/// in increasing order. The cap bounds the number of vectors tested.
pub(crate) fn first_lex(
    code: &AdditiveCode,
    cfg: &EnumConfig,
    mut pred: impl FnMut(&[u8]) -> bool,
) -> Result<Option<Vec<u8>>> {
    let basis = code.basis();
    let mut tested = 0u128;
    let fp = basis.fp;
    let k = basis.dim();
    let mut digits = vec![0u8; k];
    let mut v = vec![0u8; basis.width];
    loop {
        if pred(&v) {
            return Ok(Some(v));
        }
        tested += 1;
        if tested >= cfg.cap {
            return Err(Error::CapExceeded { p: fp.p, log_p: k, cap: cfg.cap });
        }
        // Advance: the last coefficient moves fastest.
        let mut j = k;
        loop {
            if j == 0 {
                return Ok(None);
            }
            j -= 1;
            fp.axpy(&mut v, 1, &basis.rows[j]);
            if digits[j] + 1 < fp.p {
                digits[j] += 1;
                break;
            }
            digits[j] = 0;
        }
    }
}

fn check_cap(big: &AdditiveCode, cfg: &EnumConfig) -> Result<()> {
    let p = big.field().p();
    let dim = big.dim();
    let need = (p as u128).checked_pow(dim as u32);
    match need {
        Some(n) if n <= cfg.cap => Ok(()),
        _ => Err(Error::CapExceeded { p, log_p: dim, cap: cfg.cap }),
    }
}

struct Job {
    n: usize,
    m: usize,
    halves: usize,
    basis: Echelon,
    checks: Echelon,
}

impl Job {
    fn new(big: &AdditiveCode, small: &AdditiveCode, cfg: &EnumConfig) -> Result<Self> {
        big.same_ambient(small)?;
        check_cap(big, cfg)?;
        let halves = match big.layout() {
            Layout::Plain => 1,
            Layout::Symplectic => 2,
        };
        Ok(Self {
            n: big.qudits(),
            m: big.field().m(),
            halves,
            basis: big.basis().clone(),
            checks: small.basis().annihilator(),
        })
    }

    fn run(&self, visit: &(dyn Fn(usize, bool, bool) + Sync), stop: &(dyn Fn() -> bool + Sync)) {
        if self.basis.fp.p == 2 && self.basis.width <= 128 {
            self.run_binary(visit, stop)
        } else {
            self.run_general(visit, stop)
        }
    }

    /// Bit position of expanded coordinate `(h, i, t)` in the binary path:
    /// slice `t + m h` of `n` bits, so the qudit support is the OR of slices.
    fn bit_of(&self, coord: usize) -> usize {
        let t = coord % self.m;
        let hi = coord / self.m;
        let (h, i) = (hi / self.n, hi % self.n);
        i + self.n * (t + self.m * h)
    }

    fn to_mask(&self, v: &[u8]) -> u128 {
        v.iter().enumerate().filter(|(_, &c)| c != 0).fold(0u128, |acc, (j, _)| acc | 1u128 << self.bit_of(j))
    }

    fn run_binary(&self, visit: &(dyn Fn(usize, bool, bool) + Sync), stop: &(dyn Fn() -> bool + Sync)) {
        let n = self.n;
        let slices = self.m * self.halves;
        let qmask: u128 = if n >= 128 { u128::MAX } else { (1u128 << n) - 1 };
        let weight = |v: u128| {
            let mut s = 0u128;
            for j in 0..slices {
                s |= (v >> (n * j)) & qmask;
            }
            s.count_ones() as usize
        };
        let checks: Vec<u128> = self.checks.rows.iter().map(|r| self.to_mask(r)).collect();
        let syndrome = |v: u128| {
            checks.iter().enumerate().fold(0u128, |acc, (j, &h)| acc | (((v & h).count_ones() as u128) & 1) << j)
        };
        let vecs: Vec<u128> = self.basis.rows.iter().map(|r| self.to_mask(r)).collect();
        let syns: Vec<u128> = vecs.iter().map(|&v| syndrome(v)).collect();
        let k = vecs.len();
        let top = chunk_digits(k, 2);
        let low = k - top;
        (0..1u64 << top).into_par_iter().for_each(|prefix| {
            if stop() {
                return;
            }
            let mut v = 0u128;
            let mut s = 0u128;
            for b in 0..top {
                if prefix >> b & 1 == 1 {
                    v ^= vecs[low + b];
                    s ^= syns[low + b];
                }
            }
            let emit = |v: u128, s: u128| visit(weight(v), v != 0, s != 0);
            emit(v, s);
            for step in 1u64..1u64 << low {
                let b = step.trailing_zeros() as usize;
                v ^= vecs[b];
                s ^= syns[b];
                emit(v, s);
                if step & 0xfff == 0 && stop() {
                    return;
                }
            }
        });
    }

    fn run_general(&self, visit: &(dyn Fn(usize, bool, bool) + Sync), stop: &(dyn Fn() -> bool + Sync)) {
        let fp = self.basis.fp;
        let p = fp.p as u64;
        let (n, m, halves) = (self.n, self.m, self.halves);
        let weight = |v: &[u8]| {
            (0..n)
                .filter(|&i| (0..halves).any(|h| v[(h * n + i) * m..(h * n + i + 1) * m].iter().any(|&c| c != 0)))
                .count()
        };
        let checks = &self.checks.rows;
        let syns: Vec<Vec<u8>> = self.basis.rows.iter().map(|r| checks.iter().map(|h| fp.dot(r, h)).collect()).collect();
        let rows = &self.basis.rows;
        let k = rows.len();
        let top = chunk_digits(k, fp.p);
        let low = k - top;
        let chunks = p.pow(top as u32);
        (0..chunks).into_par_iter().for_each(|mut prefix| {
            if stop() {
                return;
            }
            let mut v = vec![0u8; self.basis.width];
            let mut s = vec![0u8; checks.len()];
            for b in 0..top {
                let c = (prefix % p) as u8;
                prefix /= p;
                fp.axpy(&mut v, c, &rows[low + b]);
                fp.axpy(&mut s, c, &syns[low + b]);
            }
            let mut digits = vec![0u8; low];
            let mut count = 0u64;
            loop {
                visit(weight(&v), v.iter().any(|&c| c != 0), s.iter().any(|&c| c != 0));
                count += 1;
                if count & 0xfff == 0 && stop() {
                    return;
                }
                let mut j = 0;
                loop {
                    if j == low {
                        return;
                    }
                    fp.axpy(&mut v, 1, &rows[j]);
                    fp.axpy(&mut s, 1, &syns[j]);
                    if digits[j] + 1 < fp.p {
                        digits[j] += 1;
                        break;
                    }
                    digits[j] = 0;
                    j += 1;
                }
            }
        });
    }
}

/// Number of top coefficients to split into parallel chunks.
fn chunk_digits(k: usize, p: u8) -> usize {
    let mut t = 0;
    let mut chunks = 1u64;
    // Small spaces are not worth splitting.
    while t < k && k - t > 10 && chunks < 256 {
        t += 1;
        chunks *= p as u64;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive_code::{CodeVector, Linearity};
    use crate::finite_field::FieldSpec;

    fn five_qubit() -> AdditiveCode {
        let f2 = FieldSpec::new(2).unwrap();
        let rows = [
            ([1, 0, 0, 1, 0], [0, 1, 1, 0, 0]),
            ([0, 1, 0, 0, 1], [0, 0, 1, 1, 0]),
            ([1, 0, 1, 0, 0], [0, 0, 0, 1, 1]),
            ([0, 1, 0, 1, 0], [1, 0, 0, 0, 1]),
        ];
        let rows: Vec<CodeVector> = rows.iter().map(|(x, z)| CodeVector::symplectic(&f2, x, z).unwrap()).collect();
        AdditiveCode::span(&rows, Linearity::Additive).unwrap()
    }

    #[test]
    fn identical_codes_give_infinity() {
        let c = five_qubit();
        assert_eq!(min_weight_in_difference(&c, &c, &EnumConfig::default()).unwrap(), None);
    }

    #[test]
    fn five_qubit_code_distance() {
        let s = five_qubit();
        let n = s.dual(crate::additive_code::Form::TraceSymplectic).unwrap();
        let d = min_weight_in_difference(&n, &s, &EnumConfig::default()).unwrap();
        assert_eq!(d, Some(3));
        assert_eq!(min_weight(&s, &EnumConfig::default()).unwrap(), Some(4));
        let dist = weight_distribution(&s, &AdditiveCode::zero(s.field(), s.layout(), 10), &EnumConfig::default()).unwrap();
        assert_eq!(dist, vec![0, 0, 0, 0, 15, 0]);
    }

    #[test]
    fn cap_is_enforced() {
        let s = five_qubit();
        let e = min_weight(&s, &EnumConfig::with_cap(8)).unwrap_err();
        assert_eq!(e, Error::CapExceeded { p: 2, log_p: 4, cap: 8 });
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let s = five_qubit();
        let n = s.dual(crate::additive_code::Form::TraceSymplectic).unwrap();
        for w in [1, 2, 4] {
            let cfg = EnumConfig { workers: Some(w), ..EnumConfig::default() };
            assert_eq!(scan(&n, &s, &cfg).unwrap(), ScanResult { min_nonzero: Some(3), min_outside: Some(3) });
        }
    }

    #[test]
    fn first_lex_follows_coordinate_order() {
        let f3 = FieldSpec::new(3).unwrap();
        let full = AdditiveCode::full(&f3, Layout::Plain, 3);
        let mut seen = Vec::new();
        first_lex(&full, &EnumConfig::default(), |v| {
            seen.push(v.to_vec());
            false
        })
        .unwrap();
        assert_eq!(seen.len(), 27);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        let hit = first_lex(&full, &EnumConfig::default(), |v| v.iter().filter(|&&c| c != 0).count() == 2).unwrap();
        assert_eq!(hit, Some(vec![0, 1, 1]));
    }
}
