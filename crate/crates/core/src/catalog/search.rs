//! Bounded search for short gauge codes with prescribed parameters.
//!
//! A target `[[n, k, r, d]]_q` over a prime field fixes `dim C = n - k + r`
//! and `dim D = n - k - r`. When every subspace of that dimension fits in
//! the budget, all of them are enumerated in reduced echelon form and a
//! negative answer covers the whole space. Otherwise gauge codes of the
//! right profile are sampled: a random isotropic `D` grown one vector at a
//! time from its own symplectic dual, then `r` random hyperbolic pairs drawn
//! from the dual of the current gauge code.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::additive_code::{AdditiveCode, Form, Layout};
use crate::enumerate::EnumConfig;
use crate::error::{precondition, Result};
use crate::finite_field::FieldSpec;
use crate::params::ParamTuple;
use crate::subsystem_core::{DistanceMode, DistanceStatus, SubsystemCode};

/// Candidates handled between checks for early termination.
const BLOCK: u64 = 64;
/// Retries when a random vector lands in the wrong place.
const TRIES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of candidates examined.
    pub budget: u64,
    pub seed: u64,
    /// Stop after this many matching codes.
    pub max_found: usize,
}

impl SearchOptions {
    pub fn new(budget: u64) -> Self {
        Self { budget, seed: 0, max_found: 1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every subspace of the gauge dimension, in echelon order.
    Exhaustive,
    Random { seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// Budget used up without a match; says nothing about existence.
    BudgetExhausted,
    /// Every subspace was examined and none matched.
    SpaceExhausted,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub target: ParamTuple,
    pub mode: SearchMode,
    pub status: SearchStatus,
    pub examined: u64,
    /// Candidates whose `(dim C, dim D)` matched the target.
    pub profile_matches: u64,
    /// Candidates whose distance hit the enumeration cap.
    pub distance_unknown: u64,
    pub found: Vec<SubsystemCode>,
}

impl SearchReport {
    /// True when the absence of a match is a proof: the whole space was
    /// covered and every distance was decided.
    pub fn is_exhaustive(&self) -> bool {
        self.mode == SearchMode::Exhaustive && self.examined > 0 && self.distance_unknown == 0
            && self.status != SearchStatus::BudgetExhausted
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            SearchMode::Exhaustive => "exhaustive".to_string(),
            SearchMode::Random { seed } => format!("random seed={seed}"),
        };
        let status = match self.status {
            SearchStatus::Found => "found",
            SearchStatus::BudgetExhausted => "budget exhausted",
            SearchStatus::SpaceExhausted => "space exhausted",
        };
        write!(
            f,
            "target {} mode={mode} status={status} examined={} profile_matches={} distance_unknown={} exhaustive={}",
            self.target.describe(),
            self.examined,
            self.profile_matches,
            self.distance_unknown,
            self.is_exhaustive()
        )?;
        for c in &self.found {
            write!(f, "\n  found {}", c.params().describe())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Profile {
    n: usize,
    c: usize,
    e: usize,
    pairs: usize,
    d: Option<u32>,
}

fn gaussian_binomial(width: usize, dim: usize, p: u128) -> Option<u128> {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..dim {
        num = num.checked_mul(p.checked_pow((width - i) as u32)?.checked_sub(1)?)?;
        den = den.checked_mul(p.checked_pow((i + 1) as u32)?.checked_sub(1)?)?;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    Some(num / den)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn profile_of(q: u32, n: u32, target: &ParamTuple) -> Result<Profile> {
    target.validate()?;
    if target.q != q || target.n != n {
        return precondition(format!("target {target} does not match q = {q}, n = {n}"));
    }
    if !matches!(q, 2 | 3) {
        return precondition("search supports q = 2 and q = 3");
    }
    if n == 0 || n > 8 {
        return precondition("search supports 1 <= n <= 8");
    }
    if !target.k.is_integer() || !target.r.is_integer() {
        return precondition("search needs integral k and r");
    }
    let (k, r) = (target.k.to_integer(), target.r.to_integer());
    let n = n as i64;
    Ok(Profile {
        n: n as usize,
        c: (n - k + r) as usize,
        e: (n - k - r) as usize,
        pairs: r as usize,
        d: target.d.lower(),
    })
}

/// Evaluates one gauge code: `None` if the profile is wrong, otherwise the
/// code and whether it meets the distance.
fn evaluate(gauge: AdditiveCode, prof: &Profile, cfg: &EnumConfig) -> Result<Option<(SubsystemCode, Option<bool>)>> {
    if gauge.dim() != prof.c || gauge.is_zero() {
        return Ok(None);
    }
    let code = SubsystemCode::from_gauge_code(gauge, DistanceMode::Skip)?;
    if code.stabilizer().dim() != prof.e {
        return Ok(None);
    }
    let mut code = code;
    code.compute_distance(cfg)?;
    let meets = match code.status() {
        DistanceStatus::Computed => Some(match prof.d {
            Some(d) => code.d().lower().is_some_and(|got| got >= d),
            None => true,
        }),
        _ => None,
    };
    Ok(Some((code, meets)))
}

fn random_in(code: &AdditiveCode, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let p = code.field().p();
    let coeffs: Vec<u8> = (0..code.dim()).map(|_| rng.gen_range(0..p)).collect();
    code.basis().combine(&coeffs)
}

fn symplectic(x: &[u8], y: &[u8], n: usize, p: u8) -> u8 {
    let mut acc: u32 = 0;
    for i in 0..n {
        acc += x[i] as u32 * y[n + i] as u32;
        acc += (p - 1) as u32 * (x[n + i] as u32 * y[i] as u32 % p as u32);
    }
    (acc % p as u32) as u8
}

/// A random gauge code with the profile, or `None` if sampling stalled.
fn sample(field: &FieldSpec, prof: &Profile, rng: &mut ChaCha8Rng) -> Result<Option<AdditiveCode>> {
    let (n, p) = (prof.n, field.p());
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let build = |rows: &[Vec<u8>]| AdditiveCode::from_expanded_rows(field, Layout::Symplectic, 2 * n, rows.to_vec());
    for _ in 0..prof.e {
        let cur = build(&rows);
        let dual = cur.dual(Form::TraceSymplectic)?;
        let Some(v) = (0..TRIES).map(|_| random_in(&dual, rng)).find(|v| !cur.contains_expanded(v)) else {
            return Ok(None);
        };
        rows.push(v);
    }
    for _ in 0..prof.pairs {
        let cur = build(&rows);
        let dual = cur.dual(Form::TraceSymplectic)?;
        let Some(x) = (0..TRIES).map(|_| random_in(&dual, rng)).find(|v| !cur.contains_expanded(v)) else {
            return Ok(None);
        };
        let Some(y) = (0..TRIES).map(|_| random_in(&dual, rng)).find(|y| symplectic(&x, y, n, p) != 0) else {
            return Ok(None);
        };
        rows.push(x);
        rows.push(y);
    }
    Ok(Some(build(&rows)))
}

/// The `index`-th subspace of dimension `dim` in `GF(p)^width`, in
/// pivot-set then free-entry order, or `None` past the end.
struct EchelonWalk {
    width: usize,
    dim: usize,
    p: u8,
}

impl EchelonWalk {
    fn pivot_sets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.dim);
        fn rec(start: usize, width: usize, dim: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == dim {
                out.push(cur.clone());
                return;
            }
            for c in start..width {
                if width - c < dim - cur.len() {
                    break;
                }
                cur.push(c);
                rec(c + 1, width, dim, cur, out);
                cur.pop();
            }
        }
        rec(0, self.width, self.dim, &mut cur, &mut out);
        out
    }

    /// Every matrix with the given pivots.
    fn matrices(&self, pivots: &[usize]) -> Vec<Vec<Vec<u8>>> {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &pc)| ((pc + 1)..self.width).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
            .collect();
        let mut base = vec![vec![0u8; self.width]; self.dim];
        for (i, &pc) in pivots.iter().enumerate() {
            base[i][pc] = 1;
        }
        let mut out = Vec::new();
        let mut digits = vec![0u8; free.len()];
        loop {
            let mut m = base.clone();
            for (&(i, c), &v) in free.iter().zip(&digits) {
                m[i][c] = v;
            }
            out.push(m);
            let mut j = 0;
            loop {
                if j == digits.len() {
                    return out;
                }
                digits[j] += 1;
                if digits[j] < self.p {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
        }
    }
}

#[derive(Default)]
struct Tally {
    examined: u64,
    profile_matches: u64,
    distance_unknown: u64,
    found: Vec<SubsystemCode>,
}

impl Tally {
    fn absorb(&mut self, outcome: Option<(SubsystemCode, Option<bool>)>, max_found: usize) {
        self.examined += 1;
        let Some((code, meets)) = outcome else { return };
        self.profile_matches += 1;
        match meets {
            None => self.distance_unknown += 1,
            Some(true) if self.found.len() < max_found
                && !self.found.iter().any(|f| f.gauge() == code.gauge()) => {
                    self.found.push(code);
                }
            _ => {}
        }
    }
}

/// Looks for gauge codes over GF(q)^{2n} with the target parameters. A
/// negative result is only conclusive when the report is exhaustive.
pub fn bounded_search(q: u32, n: u32, target: &ParamTuple, opts: &SearchOptions, cfg: &EnumConfig) -> Result<SearchReport> {
    let prof = profile_of(q, n, target)?;
    if opts.budget == 0 {
        return precondition("search needs a positive budget");
    }
    let field = FieldSpec::new(q)?;
    let width = 2 * prof.n;
    let total = gaussian_binomial(width, prof.c, q as u128);
    let exhaustive = total.is_some_and(|t| t <= opts.budget as u128);
    let mut tally = Tally::default();
    let max_found = opts.max_found.max(1);
    // Distances run inside the search pool instead of building their own.
    let inner = EnumConfig { workers: None, ..*cfg };
    cfg.install(|| -> Result<()> {
        if exhaustive {
            let walk = EchelonWalk { width, dim: prof.c, p: field.p() };
            for pivots in walk.pivot_sets() {
                let outcomes = walk
                    .matrices(&pivots)
                    .into_par_iter()
                    .map(|rows| evaluate(AdditiveCode::from_expanded_rows(&field, Layout::Symplectic, width, rows), &prof, &inner))
                    .collect::<Result<Vec<_>>>()?;
                for o in outcomes {
                    tally.absorb(o, max_found);
                }
                if tally.found.len() >= max_found {
                    break;
                }
            }
        } else {
            let mut start = 0;
            while start < opts.budget && tally.found.len() < max_found {
                let end = (start + BLOCK).min(opts.budget);
                let outcomes = (start..end)
                    .into_par_iter()
                    .map(|i| {
                        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                        rng.set_stream(i);
                        match sample(&field, &prof, &mut rng)? {
                            Some(gauge) => evaluate(gauge, &prof, &inner),
                            None => Ok(None),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                for o in outcomes {
                    tally.absorb(o, max_found);
                }
                start = end;
            }
        }
        Ok(())
    })?;
    let status = if !tally.found.is_empty() {
        SearchStatus::Found
    } else if exhaustive {
        SearchStatus::SpaceExhausted
    } else {
        SearchStatus::BudgetExhausted
    };
    Ok(SearchReport {
        target: target.clone(),
        mode: if exhaustive { SearchMode::Exhaustive } else { SearchMode::Random { seed: opts.seed } },
        status,
        examined: tally.examined,
        profile_matches: tally.profile_matches,
        distance_unknown: tally.distance_unknown,
        found: tally.found,
    })
}
