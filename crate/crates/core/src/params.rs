//! Subsystem code parameter tuples `[[n,k,r,d]]_q` with distance bounds,
//! purity and provenance.
//!
//! `k` and `r` are base-q logarithms of the subsystem dimensions `K` and `R`,
//! kept as exact rationals so additive codes with `K = p^j` fit too.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::finite_field::is_prime;

pub type Rational = Ratio<i64>;

/// A distance value or lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    Exact(u32),
    AtLeast(u32),
    Unknown,
}

impl Bound {
    /// Builds `>= v`, dropping bounds that are not positive.
    pub fn at_least(v: i64) -> Bound {
        if v <= 0 {
            Bound::Unknown
        } else {
            Bound::AtLeast(v as u32)
        }
    }

    pub fn lower(self) -> Option<u32> {
        match self {
            Bound::Exact(v) | Bound::AtLeast(v) => Some(v),
            Bound::Unknown => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Bound::Exact(_))
    }

    /// Same lower bound, no longer claimed exact.
    pub fn weaken(self) -> Bound {
        match self {
            Bound::Exact(v) => Bound::AtLeast(v),
            b => b,
        }
    }

    /// `>= lower + delta`.
    pub fn shift(self, delta: i64) -> Bound {
        match self.lower() {
            Some(v) => Bound::at_least(v as i64 + delta),
            None => Bound::Unknown,
        }
    }

    /// `>= min(a, b)`.
    pub fn min_with(self, other: Bound) -> Bound {
        match (self.lower(), other.lower()) {
            (Some(a), Some(b)) => Bound::at_least(a.min(b) as i64),
            _ => Bound::Unknown,
        }
    }

    /// Whether the actual value `actual` is consistent with this prediction;
    /// `None` if either side leaves it undecided.
    pub fn admits(self, actual: Bound) -> Option<bool> {
        match (self, actual) {
            (Bound::Unknown, _) => Some(true),
            (_, Bound::Unknown) => None,
            (Bound::Exact(a), Bound::Exact(b)) => Some(a == b),
            (Bound::AtLeast(a), Bound::Exact(b)) | (Bound::AtLeast(a), Bound::AtLeast(b)) => Some(b >= a),
            (Bound::Exact(_), Bound::AtLeast(_)) => None,
        }
    }

    /// Preference order used when deduplicating: higher lower bound first,
    /// then exact over bounded.
    fn rank(self) -> (i64, u8) {
        match self {
            Bound::Exact(v) => (v as i64, 1),
            Bound::AtLeast(v) => (v as i64, 0),
            Bound::Unknown => (-1, 0),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exact(v) => write!(f, "{v}"),
            Bound::AtLeast(v) => write!(f, ">={v}"),
            Bound::Unknown => write!(f, "?"),
        }
    }
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s == "?" || s == "·" {
            return Ok(Bound::Unknown);
        }
        let (rest, lower) = match s.strip_prefix(">=").or_else(|| s.strip_prefix('≥')) {
            Some(r) => (r.trim(), true),
            None => (s, false),
        };
        let v: u32 = rest.parse().map_err(|_| format!("bad distance {s:?}"))?;
        if v == 0 {
            return Err("distance must be positive".into());
        }
        Ok(if lower { Bound::AtLeast(v) } else { Bound::Exact(v) })
    }
}

/// Minimum symplectic weight of the normalizer, relative to the distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Purity {
    /// The normalizer has no nonzero vector of weight below `d`.
    Pure,
    /// The normalizer's minimum nonzero weight is this value (or bound).
    To(Bound),
    Unknown,
}

impl Purity {
    fn rank(self) -> u8 {
        match self {
            Purity::Pure => 2,
            Purity::To(_) => 1,
            Purity::Unknown => 0,
        }
    }
}

/// Identifiers of the propagation rules and of tuple sources.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Seed,
    Computed,
    Family,
    Extend,
    Puncture,
    PunctureImplied,
    Shorten,
    ReduceDimension,
    TradeKToR,
    TradeRToK,
    ShrinkK,
    FqShrinkR,
    GenericTrade,
    Stabilize,
    DirectSum,
    Uuv,
    Paste,
    Descend,
    Ascend,
    ReduceLength,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Seed => "seed",
            Rule::Computed => "computed",
            Rule::Family => "family",
            Rule::Extend => "extend",
            Rule::Puncture => "puncture",
            Rule::PunctureImplied => "puncture-implied",
            Rule::Shorten => "shorten",
            Rule::ReduceDimension => "reduce-dimension",
            Rule::TradeKToR => "trade-k-to-r",
            Rule::TradeRToK => "trade-r-to-k",
            Rule::ShrinkK => "shrink-k",
            Rule::FqShrinkR => "fq-shrink-r",
            Rule::GenericTrade => "generic-trade",
            Rule::Stabilize => "stabilize",
            Rule::DirectSum => "direct-sum",
            Rule::Uuv => "uuv",
            Rule::Paste => "paste",
            Rule::Descend => "descend",
            Rule::Ascend => "ascend",
            Rule::ReduceLength => "reduce-length",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One link of a provenance chain: `rule` applied to the tuples in `from`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: Rule,
    pub from: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamTuple {
    pub q: u32,
    pub n: u32,
    pub k: Rational,
    pub r: Rational,
    pub d: Bound,
    pub purity: Purity,
    /// Whether the tuple is claimed for an F_q-linear code.
    pub linear: bool,
    pub provenance: Vec<Step>,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

impl ParamTuple {
    /// An integer tuple with no provenance.
    pub fn new(q: u32, n: u32, k: i64, r: i64, d: Bound, purity: Purity) -> Self {
        Self { q, n, k: int(k), r: int(r), d, purity, linear: is_prime(q), provenance: Vec::new() }
    }

    pub fn with_linear(mut self, linear: bool) -> Self {
        self.linear = linear;
        self
    }

    pub fn with_step(mut self, rule: Rule, from: &[&ParamTuple]) -> Self {
        self.provenance.push(Step { rule, from: from.iter().map(|t| t.to_string()).collect() });
        self
    }

    /// `p` and `m` with `q = p^m`.
    pub fn prime_power(&self) -> (u32, u32) {
        prime_power(self.q).expect("q is validated as a prime power")
    }

    /// Whether `K = q^k` is an integer power of `q`.
    pub fn k_is_integer(&self) -> bool {
        self.k.is_integer()
    }

    /// `K = q^k = p^(k m)` when that exponent is a nonnegative integer.
    pub fn big_k(&self) -> Option<u128> {
        dim_from_log(self.q, self.k)
    }

    pub fn big_r(&self) -> Option<u128> {
        dim_from_log(self.q, self.r)
    }

    /// The minimum weight of the normalizer as far as known.
    pub fn pure_to(&self) -> Bound {
        match self.purity {
            Purity::Pure => self.d,
            Purity::To(b) => b,
            Purity::Unknown => Bound::Unknown,
        }
    }

    pub fn is_pure(&self) -> bool {
        match self.purity {
            Purity::Pure => true,
            Purity::To(b) => match (self.d, b.lower()) {
                (Bound::Exact(d), Some(t)) => t >= d,
                _ => false,
            },
            Purity::Unknown => false,
        }
    }

    pub fn is_stabilizer(&self) -> bool {
        self.r == int(0)
    }

    /// Same `(q, n, k, r, d, purity, linear)`, ignoring provenance.
    pub fn same_params(&self, other: &ParamTuple) -> bool {
        self.key() == other.key() && self.d == other.d && self.purity == other.purity && self.linear == other.linear
    }

    /// The part of a tuple dominance is decided on.
    pub fn key(&self) -> (u32, u32, Rational, Rational) {
        (self.q, self.n, self.k, self.r)
    }

    /// True when `self` should be kept over `other` at the same key.
    pub(crate) fn preferred_over(&self, other: &ParamTuple) -> bool {
        let a = (self.d.rank(), self.purity.rank(), self.pure_to().rank());
        let b = (other.d.rank(), other.purity.rank(), other.pure_to().rank());
        a > b
    }

    /// `"[[n,k,r,d]]_q"` followed by purity and linearity annotations.
    pub fn describe(&self) -> String {
        let mut s = self.to_string();
        if self.is_pure() {
            s.push_str(" pure");
        } else {
            match self.pure_to() {
                Bound::Unknown => s.push_str(" purity=?"),
                b => s.push_str(&format!(" pure_to={b}")),
            }
        }
        if self.linear != is_prime(self.q) {
            s.push_str(if self.linear { " linear" } else { " additive" });
        }
        s
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse { line: 1, msg });
        let Some((_, m)) = prime_power(self.q) else {
            return bad(format!("q = {} is not a prime power", self.q));
        };
        if self.k < int(0) || self.r < int(0) {
            return bad(format!("negative dimension in {self}"));
        }
        if self.k + self.r > int(self.n as i64) {
            return bad(format!("k + r exceeds n in {self}"));
        }
        for x in [self.k, self.r] {
            if (2 * m as i64) % x.denom() != 0 {
                return bad(format!("{x} is not a multiple of 1/{}", 2 * m));
            }
        }
        Ok(())
    }
}

fn fmt_rational(x: Rational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{},{}]]_{}", self.n, fmt_rational(self.k), fmt_rational(self.r), self.d, self.q)
    }
}

pub(crate) fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn dim_from_log(q: u32, x: Rational) -> Option<u128> {
    let (p, m) = prime_power(q)?;
    let e = x * int(m as i64);
    if !e.is_integer() || e < int(0) {
        return None;
    }
    (p as u128).checked_pow(e.to_integer() as u32)
}

/// `log_q` of a dimension that is a power of `p`.
pub(crate) fn log_from_dim(q: u32, dim: u128) -> Option<Rational> {
    let (p, m) = prime_power(q)?;
    let mut e = 0i64;
    let mut rest = dim;
    if rest == 0 {
        return None;
    }
    while rest.is_multiple_of(p as u128) {
        rest /= p as u128;
        e += 1;
    }
    (rest == 1).then(|| Rational::new(e, m as i64))
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
            let b: i64 = b.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
            if b == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(a, b))
        }
        None => s.parse::<i64>().map(int).map_err(|_| format!("bad number {s:?}")),
    }
}

impl FromStr for ParamTuple {
    type Err = Error;

    /// Accepts `[[n,k,r,d]]_q`, `[[n,k,d]]_q` (stabilizer) and
    /// `((n,K,R,d))_q`, optionally followed by `pure`, `impure` (or `purity=?`),
    /// `pure_to=N`, `linear` or `additive`. Without an annotation the tuple
    /// is taken as pure.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: String| Error::Parse { line: 1, msg };
        let s = s.trim();
        let (open, close, dims) = if s.starts_with("[[") {
            ("[[", "]]", false)
        } else if s.starts_with("((") {
            ("((", "))", true)
        } else {
            return Err(err(format!("expected [[...]]_q or ((...))_q, got {s:?}")));
        };
        let end = s.find(close).ok_or_else(|| err(format!("unterminated tuple {s:?}")))?;
        let inner = &s[open.len()..end];
        let rest = s[end + close.len()..].trim_start();
        let rest = rest.strip_prefix('_').ok_or_else(|| err(format!("missing _q in {s:?}")))?;
        let qlen = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let q: u32 = rest[..qlen].parse().map_err(|_| err(format!("bad field order in {s:?}")))?;
        if prime_power(q).is_none() {
            return Err(err(format!("q = {q} is not a prime power")));
        }
        let fields: Vec<&str> = inner.split(',').map(str::trim).collect();
        let (n, a, b, d) = match fields.as_slice() {
            [n, k, d] if !dims => (n, *k, "0", d),
            [n, a, b, d] => (n, *a, *b, d),
            _ => return Err(err(format!("wrong number of entries in {s:?}"))),
        };
        let n: u32 = n.parse().map_err(|_| err(format!("bad length in {s:?}")))?;
        let d: Bound = d.parse().map_err(err)?;
        let (k, r) = if dims {
            let conv = |x: &str| {
                let v: u128 = x.parse().map_err(|_| err(format!("bad dimension {x:?}")))?;
                log_from_dim(q, v).ok_or_else(|| err(format!("{v} is not a power of the characteristic of GF({q})")))
            };
            (conv(a)?, conv(b)?)
        } else {
            (parse_rational(a).map_err(err)?, parse_rational(b).map_err(err)?)
        };
        let mut t = ParamTuple { q, n, k, r, d, purity: Purity::Pure, linear: is_prime(q), provenance: Vec::new() };
        for word in rest[qlen..].split_whitespace() {
            match word {
                "pure" => t.purity = Purity::Pure,
                "impure" | "purity=?" => t.purity = Purity::Unknown,
                "linear" => t.linear = true,
                "additive" => t.linear = false,
                w => match w.strip_prefix("pure_to=") {
                    Some(v) => t.purity = Purity::To(v.parse().map_err(err)?),
                    None => return Err(err(format!("unknown annotation {w:?}"))),
                },
            }
        }
        t.validate()?;
        Ok(t)
    }
}

/// A tuple known only up to lower bounds on `k` and `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTuple {
    pub q: u32,
    pub n: u32,
    pub k_at_least: Rational,
    pub r_at_least: Rational,
    pub d: Bound,
    pub provenance: Vec<Step>,
}

impl fmt::Display for BoundTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},>={},>={},{}]]_{}",
            self.n,
            fmt_rational(self.k_at_least),
            fmt_rational(self.r_at_least),
            self.d,
            self.q
        )
    }
}
