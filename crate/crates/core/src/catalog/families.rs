//! Families of subsystem codes from stabilizer code families.
//!
//! A stabilizer family `[[n, k, d]]_q` gives `[[n, k-r, r, d]]_q` for every
//! `0 <= r < k`. The tuples are arithmetic only; no code is built.

use std::fmt;
use std::str::FromStr;

use crate::error::{precondition, Error, Result};
use crate::params::{prime_power, Bound, ParamTuple, Purity, Rule, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    ShortMds,
    HermitianHamming,
    EuclideanHamming,
    Melas,
    EuclideanBch,
    HermitianBch,
    PuncturedMds,
    EuclideanMds,
    HermitianMds,
    Twisted,
    ExtendedTwisted,
    Perfect,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::ShortMds,
        Family::HermitianHamming,
        Family::EuclideanHamming,
        Family::Melas,
        Family::EuclideanBch,
        Family::HermitianBch,
        Family::PuncturedMds,
        Family::EuclideanMds,
        Family::HermitianMds,
        Family::Twisted,
        Family::ExtendedTwisted,
        Family::Perfect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ShortMds => "short-mds",
            Family::HermitianHamming => "hermitian-hamming",
            Family::EuclideanHamming => "euclidean-hamming",
            Family::Melas => "melas",
            Family::EuclideanBch => "euclidean-bch",
            Family::HermitianBch => "hermitian-bch",
            Family::PuncturedMds => "punctured-mds",
            Family::EuclideanMds => "euclidean-mds",
            Family::HermitianMds => "hermitian-mds",
            Family::Twisted => "twisted",
            Family::ExtendedTwisted => "extended-twisted",
            Family::Perfect => "perfect",
        }
    }

    /// The free parameters besides `q` and `r`.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            Family::ShortMds | Family::EuclideanMds => &["n", "d"],
            Family::HermitianHamming | Family::EuclideanHamming | Family::Melas => &["n", "m"],
            Family::EuclideanBch | Family::HermitianBch => &["n", "m", "delta"],
            Family::PuncturedMds => &["alpha", "nu"],
            Family::HermitianMds => &["s", "d"],
            Family::Twisted => &["power"],
            Family::ExtendedTwisted => &[],
            Family::Perfect => &["n", "s"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            format!("unknown family {s:?} (one of {})", names.join(", "))
        })
    }
}

/// A family with its free variables; unused ones stay `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub q: u32,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub d: Option<u32>,
    pub delta: Option<u32>,
    pub nu: Option<u32>,
    pub alpha: Option<u32>,
    pub s: Option<u32>,
    /// The exponent `t` of the twisted length `q^t`.
    pub power: Option<u32>,
}

impl FamilySpec {
    pub fn new(family: Family, q: u32) -> Self {
        Self { family, q, n: None, m: None, d: None, delta: None, nu: None, alpha: None, s: None, power: None }
    }

    fn need(&self, name: &str, v: Option<u32>) -> Result<i64> {
        v.map(i64::from)
            .ok_or_else(|| Error::Precondition(format!("{} needs {name}", self.family)))
    }

    /// `(n, k, d)` of the underlying stabilizer family.
    pub fn stabilizer(&self) -> Result<(i64, i64, Bound)> {
        if prime_power(self.q).is_none() {
            return precondition(format!("q = {} is not a prime power", self.q));
        }
        let q = self.q as i64;
        let n = || self.need("n", self.n);
        let m = || self.need("m", self.m);
        // ceil((delta - 1)(1 - 1/b))
        let bch = |b: i64| -> Result<(i64, i64, Bound)> {
            let (n, m, delta) = (n()?, m()?, self.need("delta", self.delta)?);
            if delta < 1 {
                return precondition("delta must be at least 1");
            }
            let t = ((delta - 1) * (b - 1) + b - 1) / b;
            Ok((n, n - 2 * m * t, Bound::at_least(delta)))
        };
        Ok(match self.family {
            Family::ShortMds => {
                let (n, d) = (n()?, self.need("d", self.d)?);
                (n, n - 2 * d + 2, Bound::Exact(d as u32))
            }
            Family::HermitianHamming | Family::EuclideanHamming => {
                let (n, m) = (n()?, m()?);
                if self.family == Family::HermitianHamming && m < 2 {
                    return precondition("hermitian-hamming needs m >= 2");
                }
                (n, n - 2 * m, Bound::Exact(3))
            }
            Family::Melas => {
                let (n, m) = (n()?, m()?);
                (n, n - 2 * m, Bound::AtLeast(3))
            }
            Family::EuclideanBch => bch(q)?,
            Family::HermitianBch => bch(q * q)?,
            Family::PuncturedMds => {
                let (alpha, nu) = (self.need("alpha", self.alpha)?, self.need("nu", self.nu)?);
                let n = q * q - q * alpha;
                (n, n - 2 * nu - 2, Bound::Exact(nu as u32 + 2))
            }
            Family::EuclideanMds => {
                let (n, d) = (n()?, self.need("d", self.d)?);
                (n, n - 2 * d + 2, Bound::Unknown)
            }
            Family::HermitianMds => {
                let (s, d) = (self.need("s", self.s)?, self.need("d", self.d)?);
                let n = q * q - s;
                (n, n - 2 * d + 2, Bound::Exact(d as u32))
            }
            Family::Twisted => {
                let t = self.need("power", self.power)?;
                let n = q.checked_pow(t as u32).ok_or_else(|| Error::Precondition("q^power overflows".into()))?;
                (n, n - t - 2, Bound::Exact(3))
            }
            Family::ExtendedTwisted => (q * q + 1, q * q - 3, Bound::Exact(3)),
            Family::Perfect => {
                let (n, s) = (n()?, self.need("s", self.s)?);
                (n, n - s - 2, Bound::Exact(3))
            }
        })
    }

    fn label(&self) -> String {
        let mut parts = vec![format!("q={}", self.q)];
        let named = [
            ("n", self.n),
            ("m", self.m),
            ("d", self.d),
            ("delta", self.delta),
            ("nu", self.nu),
            ("alpha", self.alpha),
            ("s", self.s),
            ("power", self.power),
        ];
        parts.extend(named.iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))));
        format!("{} {}", self.family, parts.join(" "))
    }
}

/// `[[n, k-r, r, d]]_q` for each requested `r` with `0 <= r < k`; other
/// values of `r` are skipped.
pub fn family_tuples(spec: &FamilySpec, rs: impl IntoIterator<Item = i64>) -> Result<Vec<ParamTuple>> {
    let (n, k, d) = spec.stabilizer()?;
    if n < 1 {
        return precondition(format!("{} has length {n}", spec.label()));
    }
    let mut out = Vec::new();
    for r in rs {
        if r < 0 || r >= k {
            continue;
        }
        let mut t = ParamTuple::new(spec.q, n as u32, k - r, r, d, Purity::Unknown);
        t.provenance.push(Step { rule: Rule::Family, from: vec![spec.label()] });
        t.validate()?;
        out.push(t);
    }
    Ok(out)
}
