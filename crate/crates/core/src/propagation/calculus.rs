//! Parameter-level rules. They transform tuples only; no code is built.
//!
//! Each rule checks the hypotheses stated for it, returns the tuple it
//! guarantees, and appends itself to the provenance chain.

use std::str::FromStr;

use crate::error::{precondition, Result};
use crate::params::{Bound, ParamTuple, Purity, Rational, Rule};

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn derive(t: &ParamTuple, rule: Rule, from: &[&ParamTuple], f: impl FnOnce(&mut ParamTuple)) -> Result<ParamTuple> {
    let mut out = t.clone();
    for s in from.iter().skip(1) {
        out.provenance.extend(s.provenance.iter().cloned());
    }
    f(&mut out);
    out = out.with_step(rule, from);
    out.validate()?;
    Ok(out)
}

fn require_pure(t: &ParamTuple) -> Result<()> {
    if t.is_pure() {
        Ok(())
    } else {
        precondition(format!("{} is not known to be pure", t.describe()))
    }
}

/// `pure to min{d, d'}` as a lower bound on the normalizer weight.
fn pure_to_min(t: &ParamTuple) -> Purity {
    match (t.d.lower(), t.pure_to().lower()) {
        (Some(d), Some(p)) => Purity::To(Bound::AtLeast(d.min(p))),
        _ => Purity::Unknown,
    }
}

/// `((n, K, R, d)) -> ((n+1, K, R, >= d))`, pure to 1; needs `K > 1`.
pub fn extend_param(t: &ParamTuple) -> Result<ParamTuple> {
    if t.k <= int(0) {
        return precondition(format!("{t} has K = 1"));
    }
    derive(t, Rule::Extend, &[t], |o| {
        o.n += 1;
        o.d = t.d.weaken();
        o.purity = Purity::To(Bound::Exact(1));
    })
}

/// Pure `[[n, k, r, d]] -> [[n-1, k+1, r, >= d-1]]`, pure; needs `n >= 2`, `d >= 2`.
pub fn shorten_param(t: &ParamTuple) -> Result<ParamTuple> {
    require_pure(t)?;
    if t.n < 2 {
        return precondition("shortening needs n >= 2");
    }
    match t.d.lower() {
        Some(d) if d >= 2 => {}
        _ => return precondition(format!("shortening needs d >= 2 in {t}")),
    }
    derive(t, Rule::Shorten, &[t], |o| {
        o.n -= 1;
        o.k += int(1);
        o.d = t.d.shift(-1);
        o.purity = Purity::Pure;
    })
}

/// `((n, K, R, d)) -> ((n, K/p, pR, >= d))` pure to `min{d, d'}` for `K > p`;
/// a pure `((n, p, R, d))` gives `((n, 1, pR, d))`.
pub fn shrink_k_param(t: &ParamTuple) -> Result<ParamTuple> {
    let (_, m) = t.prime_power();
    let step = Rational::new(1, m as i64);
    let kk = t.k * int(m as i64);
    if kk == int(1) {
        require_pure(t)?;
        return derive(t, Rule::ShrinkK, &[t], |o| {
            o.k -= step;
            o.r += step;
            o.purity = Purity::Unknown;
            o.linear = m == 1;
        });
    }
    if !kk.is_integer() || kk < int(1) {
        return precondition(format!("{t} needs K > 1"));
    }
    derive(t, Rule::ShrinkK, &[t], |o| {
        o.k -= step;
        o.r += step;
        o.d = t.d.weaken();
        o.purity = pure_to_min(t);
        o.linear = m == 1;
    })
}

/// Pure F_q-linear `[[n, k, r, d]] -> [[n, k+1, r-1, d]]`, pure, for `r > 0`.
pub fn fq_shrink_r_param(t: &ParamTuple) -> Result<ParamTuple> {
    require_pure(t)?;
    if !t.linear {
        return precondition(format!("{} is not F_q-linear", t.describe()));
    }
    if t.r < int(1) {
        return precondition(format!("{t} has r < 1"));
    }
    derive(t, Rule::FqShrinkR, &[t], |o| {
        o.k += int(1);
        o.r -= int(1);
        o.purity = Purity::Pure;
    })
}

/// Stabilizer `[[n, k, d]]` pure to `d'` gives `[[n, k-r, r, >= d]]` pure to
/// `min{d, d'}` for `0 <= r < k`.
pub fn generic_trade_param(t: &ParamTuple, r: i64) -> Result<ParamTuple> {
    if !t.is_stabilizer() {
        return precondition(format!("{t} is not a stabilizer code"));
    }
    if r < 0 || int(r) >= t.k {
        return precondition(format!("r = {r} must satisfy 0 <= r < k in {t}"));
    }
    if r == 0 {
        return Ok(t.clone());
    }
    derive(t, Rule::GenericTrade, &[t], |o| {
        o.k -= int(r);
        o.r = int(r);
        o.d = t.d.weaken();
        o.purity = pure_to_min(t);
    })
}

/// Every `r` in `1..k` of [`generic_trade_param`].
pub fn generic_trades(t: &ParamTuple) -> Vec<ParamTuple> {
    if !t.is_stabilizer() || !t.k.is_integer() {
        return Vec::new();
    }
    (1..t.k.to_integer()).filter_map(|r| generic_trade_param(t, r).ok()).collect()
}

/// Pure `[[n, k, r, d]] -> [[n, k+r, 0, d]]`, pure.
pub fn stabilize_param(t: &ParamTuple) -> Result<ParamTuple> {
    require_pure(t)?;
    if t.is_stabilizer() {
        return Ok(t.clone());
    }
    derive(t, Rule::Stabilize, &[t], |o| {
        o.k += t.r;
        o.r = int(0);
        o.purity = Purity::Pure;
    })
}

/// F_q-linear `[[n, k, r, d]]` with `d >= 2`, `k >= 1` gives
/// `[[n, k-1, r, >= d]]` pure to `d` (when the input is pure).
pub fn reduce_dimension_param(t: &ParamTuple) -> Result<ParamTuple> {
    if !t.linear {
        return precondition(format!("{} is not F_q-linear", t.describe()));
    }
    match t.d.lower() {
        Some(d) if d >= 2 => {}
        _ => return precondition(format!("reducing the dimension needs d >= 2 in {t}")),
    }
    if t.k < int(1) {
        return precondition(format!("{t} has k < 1"));
    }
    derive(t, Rule::ReduceDimension, &[t], |o| {
        o.k -= int(1);
        o.d = t.d.weaken();
        o.purity = if t.is_pure() { Purity::To(t.d.weaken()) } else { Purity::Unknown };
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PasteVariant {
    /// `[[n1+n2-k2-r2, k1+r1-r, r, >= min{d1, d1+d2-k2-r2}]]_2`.
    BinaryFull,
    /// `[[n1+n2-k2, k1+r1+r2-r, r, >= min{d1, d1+d2-k2}]]_q`.
    GeneralK2,
}

impl FromStr for PasteVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "binary-full" => Ok(PasteVariant::BinaryFull),
            "general-k2" => Ok(PasteVariant::GeneralK2),
            _ => Err(format!("unknown paste variant {s:?} (binary-full, general-k2)")),
        }
    }
}

/// Pastes two pure codes; `r` is the co-subsystem size of the result.
pub fn paste_param(t1: &ParamTuple, t2: &ParamTuple, variant: PasteVariant, r: i64) -> Result<ParamTuple> {
    require_pure(t1)?;
    require_pure(t2)?;
    if t1.q != t2.q {
        return Err(crate::error::Error::FieldMismatch(t1.q, t2.q));
    }
    let (Some(d1), Some(d2)) = (t1.d.lower(), t2.d.lower()) else {
        return precondition("pasting needs known distances");
    };
    let (n1, n2) = (int(t1.n as i64), int(t2.n as i64));
    let (shrink, total) = match variant {
        PasteVariant::BinaryFull => {
            if t1.q != 2 {
                return precondition("the binary-full variant needs q = 2");
            }
            (t2.k + t2.r, t1.k + t1.r)
        }
        PasteVariant::GeneralK2 => (t2.k, t1.k + t1.r + t2.r),
    };
    if shrink > n1 {
        return precondition(format!("{} of the second code exceeds n1 = {}", shrink, t1.n));
    }
    if r < 0 || int(r) >= total {
        return precondition(format!("r = {r} must satisfy 0 <= r < {total}"));
    }
    let n = n1 + n2 - shrink;
    if !n.is_integer() || !shrink.is_integer() {
        return precondition("pasting needs integral parameters");
    }
    let joint = d1 as i64 + d2 as i64 - shrink.to_integer();
    derive(t1, Rule::Paste, &[t1, t2], |o| {
        o.n = n.to_integer() as u32;
        o.k = total - int(r);
        o.r = int(r);
        o.d = Bound::at_least((d1 as i64).min(joint));
        o.purity = Purity::Unknown;
        o.linear = t1.linear && t2.linear;
    })
}

/// Pure `((n m, K, R, >= d))_q -> ((n, K, R, >= floor(d/m)))_{q^m}`.
pub fn field_ascent_param(t: &ParamTuple, m: u32) -> Result<ParamTuple> {
    require_pure(t)?;
    if m == 0 || !t.n.is_multiple_of(m) {
        return precondition(format!("m = {m} must divide n = {}", t.n));
    }
    let Some(q) = t.q.checked_pow(m) else {
        return precondition("field order overflows");
    };
    let d = match t.d.lower() {
        Some(d) => Bound::at_least((d / m) as i64),
        None => Bound::Unknown,
    };
    derive(t, Rule::Ascend, &[t], |o| {
        o.q = q;
        o.n = t.n / m;
        o.k = t.k / int(m as i64);
        o.r = t.r / int(m as i64);
        o.d = d;
        o.purity = Purity::Unknown;
        o.linear = false;
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> ParamTuple {
        s.parse().unwrap()
    }

    #[test]
    fn shorten_examples() {
        assert_eq!(shorten_param(&t("[[6,1,1,3]]_3")).unwrap().to_string(), "[[5,2,1,>=2]]_3");
        assert_eq!(shorten_param(&t("[[8,2,1,3]]_2")).unwrap().to_string(), "[[7,3,1,>=2]]_2");
        assert!(shorten_param(&t("[[8,2,1,1]]_2")).is_err());
        assert!(shorten_param(&t("[[8,2,1,3]]_2 impure")).is_err());
    }

    #[test]
    fn shrink_k_examples() {
        let a = shrink_k_param(&t("((8,4,2,3))_2")).unwrap();
        assert_eq!(a.key(), t("((8,2,4,3))_2").key());
        assert_eq!(a.d, Bound::AtLeast(3));
        let b = shrink_k_param(&t("((8,2,2,3))_2")).unwrap();
        assert_eq!(b.big_k(), Some(1));
        assert_eq!(b.d, Bound::Exact(3));
        assert!(shrink_k_param(&t("((8,1,2,3))_2")).is_err());
        let c = shrink_k_param(&t("[[8,2,1,3]]_4")).unwrap();
        assert_eq!(c.to_string(), "[[8,3/2,3/2,>=3]]_4");
        assert!(!c.linear);
    }

    #[test]
    fn trade_examples() {
        let s = t("[[8,3,3]]_2");
        let all: Vec<String> = generic_trades(&s).iter().map(|x| x.to_string()).collect();
        assert_eq!(all, ["[[8,2,1,>=3]]_2", "[[8,1,2,>=3]]_2"]);
        assert!(generic_trade_param(&s, 3).is_err());
        assert_eq!(fq_shrink_r_param(&t("[[8,1,2,3]]_2")).unwrap().to_string(), "[[8,2,1,3]]_2");
        assert_eq!(stabilize_param(&t("[[8,2,1,3]]_2")).unwrap().to_string(), "[[8,3,0,3]]_2");
        assert_eq!(reduce_dimension_param(&s).unwrap().to_string(), "[[8,2,0,>=3]]_2");
    }

    #[test]
    fn paste_examples() {
        let out = paste_param(&t("[[8,2,1,3]]_2"), &t("[[4,1,1,2]]_2"), PasteVariant::BinaryFull, 0).unwrap();
        assert_eq!(out.to_string(), "[[10,3,0,>=3]]_2");
        let sweep: Vec<_> = (0..3)
            .filter_map(|r| paste_param(&t("[[8,2,1,3]]_2"), &t("[[4,1,1,2]]_2"), PasteVariant::BinaryFull, r).ok())
            .collect();
        assert_eq!(sweep.len(), 3);
        assert!(paste_param(&t("[[2,1,0,1]]_2"), &t("[[4,2,1,2]]_2"), PasteVariant::BinaryFull, 0).is_err());
        let g = paste_param(&t("[[8,2,1,3]]_3"), &t("[[4,1,1,2]]_3"), PasteVariant::GeneralK2, 1).unwrap();
        assert_eq!(g.to_string(), "[[11,3,1,>=3]]_3");
    }

    #[test]
    fn ascent_example() {
        let out = field_ascent_param(&t("((12,4,2,5))_2"), 2).unwrap();
        assert_eq!(out.to_string(), "[[6,1,1/2,>=2]]_4");
        assert_eq!((out.big_k(), out.big_r()), (Some(4), Some(2)));
        assert!(field_ascent_param(&t("((12,4,2,5))_2"), 5).is_err());
    }

    #[test]
    fn extend_example() {
        let out = extend_param(&t("[[8,3,0,3]]_2")).unwrap();
        assert_eq!(out.describe(), "[[9,3,0,>=3]]_2 pure_to=1");
        assert!(extend_param(&t("[[8,0,2,3]]_2")).is_err());
    }
}
