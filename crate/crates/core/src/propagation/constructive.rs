//! Rules with an explicit construction on the gauge code.

use crate::additive_code::{trace_symplectic_product, AdditiveCode, CodeVector, Form, Layout, Linearity};
use crate::enumerate::{first_lex, weight_distribution, EnumConfig};
use crate::error::{precondition, Error, Result};
use crate::finite_field::{FieldElement, FieldSpec};
use crate::params::{Bound, BoundTuple, ParamTuple, Purity, Rational, Rule, Step};
use crate::subsystem_core::{DistanceMode, SubsystemCode};

use super::{Derived, RuleApplication};

fn one() -> Rational {
    Rational::from_integer(1)
}

fn zero() -> Rational {
    Rational::from_integer(0)
}

/// Exact distance and normalizer weight of an input, required by rules with
/// purity or distance hypotheses.
fn known(code: &SubsystemCode) -> Result<(u32, u32, bool)> {
    let (pure, t) = code.purity_classify()?;
    let d = code.d().lower().expect("classified codes have a distance");
    Ok((d, t, pure))
}

fn require_pure(code: &SubsystemCode) -> Result<u32> {
    let (d, _, pure) = known(code)?;
    if !pure {
        return precondition(format!("{} is not pure", code.params().describe()));
    }
    Ok(d)
}

fn chain(inputs: &[&SubsystemCode], rule: Rule) -> Vec<Step> {
    let mut steps = inputs[0].params().provenance.clone();
    for c in &inputs[1..] {
        steps.extend(c.params().provenance.iter().cloned());
    }
    steps.push(Step { rule, from: inputs.iter().map(|c| c.params().to_string()).collect() });
    steps
}

/// Builds the output code, attaches provenance, and checks the prediction.
fn finish(
    rule: Rule,
    inputs: &[&SubsystemCode],
    mut predicted: ParamTuple,
    gauge: AdditiveCode,
    cfg: &EnumConfig,
    implied: Vec<ParamTuple>,
    notes: Vec<String>,
) -> Result<Derived> {
    let mut code = SubsystemCode::from_gauge_code(gauge, DistanceMode::Compute(*cfg))?;
    let steps = chain(inputs, rule);
    code.set_provenance(steps.clone());
    predicted.provenance = steps.clone();
    let implied = implied
        .into_iter()
        .map(|mut t| {
            t.provenance = steps.clone();
            t
        })
        .collect();
    let application = RuleApplication {
        rule,
        inputs: inputs.iter().map(|c| c.params().clone()).collect(),
        predicted,
        actual: Some(code.params().clone()),
        constructive: true,
        implied,
        notes,
    };
    application.check()?;
    Ok(Derived { code, application })
}

fn tuple(base: &ParamTuple, n: u32, k: Rational, r: Rational, d: Bound, purity: Purity) -> ParamTuple {
    ParamTuple { q: base.q, n, k, r, d, purity, linear: base.linear, provenance: Vec::new() }
}

/// `C' = {(a alpha | b 0)}`: an `((n+1, K, R, >= d))` code that is pure to 1.
pub fn extend_by_one(code: &SubsystemCode, cfg: &EnumConfig) -> Result<Derived> {
    let p = code.params();
    if p.k <= zero() {
        return precondition(format!("{p} has K = 1"));
    }
    let predicted = tuple(p, p.n + 1, p.k, p.r, p.d.weaken(), Purity::To(Bound::Exact(1)));
    finish(Rule::Extend, &[code], predicted, code.gauge().extend_alpha()?, cfg, Vec::new(), Vec::new())
}

/// Punctures the gauge code at `coordinate` (0-based) in both halves:
/// an `((n-1, K, qR, >= d-1))` code. The equivalent `((n-1, qK, R, >= d-1))`
/// tuple is listed as implied.
pub fn puncture_one(code: &SubsystemCode, coordinate: usize, cfg: &EnumConfig) -> Result<Derived> {
    let p = code.params();
    let d = require_pure(code)?;
    if p.n < 2 {
        return precondition("puncturing needs n >= 2");
    }
    if d < 2 {
        return precondition(format!("puncturing needs d >= 2, got {d}"));
    }
    if coordinate >= code.n() {
        return Err(Error::CoordinateOutOfRange { index: coordinate, length: code.n() });
    }
    let dp = Bound::at_least(d as i64 - 1);
    let predicted = tuple(p, p.n - 1, p.k, p.r + one(), dp, Purity::Unknown);
    let implied = vec![tuple(p, p.n - 1, p.k + one(), p.r, dp, Purity::Pure)];
    let gauge = code.gauge().puncture(&[coordinate])?;
    let mut notes = Vec::new();
    let shortened = code.stabilizer().shorten(&[coordinate])?;
    let stab = gauge.intersect(&gauge.dual(Form::TraceSymplectic)?)?;
    if stab != shortened {
        notes.push(format!(
            "stabilizer of the punctured gauge code (dim_p {}) differs from the shortened stabilizer (dim_p {})",
            stab.dim(),
            shortened.dim()
        ));
    }
    if gauge.dim() != code.gauge().dim() {
        notes.push(format!("puncturing shrank the gauge code from dim_p {} to {}", code.gauge().dim(), gauge.dim()));
    }
    finish(Rule::Puncture, &[code], predicted, gauge, cfg, implied, notes)
}

fn to_vec(code: &AdditiveCode, v: &[u8]) -> CodeVector {
    CodeVector::from_expanded(code.field(), code.layout(), v).expect("enumerated vectors are well formed")
}

fn require_candidate(v: Option<Vec<u8>>, what: &str) -> Result<Vec<u8>> {
    v.ok_or_else(|| Error::NoCandidate(what.to_string()))
}

/// Adds the lexicographically first `v` in `C^⊥s \ C` (and its F_q
/// multiples) to both gauge and stabilizer: `[[n, k-1, r, >= d]]`.
pub fn reduce_dimension(code: &SubsystemCode, cfg: &EnumConfig) -> Result<Derived> {
    let p = code.params();
    let (d, t, pure) = known(code)?;
    if !code.gauge().is_fq_linear() {
        return precondition("reducing the dimension needs an F_q-linear code");
    }
    if d < 2 {
        return precondition(format!("reducing the dimension needs d >= 2, got {d}"));
    }
    if p.k < one() {
        return precondition(format!("{p} has k < 1"));
    }
    let c = code.gauge();
    let cperp = c.dual(Form::TraceSymplectic)?;
    let v = require_candidate(
        first_lex(&cperp, cfg, |v| !c.contains_expanded(v))?,
        "no vector of the gauge dual lies outside the gauge code",
    )?;
    let gauge = c.extend_by(&[to_vec(c, &v)], Linearity::FqLinear)?;
    let pure_to = if pure { Bound::AtLeast(d) } else { Bound::AtLeast(t) };
    let predicted = tuple(p, p.n, p.k - one(), p.r, Bound::AtLeast(d), Purity::To(pure_to));
    finish(Rule::ReduceDimension, &[code], predicted, gauge, cfg, Vec::new(), Vec::new())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TradeDirection {
    KToR,
    RToK,
}

fn linearity_of(c: &AdditiveCode) -> Linearity {
    c.linearity()
}

fn pair_value(c: &AdditiveCode, x: &[u8], y: &[u8]) -> u8 {
    trace_symplectic_product(&to_vec(c, x), &to_vec(c, y)).expect("same ambient")
}

/// Moves one hyperbolic pair between the logical and gauge parts.
///
/// `KToR` adds the lexicographically first `x` in `C^⊥s \ C` and the first
/// `y` in `C^⊥s` with `<x|y>_s != 0` to the gauge code. `RToK` removes the
/// first `x` in `C \ D` and the first `y` in `C` with `<x|y>_s != 0` by
/// passing to `C ∩ span(x, y)^⊥s`. The span is over F_q for F_q-linear
/// codes and over F_p otherwise, so one step moves 1 or 1/m.
pub fn trade_gauge(code: &SubsystemCode, direction: TradeDirection, cfg: &EnumConfig) -> Result<Derived> {
    let p = code.params();
    let c = code.gauge();
    let lin = linearity_of(c);
    let step = if lin == Linearity::FqLinear { one() } else { Rational::new(1, c.field().m() as i64) };
    match direction {
        TradeDirection::KToR => {
            if p.k - step < one() {
                return precondition(format!("trading gauge from {p} would leave k < 1"));
            }
            let cperp = c.dual(Form::TraceSymplectic)?;
            let x = require_candidate(
                first_lex(&cperp, cfg, |v| !c.contains_expanded(v))?,
                "no logical vector outside the gauge code",
            )?;
            let y = require_candidate(
                first_lex(&cperp, cfg, |v| pair_value(c, &x, v) != 0)?,
                "no hyperbolic partner in the gauge dual",
            )?;
            let gauge = c.extend_by(&[to_vec(c, &x), to_vec(c, &y)], lin)?;
            let purity = match (p.d.lower(), p.pure_to().lower()) {
                (Some(d), Some(t)) => Purity::To(Bound::AtLeast(d.min(t))),
                _ => Purity::Unknown,
            };
            let predicted = tuple(p, p.n, p.k - step, p.r + step, p.d.weaken(), purity);
            finish(Rule::TradeKToR, &[code], predicted, gauge, cfg, Vec::new(), Vec::new())
        }
        TradeDirection::RToK => {
            let d = require_pure(code)?;
            if lin != Linearity::FqLinear {
                return precondition("trading gauge back needs an F_q-linear code");
            }
            if p.r <= zero() {
                return precondition(format!("{p} has no gauge qudits"));
            }
            let stab = code.stabilizer();
            let x = require_candidate(
                first_lex(c, cfg, |v| !stab.contains_expanded(v))?,
                "gauge code equals its stabilizer",
            )?;
            let y = require_candidate(first_lex(c, cfg, |v| pair_value(c, &x, v) != 0)?, "no hyperbolic partner")?;
            let pair = AdditiveCode::span(&[to_vec(c, &x), to_vec(c, &y)], lin)?;
            let gauge = c.intersect(&pair.dual(Form::TraceSymplectic)?)?;
            if gauge.is_zero() {
                return precondition(format!("trading gauge back from {p} leaves the zero code"));
            }
            let predicted = tuple(p, p.n, p.k + step, p.r - step, Bound::Exact(d), Purity::Pure);
            finish(Rule::TradeRToK, &[code], predicted, gauge, cfg, Vec::new(), Vec::new())
        }
    }
}

fn same_field(a: &SubsystemCode, b: &SubsystemCode) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().q(), b.field().q()));
    }
    Ok(())
}

/// `C = C1 ⊕ C2`: `[[n1+n2, k1+k2, r1+r2, >= min(d1, d2)]]`.
pub fn combine_direct_sum(a: &SubsystemCode, b: &SubsystemCode, cfg: &EnumConfig) -> Result<Derived> {
    same_field(a, b)?;
    let d1 = require_pure(a)?;
    let d2 = require_pure(b)?;
    let (p, q) = (a.params(), b.params());
    let bound = Bound::AtLeast(d1.min(d2));
    let mut predicted = tuple(p, p.n + q.n, p.k + q.k, p.r + q.r, bound, Purity::To(bound));
    predicted.linear = p.linear && q.linear;
    let gauge = AdditiveCode::direct_sum(a.gauge(), b.gauge())?;
    finish(Rule::DirectSum, &[a, b], predicted, gauge, cfg, Vec::new(), Vec::new())
}

/// `C = {(a, a+b) : a in C1, b in C2}` per half, with `C1 ⊆ C2`:
/// `[[2n, k1+k2, r1+r2, >= min(d1, 2 d2)]]`.
pub fn combine_uuv(a: &SubsystemCode, b: &SubsystemCode, cfg: &EnumConfig) -> Result<Derived> {
    same_field(a, b)?;
    if a.n() != b.n() {
        return Err(Error::AmbientMismatch(format!("lengths {} and {}", a.n(), b.n())));
    }
    let d1 = require_pure(a)?;
    let d2 = require_pure(b)?;
    if !a.gauge().is_subcode_of(b.gauge()) {
        return precondition("the first gauge code must be contained in the second");
    }
    let (p, q) = (a.params(), b.params());
    let bound = Bound::AtLeast(d1.min(2 * d2));
    let predicted = tuple(p, 2 * p.n, p.k + q.k, p.r + q.r, bound, Purity::Unknown);
    let gauge = AdditiveCode::uuv(a.gauge(), b.gauge())?;
    finish(Rule::Uuv, &[a, b], predicted, gauge, cfg, Vec::new(), Vec::new())
}

/// Coordinates over `sub` of every element of `big`, in the basis
/// `1, g, ..., g^{e-1}` (`g` the generator of `big`) and in its trace-dual
/// basis. Returned as tables indexed by packed value.
struct Descent {
    sub: FieldSpec,
    degree: usize,
    primal: Vec<Vec<FieldElement>>,
    dual: Vec<Vec<FieldElement>>,
}

impl Descent {
    fn new(big: &FieldSpec, sub: &FieldSpec) -> Result<Self> {
        let embed = big.embedding_of(sub)?;
        let degree = big.m() / sub.m();
        let s = sub.q() as u64;
        let rel_trace = |a: FieldElement| {
            let mut acc = FieldElement::ZERO;
            let mut cur = a;
            for _ in 0..degree {
                acc = big.add(acc, cur);
                cur = big.pow(cur, s);
            }
            acc
        };
        let back = |a: FieldElement| -> FieldElement {
            let idx = embed.iter().position(|&e| e == a).expect("relative trace lies in the subfield");
            FieldElement(idx as u8)
        };
        let g = big.generator();
        let basis: Vec<FieldElement> = (0..degree as u64).map(|i| big.pow(g, i)).collect();
        let mut primal = vec![Vec::new(); big.q() as usize];
        let total = (sub.q() as usize).pow(degree as u32);
        for idx in 0..total {
            let mut rest = idx;
            let coeffs: Vec<FieldElement> = (0..degree)
                .map(|_| {
                    let c = FieldElement((rest % sub.q() as usize) as u8);
                    rest /= sub.q() as usize;
                    c
                })
                .collect();
            let val = coeffs
                .iter()
                .zip(&basis)
                .fold(FieldElement::ZERO, |acc, (&c, &b)| big.add(acc, big.mul(embed[c.value() as usize], b)));
            primal[val.value() as usize] = coeffs;
        }
        if primal.iter().any(|c| c.is_empty()) {
            return Err(Error::NotSubfield { sub: sub.q(), big: big.q() });
        }
        // b = sum_j tr(g^j b) theta_j, so the dual coordinates are traces.
        let dual = big.elements().map(|b| basis.iter().map(|&gj| back(rel_trace(big.mul(gj, b)))).collect()).collect();
        Ok(Self { sub: sub.clone(), degree, primal, dual })
    }

    fn map(&self, v: &CodeVector) -> CodeVector {
        let mut x = Vec::new();
        let mut z = Vec::new();
        for &a in v.x() {
            x.extend_from_slice(&self.primal[a.value() as usize]);
        }
        for &b in v.y() {
            z.extend_from_slice(&self.dual[b.value() as usize]);
        }
        let entries = x.into_iter().chain(z).collect();
        CodeVector::new(&self.sub, Layout::Symplectic, entries).expect("subfield entries")
    }
}

/// Expands each GF(q^e) coordinate over GF(q): x-halves in the power basis
/// of the generator, y-halves in its trace-dual basis, which keeps the
/// trace-symplectic form. `((n, K, R, d))_{q^e}` becomes `((n e, K, R, >= d))_q`.
pub fn field_descent(code: &SubsystemCode, sub: &FieldSpec, cfg: &EnumConfig) -> Result<Derived> {
    let d = require_pure(code)?;
    let big = code.field();
    let map = Descent::new(big, sub)?;
    let e = map.degree as u32;
    let rows: Vec<CodeVector> = code.gauge().generators().iter().map(|g| map.map(g)).collect();
    let n2 = code.n() * map.degree;
    let gauge = AdditiveCode::span_in(sub, Layout::Symplectic, 2 * n2, &rows, Linearity::Additive)?;
    let p = code.params();
    let scale = Rational::from_integer(e as i64);
    let predicted = ParamTuple {
        q: sub.q(),
        n: p.n * e,
        k: p.k * scale,
        r: p.r * scale,
        d: Bound::AtLeast(d),
        purity: Purity::To(Bound::AtLeast(d)),
        linear: gauge.is_fq_linear(),
        provenance: Vec::new(),
    };
    finish(Rule::Descend, &[code], predicted, gauge, cfg, Vec::new(), Vec::new())
}

/// Bounds for codes of length `n - m` when `D^⊥s \ C` has a vector of
/// weight `m`: `[[n-m, >= k-m, >= r, >= d]]` and, trading back,
/// `[[n-m, >= k'+r'-r'', r'', >= d]]` for `0 <= r'' < k'+r'`.
pub fn reduce_length_param(code: &SubsystemCode, m: usize, cfg: &EnumConfig) -> Result<Vec<BoundTuple>> {
    let p = code.params();
    let d = require_pure(code)?;
    if !p.linear {
        return precondition("reducing the length needs an F_q-linear code");
    }
    if m == 0 || m >= code.n() {
        return precondition(format!("m = {m} must lie in 1..{}", code.n()));
    }
    let dist = weight_distribution(code.normalizer(), code.gauge(), cfg)?;
    if dist[m] == 0 {
        return Err(Error::NoCandidate(format!("no vector of weight {m} in the normalizer outside the gauge code")));
    }
    let k1 = (p.k - Rational::from_integer(m as i64)).max(zero());
    let steps = {
        let mut s = p.provenance.clone();
        s.push(Step { rule: Rule::ReduceLength, from: vec![p.to_string()] });
        s
    };
    let n = p.n - m as u32;
    let bt = |k: Rational, r: Rational| BoundTuple {
        q: p.q,
        n,
        k_at_least: k,
        r_at_least: r,
        d: Bound::AtLeast(d),
        provenance: steps.clone(),
    };
    let mut out = vec![bt(k1, p.r)];
    let total = k1 + p.r;
    let mut r2 = zero();
    while r2 < total {
        out.push(bt(total - r2, r2));
        r2 += one();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::FieldSpec;

    fn cfg() -> EnumConfig {
        EnumConfig::default()
    }

    fn five_qubit() -> SubsystemCode {
        let f2 = FieldSpec::new(2).unwrap();
        let rows = [
            ([1, 0, 0, 1, 0], [0, 1, 1, 0, 0]),
            ([0, 1, 0, 0, 1], [0, 0, 1, 1, 0]),
            ([1, 0, 1, 0, 0], [0, 0, 0, 1, 1]),
            ([0, 1, 0, 1, 0], [1, 0, 0, 0, 1]),
        ];
        let rows: Vec<CodeVector> = rows.iter().map(|(x, z)| CodeVector::symplectic(&f2, x, z).unwrap()).collect();
        let c = AdditiveCode::span(&rows, Linearity::Additive).unwrap();
        SubsystemCode::from_gauge_code(c, DistanceMode::Compute(cfg())).unwrap()
    }

    #[test]
    fn extend_five_qubit() {
        let out = extend_by_one(&five_qubit(), &cfg()).unwrap();
        assert_eq!(out.code.params().to_string(), "[[6,1,0,3]]_2");
        assert_eq!(out.code.pure_to(), Bound::Exact(1));
        assert_eq!(out.application.verified(), Some(true));
        assert_eq!(out.code.gauge().dim(), 5);
    }

    #[test]
    fn reduce_and_trade_preconditions() {
        let s = five_qubit();
        let out = reduce_dimension(&s, &cfg()).unwrap();
        assert_eq!(out.code.params().to_string(), "[[5,0,0,3]]_2");
        assert!(reduce_dimension(&out.code, &cfg()).is_err());
        // k = 1 cannot give up a logical qubit and keep k >= 1.
        assert!(matches!(trade_gauge(&s, TradeDirection::KToR, &cfg()), Err(Error::Precondition(_))));
        assert!(matches!(trade_gauge(&s, TradeDirection::RToK, &cfg()), Err(Error::Precondition(_))));
    }

    #[test]
    fn field_descent_of_scalar_extension() {
        let s = five_qubit();
        let f4 = FieldSpec::new(4).unwrap();
        let big = SubsystemCode::from_gauge_code(s.gauge().extend_scalars(&f4).unwrap(), DistanceMode::Compute(cfg()))
            .unwrap();
        assert_eq!(big.params().to_string(), "[[5,1,0,3]]_4");
        let down = field_descent(&big, &FieldSpec::new(2).unwrap(), &cfg()).unwrap();
        assert_eq!(down.code.params().key(), (2, 10, Rational::from_integer(2), zero()));
        assert_eq!(down.application.verified(), Some(true));
        let same = field_descent(&s, &FieldSpec::new(2).unwrap(), &cfg()).unwrap();
        assert_eq!(same.code.gauge(), s.gauge());
    }

    #[test]
    fn descent_preserves_the_symplectic_form() {
        let f4 = FieldSpec::new(4).unwrap();
        let f2 = FieldSpec::new(2).unwrap();
        let map = Descent::new(&f4, &f2).unwrap();
        for a in 0..16u32 {
            for b in 0..16u32 {
                let u = CodeVector::symplectic(&f4, &[a % 4], &[a / 4]).unwrap();
                let v = CodeVector::symplectic(&f4, &[b % 4], &[b / 4]).unwrap();
                assert_eq!(
                    trace_symplectic_product(&u, &v).unwrap(),
                    trace_symplectic_product(&map.map(&u), &map.map(&v)).unwrap()
                );
            }
        }
    }
}
