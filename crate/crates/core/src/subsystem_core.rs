//! Subsystem codes obtained from a gauge code `C` over GF(q)^{2n}.
//!
//! With `D = C ∩ C^⊥s` the stabilizer and `x = |C|`, `y = |D|`, the code has
//! `K = q^n / sqrt(xy)` and `R = sqrt(x / y)`. The distance is the minimum
//! symplectic weight of `D^⊥s \ C`, or of `D^⊥s` itself when `D^⊥s = C`.

use crate::additive_code::{AdditiveCode, Form, Layout};
use crate::enumerate::{self, EnumConfig};
use crate::error::{precondition, Error, Result};
use crate::params::{Bound, ParamTuple, Purity, Rational, Rule, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    Skip,
    Compute(EnumConfig),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceStatus {
    Computed,
    Skipped,
    /// The normalizer has `p^log_p` vectors, more than `cap`.
    CapExceeded { log_p: usize, cap: u128 },
}

#[derive(Clone, Debug)]
pub struct SubsystemCode {
    gauge: AdditiveCode,
    stabilizer: AdditiveCode,
    normalizer: AdditiveCode,
    params: ParamTuple,
    status: DistanceStatus,
}

impl SubsystemCode {
    pub fn from_gauge_code(gauge: AdditiveCode, mode: DistanceMode) -> Result<Self> {
        if gauge.layout() != Layout::Symplectic {
            return Err(Error::LayoutMismatch("a gauge code lives in the symplectic layout".into()));
        }
        if gauge.is_zero() {
            return Err(Error::ZeroGaugeCode);
        }
        let stabilizer = gauge.intersect(&gauge.dual(Form::TraceSymplectic)?)?;
        let normalizer = stabilizer.dual(Form::TraceSymplectic)?;
        let (c, e) = (gauge.dim() as i64, stabilizer.dim() as i64);
        let m = gauge.field().m() as i64;
        let n = gauge.qudits() as i64;
        let params = ParamTuple {
            q: gauge.field().q(),
            n: n as u32,
            k: Rational::from_integer(n) - Rational::new(c + e, 2 * m),
            r: Rational::new(c - e, 2 * m),
            d: Bound::Unknown,
            purity: Purity::Unknown,
            linear: gauge.is_fq_linear(),
            provenance: vec![Step { rule: Rule::Computed, from: Vec::new() }],
        };
        let mut code = Self { gauge, stabilizer, normalizer, params, status: DistanceStatus::Skipped };
        if let DistanceMode::Compute(cfg) = mode {
            code.compute_distance(&cfg)?;
        }
        Ok(code)
    }

    /// Computes `d` and the purity if not done yet. A cap overrun leaves
    /// them unknown and is recorded in [`status`](Self::status).
    pub fn compute_distance(&mut self, cfg: &EnumConfig) -> Result<()> {
        if self.status == DistanceStatus::Computed {
            return Ok(());
        }
        match enumerate::scan(&self.normalizer, &self.gauge, cfg) {
            Ok(s) => {
                let pure_to = s.min_nonzero.expect("the normalizer contains the nonzero gauge code") as u32;
                let d = if self.normalizer == self.gauge { pure_to } else {
                    s.min_outside.expect("normalizer strictly contains the gauge code") as u32
                };
                self.params.d = Bound::Exact(d);
                self.params.purity = if pure_to >= d { Purity::Pure } else { Purity::To(Bound::Exact(pure_to)) };
                self.status = DistanceStatus::Computed;
                Ok(())
            }
            Err(Error::CapExceeded { log_p, cap, .. }) => {
                self.status = DistanceStatus::CapExceeded { log_p, cap };
                Ok(())
            }
            Err(e) => Err(e),
        }
    }

    pub fn gauge(&self) -> &AdditiveCode {
        &self.gauge
    }

    /// `D = C ∩ C^⊥s`.
    pub fn stabilizer(&self) -> &AdditiveCode {
        &self.stabilizer
    }

    /// `D^⊥s`.
    pub fn normalizer(&self) -> &AdditiveCode {
        &self.normalizer
    }

    pub fn params(&self) -> &ParamTuple {
        &self.params
    }

    pub fn status(&self) -> DistanceStatus {
        self.status
    }

    pub fn n(&self) -> usize {
        self.gauge.qudits()
    }

    pub fn field(&self) -> &crate::finite_field::FieldSpec {
        self.gauge.field()
    }

    pub fn d(&self) -> Bound {
        self.params.d
    }

    pub fn pure_to(&self) -> Bound {
        self.params.pure_to()
    }

    pub fn is_pure(&self) -> bool {
        self.params.is_pure()
    }

    pub(crate) fn set_provenance(&mut self, steps: Vec<Step>) {
        self.params.provenance = steps;
    }

    /// Whether the code is pure, with the normalizer's minimum weight.
    pub fn purity_classify(&self) -> Result<(bool, u32)> {
        match (self.params.d, self.params.pure_to()) {
            (Bound::Exact(d), Bound::Exact(t)) => Ok((t == d, t)),
            _ => Err(Error::DistanceUnknown(format!("{} has no computed distance", self.params))),
        }
    }

    /// The pure stabilizer code `[[n, k+r, d]]_q` obtained by fixing the gauge.
    pub fn stabilizer_view(&self) -> Result<ParamTuple> {
        let (pure, _) = self.purity_classify()?;
        if !pure {
            return precondition(format!("{} is not pure", self.params));
        }
        let p = &self.params;
        if p.is_stabilizer() {
            return Ok(p.clone());
        }
        let t = ParamTuple { k: p.k + p.r, r: Rational::from_integer(0), provenance: p.provenance.clone(), ..p.clone() };
        Ok(t.with_step(Rule::Stabilize, &[p]))
    }
}

fn classical_dims(ccl: &AdditiveCode) -> Result<(usize, usize, AdditiveCode)> {
    if ccl.layout() != Layout::Plain {
        return Err(Error::LayoutMismatch("the classical code must use the plain layout".into()));
    }
    if !ccl.is_fq_linear() {
        return precondition("the classical code must be F_q-linear");
    }
    if ccl.is_zero() {
        return Err(Error::ZeroGaugeCode);
    }
    let m = ccl.field().m();
    let hull = ccl.intersect(&ccl.dual(Form::Euclidean)?)?;
    let (k1, k2) = (ccl.dim() / m, hull.dim() / m);
    if k1 + k2 >= ccl.length() {
        return precondition(format!("k' + k'' = {} must be below n = {}", k1 + k2, ccl.length()));
    }
    Ok((k1, k2, hull))
}

/// The subsystem code of the gauge code `Ccl × Ccl` for an F_q-linear
/// classical code `Ccl` with `dim Ccl + dim(Ccl ∩ Ccl^⊥) < n`.
pub fn euclidean_construction(ccl: &AdditiveCode, mode: DistanceMode) -> Result<SubsystemCode> {
    classical_dims(ccl)?;
    SubsystemCode::from_gauge_code(AdditiveCode::from_halves(ccl, ccl)?, mode)
}

/// `[[n, n-(k'+k''), k'-k'', wt(D^⊥ \ Ccl)]]_q` computed classically from
/// `Ccl` and its hull `D = Ccl ∩ Ccl^⊥`, with purity from `wt(D^⊥)`.
pub fn euclidean_lemma_params(ccl: &AdditiveCode, cfg: &EnumConfig) -> Result<ParamTuple> {
    let (k1, k2, hull) = classical_dims(ccl)?;
    let n = ccl.length();
    let hull_dual = hull.dual(Form::Euclidean)?;
    let s = enumerate::scan(&hull_dual, ccl, cfg)?;
    let pure_to = s.min_nonzero.expect("hull dual is nonzero") as u32;
    let d = s.min_outside.expect("k' + k'' < n leaves vectors outside Ccl") as u32;
    let purity = if pure_to >= d { Purity::Pure } else { Purity::To(Bound::Exact(pure_to)) };
    Ok(ParamTuple::new(ccl.field().q(), n as u32, (n - k1 - k2) as i64, (k1 - k2) as i64, Bound::Exact(d), purity))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive_code::{CodeVector, Linearity};
    use crate::finite_field::FieldSpec;

    fn compute() -> DistanceMode {
        DistanceMode::Compute(EnumConfig::default())
    }

    #[test]
    fn zero_gauge_code_is_rejected() {
        let f2 = FieldSpec::new(2).unwrap();
        let z = AdditiveCode::zero(&f2, Layout::Symplectic, 6);
        assert_eq!(SubsystemCode::from_gauge_code(z, compute()).unwrap_err(), Error::ZeroGaugeCode);
    }

    #[test]
    fn self_orthogonal_gauge_is_a_stabilizer_code() {
        // The [[4,2,2]] code XXXX, ZZZZ.
        let f2 = FieldSpec::new(2).unwrap();
        let rows = [
            CodeVector::symplectic(&f2, &[1, 1, 1, 1], &[0, 0, 0, 0]).unwrap(),
            CodeVector::symplectic(&f2, &[0, 0, 0, 0], &[1, 1, 1, 1]).unwrap(),
        ];
        let c = AdditiveCode::span(&rows, Linearity::Additive).unwrap();
        let code = SubsystemCode::from_gauge_code(c, compute()).unwrap();
        assert_eq!(code.params().to_string(), "[[4,2,0,2]]_2");
        assert!(code.is_pure());
        assert_eq!(code.stabilizer(), code.gauge());
    }

    #[test]
    fn skipped_distance_is_unknown() {
        let f2 = FieldSpec::new(2).unwrap();
        let rows = [CodeVector::symplectic(&f2, &[1, 1], &[0, 0]).unwrap()];
        let c = AdditiveCode::span(&rows, Linearity::Additive).unwrap();
        let code = SubsystemCode::from_gauge_code(c.clone(), DistanceMode::Skip).unwrap();
        assert_eq!(code.d(), Bound::Unknown);
        assert!(code.purity_classify().is_err());
        let capped = SubsystemCode::from_gauge_code(c, DistanceMode::Compute(EnumConfig::with_cap(2))).unwrap();
        assert_eq!(capped.status(), DistanceStatus::CapExceeded { log_p: 3, cap: 2 });
        assert_eq!(capped.d(), Bound::Unknown);
    }

    #[test]
    fn euclidean_construction_example() {
        let f2 = FieldSpec::new(2).unwrap();
        let ccl = AdditiveCode::span(&[CodeVector::plain(&f2, &[1, 1, 1, 0]).unwrap()], Linearity::FqLinear).unwrap();
        let code = euclidean_construction(&ccl, compute()).unwrap();
        let p = code.params();
        assert_eq!((p.n, p.k, p.r), (4, Rational::from_integer(3), Rational::from_integer(1)));
        // D^⊥ is every vector, so the lightest vector outside {0, 1110} has weight 1.
        assert_eq!(p.d, Bound::Exact(1));
        assert!(p.same_params(&euclidean_lemma_params(&ccl, &EnumConfig::default()).unwrap()));
        let zero = AdditiveCode::zero(&f2, Layout::Plain, 4);
        assert!(euclidean_construction(&zero, compute()).is_err());
    }
}
