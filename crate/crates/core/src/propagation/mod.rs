//! Propagation rules: constructive transformations of gauge codes, a
//! parameter calculus for rules that are only existential here, and the
//! closure of a seed set under the parameter rules.
//!
//! Constructive rules recompute the true parameters of the code they build
//! and compare them with what the rule predicts; a mismatch is reported as
//! [`Error::Verification`].

pub mod calculus;
pub mod closure;
pub mod constructive;

use crate::error::{Error, Result};
use crate::params::{Bound, ParamTuple, Purity, Rule};
use crate::subsystem_core::SubsystemCode;

pub use calculus::*;
pub use closure::rule_closure;
pub use constructive::*;

/// Record of one rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleApplication {
    pub rule: Rule,
    pub inputs: Vec<ParamTuple>,
    /// Parameters the rule claims, with lower bounds where it gives them.
    pub predicted: ParamTuple,
    /// Recomputed parameters of the constructed code.
    pub actual: Option<ParamTuple>,
    pub constructive: bool,
    /// Further tuples the rule implies without a construction.
    pub implied: Vec<ParamTuple>,
    /// Side observations made while verifying.
    pub notes: Vec<String>,
}

impl RuleApplication {
    /// Whether `actual` honours `predicted`. `None` when the recomputed
    /// distance is unknown (enumeration cap).
    pub fn verified(&self) -> Option<bool> {
        let actual = self.actual.as_ref()?;
        let p = &self.predicted;
        if (actual.q, actual.n, actual.k, actual.r) != (p.q, p.n, p.k, p.r) {
            return Some(false);
        }
        let d_ok = p.d.admits(actual.d)?;
        let purity_ok = match p.purity {
            Purity::Unknown => Some(true),
            Purity::Pure => match (actual.d, actual.pure_to()) {
                (Bound::Exact(d), Bound::Exact(t)) => Some(t >= d),
                _ => None,
            },
            Purity::To(b) => b.admits(actual.pure_to()),
        }?;
        Some(d_ok && purity_ok)
    }

    pub(crate) fn check(&self) -> Result<()> {
        match self.verified() {
            Some(false) => Err(Error::Verification(format!(
                "{}: predicted {} but recomputed {}",
                self.rule,
                self.predicted.describe(),
                self.actual.as_ref().map(|a| a.describe()).unwrap_or_default()
            ))),
            _ => Ok(()),
        }
    }

    /// One-line summary: rule, inputs, prediction and recomputation.
    pub fn report(&self) -> String {
        let inputs: Vec<String> = self.inputs.iter().map(|t| t.to_string()).collect();
        let mut s = format!("{} {} -> predicted {}", self.rule, inputs.join(" + "), self.predicted.describe());
        if let Some(a) = &self.actual {
            s.push_str(&format!(", recomputed {}", a.describe()));
            s.push_str(match self.verified() {
                Some(true) => " [verified]",
                Some(false) => " [MISMATCH]",
                None => " [distance not recomputed]",
            });
        }
        for t in &self.implied {
            s.push_str(&format!("; implies {}", t.describe()));
        }
        s
    }
}

/// A constructed code together with the application that produced it.
#[derive(Clone, Debug)]
pub struct Derived {
    pub code: SubsystemCode,
    pub application: RuleApplication,
}
