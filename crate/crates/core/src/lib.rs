//! Subsystem codes over small finite fields: exact field arithmetic,
//! additive codes and their duals, subsystem parameters derived from a gauge
//! code, propagation rules, and a catalog of explicit codes and families.

pub mod additive_code;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod finite_field;
pub mod format;
pub mod params;
pub mod propagation;
pub mod subsystem_core;

mod linalg;

pub use additive_code::{AdditiveCode, CodeVector, Form, Layout, Linearity};
pub use enumerate::EnumConfig;
pub use error::{Error, Result};
pub use finite_field::{FieldElement, FieldSpec};
pub use params::{Bound, ParamTuple, Purity};
pub use subsystem_core::{DistanceMode, SubsystemCode};
