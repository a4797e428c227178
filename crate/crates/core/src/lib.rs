//! A small laboratory for 2-normed spaces.
//!
//! The crate evaluates 2-norms on `R^m`, classifies finite windows of vector
//! sequences as convergent, Cauchy or quasi-Cauchy, and probes functions for
//! ward, sequential, u- and uniform continuity. Every verdict is a window
//! surrogate for a limit statement and carries numeric witnesses so that a
//! failure can be replayed.
//!
//! Run `cargo run --example <name>` for a tour; see the `examples/`
//! directory of this crate.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod dsl;
mod error;
pub mod func;
pub mod norm;
pub mod probes;
pub mod report;
pub mod run;
pub mod sampling;
pub mod seq;
pub mod theorems;

pub use error::{Error, Result};
pub use func::{FuncFamilySpec, FuncSpec};
pub use norm::{AxiomReport, NormKind, TwoNormSpace, Vector};
pub use probes::{ProbeReport, Status, Witness};
pub use seq::{SeqSpec, SeqVerdict, ToleranceSchedule};
