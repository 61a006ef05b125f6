//! Complex zeta, gamma and completed xi evaluation, with tools for locating
//! zeros on the critical line and probing the rest of the critical strip.
//!
//! All evaluators are pure functions of their arguments. Grid operations
//! take an [`Exec`] and run in parallel when the `parallel` feature is on;
//! their results do not depend on the thread count.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod complex;
pub mod elem;
pub mod error;
pub mod exec;
pub mod gamma;
pub mod report;
pub mod rootscan;
pub mod verify;
pub mod xi;
pub mod zeta;

pub use complex::Complex;
pub use error::{Error, Result};
pub use exec::Exec;
pub use gamma::EvalResult;
