//! Test support for the braco crates.
//!
//! * [`braid`] and [`linalg`] compute classical link invariants from closed
//!   braids with plain `i64`/`f64` arithmetic. They do not use `braco-core`
//!   and serve as reference values for it.
//! * [`strategies`] generates random library inputs for property tests.
//! * [`properties`] holds the property checks shared by the property suite and
//!   the acceptance run.

#![allow(clippy::needless_range_loop)]

pub mod braid;
pub mod linalg;
pub mod properties;
pub mod strategies;
