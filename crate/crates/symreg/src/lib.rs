//! Reports, plots and bulk checks built on `symreg-core`.
//!
//! - [`report`] renders period computations as narrative text or JSON.
//! - [`plot`] draws the modified weight parameters as a table or SVG.
//! - [`sweep`] compares analytic and simulated periods over many inputs.

pub mod plot;
pub mod report;
pub mod sweep;
