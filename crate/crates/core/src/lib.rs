//! Exact minimal periods of symmetric shift registers over GF(2).
//!
//! A symmetric shift register of length `n` with band parameters `k` and `p`
//! maps `a_1 ... a_n` to `a_2 ... a_{n+1}`, where the new bit is the
//! complement of `a_1` exactly when the window weight `a_2 + ... + a_n` lies
//! in `[k, k + p]`, and a copy of `a_1` otherwise.
//!
//! Instead of iterating the register until the start state recurs, this crate
//! reads the period off the run-length vector of a suitable start state:
//! the vector is contracted `p` times ([`contraction::contract`]), the
//! innermost vector yields its cyclic parameters, and the contraction chain
//! is unwound level by level using the arithmetic progressions hidden in the
//! distance vectors ([`progression`]). [`engine::minimal_period`] drives the
//! whole computation for arbitrary inputs; [`simulator`] is the brute-force
//! ground truth it is checked against.
//!
//! All positions in the documentation are 1-indexed (`a_1`, `v_1`, ...);
//! slices are 0-indexed as usual.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod contraction;
pub mod engine;
mod error;
pub mod progression;
pub mod runvec;
pub mod simulator;

pub use bits::BitString;
pub use engine::{minimal_period, PeriodMethod, PeriodReport};
pub use error::{Error, Result};
pub use runvec::RunVector;
pub use simulator::RegisterParams;
