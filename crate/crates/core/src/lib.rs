//! Exact combinatorics of Tamari intervals.
//!
//! The crate is organised around a few small value types:
//!
//! * [`BinaryTree`]: planar binary trees, labelled implicitly by in-order
//!   position (the binary-search-tree labelling);
//! * [`IntervalPoset`]: a poset on `1..=n` encoding a Tamari interval
//!   `[lower, upper]` through the decreasing forest of `lower` and the
//!   increasing forest of `upper`;
//! * [`Polynomial`]: sparse polynomials in `x`, `y`, `b` with big-integer
//!   coefficients;
//! * [`BallotPath`] and [`MAryTree`]: the m-Tamari generalisation.
//!
//! Counts are available through independent routes, so brute-force lattice
//! search can be checked against composition of interval-posets and against
//! the generating series. See the `examples/` directory for one runnable
//! program per capability.

pub mod cli;
pub mod compose;
mod error;
pub mod interval_poset;
pub mod mtamari;
pub mod order;
pub mod poly;
pub mod tree;

pub use compose::{compose, decompose, enumerate_interval_posets, initial_interval_sum};
pub use error::{Error, Result};
pub use interval_poset::{IntervalPoset, Violation};
pub use mtamari::{BallotPath, MAryTree};
pub use order::Permutation;
pub use poly::Polynomial;
pub use tree::{BinaryTree, Step};
