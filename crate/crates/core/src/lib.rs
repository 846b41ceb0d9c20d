//! Exact genus-zero correlation functions for the Jordan-type moonshine
//! vertex algebras `V_{J_X, r}` (`X` in `A`, `B`, `C`).
//!
//! Four engines compute the same rational function and are checked against
//! each other:
//!
//! * [`corr::corr_recursion`] moves the first annihilation part rightward
//!   using the symbolic-level Lie conformal algebra products;
//! * [`corr::corr_diagram_sum`] sums full Wick contractions;
//! * [`corr::corr_closed_form`] sums over fixed-point-free permutations with
//!   Jordan-algebra traces;
//! * [`corr::corr_direct`] runs the recursion inside the free-field Fock
//!   space of the dual-pair realization at a fixed integer level.

pub mod cli;
pub mod corr;
pub mod error;
pub mod exact;
pub mod fock;
pub mod jordan;
pub mod lca;
pub mod superlinear;

pub use error::{Error, Result};
