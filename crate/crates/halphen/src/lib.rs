//! Exact-arithmetic genus bounds for projective curves under flag
//! conditions, in the style of Castelnuovo–Halphen theory.
//!
//! A curve in `P^4` of degree `d` satisfies the *flag condition of type
//! `(s, t)`* when it lies on no surface of degree `< s` and on no
//! hypersurface of degree `< t`. For `s ≤ t²−t` and large `d`, the
//! arithmetic genus is bounded by a closed-form quantity `G(d, s, t)`
//! (possibly plus a `4t³` slack, depending on how the parameters split),
//! and on the range `t²−2t+3 ≤ s ≤ t²−t` the maximal genus is pinned down
//! to an explicit `O(1)` band whose sharp case is a complete intersection.
//!
//! This crate computes all of those quantities exactly — arbitrary-precision
//! integers and rationals, no floating point — and mechanically verifies the
//! supporting arithmetic estimates over finite parameter lattices:
//!
//! - [`arith`]: exact integers/rationals, restricted binomials, and every
//!   Euclidean parameter decomposition.
//! - [`bounds`]: the Halphen constant `H`, the piecewise constants `rho`
//!   and `R`, the genus bounds `G(d,s,t)`, `G(d,s,tau)` and the
//!   surface-only bound, the extremal plane-section genus `P(s,t)`, the
//!   `d/2`-coefficients, complete-intersection genus and speciality bounds.
//! - [`hilbert`]: the caractère numérique, the plane-section Hilbert
//!   function (two independent routes, always cross-checked), accumulated
//!   Hilbert functions, and complete-intersection profiles.
//! - [`classify`]: the case dichotomy, degree thresholds, and the
//!   sharp-regime estimate.
//! - [`verify`]: exhaustive lattice campaigns with counterexample capture.
//! - [`report`]: human/CSV/JSON rendering with exact `p/q` serialization.
//!
//! The `examples/` directory is the quickest tour: one runnable example per
//! capability. A thin `halphen` binary exposes the same functionality as
//! `bound`, `hilbert`, `verify` and `table` subcommands.

pub mod arith;
pub mod bounds;
pub mod classify;
mod error;
pub mod hilbert;
pub mod report;
pub mod verify;

pub use arith::{decompose, restricted_binomial, Decomposition, FlagParams, Int, Rat};
pub use error::{Error, Result};
