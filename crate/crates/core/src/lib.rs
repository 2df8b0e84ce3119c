//! Exact-arithmetic evaluation of Hecke algebra traces at modified
//! Kazhdan-Lusztig basis elements indexed by 3412/4231-avoiding permutations.
//!
//! The crate is organized around the combinatorial model that makes these
//! evaluations computable:
//!
//! - [`perm`], [`partition`], [`qpoly`]: permutations, integer partitions and
//!   integer polynomials in `q` (no floating point anywhere).
//! - [`transition`]: Kostka / inverse-Kostka / row-constant-tableau transition
//!   matrices, Murnaghan-Nakayama characters, and the classical (`q = 1`)
//!   class-function machinery used as an independent oracle.
//! - [`network`]: star networks, zig-zag networks, the bijection between
//!   networks and 3412/4231-avoiding permutations, path matrices, path posets,
//!   restriction, and the `O(F)` polynomial.
//! - [`poset`]: finite strict orders, unit interval order tests, isomorphism.
//! - [`tableau`]: path tableaux, the structural property catalog, the
//!   `inv`/`rinv` statistics, and enumerators for every tableau class that
//!   appears in a trace formula.
//! - [`traces`]: the five trace evaluators (eta, epsilon, chi, psi, phi) with
//!   every formula available, cross-checks, and vanishing predicates.
//! - [`chromatic`]: chromatic quasisymmetric functions of unit interval
//!   orders, computed independently and tied back to the trace evaluations.
//! - [`verify`]: the named verification suites exposed by the CLI.

pub mod chromatic;
pub mod error;
pub mod network;
pub mod partition;
pub mod perm;
pub mod poset;
pub mod qpoly;
pub mod tableau;
pub mod traces;
pub mod transition;
pub mod verify;

pub use error::Error;
pub use partition::{IntPartition, OrderedSetPartition};
pub use perm::Permutation;
pub use poset::Poset;
pub use qpoly::QPoly;
pub use transition::{TraceFamily, TransitionTables};

/// Largest network order the catalog will enumerate by default.
pub const DEFAULT_MAX_ORDER: usize = 9;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
