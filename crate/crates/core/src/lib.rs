//! Exact combinatorics of edge-cut spectra and all-terminal reliability for
//! small multigraphs.
//!
//! The crate provides:
//! - [`graph`]: multigraphs, named constructions (Wagner, cube, Moebius
//!   family), connectivity and edge-connectivity, subdivision;
//! - [`iso`]: exact isomorphism testing and automorphism groups;
//! - [`chains`]: chain decomposition, distillation, fairness predicates;
//! - [`spectrum`]: brute-force cut spectra, matrix-tree spanning-tree
//!   counts, cut classification, induced-cut counts, exact reliability;
//! - [`closedform`]: the closed-form counterparts (spectrum formula,
//!   per-type 4-cut counts, the five-term mu5 difference);
//! - [`umrg`]: extremal constructions G_n and H_n, the lexicographic
//!   spectrum filter, censuses, and the verification drivers.
//!
//! Everything is exact integer or rational arithmetic; no floats are used
//! in any count.

pub mod chains;
pub mod closedform;
pub mod dsu;
pub mod error;
pub mod graph;
pub mod iso;
pub mod spectrum;
pub mod umrg;

pub use error::{Error, Result};
pub use graph::{Multigraph, NamedGraphSpec};

// re-exported so downstream callers share the exact-arithmetic types
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
