//! Combinatorial 2-complexes and small cancellation theory: piece
//! enumeration, C(p)/T(q) checks, Helly-type lemmas, systolic and quadric
//! duals, and detection of flats, flat planes and quasi-flat planes on
//! finite patches of periodic complexes.

pub mod cancellation;
pub mod cli;
pub mod complex;
pub mod duals;
pub mod error;
pub mod flats;
pub mod generators;
pub mod graph;
pub mod io;
pub mod report;

pub use complex::{link_of, validate_complex, BoundaryWord, Letter, LinkGraph, Subcomplex, TwoComplex};
pub use error::{Error, Result};
pub use report::{CheckReport, Verdict};
