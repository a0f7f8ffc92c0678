//! Batch scanning of oriented-matroid databases for non-split 3-links,
//! plus single-matroid and point-embedding analysis.
//!
//! The scan pipeline per orientation class: derive the 126 circuits from
//! the chirotope record, filter the 256 reorientation candidates through
//! the cyclic test, reorient and search each survivor for a middle triangle
//! linked with two disjoint companions. A class contributes a failure for
//! any acyclic reorientation without such a certificate — the most
//! important possible output, so failures are recorded and reported, never
//! fatal.

pub mod analyze;
pub mod checkpoint;
pub mod db;
mod error;
pub mod report;
pub mod scan;

pub use error::ScanError;
