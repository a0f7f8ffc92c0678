//! Uniform oriented matroids for straight-edge spatial graph analysis.
//!
//! A rank-4 uniform oriented matroid on labeled points captures exactly
//! which edges pierce which triangles in a straight-edge embedding, which
//! in turn determines every linked triangle pair. This crate provides the
//! combinatorial half of that pipeline:
//!
//! * [`Chirotope`] — basis signs parsed from '+'/'-' strings,
//! * [`CircuitSet`] — signed circuits derived from a chirotope, one
//!   representative per `(r+1)`-subset,
//! * [`validate_circuit_axioms`] — the symmetry, incomparability, and weak
//!   elimination axioms as a checkable report,
//! * reorientation enumeration with the cyclic filter, and
//! * [`find_triple_link`] — the search for a middle triangle linked with
//!   two disjoint companions.
//!
//! Everything is immutable after construction and safe to share across
//! worker threads.

mod axioms;
mod chirotope;
mod circuits;
pub mod combin;
mod error;
mod labels;
mod linkage;
mod reorient;
mod signed_set;

pub use axioms::{validate_circuit_axioms, ValidationReport, Violation};
pub use chirotope::Chirotope;
pub use circuits::CircuitSet;
pub use combin::basis_rank;
pub use error::Error;
pub use labels::{LabelSet, MAX_GROUND_SET};
pub use linkage::{
    find_triple_link, linked_triangle_graph, nine_point_triangles, piercing_edges,
    triangles_linked, triple_partition_count, LinkedTriangleGraph, Triangle,
    TripleLinkCertificate,
};
pub use reorient::{
    cyclic_reorientation_sets, enumerate_reorientation_sets, is_cyclic_reorientation,
};
pub use signed_set::{Circuit, SignedSet};
