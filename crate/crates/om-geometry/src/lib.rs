//! Exact-arithmetic geometric ground truth for straight-edge embeddings.
//!
//! Everything here is decided by integer or rational arithmetic: orientation
//! determinants over `i128`, Radon partitions by rational elimination, and
//! segment-through-triangle predicates composed from determinant signs. The
//! circuit data these produce cross-checks the chirotope-derived pipeline in
//! `om-core`, and [`random_general_position`] supplies seeded test
//! configurations.

mod error;
mod linking;
mod point;
mod predicates;
mod radon;
mod random;

pub use error::GeomError;
pub use linking::{geometric_linked, linking_parity};
pub use point::{Point3, PointConfiguration, COORD_BOUND};
pub use predicates::{
    chirotope_from_points, geometric_piercing_edges, orientation_det, segment_pierces_triangle,
};
pub use radon::{radon_partition, radon_partition_of, AffineCircuit};
pub use random::random_general_position;
