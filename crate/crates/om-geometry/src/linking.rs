//! Geometric triangle linking: exactly one edge of each triangle pierces
//! the other's convex hull, and the piercing parity equals the linking
//! number's parity.

use crate::point::Point3;
use crate::predicates::segment_pierces_triangle;
use crate::GeomError;

fn edges(t: [Point3; 3]) -> [[Point3; 2]; 3] {
    [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]
}

fn piercing_count(of: [Point3; 3], through: [Point3; 3]) -> Result<usize, GeomError> {
    let mut count = 0;
    for edge in edges(of) {
        if segment_pierces_triangle(edge, through)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether the two point triangles form a nontrivial link.
///
/// Both piercing counts are taken and must each be exactly one. Adjacent
/// edges cross a triangle's plane with opposite signs, so the two counts
/// always agree on being one or not, and a count of three would force the
/// two planes to coincide — both impossibilities are asserted.
pub fn geometric_linked(t: [Point3; 3], t2: [Point3; 3]) -> Result<bool, GeomError> {
    let count_t = piercing_count(t, t2)?;
    let count_t2 = piercing_count(t2, t)?;
    assert!(count_t <= 2 && count_t2 <= 2, "three edges of a triangle cannot pierce a plane");
    assert_eq!(
        count_t == 1,
        count_t2 == 1,
        "piercing counts disagree: {count_t} vs {count_t2}"
    );
    Ok(count_t == 1 && count_t2 == 1)
}

/// Parity of the `t`-edges-through-`t2` piercing count: 1 exactly when the
/// triangles are linked.
pub fn linking_parity(t: [Point3; 3], t2: [Point3; 3]) -> Result<u8, GeomError> {
    Ok((piercing_count(t, t2)? % 2) as u8)
}
