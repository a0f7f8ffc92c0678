//! Exact sign predicates on integer points. No floating point anywhere.

use om_core::{Chirotope, LabelSet};

use crate::point::{Point3, PointConfiguration};
use crate::GeomError;

fn det3(u: [i128; 3], v: [i128; 3], w: [i128; 3]) -> i128 {
    u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
}

fn diff(a: Point3, b: Point3) -> [i128; 3] {
    [a[0] as i128 - b[0] as i128, a[1] as i128 - b[1] as i128, a[2] as i128 - b[2] as i128]
}

/// Exact orientation determinant of four points, taken in ascending label
/// order: the determinant of the column matrix
/// `[a4-a1 | a4-a2 | a4-a3]`. Zero signals a coplanar quadruple.
pub fn orientation_det(a1: Point3, a2: Point3, a3: Point3, a4: Point3) -> i128 {
    det3(diff(a4, a1), diff(a4, a2), diff(a4, a3))
}

/// Basis signs of a point configuration: for each 4-subset in ascending
/// order the sign of its orientation determinant, canonicalized into a
/// chirotope. A zero determinant reports the offending quadruple.
pub fn chirotope_from_points(config: &PointConfiguration) -> Result<Chirotope, GeomError> {
    let n = config.n();
    let mut signs = Vec::with_capacity(om_core::combin::binomial(n as u64, 4) as usize);
    for subset in om_core::combin::Subsets::new(n, 4) {
        let [a, b, c, d] = [subset[0], subset[1], subset[2], subset[3]];
        let det = orientation_det(config.point(a), config.point(b), config.point(c), config.point(d));
        if det == 0 {
            return Err(GeomError::CoplanarQuadruple { labels: [a, b, c, d] });
        }
        signs.push(if det > 0 { 1 } else { -1 });
    }
    Ok(Chirotope::from_signs(n, 4, &signs)?)
}

/// Whether the open segment `d..e` crosses the open interior of triangle
/// `a, b, c`.
///
/// Exact test: `d` and `e` strictly straddle the triangle's plane, and the
/// three tetrahedron orientations of the segment against the triangle's
/// edges agree in sign. Any zero determinant means four coplanar points,
/// which general position rules out; it is reported, never absorbed.
pub fn segment_pierces_triangle(edge: [Point3; 2], tri: [Point3; 3]) -> Result<bool, GeomError> {
    let [d, e] = edge;
    let [a, b, c] = tri;

    let side_d = orientation_det(a, b, c, d);
    let side_e = orientation_det(a, b, c, e);
    if side_d == 0 || side_e == 0 {
        return Err(GeomError::DegeneratePredicate);
    }
    if (side_d > 0) == (side_e > 0) {
        return Ok(false);
    }

    let wedge_ab = orientation_det(d, e, a, b);
    let wedge_bc = orientation_det(d, e, b, c);
    let wedge_ca = orientation_det(d, e, c, a);
    if wedge_ab == 0 || wedge_bc == 0 || wedge_ca == 0 {
        return Err(GeomError::DegeneratePredicate);
    }
    Ok((wedge_ab > 0) == (wedge_bc > 0) && (wedge_bc > 0) == (wedge_ca > 0))
}

/// The edges of the config disjoint from triangle `t` that pierce it,
/// computed geometrically. Companion to the circuit-based query.
pub fn geometric_piercing_edges(
    config: &PointConfiguration,
    t: om_core::Triangle,
) -> Result<Vec<LabelSet>, GeomError> {
    let tri = config.triangle_points(t);
    let rest: Vec<u8> = LabelSet::full(config.n()).difference(t.mask()).to_vec();
    let mut edges = Vec::new();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let edge = [config.point(rest[i]), config.point(rest[j])];
            if segment_pierces_triangle(edge, tri)? {
                edges.push(LabelSet::single(rest[i]).union(LabelSet::single(rest[j])));
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TETRA_PLUS_INTERIOR: [Point3; 5] =
        [[0, 0, 0], [6, 0, 0], [0, 6, 0], [0, 0, 6], [1, 1, 1]];

    #[test]
    fn unit_tetrahedron_determinant() {
        assert_eq!(orientation_det([0, 0, 0], [6, 0, 0], [0, 6, 0], [0, 0, 6]), 216);
    }

    #[test]
    fn coplanar_points_give_zero() {
        assert_eq!(orientation_det([0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]), 0);
    }

    #[test]
    fn swapping_arguments_negates() {
        let d1 = orientation_det([0, 0, 0], [6, 0, 0], [0, 6, 0], [0, 0, 6]);
        let d2 = orientation_det([6, 0, 0], [0, 0, 0], [0, 6, 0], [0, 0, 6]);
        assert_eq!(d1, -d2);
    }

    #[test]
    fn tetra_plus_interior_chirotope() {
        let config = PointConfiguration::new(TETRA_PLUS_INTERIOR.to_vec()).unwrap();
        let chirotope = chirotope_from_points(&config).unwrap();
        assert_eq!(chirotope.to_string(), "++-+-");
    }

    #[test]
    fn translation_leaves_the_chirotope_alone() {
        let config = PointConfiguration::new(TETRA_PLUS_INTERIOR.to_vec()).unwrap();
        let shifted = PointConfiguration::new(
            TETRA_PLUS_INTERIOR.iter().map(|p| [p[0] + 17, p[1] - 9, p[2] + 4]).collect(),
        )
        .unwrap();
        assert_eq!(
            chirotope_from_points(&config).unwrap(),
            chirotope_from_points(&shifted).unwrap()
        );
    }

    #[test]
    fn degenerate_configuration_names_the_quad() {
        let config = PointConfiguration::new(vec![
            [0, 0, 0],
            [6, 0, 0],
            [0, 6, 0],
            [0, 0, 6],
            [2, 2, 2],
        ])
        .unwrap();
        let err = chirotope_from_points(&config).unwrap_err();
        assert_eq!(err, GeomError::CoplanarQuadruple { labels: [2, 3, 4, 5] });
    }

    #[test]
    fn hopf_segment_crosses_the_triangle() {
        let tri = [[1, 0, 0], [-1, 1, 0], [-1, -1, 0]];
        let crossing = [[0, 0, 2], [0, 0, -2]];
        assert!(segment_pierces_triangle(crossing, tri).unwrap());
        let outside = [[3, 1, 1], [0, 0, 2]];
        assert!(!segment_pierces_triangle(outside, tri).unwrap());
    }

    #[test]
    fn piercing_ignores_triangle_vertex_order() {
        let tri = [[1, 0, 0], [-1, 1, 0], [-1, -1, 0]];
        let edge = [[0, 0, 2], [0, 0, -2]];
        let base = segment_pierces_triangle(edge, tri).unwrap();
        for perm in [[0, 1, 2], [1, 0, 2], [2, 0, 1], [2, 1, 0], [1, 2, 0], [0, 2, 1]] {
            let shuffled = [tri[perm[0]], tri[perm[1]], tri[perm[2]]];
            assert_eq!(segment_pierces_triangle(edge, shuffled).unwrap(), base);
        }
    }

    #[test]
    fn boundary_incidence_is_a_degeneracy() {
        // Segment endpoint on the triangle plane.
        let tri = [[1, 0, 0], [-1, 1, 0], [-1, -1, 0]];
        let touching = [[0, 0, 0], [0, 0, 2]];
        assert!(segment_pierces_triangle(touching, tri).is_err());
    }
}
