use om_core::{LabelSet, Triangle, MAX_GROUND_SET};

use crate::predicates::orientation_det;
use crate::GeomError;

/// Integer coordinates in 3-space. Exactness of every predicate rests on
/// integer inputs.
pub type Point3 = [i64; 3];

/// Coordinate magnitude bound that keeps all determinant intermediates
/// comfortably inside 128-bit arithmetic.
pub const COORD_BOUND: i64 = 1 << 30;

/// Labeled integer points; label `i` is the `i`-th point, counted from 1.
///
/// The geometric predicates require general position (no four points
/// coplanar). Construction does not check that — the operations that need
/// it report the offending quadruple instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    points: Vec<Point3>,
}

impl PointConfiguration {
    pub fn new(points: Vec<Point3>) -> Result<PointConfiguration, GeomError> {
        if points.is_empty() || points.len() > MAX_GROUND_SET as usize {
            return Err(GeomError::BadPointCount { actual: points.len(), max: MAX_GROUND_SET });
        }
        for (i, p) in points.iter().enumerate() {
            for &value in p {
                if value.abs() > COORD_BOUND {
                    return Err(GeomError::CoordinateOverflow {
                        label: i as u8 + 1,
                        value,
                        bound: COORD_BOUND,
                    });
                }
            }
        }
        Ok(PointConfiguration { points })
    }

    /// Parses the points file format: one point per line as three
    /// whitespace-separated integers; blank lines and lines starting with
    /// '#' are ignored; the line's position among the data lines is the
    /// vertex label.
    pub fn parse(text: &str) -> Result<PointConfiguration, GeomError> {
        let mut points = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(GeomError::ParsePoints {
                    line,
                    reason: format!("expected 3 coordinates, got {}", fields.len()),
                });
            }
            let mut point = [0i64; 3];
            for (i, field) in fields.iter().enumerate() {
                point[i] = field.parse().map_err(|_| GeomError::ParsePoints {
                    line,
                    reason: format!("cannot parse {field:?} as an integer"),
                })?;
            }
            points.push(point);
        }
        PointConfiguration::new(points)
    }

    pub fn n(&self) -> u8 {
        self.points.len() as u8
    }

    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    /// Point with 1-based label.
    pub fn point(&self, label: u8) -> Point3 {
        self.points[label as usize - 1]
    }

    pub fn labeled(&self, labels: &LabelSet) -> Vec<(u8, Point3)> {
        labels.iter().map(|l| (l, self.point(l))).collect()
    }

    pub fn triangle_points(&self, t: Triangle) -> [Point3; 3] {
        let [a, b, c] = t.vertices();
        [self.point(a), self.point(b), self.point(c)]
    }

    /// Verifies no four points are coplanar, naming the first offending
    /// quadruple otherwise.
    pub fn check_general_position(&self) -> Result<(), GeomError> {
        let n = self.n();
        for subset in om_core::combin::Subsets::new(n, 4) {
            let [a, b, c, d] = [subset[0], subset[1], subset[2], subset[3]];
            if orientation_det(self.point(a), self.point(b), self.point(c), self.point(d)) == 0 {
                return Err(GeomError::CoplanarQuadruple { labels: [a, b, c, d] });
            }
        }
        Ok(())
    }
}
