//! Radon partitions of five points, solved exactly over the rationals.
//!
//! Five points in general position in 3-space admit a unique (up to scale)
//! affine dependency: coefficients summing to zero in both the vector and
//! scalar equations. Its sign pattern splits the points into the two sides
//! whose convex hulls intersect — a (3-2) or (4-1) partition. This module
//! is the independent route to circuits; the chirotope route never feeds it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use om_core::{Circuit, LabelSet, SignedSet};

use crate::point::{Point3, PointConfiguration};
use crate::GeomError;

/// A circuit together with the rational dependency coefficients behind it.
/// Coefficients are listed in ascending label order, scaled so the smallest
/// label sits on the negative side.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineCircuit {
    pub circuit: Circuit,
    pub coefficients: Vec<(u8, BigRational)>,
}

impl AffineCircuit {
    /// Recomputes both dependency equations; used by tests as a sanity net.
    pub fn dependency_holds(&self, points: &[(u8, Point3)]) -> bool {
        let mut vector_sum = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        let mut scalar_sum = BigRational::zero();
        for (label, alpha) in &self.coefficients {
            let Some((_, p)) = points.iter().find(|(l, _)| l == label) else {
                return false;
            };
            for axis in 0..3 {
                vector_sum[axis] += alpha * BigRational::from(BigInt::from(p[axis]));
            }
            scalar_sum += alpha;
        }
        vector_sum.iter().all(Zero::is_zero) && scalar_sum.is_zero()
    }
}

/// Solves the 4-equation homogeneous system on five labeled points by
/// Gauss-Jordan elimination over rationals and reads the partition off the
/// coefficient signs.
///
/// Degeneracies are errors: a kernel of dimension above one means the five
/// points are affinely degenerate, and a zero coefficient means the other
/// four points are coplanar.
pub fn radon_partition(labeled: &[(u8, Point3)]) -> Result<AffineCircuit, GeomError> {
    if labeled.len() != 5 {
        return Err(om_core::Error::WrongCardinality { expected: 5, actual: labeled.len() }.into());
    }
    let mut entries = labeled.to_vec();
    entries.sort_by_key(|(label, _)| *label);
    let labels: Vec<u8> = entries.iter().map(|(l, _)| *l).collect();
    LabelSet::from_labels(&labels, om_core::MAX_GROUND_SET)?;

    // Rows: x, y, z, homogenizing 1. Columns follow sorted labels.
    let mut m: Vec<Vec<BigRational>> = (0..4)
        .map(|row| {
            entries
                .iter()
                .map(|(_, p)| {
                    if row < 3 {
                        BigRational::from(BigInt::from(p[row]))
                    } else {
                        BigRational::one()
                    }
                })
                .collect()
        })
        .collect();

    // Gauss-Jordan with the first nonzero entry as pivot.
    let mut pivot_cols: Vec<usize> = Vec::with_capacity(4);
    let mut row = 0;
    for col in 0..5 {
        let Some(pivot_row) = (row..4).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        let pivot = m[row][col].clone();
        for entry in &mut m[row] {
            *entry /= &pivot;
        }
        let pivot_row_values = m[row].clone();
        for (other, other_row) in m.iter_mut().enumerate() {
            if other != row && !other_row[col].is_zero() {
                let factor = other_row[col].clone();
                for (entry, pivot_value) in other_row.iter_mut().zip(&pivot_row_values) {
                    *entry -= &factor * pivot_value;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == 4 {
            break;
        }
    }

    if pivot_cols.len() < 4 {
        return Err(GeomError::DegenerateQuintuple {
            labels: [labels[0], labels[1], labels[2], labels[3], labels[4]],
        });
    }

    // One free column: set its coefficient to 1 and read the rest off the
    // reduced rows.
    let free_col = (0..5).find(|c| !pivot_cols.contains(c)).expect("rank 4 leaves one free column");
    let mut alphas = vec![BigRational::zero(); 5];
    alphas[free_col] = BigRational::one();
    for (r, &col) in pivot_cols.iter().enumerate() {
        alphas[col] = -m[r][free_col].clone();
    }

    for (i, alpha) in alphas.iter().enumerate() {
        if alpha.is_zero() {
            let mut quad = [0u8; 4];
            for (q, &l) in labels.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, l)| l).enumerate()
            {
                quad[q] = l;
            }
            return Err(GeomError::CoplanarQuadruple { labels: quad });
        }
    }

    // Representative choice: smallest label on the negative side.
    if alphas[0].is_positive() {
        for alpha in &mut alphas {
            *alpha = -alpha.clone();
        }
    }

    let mut positive = LabelSet::EMPTY;
    let mut negative = LabelSet::EMPTY;
    for (i, alpha) in alphas.iter().enumerate() {
        if alpha.is_positive() {
            positive.insert(labels[i]);
        } else {
            negative.insert(labels[i]);
        }
    }
    let circuit = SignedSet::new(positive, negative).expect("sign classes are disjoint");
    let coefficients = labels.into_iter().zip(alphas).collect();
    Ok(AffineCircuit { circuit, coefficients })
}

/// Radon partition of a 5-subset of a configuration.
pub fn radon_partition_of(
    config: &PointConfiguration,
    subset: LabelSet,
) -> Result<AffineCircuit, GeomError> {
    if subset.len() != 5 {
        return Err(
            om_core::Error::WrongCardinality { expected: 5, actual: subset.len() as usize }.into()
        );
    }
    radon_partition(&config.labeled(&subset))
}
