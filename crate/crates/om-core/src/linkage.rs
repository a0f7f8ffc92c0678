//! Linked-triangle detection from (3-2) circuits and the 3-link search.
//!
//! Two disjoint triangles are linked when exactly one edge of each pierces
//! the other: among the six circuits mixing one triangle with an edge of the
//! other, exactly one per direction splits triangle-against-edge. All tests
//! here read circuits up to negation, so the per-subset representative
//! choice never matters.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::combin::Subsets;
use crate::signed_set::Circuit;
use crate::{CircuitSet, Error, LabelSet, SignedSet};

/// Three distinct vertex labels, kept sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle([u8; 3]);

impl Triangle {
    pub fn new(a: u8, b: u8, c: u8) -> Result<Triangle, Error> {
        let set = LabelSet::from_labels(&[a, b, c], crate::labels::MAX_GROUND_SET)?;
        let v = set.to_vec();
        Ok(Triangle([v[0], v[1], v[2]]))
    }

    pub fn vertices(self) -> [u8; 3] {
        self.0
    }

    pub fn mask(self) -> LabelSet {
        LabelSet::from_bits(
            (1 << (self.0[0] - 1)) | (1 << (self.0[1] - 1)) | (1 << (self.0[2] - 1)),
        )
    }

    /// The three edges as 2-element label sets.
    pub fn edges(self) -> [LabelSet; 3] {
        let [a, b, c] = self.0;
        [
            LabelSet::single(a).union(LabelSet::single(b)),
            LabelSet::single(a).union(LabelSet::single(c)),
            LabelSet::single(b).union(LabelSet::single(c)),
        ]
    }

    pub fn is_disjoint(self, other: Triangle) -> bool {
        self.mask().is_disjoint(other.mask())
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangle({self})")
    }
}

impl FromStr for Triangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Triangle, Error> {
        let set: LabelSet = s.parse()?;
        let v = set.to_vec();
        if v.len() != 3 {
            return Err(Error::WrongCardinality { expected: 3, actual: v.len() });
        }
        Ok(Triangle([v[0], v[1], v[2]]))
    }
}

/// Whether the circuit on `triangle ∪ edge` splits exactly
/// triangle-against-edge, read up to negation.
fn edge_pierces(circuits: &CircuitSet, triangle: LabelSet, edge: LabelSet) -> bool {
    let circuit = circuits
        .circuit_on(triangle.union(edge))
        .expect("triangle and edge labels stay within the ground set");
    circuit.positive() == triangle || circuit.negative() == triangle
}

/// Every edge `{d,e}` disjoint from `t` whose circuit with `t` has the
/// (3-2) split `t | {d,e}` — the edges that pierce the triangle.
pub fn piercing_edges(circuits: &CircuitSet, t: Triangle) -> Vec<LabelSet> {
    let n = circuits.n();
    let t_mask = t.mask();
    assert!(
        t_mask.is_subset_of(LabelSet::full(n)),
        "triangle {t} outside ground set 1..={n}"
    );
    let rest: Vec<u8> = LabelSet::full(n).difference(t_mask).to_vec();
    let mut edges = Vec::new();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let edge = LabelSet::single(rest[i]).union(LabelSet::single(rest[j]));
            if edge_pierces(circuits, t_mask, edge) {
                edges.push(edge);
            }
        }
    }
    edges
}

/// Definition of linked triangles on circuit data: exactly one edge of each
/// triangle pierces the other. When the two counts disagree (possible only
/// off the realizable locus), the pair is not linked — both sides must hit
/// exactly one.
pub fn triangles_linked(circuits: &CircuitSet, t: Triangle, t2: Triangle) -> bool {
    assert!(t.is_disjoint(t2), "triangles {t} and {t2} share a vertex");
    let hits_on_t = t2.edges().iter().filter(|&&e| edge_pierces(circuits, t.mask(), e)).count();
    if hits_on_t != 1 {
        return false;
    }
    let hits_on_t2 = t.edges().iter().filter(|&&e| edge_pierces(circuits, t2.mask(), e)).count();
    hits_on_t2 == 1
}

/// Symmetric linkage adjacency over all triangles of the ground set.
pub struct LinkedTriangleGraph {
    triangles: Vec<Triangle>,
    adjacency: Vec<Vec<u16>>,
}

impl LinkedTriangleGraph {
    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn index_of(&self, t: Triangle) -> Option<usize> {
        self.triangles.binary_search(&t).ok()
    }

    pub fn neighbors(&self, index: usize) -> &[u16] {
        &self.adjacency[index]
    }

    pub fn are_linked(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&(b as u16)).is_ok()
    }

    /// Number of unordered linked pairs.
    pub fn linked_pair_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Tests every disjoint triangle pair of the ground set (n ≥ 6).
pub fn linked_triangle_graph(circuits: &CircuitSet) -> LinkedTriangleGraph {
    let n = circuits.n();
    assert!(n >= 6, "linkage needs at least six elements, got {n}");
    let triangles: Vec<Triangle> = Subsets::new(n, 3)
        .map(|s| Triangle([s[0], s[1], s[2]]))
        .collect();
    let mut adjacency = vec![Vec::new(); triangles.len()];
    for i in 0..triangles.len() {
        for j in i + 1..triangles.len() {
            if triangles[i].is_disjoint(triangles[j])
                && triangles_linked(circuits, triangles[i], triangles[j])
            {
                adjacency[i].push(j as u16);
                adjacency[j].push(i as u16);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    LinkedTriangleGraph { triangles, adjacency }
}

/// Three pairwise-disjoint triangles with the middle one linked to both
/// companions, plus the four witness circuits. Witnesses are normalized
/// with the pierced triangle as the positive part; the matroid contains
/// each up to sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleLinkCertificate {
    pub middle: Triangle,
    pub left: Triangle,
    pub right: Triangle,
    /// Circuit `(middle | edge of left)`: the edge of `left` piercing `middle`.
    pub witness_middle_left: Circuit,
    /// Circuit `(left | edge of middle)`: the edge of `middle` piercing `left`.
    pub witness_left_middle: Circuit,
    /// Circuit `(middle | edge of right)`.
    pub witness_middle_right: Circuit,
    /// Circuit `(right | edge of middle)`.
    pub witness_right_middle: Circuit,
}

impl TripleLinkCertificate {
    /// Re-checks the certificate against a circuit set: disjointness, both
    /// linkages, and each witness being a stored circuit up to sign with
    /// the triangle-against-edge split.
    pub fn verify(&self, circuits: &CircuitSet) -> bool {
        let disjoint = self.middle.is_disjoint(self.left)
            && self.middle.is_disjoint(self.right)
            && self.left.is_disjoint(self.right);
        if !disjoint {
            return false;
        }
        if !triangles_linked(circuits, self.middle, self.left)
            || !triangles_linked(circuits, self.middle, self.right)
        {
            return false;
        }
        let witness_ok = |witness: &Circuit, triangle: Triangle| {
            witness.positive() == triangle.mask()
                && witness.partition_shape() == (3, 2)
                && circuits
                    .circuit_on(witness.underlying())
                    .is_some_and(|c| *c == *witness || *c == witness.opposite())
        };
        witness_ok(&self.witness_middle_left, self.middle)
            && witness_ok(&self.witness_left_middle, self.left)
            && witness_ok(&self.witness_middle_right, self.middle)
            && witness_ok(&self.witness_right_middle, self.right)
    }
}

/// Precomputed nine-element lookup tables shared by every triple-link
/// search: 84 triangles, 36 edges, and the 280 unordered partitions of
/// `{1..9}` into three triangles, all in lexicographic order.
struct NineTables {
    triangles: Vec<Triangle>,
    triangle_index: [u16; 512],
    edge_sets: Vec<LabelSet>,
    edge_index: [u8; 512],
    /// Per triangle, a 36-bit mask with its three edges set.
    triangle_edge_bits: Vec<u64>,
    partitions: Vec<[u16; 3]>,
}

fn nine_tables() -> &'static NineTables {
    static TABLES: OnceLock<NineTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let triangles: Vec<Triangle> = Subsets::new(9, 3)
            .map(|s| Triangle([s[0], s[1], s[2]]))
            .collect();
        let mut triangle_index = [u16::MAX; 512];
        for (i, t) in triangles.iter().enumerate() {
            triangle_index[t.mask().bits() as usize] = i as u16;
        }

        let edge_sets: Vec<LabelSet> = Subsets::new(9, 2)
            .map(|s| LabelSet::single(s[0]).union(LabelSet::single(s[1])))
            .collect();
        let mut edge_index = [u8::MAX; 512];
        for (i, e) in edge_sets.iter().enumerate() {
            edge_index[e.bits() as usize] = i as u8;
        }

        let triangle_edge_bits = triangles
            .iter()
            .map(|t| {
                t.edges()
                    .iter()
                    .fold(0u64, |bits, e| bits | 1 << edge_index[e.bits() as usize])
            })
            .collect();

        // Partitions of {1..9} into three triples: fix 1 in the first
        // triple, the smallest leftover in the second. 28 * 10 = 280.
        let mut partitions = Vec::with_capacity(280);
        let all = LabelSet::full(9);
        for first_pair in Subsets::new(9, 2) {
            if first_pair[0] == 1 {
                continue;
            }
            let first = LabelSet::single(1)
                .union(LabelSet::single(first_pair[0]))
                .union(LabelSet::single(first_pair[1]));
            let rest = all.difference(first).to_vec();
            let anchor = rest[0];
            for i in 1..rest.len() {
                for j in i + 1..rest.len() {
                    let second = LabelSet::single(anchor)
                        .union(LabelSet::single(rest[i]))
                        .union(LabelSet::single(rest[j]));
                    let third = all.difference(first).difference(second);
                    partitions.push([
                        triangle_index[first.bits() as usize],
                        triangle_index[second.bits() as usize],
                        triangle_index[third.bits() as usize],
                    ]);
                }
            }
        }
        debug_assert_eq!(partitions.len(), 280);

        NineTables { triangles, triangle_index, edge_sets, edge_index, triangle_edge_bits, partitions }
    })
}

/// The 84 triangles of a nine-element ground set in lexicographic order.
pub fn nine_point_triangles() -> &'static [Triangle] {
    &nine_tables().triangles
}

/// Number of unordered partitions of nine labels into three triangles.
pub fn triple_partition_count() -> usize {
    nine_tables().partitions.len()
}

/// Searches the 280 triple partitions for a middle triangle linked with both
/// companions. Partitions are visited in lexicographic order and within each
/// the three middle choices in order, so the first certificate is
/// deterministic. Expects an acyclic circuit set on nine elements.
pub fn find_triple_link(circuits: &CircuitSet) -> Option<TripleLinkCertificate> {
    assert_eq!(circuits.n(), 9, "triple-link search is defined on nine elements");
    assert_eq!(circuits.r(), 4, "triple-link search needs rank 4");
    let tables = nine_tables();

    // One pass over the 126 circuits: each (3-2) split contributes its
    // 2-side as a piercing edge of its 3-side.
    let mut pierce = [0u64; 84];
    for circuit in circuits.iter() {
        let (tri_side, edge_side) = if circuit.positive().len() == 3 && circuit.negative().len() == 2
        {
            (circuit.positive(), circuit.negative())
        } else if circuit.negative().len() == 3 && circuit.positive().len() == 2 {
            (circuit.negative(), circuit.positive())
        } else {
            continue;
        };
        let tri = tables.triangle_index[tri_side.bits() as usize] as usize;
        let edge = tables.edge_index[edge_side.bits() as usize];
        pierce[tri] |= 1 << edge;
    }

    let linked = |a: usize, b: usize| {
        (pierce[a] & tables.triangle_edge_bits[b]).count_ones() == 1
            && (pierce[b] & tables.triangle_edge_bits[a]).count_ones() == 1
    };

    for partition in &tables.partitions {
        let [t1, t2, t3] = partition.map(usize::from);
        for (middle, left, right) in [(t1, t2, t3), (t2, t1, t3), (t3, t1, t2)] {
            if linked(middle, left) && linked(middle, right) {
                let witness = |pierced: usize, other: usize| {
                    let bit = pierce[pierced] & tables.triangle_edge_bits[other];
                    let edge = tables.edge_sets[bit.trailing_zeros() as usize];
                    SignedSet::new_unchecked(tables.triangles[pierced].mask(), edge)
                };
                return Some(TripleLinkCertificate {
                    middle: tables.triangles[middle],
                    left: tables.triangles[left],
                    right: tables.triangles[right],
                    witness_middle_left: witness(middle, left),
                    witness_left_middle: witness(left, middle),
                    witness_middle_right: witness(middle, right),
                    witness_right_middle: witness(right, middle),
                });
            }
        }
    }
    None
}
