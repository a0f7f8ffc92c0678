//! Reorientation-set enumeration and the cyclic-reorientation filter.

use crate::{CircuitSet, LabelSet};

/// One representative per complementary pair `{A, E \ A}` of subsets of
/// `{1..n}`: reorienting on the complement negates every circuit, which
/// names the same matroid.
///
/// All `|A| < n/2` are taken; for even `n` the size-`n/2` subsets containing
/// element 1 complete the picture. For n = 9 this yields the 256 sets of
/// size at most 4. Ordered by size, then lexicographically, so the empty
/// set (the identity) always comes first.
pub fn enumerate_reorientation_sets(n: u8) -> Vec<LabelSet> {
    let mut sets = Vec::new();
    for size in 0..=(n / 2) {
        for subset in crate::combin::Subsets::new(n, size) {
            if 2 * size == n && subset.first() != Some(&1) {
                continue;
            }
            sets.push(LabelSet::from_labels(&subset, n).expect("subset iterator yields valid labels"));
        }
    }
    sets
}

/// True when reorienting on `set` makes the matroid cyclic: some circuit
/// has `set ∩ underlying` equal to one full side, which empties that side
/// after the swap. The converse also holds — an empty side after
/// reorientation forces exactly this intersection pattern.
pub fn is_cyclic_reorientation(circuits: &CircuitSet, set: LabelSet) -> bool {
    circuits.iter().any(|c| {
        let hit = set.intersection(c.underlying());
        hit == c.positive() || hit == c.negative()
    })
}

/// Filters the candidates that produce cyclic reorientations, computed once
/// per orientation class before any linkage work.
pub fn cyclic_reorientation_sets(circuits: &CircuitSet, candidates: &[LabelSet]) -> Vec<LabelSet> {
    candidates
        .iter()
        .copied()
        .filter(|&a| is_cyclic_reorientation(circuits, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Chirotope;

    #[test]
    fn representative_counts() {
        assert_eq!(enumerate_reorientation_sets(9).len(), 256);
        assert_eq!(enumerate_reorientation_sets(5).len(), 16);
        assert_eq!(enumerate_reorientation_sets(1).len(), 1);
        assert_eq!(enumerate_reorientation_sets(1)[0], LabelSet::EMPTY);
        // Even ground sets split the middle layer via element 1.
        assert_eq!(enumerate_reorientation_sets(6).len(), 32);
        for n in 1..=12u8 {
            assert_eq!(enumerate_reorientation_sets(n).len(), 1usize << (n - 1));
        }
    }

    #[test]
    fn identity_comes_first() {
        let sets = enumerate_reorientation_sets(9);
        assert_eq!(sets[0], LabelSet::EMPTY);
        assert!(sets.iter().all(|a| a.len() <= 4));
    }

    #[test]
    fn tetra_interior_filter() {
        // The single circuit is ({5}, {1,2,3,4}). A qualifying candidate
        // must intersect {1..5} in exactly {5} or {1,2,3,4}; candidates
        // have at most 2 elements, so only A = {5} qualifies.
        let chirotope = Chirotope::parse("++-+-", 5, 4).unwrap();
        let circuits = CircuitSet::from_chirotope(&chirotope);
        let candidates = enumerate_reorientation_sets(5);
        let cyclic = cyclic_reorientation_sets(&circuits, &candidates);
        assert_eq!(cyclic, vec![LabelSet::from_labels(&[5], 5).unwrap()]);
    }

    #[test]
    fn complement_reorientation_negates_every_representative() {
        // Reorienting on A and then on E \ A flips every element once, so
        // each stored representative comes back negated — the same matroid,
        // since the circuit collection is negation-closed.
        let chirotope = Chirotope::parse("++-+-", 5, 4).unwrap();
        let circuits = CircuitSet::from_chirotope(&chirotope);
        let a = LabelSet::from_labels(&[2, 4], 5).unwrap();
        let complement = LabelSet::full(5).difference(a);
        let twice = circuits.reorient(a).reorient(complement);
        for (original, flipped) in circuits.iter().zip(twice.iter()) {
            assert_eq!(*flipped, original.opposite());
        }
    }

    #[test]
    fn identity_never_cyclic_on_acyclic_input() {
        let chirotope = Chirotope::parse(&"+".repeat(126), 9, 4).unwrap();
        let circuits = CircuitSet::from_chirotope(&chirotope);
        assert!(circuits.is_acyclic());
        assert!(!is_cyclic_reorientation(&circuits, LabelSet::EMPTY));
    }

    #[test]
    fn filter_matches_actual_acyclicity() {
        // Soundness and converse, exhaustively on two small matroids.
        for text in ["++-+-", "+-+-+"] {
            let chirotope = Chirotope::parse(text, 5, 4).unwrap();
            let circuits = CircuitSet::from_chirotope(&chirotope);
            for a in enumerate_reorientation_sets(5) {
                let flagged = is_cyclic_reorientation(&circuits, a);
                assert_eq!(flagged, !circuits.reorient(a).is_acyclic());
            }
        }
    }
}
