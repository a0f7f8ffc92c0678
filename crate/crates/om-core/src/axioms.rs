//! Validation of the signed circuit axioms over a candidate collection.

use std::collections::HashMap;
use std::fmt;

use crate::combin::{binomial, Subsets};
use crate::signed_set::Circuit;
use crate::{CircuitSet, LabelSet};

/// Outcome of an axiom check: pass, or the first violation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    violation: Option<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violation.as_ref()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "pass"),
            Some(v) => write!(f, "fail: {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A circuit with both sides empty.
    EmptyCircuit { index: usize },
    /// Collection size differs from the `C(n, r+1)` a uniform matroid needs.
    WrongCount { expected: usize, actual: usize },
    /// Two distinct circuits whose underlying sets are nested.
    Incomparability { first: Circuit, second: Circuit },
    /// Some `(r+1)`-subset carries no circuit at all.
    MissingSubset { subset: LabelSet },
    /// No eliminating circuit exists for `element` between the two given.
    WeakElimination { first: Circuit, second: Circuit, element: u8 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyCircuit { index } => write!(f, "circuit {index} is empty"),
            Violation::WrongCount { expected, actual } => {
                write!(f, "expected {expected} circuits, found {actual}")
            }
            Violation::Incomparability { first, second } => {
                write!(f, "underlying sets of {first} and {second} are nested")
            }
            Violation::MissingSubset { subset } => {
                write!(f, "no circuit on subset {{{subset}}}")
            }
            Violation::WeakElimination { first, second, element } => {
                write!(f, "no eliminating circuit for element {element} of {first} and {second}")
            }
        }
    }
}

impl CircuitSet {
    pub fn validate(&self) -> ValidationReport {
        let circuits: Vec<Circuit> = self.iter().copied().collect();
        validate_circuit_axioms(self.n(), self.r(), &circuits)
    }
}

/// Checks symmetry, incomparability, and weak elimination over a candidate
/// collection, plus uniform completeness (every `(r+1)`-subset must carry a
/// circuit). One representative per circuit is expected; opposites are
/// implied, which settles the symmetry axiom by construction.
///
/// Failures are reported, never raised: corrupted collections are legitimate
/// input here.
pub fn validate_circuit_axioms(n: u8, r: u8, candidates: &[Circuit]) -> ValidationReport {
    let violation = first_violation(n, r, candidates);
    ValidationReport { violation }
}

fn first_violation(n: u8, r: u8, candidates: &[Circuit]) -> Option<Violation> {
    // Symmetry: C nonempty and -C present. The opposite is implicit, so
    // only nonemptiness can fail.
    for (index, circuit) in candidates.iter().enumerate() {
        if circuit.is_empty() {
            return Some(Violation::EmptyCircuit { index });
        }
    }

    let expected = binomial(n as u64, r as u64 + 1) as usize;
    if candidates.len() != expected {
        return Some(Violation::WrongCount { expected, actual: candidates.len() });
    }

    // Incomparability: nested underlying sets force equality up to sign.
    for (i, a) in candidates.iter().enumerate() {
        for b in &candidates[i + 1..] {
            let (ua, ub) = (a.underlying(), b.underlying());
            if (ua.is_subset_of(ub) || ub.is_subset_of(ua)) && *a != *b && *a != b.opposite() {
                return Some(Violation::Incomparability { first: *a, second: *b });
            }
        }
    }

    // Uniform completeness: every (r+1)-subset underlies some circuit.
    let mut by_underlying: HashMap<LabelSet, Circuit> = HashMap::with_capacity(candidates.len());
    for circuit in candidates {
        by_underlying.insert(circuit.underlying(), *circuit);
    }
    for subset in Subsets::new(n, r + 1) {
        let key = LabelSet::from_labels(&subset, n).expect("subset iterator yields valid labels");
        if !by_underlying.contains_key(&key) {
            return Some(Violation::MissingSubset { subset: key });
        }
    }

    // Weak elimination over all signed pairs X != ±Y. Signed variants of
    // distinct stored circuits cover exactly those pairs once underlying
    // sets are known distinct.
    let mut union_labels = Vec::with_capacity(2 * (r as usize + 1));
    for (i, a) in candidates.iter().enumerate() {
        for (j, b) in candidates.iter().enumerate() {
            if i == j {
                continue;
            }
            for x in [*a, a.opposite()] {
                for y in [*b, b.opposite()] {
                    let conflicts = x.positive().intersection(y.negative());
                    for element in conflicts.iter() {
                        if !has_eliminating_circuit(&by_underlying, r, x, y, element, &mut union_labels) {
                            return Some(Violation::WeakElimination {
                                first: x,
                                second: y,
                                element,
                            });
                        }
                    }
                }
            }
        }
    }

    None
}

/// Searches for a circuit `Z` (or its opposite) with `Z+ ⊆ (X+ ∪ Y+) \ {e}`
/// and `Z- ⊆ (X- ∪ Y-) \ {e}`. Candidates are exactly the circuits on
/// `(r+1)`-subsets of the two underlying sets' union minus `e`.
fn has_eliminating_circuit(
    by_underlying: &HashMap<LabelSet, Circuit>,
    r: u8,
    x: Circuit,
    y: Circuit,
    element: u8,
    union_labels: &mut Vec<u8>,
) -> bool {
    let erased = LabelSet::single(element);
    let allowed_pos = x.positive().union(y.positive()).difference(erased);
    let allowed_neg = x.negative().union(y.negative()).difference(erased);
    let universe = x.underlying().union(y.underlying()).difference(erased);

    let size = r as usize + 1;
    if (universe.len() as usize) < size {
        return false;
    }
    union_labels.clear();
    union_labels.extend(universe.iter());

    // Walk k-subsets of the union by index vector.
    let m = union_labels.len();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let mut key = LabelSet::EMPTY;
        for &i in idx.iter() {
            key.insert(union_labels[i]);
        }
        if let Some(z) = by_underlying.get(&key) {
            for cand in [*z, z.opposite()] {
                if cand.positive().is_subset_of(allowed_pos)
                    && cand.negative().is_subset_of(allowed_neg)
                {
                    return true;
                }
            }
        }
        // Advance to the next index combination.
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < m - (size - i) {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
