//! Circuit form of a uniform oriented matroid and the chirotope conversion.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combin::{binomial, subset_lex_rank, Subsets};
use crate::signed_set::{Circuit, SignedSet};
use crate::{Chirotope, Error, LabelSet};

/// All circuits of a uniform oriented matroid, one representative per
/// `(r+1)`-subset of `{1..n}` in lexicographic order. The opposite of each
/// stored circuit is implied, which the symmetry axiom makes lossless.
#[derive(Clone, PartialEq, Eq)]
pub struct CircuitSet {
    n: u8,
    r: u8,
    circuits: Vec<Circuit>,
}

impl CircuitSet {
    /// Derives the full circuit set from a chirotope.
    ///
    /// For each `(r+1)`-subset taken in ascending order `x_1 < .. < x_{r+1}`,
    /// element `x_i` gets the sign `(-1)^(i-1) * chi(subset minus x_i)`.
    pub fn from_chirotope(chirotope: &Chirotope) -> CircuitSet {
        let table = conversion_table(chirotope.n(), chirotope.r());
        let mut circuits = Vec::with_capacity(table.entries.len());
        for entry in &table.entries {
            let mut positive = 0u32;
            let mut negative = 0u32;
            for (i, &(label_bit, basis_index)) in entry.iter().enumerate() {
                let mut sign = chirotope.sign_at(basis_index as usize);
                if i % 2 == 1 {
                    sign = -sign;
                }
                if sign > 0 {
                    positive |= label_bit;
                } else {
                    negative |= label_bit;
                }
            }
            circuits.push(SignedSet::new_unchecked(
                LabelSet::from_bits(positive),
                LabelSet::from_bits(negative),
            ));
        }
        CircuitSet { n: chirotope.n(), r: chirotope.r(), circuits }
    }

    /// Rebuilds a circuit set from raw parts. Each circuit must sit at the
    /// lexicographic position of its underlying set; the axioms themselves
    /// are *not* checked here (see [`crate::validate_circuit_axioms`]).
    pub fn from_parts(n: u8, r: u8, circuits: Vec<Circuit>) -> Result<CircuitSet, Error> {
        let expected = binomial(n as u64, r as u64 + 1) as usize;
        if circuits.len() != expected {
            return Err(Error::WrongCircuitCount { expected, actual: circuits.len() });
        }
        for (index, (circuit, subset)) in circuits.iter().zip(Subsets::new(n, r + 1)).enumerate() {
            let key = LabelSet::from_labels(&subset, n).expect("subset iterator yields valid labels");
            if circuit.underlying() != key {
                return Err(Error::UnderlyingMismatch { index, expected: key, actual: circuit.underlying() });
            }
        }
        Ok(CircuitSet { n, r, circuits })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Circuit> {
        self.circuits.iter()
    }

    /// The stored representative on the given `(r+1)`-subset.
    pub fn circuit_on(&self, underlying: LabelSet) -> Option<&Circuit> {
        if underlying.len() != self.r as u32 + 1 {
            return None;
        }
        let rank = subset_lex_rank(self.n, &underlying.to_vec());
        let circuit = &self.circuits[rank as usize - 1];
        debug_assert_eq!(circuit.underlying(), underlying);
        Some(circuit)
    }

    /// Elementwise reorientation on `set`; underlying subsets are unchanged.
    pub fn reorient(&self, set: LabelSet) -> CircuitSet {
        CircuitSet {
            n: self.n,
            r: self.r,
            circuits: self.circuits.iter().map(|c| c.reorient(set)).collect(),
        }
    }

    /// True when every circuit keeps both sides nonempty. Affine (point
    /// realizable) oriented matroids are always acyclic.
    pub fn is_acyclic(&self) -> bool {
        self.circuits
            .iter()
            .all(|c| !c.positive().is_empty() && !c.negative().is_empty())
    }
}

impl std::fmt::Debug for CircuitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CircuitSet(n={}, r={}, {} circuits)", self.n, self.r, self.circuits.len())
    }
}

/// Per-`(r+1)`-subset lookup data: for element position `i`, the label bit
/// and the 0-based basis index of the subset with that element deleted.
type TableEntry = Vec<(u32, u32)>;

struct ConversionTable {
    entries: Vec<TableEntry>,
}

impl ConversionTable {
    fn build(n: u8, r: u8) -> ConversionTable {
        let mut entries = Vec::with_capacity(binomial(n as u64, r as u64 + 1) as usize);
        let mut facet = Vec::with_capacity(r as usize);
        for subset in Subsets::new(n, r + 1) {
            let mut entry = Vec::with_capacity(r as usize + 1);
            for (i, &label) in subset.iter().enumerate() {
                facet.clear();
                facet.extend(subset.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &l)| l));
                let basis_index = subset_lex_rank(n, &facet) as u32 - 1;
                entry.push((1u32 << (label - 1), basis_index));
            }
            entries.push(entry);
        }
        ConversionTable { entries }
    }
}

type TableCache = Mutex<HashMap<(u8, u8), Arc<ConversionTable>>>;

/// Conversion tables are immutable and shared; building one costs
/// `C(n, r+1) * (r+1)` rank computations, so they are cached per `(n, r)`.
fn conversion_table(n: u8, r: u8) -> Arc<ConversionTable> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry((n, r)).or_insert_with(|| Arc::new(ConversionTable::build(n, r))).clone()
}
