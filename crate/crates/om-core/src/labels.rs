use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Largest ground-set size supported by the bitmask representation.
pub const MAX_GROUND_SET: u8 = 32;

/// A set of element labels drawn from `1..=32`, stored as a bitmask.
///
/// Label `i` occupies bit `i - 1`. All set operations are single word
/// operations, which keeps the reorientation and piercing tests cheap in
/// the inner scan loop.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(u32);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_bits(bits: u32) -> LabelSet {
        LabelSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn single(label: u8) -> LabelSet {
        debug_assert!((1..=MAX_GROUND_SET).contains(&label));
        LabelSet(1 << (label - 1))
    }

    /// Builds a set from labels, rejecting labels outside `1..=n`.
    pub fn from_labels(labels: &[u8], n: u8) -> Result<LabelSet, Error> {
        let mut bits = 0u32;
        for &label in labels {
            if label < 1 || label > n {
                return Err(Error::LabelOutOfRange { label, n });
            }
            let bit = 1 << (label - 1);
            if bits & bit != 0 {
                return Err(Error::RepeatedElement { label });
            }
            bits |= bit;
        }
        Ok(LabelSet(bits))
    }

    /// The full ground set `{1, .., n}`.
    pub fn full(n: u8) -> LabelSet {
        debug_assert!(n <= MAX_GROUND_SET);
        if n == 32 {
            LabelSet(u32::MAX)
        } else {
            LabelSet((1u32 << n) - 1)
        }
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: u8) -> bool {
        (1..=MAX_GROUND_SET).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn insert(&mut self, label: u8) {
        debug_assert!((1..=MAX_GROUND_SET).contains(&label));
        self.0 |= 1 << (label - 1);
    }

    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    pub fn difference(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_label(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as u8 + 1)
        }
    }

    /// Labels in ascending order.
    pub fn iter(self) -> LabelIter {
        LabelIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().collect()
    }
}

pub struct LabelIter(u32);

impl Iterator for LabelIter {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            let label = self.0.trailing_zeros() as u8 + 1;
            self.0 &= self.0 - 1;
            Some(label)
        }
    }
}

impl FromIterator<u8> for LabelSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> LabelSet {
        let mut set = LabelSet::EMPTY;
        for label in iter {
            set.insert(label);
        }
        set
    }
}

impl fmt::Display for LabelSet {
    /// Comma separated ascending labels; the empty set prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for label in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for LabelSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<LabelSet, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(LabelSet::EMPTY);
        }
        let mut set = LabelSet::EMPTY;
        for part in s.split(',') {
            let label: u8 = part
                .trim()
                .parse()
                .map_err(|_| Error::BadLabelText { text: part.trim().to_string() })?;
            if !(1..=MAX_GROUND_SET).contains(&label) {
                return Err(Error::LabelOutOfRange { label, n: MAX_GROUND_SET });
            }
            if set.contains(label) {
                return Err(Error::RepeatedElement { label });
            }
            set.insert(label);
        }
        Ok(set)
    }
}
