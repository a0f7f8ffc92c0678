use std::fmt;
use std::str::FromStr;

use crate::{Error, LabelSet};

/// An ordered pair of disjoint label sets — the signed currency of circuits.
///
/// `positive` and `negative` never overlap. The opposite signed set swaps
/// the two parts and represents the same dependency.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedSet {
    positive: LabelSet,
    negative: LabelSet,
}

/// A signed set whose underlying set has exactly `r + 1` elements.
/// The arity is enforced by [`crate::CircuitSet`] construction.
pub type Circuit = SignedSet;

impl SignedSet {
    pub fn new(positive: LabelSet, negative: LabelSet) -> Result<SignedSet, Error> {
        let shared = positive.intersection(negative);
        if !shared.is_empty() {
            return Err(Error::SignedOverlap { shared });
        }
        Ok(SignedSet { positive, negative })
    }

    /// Skips the disjointness check; for callers that already hold disjoint masks.
    pub(crate) fn new_unchecked(positive: LabelSet, negative: LabelSet) -> SignedSet {
        debug_assert!(positive.is_disjoint(negative));
        SignedSet { positive, negative }
    }

    pub fn positive(self) -> LabelSet {
        self.positive
    }

    pub fn negative(self) -> LabelSet {
        self.negative
    }

    pub fn underlying(self) -> LabelSet {
        self.positive.union(self.negative)
    }

    pub fn is_empty(self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    pub fn opposite(self) -> SignedSet {
        SignedSet { positive: self.negative, negative: self.positive }
    }

    /// Sign of `label` in this set: +1, -1, or 0 when absent.
    pub fn sign_of(self, label: u8) -> i8 {
        if self.positive.contains(label) {
            1
        } else if self.negative.contains(label) {
            -1
        } else {
            0
        }
    }

    /// Reorientation on `set`: elements of `set` swap sides.
    pub fn reorient(self, set: LabelSet) -> SignedSet {
        SignedSet {
            positive: self.positive.difference(set).union(self.negative.intersection(set)),
            negative: self.negative.difference(set).union(self.positive.intersection(set)),
        }
    }

    /// Unordered part sizes, larger first. Rank-4 circuits come out as
    /// (3,2), (4,1), or (5,0); a zero second component marks a cyclic witness.
    pub fn partition_shape(self) -> (u32, u32) {
        let p = self.positive.len();
        let n = self.negative.len();
        (p.max(n), p.min(n))
    }
}

impl fmt::Display for SignedSet {
    /// `positive|negative`, both as sorted comma-separated labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.positive, self.negative)
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.positive, self.negative)
    }
}

impl FromStr for SignedSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignedSet, Error> {
        let (pos, neg) = s
            .split_once('|')
            .ok_or_else(|| Error::BadSignedSetText { text: s.to_string() })?;
        SignedSet::new(pos.parse()?, neg.parse()?)
    }
}
