use std::fmt;

use crate::combin::{binomial, permutation_parity, subset_lex_rank};
use crate::labels::MAX_GROUND_SET;
use crate::{Error, LabelSet};

/// Basis orientation of a uniform oriented matroid: one nonzero sign per
/// `r`-subset of `{1..n}`, indexed by lexicographic rank.
///
/// Stored in canonical form — the lexicographically first basis is positive,
/// since the globally flipped string names the same matroid. Signs live in a
/// bit vector; the external representation stays '+'/'-' text.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    n: u8,
    r: u8,
    num_bases: usize,
    bits: Vec<u64>,
}

impl Chirotope {
    /// Parses a '+'/'-' sign string of length `C(n, r)` and canonicalizes it.
    pub fn parse(text: &str, n: u8, r: u8) -> Result<Chirotope, Error> {
        check_params(n, r)?;
        let expected = binomial(n as u64, r as u64) as usize;
        let actual = text.chars().count();
        if actual != expected {
            return Err(Error::WrongSignStringLength { n, r, expected, actual });
        }
        let mut bits = vec![0u64; expected.div_ceil(64)];
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '+' => bits[pos / 64] |= 1 << (pos % 64),
                '-' => {}
                other => return Err(Error::IllegalSignChar { pos, ch: other }),
            }
        }
        let mut chirotope = Chirotope { n, r, num_bases: expected, bits };
        chirotope.canonicalize();
        Ok(chirotope)
    }

    /// Builds a chirotope from explicit ±1 signs in lexicographic basis order.
    pub fn from_signs(n: u8, r: u8, signs: &[i8]) -> Result<Chirotope, Error> {
        check_params(n, r)?;
        let expected = binomial(n as u64, r as u64) as usize;
        if signs.len() != expected {
            return Err(Error::WrongSignStringLength { n, r, expected, actual: signs.len() });
        }
        let mut bits = vec![0u64; expected.div_ceil(64)];
        for (pos, &s) in signs.iter().enumerate() {
            match s {
                1 => bits[pos / 64] |= 1 << (pos % 64),
                -1 => {}
                _ => return Err(Error::ZeroBasisSign { rank: pos as u64 + 1 }),
            }
        }
        let mut chirotope = Chirotope { n, r, num_bases: expected, bits };
        chirotope.canonicalize();
        Ok(chirotope)
    }

    fn canonicalize(&mut self) {
        if self.sign_at(0) < 0 {
            for word in &mut self.bits {
                *word = !*word;
            }
            let tail = self.num_bases % 64;
            if tail != 0 {
                *self.bits.last_mut().unwrap() &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn num_bases(&self) -> usize {
        self.num_bases
    }

    /// Sign at 0-based lexicographic basis index.
    pub(crate) fn sign_at(&self, index: usize) -> i8 {
        debug_assert!(index < self.num_bases);
        if self.bits[index / 64] >> (index % 64) & 1 == 1 {
            1
        } else {
            -1
        }
    }

    /// Stored sign of a sorted basis (an `r`-subset given ascending).
    pub fn basis_sign(&self, subset: &[u8]) -> Result<i8, Error> {
        if subset.len() != self.r as usize {
            return Err(Error::WrongCardinality { expected: self.r as usize, actual: subset.len() });
        }
        let set = LabelSet::from_labels(subset, self.n)?;
        let rank = subset_lex_rank(self.n, &set.to_vec());
        Ok(self.sign_at(rank as usize - 1))
    }

    /// Alternating basis map: the stored sign of the underlying set times the
    /// sign of the permutation sorting the tuple.
    pub fn chi(&self, tuple: &[u8]) -> Result<i8, Error> {
        if tuple.len() != self.r as usize {
            return Err(Error::WrongCardinality { expected: self.r as usize, actual: tuple.len() });
        }
        let set = LabelSet::from_labels(tuple, self.n)?;
        let rank = subset_lex_rank(self.n, &set.to_vec());
        Ok(self.sign_at(rank as usize - 1) * permutation_parity(tuple))
    }
}

fn check_params(n: u8, r: u8) -> Result<(), Error> {
    if r == 0 || r > n || n > MAX_GROUND_SET {
        return Err(Error::BadRankParams { n, r });
    }
    Ok(())
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.num_bases {
            f.write_str(if self.sign_at(i) > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chirotope(n={}, r={}, {})", self.n, self.r, self)
    }
}
