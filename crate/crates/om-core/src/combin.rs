//! Lexicographic ranking of subsets and small combinatorial helpers.

use crate::{Error, LabelSet};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for i in 1..=k {
        result = result * (n - (k - i)) / i;
    }
    result
}

/// 1-based position of a sorted subset of `{1..n}` in lexicographic order
/// over all subsets of the same size.
///
/// `{1,2,3,4}` ranks first and `{n-3,..,n}` ranks `C(n,4)` for size 4.
pub fn subset_lex_rank(n: u8, subset: &[u8]) -> u64 {
    let k = subset.len() as u64;
    let mut rank = 1u64;
    let mut prev = 0u8;
    for (i, &c) in subset.iter().enumerate() {
        for j in prev + 1..c {
            rank += binomial((n - j) as u64, k - i as u64 - 1);
        }
        prev = c;
    }
    rank
}

/// Inverse of [`subset_lex_rank`]: the sorted `k`-subset of `{1..n}` at the
/// given 1-based lexicographic rank.
pub fn subset_at_lex_rank(n: u8, k: u8, rank: u64) -> Vec<u8> {
    debug_assert!(rank >= 1 && rank <= binomial(n as u64, k as u64));
    let mut remaining = rank - 1;
    let mut subset = Vec::with_capacity(k as usize);
    let mut next = 1u8;
    for i in 0..k {
        loop {
            let count = binomial((n - next) as u64, (k - i - 1) as u64);
            if count <= remaining {
                remaining -= count;
                next += 1;
            } else {
                subset.push(next);
                next += 1;
                break;
            }
        }
    }
    subset
}

/// Validated 1-based lexicographic rank of an `r`-subset of `{1..n}` —
/// the position of a basis in the chirotope sign string.
pub fn basis_rank(n: u8, r: u8, subset: &[u8]) -> Result<u64, Error> {
    if subset.len() != r as usize {
        return Err(Error::WrongCardinality { expected: r as usize, actual: subset.len() });
    }
    let set = LabelSet::from_labels(subset, n)?;
    let sorted = set.to_vec();
    Ok(subset_lex_rank(n, &sorted))
}

/// Iterates all `k`-subsets of `{1..n}` in lexicographic order.
pub struct Subsets {
    n: u8,
    current: Vec<u8>,
    started: bool,
    done: bool,
}

impl Subsets {
    pub fn new(n: u8, k: u8) -> Subsets {
        let done = k > n;
        Subsets { n, current: (1..=k).collect(), started: false, done }
    }
}

impl Iterator for Subsets {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let k = self.current.len();
        if k == 0 {
            self.done = true;
            return None;
        }
        // Rightmost position that can still advance.
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.current[i] < self.n - (k - 1 - i) as u8 {
                break;
            }
        }
        self.current[i] += 1;
        for j in i + 1..k {
            self.current[j] = self.current[j - 1] + 1;
        }
        Some(self.current.clone())
    }
}

/// Sign of the permutation sorting `tuple` ascending (+1 even, -1 odd).
/// The caller guarantees distinct entries.
pub fn permutation_parity(tuple: &[u8]) -> i8 {
    let mut inversions = 0u32;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] > tuple[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
