use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly decreasing integer sequence `s_1 > s_2 > …` that eventually
/// follows the tail rule `s_i = d − i`.
///
/// Only the exceptional head is stored. The head is normalised so that its
/// last entry is not already given by the tail rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSequence {
    d: i64,
    head: Vec<i64>,
}

impl IndexSequence {
    pub fn new(d: i64, mut head: Vec<i64>) -> Result<Self> {
        if let Some(w) = head.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::MalformedSequence(format!(
                "entries must strictly decrease, found {} then {}",
                w[0], w[1]
            )));
        }
        let m = head.len() as i64;
        if let Some(&last) = head.last() {
            if last <= d - (m + 1) {
                return Err(Error::MalformedSequence(format!(
                    "head ends at {last}, which does not exceed the first tail entry {}",
                    d - (m + 1)
                )));
            }
        }
        while let Some(&last) = head.last() {
            if last == d - head.len() as i64 {
                head.pop();
            } else {
                break;
            }
        }
        Ok(IndexSequence { d, head })
    }

    /// The sequence `s_i = d − i` for all `i`.
    pub fn pure_tail(d: i64) -> Self {
        IndexSequence { d, head: Vec::new() }
    }

    /// Builds the decreasing enumeration of a set of integers containing every
    /// `n < below` and no `n > above`.
    pub fn from_predicate<F: Fn(i64) -> bool>(member: F, below: i64, above: i64) -> Self {
        let below = below.min(0).min(above + 1);
        let mut head: Vec<i64> = (below..=above).rev().filter(|&n| member(n)).collect();
        let pos = head.iter().filter(|&&n| n >= 0).count() as i64;
        let neg_missing = (below..0).filter(|&n| !member(n)).count() as i64;
        let d = pos - neg_missing;
        debug_assert_eq!(d - head.len() as i64 - 1, below - 1);
        while let Some(&last) = head.last() {
            if last == d - head.len() as i64 {
                head.pop();
            } else {
                break;
            }
        }
        IndexSequence { d, head }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    /// `s_i` with 1-based `i`.
    pub fn get(&self, i: usize) -> i64 {
        assert!(i >= 1, "sequence indices start at 1");
        if i <= self.head.len() {
            self.head[i - 1]
        } else {
            self.d - i as i64
        }
    }

    /// `s_1, …, s_n`.
    pub fn prefix(&self, n: usize) -> Vec<i64> {
        (1..=n).map(|i| self.get(i)).collect()
    }

    /// Largest member.
    pub fn max_element(&self) -> i64 {
        self.get(1)
    }

    /// Every integer `≤` this bound is a member.
    pub fn tail_bound(&self) -> i64 {
        self.d - self.head.len() as i64 - 1
    }

    pub fn contains(&self, n: i64) -> bool {
        if n <= self.tail_bound() {
            return true;
        }
        self.head.contains(&n)
    }

    /// `#(S ∩ ℤ≥0) − #(ℤ<0 ∖ S)`, counted directly from membership.
    pub fn virtual_cardinality(&self) -> i64 {
        let lo = self.tail_bound().min(-1);
        let hi = self.max_element().max(0);
        let pos = (0..=hi).filter(|&n| self.contains(n)).count() as i64;
        let neg = (lo..0).filter(|&n| !self.contains(n)).count() as i64;
        pos - neg
    }

    /// Termwise domination `s_i ≥ t_i` for all `i`.
    pub fn dominates(&self, other: &IndexSequence) -> bool {
        if self.d < other.d {
            return false;
        }
        let n = self.head.len().max(other.head.len()) + 1;
        (1..=n).all(|i| self.get(i) >= other.get(i))
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.head.len();
        let shown: Vec<String> = self.prefix(m + 2).iter().map(i64::to_string).collect();
        write!(f, "({}, …; d={})", shown.join(","), self.d)
    }
}
