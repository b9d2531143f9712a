use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical semigroup `H ⊆ ℕ₀` described by its sorted gap list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct NumericalSemigroup {
    gaps: Vec<u32>,
}

impl NumericalSemigroup {
    /// `ℕ₀`, the unique semigroup of genus 0.
    pub fn naturals() -> Self {
        NumericalSemigroup { gaps: Vec::new() }
    }

    /// The ordinary semigroup with gaps `1, …, g`.
    pub fn ordinary(g: u32) -> Self {
        NumericalSemigroup { gaps: (1..=g).collect() }
    }

    /// Semigroup generated by 2 and `2g + 1`.
    pub fn hyperelliptic(g: u32) -> Self {
        NumericalSemigroup { gaps: (0..g).map(|k| 2 * k + 1).collect() }
    }

    /// Validates a gap list: strictly increasing, positive, with additively
    /// closed complement.
    pub fn from_gaps(gaps: Vec<u32>) -> Result<Self> {
        if gaps.first() == Some(&0) {
            return Err(Error::NotASemigroup("0 cannot be a gap".into()));
        }
        if let Some(w) = gaps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::NotASemigroup(format!(
                "gap list must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        let h = NumericalSemigroup { gaps };
        if let Some((a, b)) = h.closure_violation() {
            return Err(Error::NotASemigroup(format!("closure violation: {a}+{b}={} is a gap", a + b)));
        }
        Ok(h)
    }

    /// First pair of non-gaps whose sum is a gap, if any.
    fn closure_violation(&self) -> Option<(u32, u32)> {
        let top = self.frobenius();
        if top < 0 {
            return None;
        }
        let top = top as u32;
        for a in 1..=top {
            if !self.contains(a) {
                continue;
            }
            for b in a..=top - a {
                if self.contains(b) && !self.contains(a + b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn contains(&self, n: u32) -> bool {
        self.gaps.binary_search(&n).is_err()
    }

    /// Largest gap, or −1 for `ℕ₀`.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&a| a as i64)
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u32 {
        (1..).find(|&n| self.contains(n)).expect("cofinite set")
    }

    pub fn is_minimal_generator(&self, x: u32) -> bool {
        x > 0 && self.contains(x) && !(1..x).any(|a| self.contains(a) && self.contains(x - a))
    }

    /// Minimal generators in increasing order.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let bound = (self.frobenius() + 1) as u32 + self.multiplicity();
        (1..=bound).filter(|&x| self.is_minimal_generator(x)).collect()
    }

    /// Children in the semigroup tree: remove one minimal generator larger
    /// than the Frobenius number.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        let f = self.frobenius();
        let lo = (f + 1).max(1) as u32;
        let hi = (f + 1) as u32 + self.multiplicity();
        (lo..=hi)
            .filter(|&x| self.is_minimal_generator(x))
            .map(|x| {
                let mut gaps = self.gaps.clone();
                gaps.push(x);
                NumericalSemigroup { gaps }
            })
            .collect()
    }
}

impl TryFrom<Vec<u32>> for NumericalSemigroup {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        NumericalSemigroup::from_gaps(v)
    }
}

impl From<NumericalSemigroup> for Vec<u32> {
    fn from(h: NumericalSemigroup) -> Vec<u32> {
        h.gaps
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.gaps.iter().map(u32::to_string).collect();
        write!(f, "gaps {{{}}}", s.join(","))
    }
}
