//! Numerical semigroups, Weierstrass and Schubert index sequences, and the
//! partitions attached to them under the `Gr_{g−1}` and `ℋ′` conventions.
//!
//! A Weierstrass sequence of a genus-`g` semigroup has `s_i = a_{g−i+1} − 1`
//! for `i ≤ g` and `s_i = g − 1 − i` afterwards, so `H = {n : n − 1 ∉ S}`.

mod partition;
mod semigroup;
mod sequence;

pub use partition::Partition;
pub use semigroup::NumericalSemigroup;
pub use sequence::IndexSequence;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on the genus accepted by [`enumerate_semigroups`].
pub const DEFAULT_MAX_GENUS: u32 = 12;

/// All numerical semigroups of genus `g`, sorted by gap list.
pub fn enumerate_semigroups(g: u32) -> Result<Vec<NumericalSemigroup>> {
    enumerate_semigroups_capped(g, DEFAULT_MAX_GENUS)
}

/// As [`enumerate_semigroups`] with an explicit genus cap.
pub fn enumerate_semigroups_capped(g: u32, max_genus: u32) -> Result<Vec<NumericalSemigroup>> {
    if g > max_genus {
        return Err(Error::GenusTooLarge { genus: g, max: max_genus });
    }
    let mut level = vec![NumericalSemigroup::naturals()];
    for _ in 0..g {
        level = level.iter().flat_map(NumericalSemigroup::children).collect();
    }
    level.sort_by(|a, b| a.gaps().cmp(b.gaps()));
    Ok(level)
}

/// `s_i = a_{g−i+1} − 1` for `i ≤ g`, with `d = g − 1`.
pub fn weierstrass_sequence(h: &NumericalSemigroup) -> IndexSequence {
    let g = h.genus() as i64;
    let head = h.gaps().iter().rev().map(|&a| a as i64 - 1).collect();
    IndexSequence::new(g - 1, head).expect("gap sequences are strictly decreasing")
}

/// Recovers `H = {n : n − 1 ∉ S}`; errors unless this is a numerical
/// semigroup with `d = g − 1`.
pub fn semigroup_from_sequence(s: &IndexSequence) -> Result<NumericalSemigroup> {
    if s.contains(-1) {
        return Err(Error::NotASemigroup("0 is not in the candidate set (−1 ∈ S)".into()));
    }
    if let Some(n) = (s.tail_bound() + 1..=-2).find(|&n| !s.contains(n)) {
        return Err(Error::NotASemigroup(format!("candidate set contains the negative integer {}", n + 1)));
    }
    let gaps: Vec<u32> = s.head().iter().rev().filter(|&&x| x >= 0).map(|&x| (x + 1) as u32).collect();
    let h = NumericalSemigroup::from_gaps(gaps)?;
    if s.d() != h.genus() as i64 - 1 {
        return Err(Error::NotASemigroup(format!(
            "virtual cardinality {} does not match genus {}",
            s.d(),
            h.genus()
        )));
    }
    Ok(h)
}

/// `μ_i = s_i + i − d` with trailing zeros dropped.
pub fn partition_from_sequence(s: &IndexSequence) -> Result<Partition> {
    let d = s.d();
    let parts: Vec<i64> = (1..=s.head().len()).map(|i| s.get(i) + i as i64 - d).collect();
    if let Some(p) = parts.iter().find(|&&p| p < 0) {
        return Err(Error::MalformedSequence(format!("negative partition entry {p}")));
    }
    Partition::new(parts.into_iter().map(|p| p as u32).collect())
}

/// Partition in the `ℋ′` convention: with `i_0` the last index where
/// `s_i ≥ 0`, `μ_i = s_i + i − g` up to `i_0` and `s_i + i − g + 1` after.
pub fn hprime_partition(s: &IndexSequence, g: u32) -> Result<Partition> {
    let g = g as i64;
    if s.d() != g - 1 {
        return Err(Error::MalformedSequence(format!(
            "expected virtual cardinality {} for genus {g}, got {}",
            g - 1,
            s.d()
        )));
    }
    if s.contains(-1) {
        return Err(Error::NotInHPrime(format!("{s} contains -1")));
    }
    let n = s.head().len().max(g as usize) + 1;
    let seq = s.prefix(n);
    let i0 = seq.iter().rposition(|&x| x >= 0).map_or(0, |p| p + 1);
    let mut parts = Vec::with_capacity(n);
    for (k, &x) in seq.iter().enumerate() {
        let i = k as i64 + 1;
        let mu = if (i as usize) <= i0 { x + i - g } else { x + i - g + 1 };
        if mu < 0 {
            return Err(Error::MalformedSequence(format!("negative partition entry {mu} at index {i}")));
        }
        parts.push(mu as u32);
    }
    Partition::new(parts)
}

/// Inverse of [`hprime_partition`] for `ℓ(μ) ≤ g`: `s_i = μ_i + g − i`
/// for `i ≤ g`, with `d = g − 1`.
pub fn sequence_from_hprime(mu: &Partition, g: u32) -> Result<IndexSequence> {
    if mu.len() > g as usize {
        return Err(Error::LengthExceedsGenus { partition: mu.to_string(), length: mu.len(), genus: g });
    }
    let head = (1..=g as usize).map(|i| mu.part(i) as i64 + g as i64 - i as i64).collect();
    IndexSequence::new(g as i64 - 1, head)
}

/// The bound test `s_i ≤ 2g − 2i` (`i ≤ g`) and `s_i ≤ g − i − 1` (`i > g`).
pub fn is_realizable(s: &IndexSequence, g: u32) -> bool {
    let g = g as i64;
    let n = (s.head().len() as i64).max(g) + 1;
    (1..=n).all(|i| {
        let bound = if i <= g { 2 * g - 2 * i } else { g - i - 1 };
        s.get(i as usize) <= bound
    }) && s.d() <= g - 1
}

/// `{m : −1 − m ∉ S}`.
pub fn dual_index_set(s: &IndexSequence) -> IndexSequence {
    let below = -1 - s.max_element();
    let above = -1 - s.tail_bound();
    IndexSequence::from_predicate(|m| !s.contains(-1 - m), below, above)
}

/// JSON record describing one semigroup and its attached combinatorics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupRecord {
    pub genus: u32,
    pub gaps: Vec<u32>,
    pub sequence_head: Vec<i64>,
    pub partition_gr_gm1: Partition,
    pub partition_hprime: Partition,
}

impl SemigroupRecord {
    pub fn new(h: &NumericalSemigroup) -> Self {
        let s = weierstrass_sequence(h);
        SemigroupRecord {
            genus: h.genus(),
            gaps: h.gaps().to_vec(),
            sequence_head: s.head().to_vec(),
            partition_gr_gm1: partition_from_sequence(&s).expect("Weierstrass sequences are well formed"),
            partition_hprime: hprime_partition(&s, h.genus()).expect("Weierstrass sequences omit -1"),
        }
    }
}
