//! Bounded ordered partitions (compositions) of a sum-rank weight.
//!
//! A sum-rank weight `t` splits over `ell` blocks as a composition
//! `t_1 + ... + t_ell = t` with every part bounded by the block's maximal
//! rank. Enumeration is streaming and lexicographic.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::qkit::binomial;
use crate::{Count, SignedCount};

/// Per-block ranks of a vector (or per-block distances of a center pair).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RankProfile(Vec<u32>);

impl RankProfile {
    pub fn new(parts: Vec<u32>) -> Self {
        RankProfile(parts)
    }

    pub fn zeros(len: usize) -> Self {
        RankProfile(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for RankProfile {
    fn from(parts: Vec<u32>) -> Self {
        RankProfile(parts)
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic iterator over compositions of `total` with `parts[i] <= bounds[i]`.
#[derive(Debug, Clone)]
pub struct Compositions {
    bounds: Vec<u32>,
    // suffix_cap[i] = sum of bounds[i..]
    suffix_cap: Vec<u64>,
    current: Option<Vec<u32>>,
}

impl Compositions {
    fn new(total: u32, bounds: Vec<u32>) -> Self {
        let mut suffix_cap = vec![0u64; bounds.len() + 1];
        for i in (0..bounds.len()).rev() {
            suffix_cap[i] = suffix_cap[i + 1] + u64::from(bounds[i]);
        }
        let current = if u64::from(total) > suffix_cap[0] {
            None
        } else {
            let mut parts = vec![0; bounds.len()];
            fill_smallest(&mut parts, &bounds, 0, total);
            Some(parts)
        };
        Compositions { bounds, suffix_cap, current }
    }

    fn advance(&mut self) {
        let Some(parts) = self.current.as_mut() else {
            return;
        };
        let len = parts.len();
        // Rightmost position (other than the last) that can grow by one while
        // the remainder still fits in the positions after it.
        let mut rest: u64 = parts.last().map_or(0, |&p| u64::from(p));
        for i in (0..len.saturating_sub(1)).rev() {
            if parts[i] < self.bounds[i] && rest >= 1 {
                let remainder = rest - 1;
                if remainder <= self.suffix_cap[i + 1] {
                    parts[i] += 1;
                    fill_smallest(parts, &self.bounds, i + 1, remainder as u32);
                    return;
                }
            }
            rest += u64::from(parts[i]);
        }
        self.current = None;
    }
}

/// Writes the lexicographically smallest fill of `parts[from..]` summing to `sum`.
fn fill_smallest(parts: &mut [u32], bounds: &[u32], from: usize, mut sum: u32) {
    for j in (from..parts.len()).rev() {
        let take = sum.min(bounds[j]);
        parts[j] = take;
        sum -= take;
    }
    debug_assert_eq!(sum, 0);
}

impl Iterator for Compositions {
    type Item = RankProfile;

    fn next(&mut self) -> Option<RankProfile> {
        let out = self.current.clone()?;
        self.advance();
        Some(RankProfile(out))
    }
}

/// Compositions of `t` into `ell` parts, each at most `mu`.
pub fn enumerate_uniform(t: u32, ell: u32, mu: u32) -> Compositions {
    Compositions::new(t, vec![mu; ell as usize])
}

/// Compositions of `t` with part `i` at most `bounds[i]`.
pub fn enumerate_bounded(t: u32, bounds: &[u32]) -> Compositions {
    Compositions::new(t, bounds.to_vec())
}

/// Every profile of length `ell` with parts at most `mu`, in lexicographic
/// order (all totals mixed).
pub fn all_profiles(ell: u32, mu: u32) -> Vec<RankProfile> {
    let mut out = Vec::new();
    let mut parts = vec![0u32; ell as usize];
    loop {
        out.push(RankProfile(parts.clone()));
        let Some(i) = parts.iter().rposition(|&p| p < mu) else {
            return out;
        };
        parts[i] += 1;
        parts[i + 1..].iter_mut().for_each(|p| *p = 0);
    }
}

/// Closed-form size of `enumerate_uniform(t, ell, mu)` by inclusion-exclusion:
///
/// `sum_{i=0..floor(t/(mu+1))} (-1)^i C(ell, i) C(t + ell - 1 - (mu+1) i, ell - 1)`.
pub fn count_uniform(t: u32, ell: u32, mu: u32) -> Count {
    if ell == 0 {
        return Count::from(u32::from(t == 0));
    }
    let (t, ell, mu) = (u64::from(t), u64::from(ell), u64::from(mu));
    let mut acc = SignedCount::zero();
    for i in 0..=t / (mu + 1) {
        let top = t + ell - 1 - (mu + 1) * i;
        let term = SignedCount::from(binomial(ell, i) * binomial(top, ell - 1));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("inclusion-exclusion count is nonnegative")
}

/// Stars-and-bars bound `C(t + ell - 1, ell - 1)` on `count_uniform`.
pub fn count_upper_bound(t: u32, ell: u32) -> Count {
    if ell == 0 {
        return Count::from(u32::from(t == 0));
    }
    binomial(u64::from(t) + u64::from(ell) - 1, u64::from(ell) - 1)
}
