//! Deciding the (t,m,s)-net property.
//!
//! Two independent routes are provided: [`strength_by_rank`] applies the
//! linear-algebra criterion to the generator matrices, while
//! [`is_net_geometric`] counts points in every elementary interval of the
//! materialized point set. Tests enforce that both agree.

mod discrepancy;
mod geometric;
mod rank;
mod sequence;

use alloc::vec::Vec;

pub use discrepancy::{l2_star_discrepancy, L2Discrepancy, MAX_DISCREPANCY_M};
pub use geometric::{
    is_net_geometric, is_net_geometric_capped, ElementaryInterval, GeometricVerdict,
    IntervalWitness, DEFAULT_GEOMETRIC_MAX_M,
};
pub use rank::{composition_has_full_rank, strength_by_rank, strength_by_rank_naive};
pub use sequence::{check_sequence_prefix, DepthVerdict, SequenceReport};

/// Outcome of the rank criterion for a generator tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TReport {
    pub m: usize,
    pub s: usize,
    /// Largest `k` such that every composition of `k` passes the rank test.
    pub strength: usize,
    /// `m - strength`.
    pub t_value: usize,
    /// Lexicographically smallest failing composition of `strength + 1`,
    /// present iff `strength < m`.
    pub witness: Option<Vec<usize>>,
}

impl TReport {
    pub fn is_net_with_t(&self, t: usize) -> bool {
        self.t_value <= t
    }
}

/// All compositions of `k` into `parts` nonnegative parts, in ascending
/// lexicographic order: `(0, .., 0, k)` first, `(k, 0, .., 0)` last.
///
/// There are `binom(k + parts - 1, parts - 1)` of them.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(k: usize, parts: usize) -> Self {
        let current = match parts {
            0 => (k == 0).then(Vec::new),
            _ => {
                let mut first = alloc::vec![0; parts];
                first[parts - 1] = k;
                Some(first)
            }
        };
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let s = out.len();
        // Successor: find the rightmost position i < s-1 that can grow, which
        // needs a nonzero amount in the suffix after it.
        let mut next = out.clone();
        let mut tail: usize = next.last().copied().unwrap_or(0);
        let mut i = s.saturating_sub(1);
        while i > 0 {
            i -= 1;
            if tail > 0 {
                next[i] += 1;
                for x in next[i + 1..].iter_mut() {
                    *x = 0;
                }
                next[s - 1] = tail - 1;
                self.current = Some(next);
                return Some(out);
            }
            tail += next[i];
        }
        Some(out)
    }
}
