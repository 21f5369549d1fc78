//! Integer partitions used as ramification profiles.
//!
//! A part `k` of a profile records a critical point of multiplicity `k`;
//! the monodromy around the corresponding branch point is a cycle of
//! length `k + 1`.

use std::fmt;

use crate::rational::{factorial, Int};
use crate::Error;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into canonical (descending) order; rejects zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::BadPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of ways to permute the parts preserving their values.
    pub fn aut(&self) -> Int {
        let mut out = Int::from(1);
        let mut run = 0u32;
        let mut prev = None;
        for &p in &self.parts {
            if Some(p) == prev {
                run += 1;
            } else {
                out *= factorial(run);
                run = 1;
                prev = Some(p);
            }
        }
        out * factorial(run)
    }

    /// Cycle lengths of the corresponding monodromy permutation on `n`
    /// points: each part `k` becomes a cycle of length `k + 1`, and the
    /// remaining points are fixed.
    pub fn cycle_type(&self, n: usize) -> Result<CycleType, Error> {
        let used = (self.sum() as usize) + self.len();
        if used > n {
            return Err(Error::QueryDoesNotFit(format!(
                "profile {self} needs {used} points but only {n} are available"
            )));
        }
        let mut lengths: Vec<u32> = self.parts.iter().map(|&k| k + 1).collect();
        lengths.extend(std::iter::repeat_n(1, n - used));
        Ok(CycleType { lengths })
    }

    /// Parse a comma-separated list of parts, e.g. `2,1,1`. An empty string
    /// yields the empty partition.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::BadPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Cycle lengths of a permutation of `{1..n}`, fixed points included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    lengths: Vec<u32>,
}

impl CycleType {
    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    pub fn degree(&self) -> u32 {
        self.lengths.iter().sum()
    }
}

/// All partitions of `n` in descending-lexicographic order, parts bounded
/// by `max_part`.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(rem: u32, cap: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        let hi = rem.min(cap);
        for p in (1..=hi).rev() {
            acc.push(p);
            rec(rem - p, p, acc, out);
            acc.pop();
        }
    }
    rec(n, max_part, &mut acc, &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    partitions_bounded(n, n.max(1))
}

/// Partitions of `n` into at most `k` parts.
pub fn partitions_at_most_parts(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(rem: u32, cap: u32, slots: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = rem.min(cap);
        for p in (1..=hi).rev() {
            acc.push(p);
            rec(rem - p, p, slots - 1, acc, out);
            acc.pop();
        }
    }
    rec(n, n.max(1), k, &mut acc, &mut out);
    out
}
