//! Integer partitions: the `Partition` type, exhaustive enumeration and
//! constrained counting.
//!
//! * [`Partition`] stores parts in non-increasing order and knows its
//!   conjugate and Durfee square side.
//! * [`enumerate_partitions`] lists all partitions of `n` (capped; the list
//!   has super-polynomial size).
//! * [`count_restricted`] counts partitions under simultaneous constraints
//!   on the number of parts and the largest part, via dynamic programming,
//!   so it stays polynomial where enumeration would not be.
//!
//! Notation follows the ascending convention: the partition `2 + 2 + 4` of 8
//! renders as `"224"` (or `"[2,2,4]"` once any part exceeds 9).

use std::fmt;

use num_traits::{One, Zero};

use crate::{CountValue, Error, Result};

/// Hard cap on `n` for full enumeration. `p(60)` is 966467 partitions;
/// beyond that the result list itself becomes the bottleneck.
pub const ENUMERATION_CAP: u64 = 60;

/// Hard cap on `n` for the counting DP. The table is `O(n^2)` big integers.
pub const COUNTING_CAP: u64 = 200;

/// A partition of a nonnegative integer into positive parts.
///
/// Parts are stored in non-increasing order; the empty partition represents
/// `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in non-increasing order.
    ///
    /// Returns an error if any part is zero or the order is violated.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::Notation {
                    input: format!("{parts:?}"),
                    reason: "parts must be non-increasing".into(),
                });
            }
        }
        if parts.contains(&0) {
            return Err(Error::Notation {
                input: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        Ok(Self { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The greatest part, or 0 for the empty partition.
    pub fn greatest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The conjugate partition (transpose of the Young diagram).
    ///
    /// Column `i` of the diagram has one cell per part of size `> i`, so the
    /// conjugate's `i`-th part counts parts `>= i + 1`.
    pub fn conjugate(&self) -> Self {
        let mut parts = Vec::with_capacity(usize::try_from(self.greatest_part()).unwrap_or(0));
        let mut i = 0u32;
        while i < self.greatest_part() {
            let count = self.parts.iter().take_while(|&&p| p > i).count();
            parts.push(u32::try_from(count).expect("part count fits in u32"));
            i += 1;
        }
        Self { parts }
    }

    /// Side length of the Durfee square: the largest `d` with at least `d`
    /// parts of size at least `d`.
    pub fn durfee_side(&self) -> u32 {
        let mut d = 0u32;
        for (i, &p) in self.parts.iter().enumerate() {
            let rank = u32::try_from(i + 1).expect("rank fits in u32");
            if p >= rank {
                d = rank;
            } else {
                break;
            }
        }
        d
    }

    /// Whether the partition satisfies a constraint pair.
    pub fn matches(&self, constraint: &PartitionConstraint) -> bool {
        let count = self.num_parts() as u64;
        let greatest = u64::from(self.greatest_part());
        let count_ok = match constraint.parts {
            PartsCount::Exactly(a) => count == a,
            PartsCount::AtMost(a) => count <= a,
        };
        let greatest_ok = match constraint.largest {
            LargestPart::Equals(b) => greatest == b,
            LargestPart::AtMost(b) => greatest <= b,
        };
        count_ok && greatest_ok
    }

    /// Parses ascending notation: either a digit string like `"2224"` (each
    /// digit a part, non-decreasing, digits 1-9) or a bracketed list like
    /// `"[2,2,2,4]"` (ascending, arbitrary part sizes). `""` and `"[]"` both
    /// denote the empty partition.
    pub fn parse(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Notation {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let ascending: Vec<u32> = if let Some(body) = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
        {
            let body = body.trim();
            if body.is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|field| {
                        field
                            .trim()
                            .parse::<u32>()
                            .map_err(|_| err("each bracketed entry must be a positive integer"))
                            .and_then(|part| {
                                if part == 0 {
                                    Err(err("parts must be positive"))
                                } else {
                                    Ok(part)
                                }
                            })
                    })
                    .collect::<Result<_>>()?
            }
        } else {
            trimmed
                .chars()
                .map(|c| match c.to_digit(10) {
                    Some(0) => Err(err("digit 0 is not a part")),
                    Some(d) => Ok(d),
                    None => Err(err("expected digits 1-9 or a bracketed list")),
                })
                .collect::<Result<_>>()?
        };
        if ascending.windows(2).any(|pair| pair[0] > pair[1]) {
            return Err(err("ascending notation requires non-decreasing parts"));
        }
        let descending: Vec<u32> = ascending.into_iter().rev().collect();
        Self::new(descending)
    }

    /// Renders ascending notation: `"2224"` when all parts are single
    /// digits, `"[2,2,2,11]"` otherwise. The empty partition renders as
    /// `"[]"` so the output is never empty.
    pub fn ascending_string(&self) -> String {
        if self.parts.is_empty() {
            return "[]".to_string();
        }
        if self.greatest_part() <= 9 {
            self.parts
                .iter()
                .rev()
                .map(|p| char::from_digit(*p, 10).expect("single digit"))
                .collect()
        } else {
            let fields: Vec<String> = self.parts.iter().rev().map(u32::to_string).collect();
            format!("[{}]", fields.join(","))
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascending_string())
    }
}

/// Constraint on the number of parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartsCount {
    Exactly(u64),
    AtMost(u64),
}

/// Constraint on the largest part. For the empty partition the largest part
/// is taken to be 0, so `Equals(0)` matches only `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LargestPart {
    Equals(u64),
    AtMost(u64),
}

/// A simultaneous constraint on part count and largest part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionConstraint {
    pub parts: PartsCount,
    pub largest: LargestPart,
}

impl PartitionConstraint {
    pub fn new(parts: PartsCount, largest: LargestPart) -> Self {
        Self { parts, largest }
    }
}

/// Enumerates all partitions of `n` with the default cap of
/// [`ENUMERATION_CAP`].
///
/// Partitions are produced in ascending lexicographic order of their
/// non-increasing part tuples: for `n = 4` the order is
/// `1111, 211, 22, 31, 4`.
pub fn enumerate_partitions(n: u64) -> Result<Vec<Partition>> {
    enumerate_partitions_capped(n, ENUMERATION_CAP)
}

/// Enumerates all partitions of `n`, refusing `n > cap`.
pub fn enumerate_partitions_capped(n: u64, cap: u64) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "partition enumeration",
            requested: n,
            cap,
        });
    }
    let n = u32::try_from(n).expect("capped n fits in u32");
    let mut out = Vec::new();
    let mut stack = Vec::new();
    emit_partitions(n, &mut stack, &mut out);
    Ok(out)
}

/// Recursive generator. The stack grows non-increasingly (each new part is
/// at most the previous one) and the first part is chosen in increasing
/// order, so the output is lexicographically sorted.
fn emit_partitions(remaining: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    let limit = stack.last().copied().unwrap_or(remaining).min(remaining);
    for next in 1..=limit {
        stack.push(next);
        emit_partitions(remaining - next, stack, out);
        stack.pop();
    }
}

/// How many witnesses [`enumerate_matching`] will materialize before
/// refusing; the DP count is consulted first so the refusal costs nothing.
pub const WITNESS_CAP: u64 = 100_000;

/// Sorts partitions by their ascending part tuples, the order partition
/// tables present witness lists in (`1144 < 1234 < 2224`).
pub fn sort_by_ascending_parts(partitions: &mut [Partition]) {
    partitions.sort_by_key(|p| {
        let mut ascending = p.parts().to_vec();
        ascending.reverse();
        ascending
    });
}

/// Enumerates the partitions of `n` satisfying `constraint`, sorted by
/// ascending part tuples (see [`sort_by_ascending_parts`]).
///
/// The walk prunes on the constraint, so it is practical whenever the
/// matching set is small even when `n` is above the full-enumeration cap.
/// `n` is capped at [`COUNTING_CAP`] and the matching count (checked first
/// by [`count_restricted`]) at [`WITNESS_CAP`].
pub fn enumerate_matching(n: u64, constraint: &PartitionConstraint) -> Result<Vec<Partition>> {
    let expected = count_restricted(n, constraint)?;
    if expected > CountValue::from(WITNESS_CAP) {
        return Err(Error::CapExceeded {
            what: "witness enumeration (matching count)",
            requested: n,
            cap: WITNESS_CAP,
        });
    }
    let n32 = u32::try_from(n).expect("capped n fits in u32");
    let max_parts = match constraint.parts {
        PartsCount::Exactly(a) | PartsCount::AtMost(a) => a.min(n.max(1)),
    };
    let max_part = match constraint.largest {
        LargestPart::Equals(b) | LargestPart::AtMost(b) => b.min(n),
    };
    let mut out = Vec::new();
    let mut stack = Vec::new();
    emit_matching(
        n32,
        u32::try_from(max_part).expect("bounded by n"),
        u32::try_from(max_parts).expect("bounded by n"),
        &mut stack,
        &mut out,
    );
    out.retain(|p| p.matches(constraint));
    sort_by_ascending_parts(&mut out);
    debug_assert_eq!(CountValue::from(out.len()), expected);
    Ok(out)
}

fn emit_matching(
    remaining: u32,
    max_part: u32,
    parts_left: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if parts_left == 0 || max_part == 0 {
        return;
    }
    let limit = stack
        .last()
        .copied()
        .unwrap_or(remaining)
        .min(remaining)
        .min(max_part);
    // Even `parts_left` parts at the current limit must reach `remaining`.
    if u64::from(parts_left) * u64::from(limit) < u64::from(remaining) {
        return;
    }
    for next in 1..=limit {
        stack.push(next);
        emit_matching(remaining - next, max_part, parts_left - 1, stack, out);
        stack.pop();
    }
}

/// Counts partitions of `n` satisfying `constraint` without enumerating
/// them, with the default cap of [`COUNTING_CAP`].
pub fn count_restricted(n: u64, constraint: &PartitionConstraint) -> Result<CountValue> {
    count_restricted_capped(n, constraint, COUNTING_CAP)
}

/// Counts partitions of `n` satisfying `constraint`, refusing `n > cap`.
///
/// # Edge cases
///
/// The empty partition has 0 parts and greatest part 0, so for `n = 0` the
/// count is 1 exactly when the constraint admits 0 parts and a greatest
/// part of 0 (`Exactly(0)` or any `AtMost`).
pub fn count_restricted_capped(
    n: u64,
    constraint: &PartitionConstraint,
    cap: u64,
) -> Result<CountValue> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "restricted partition count",
            requested: n,
            cap,
        });
    }
    let zero = CountValue::zero;
    let one = CountValue::one;

    // Reduce `Equals(b)` on the greatest part by peeling one part of size
    // exactly `b`; what remains is bounded by `b`.
    let (n, parts, bound) = match constraint.largest {
        LargestPart::AtMost(b) => (n, constraint.parts, b.min(n)),
        LargestPart::Equals(0) => {
            // Only the empty partition; check the parts constraint on it.
            let matches_zero = match constraint.parts {
                PartsCount::Exactly(a) => a == 0,
                PartsCount::AtMost(_) => true,
            };
            return Ok(if n == 0 && matches_zero {
                one()
            } else {
                zero()
            });
        }
        LargestPart::Equals(b) => {
            if b > n {
                return Ok(zero());
            }
            let reduced_parts = match constraint.parts {
                PartsCount::Exactly(0) => return Ok(zero()),
                PartsCount::Exactly(a) => PartsCount::Exactly(a - 1),
                PartsCount::AtMost(0) => return Ok(zero()),
                PartsCount::AtMost(a) => PartsCount::AtMost(a - 1),
            };
            (n - b, reduced_parts, b.min(n - b))
        }
    };

    let s = usize::try_from(n).expect("capped n fits in usize");
    let bound = usize::try_from(bound).expect("bounded by n");
    let (exact, raw_count) = match parts {
        PartsCount::Exactly(a) => (true, a),
        PartsCount::AtMost(a) => (false, a),
    };
    // More than `n` positive parts can never sum to `n` (and for `n = 0`
    // only 0 parts work), so clamp the DP height.
    let max_c = usize::try_from(raw_count.min(n)).expect("bounded by n");
    if exact && raw_count > n {
        return Ok(zero());
    }

    // dp[c][t] = number of partitions of t into exactly c parts, each <= bound.
    // Recurrence over the part value v: either no part equals v (drop v), or
    // remove one part equal to v (c-1 parts of t-v, parts still <= v).
    // Implemented as the standard two-index scan: dp_v[c][t] =
    // dp_{v-1}[c][t] + dp_v[c-1][t-v].
    let mut dp = vec![vec![zero(); s + 1]; max_c + 1];
    dp[0][0] = one();
    for v in 1..=bound {
        for c in 1..=max_c {
            for t in v..=s {
                let add = dp[c - 1][t - v].clone();
                dp[c][t] += add;
            }
        }
    }

    let total = if exact {
        dp[max_c][s].clone()
    } else {
        let mut acc = zero();
        for row in dp.iter().take(max_c + 1) {
            acc += &row[s];
        }
        acc
    };
    Ok(total)
}
