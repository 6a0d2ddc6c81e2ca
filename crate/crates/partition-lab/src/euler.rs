//! The partition function via Euler's pentagonal-number recurrence, with an
//! optional on-disk cache.
//!
//! `p(n) = sum_{k >= 1} (-1)^(k-1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]`,
//! where terms with negative argument vanish. Building a table up to `n`
//! costs `O(n^(3/2))` big-integer additions, since roughly `sqrt(n)` terms
//! contribute at each index.
//!
//! The cache format is plain text: line `i` (1-based line numbering, 0-based
//! values) holds the decimal expansion of `p(i - 1)`.

use std::path::Path;

use num_traits::Zero;

use crate::{CountValue, Error, Result};

/// A prefix table `p(0), p(1), ..., p(max_n)` of partition function values.
///
/// Invariants: `values[0] = 1` and the sequence is non-decreasing. Both are
/// enforced when loading from a cache; the recurrence guarantees them for
/// freshly built tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    values: Vec<CountValue>,
}

impl PartitionTable {
    /// Builds the table up to `max_n` from scratch.
    pub fn build(max_n: u64) -> Self {
        let mut table = Self {
            values: vec![CountValue::from(1u32)],
        };
        table.extend_to(max_n);
        table
    }

    /// Largest `n` the table currently covers.
    pub fn max_n(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// All values `p(0) ..= p(max_n)`.
    pub fn values(&self) -> &[CountValue] {
        &self.values
    }

    /// `p(n)`, extending the table first if needed.
    pub fn p(&mut self, n: u64) -> &CountValue {
        self.extend_to(n);
        &self.values[usize::try_from(n).expect("table index fits in usize")]
    }

    /// `p(n)` if already covered.
    pub fn get(&self, n: u64) -> Option<&CountValue> {
        usize::try_from(n).ok().and_then(|i| self.values.get(i))
    }

    /// Extends the table so it covers `max_n`. Extending an already-built
    /// table produces exactly the values a from-scratch build would.
    pub fn extend_to(&mut self, max_n: u64) {
        let target = usize::try_from(max_n).expect("table size fits in usize") + 1;
        if self.values.len() >= target {
            return;
        }
        self.values.reserve(target - self.values.len());
        for n in self.values.len()..target {
            let mut acc = CountValue::zero();
            let mut subtract = CountValue::zero();
            let mut k = 1usize;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let positive = k % 2 == 1;
                let g2 = g1 + k;
                let mut term = self.values[n - g1].clone();
                if g2 <= n {
                    term += &self.values[n - g2];
                }
                if positive {
                    acc += term;
                } else {
                    subtract += term;
                }
                k += 1;
            }
            // The pentagonal recurrence never goes negative: p(n) itself is
            // the alternating sum, so the positive terms dominate.
            debug_assert!(acc >= subtract);
            self.values.push(acc - subtract);
        }
    }

    /// Parses a cache from its textual form. Line `i` (1-based) must be the
    /// decimal expansion of `p(i - 1)`; any deviation from digits, a leading
    /// value other than 1, or a decrease between consecutive lines aborts
    /// with an error naming the offending line.
    pub fn from_cache_str(text: &str) -> Result<Self> {
        let mut values: Vec<CountValue> = Vec::new();
        for (index, line) in text.lines().enumerate() {
            let line_no = index + 1;
            let trimmed = line.trim_end_matches('\r');
            if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::CacheParse {
                    line: line_no,
                    reason: format!("expected a decimal integer, got {trimmed:?}"),
                });
            }
            let value = trimmed
                .parse::<CountValue>()
                .expect("digit-only string parses as an unsigned integer");
            if index == 0 && value != CountValue::from(1u32) {
                return Err(Error::CacheParse {
                    line: line_no,
                    reason: "first line must be p(0) = 1".into(),
                });
            }
            if let Some(prev) = values.last() {
                if &value < prev {
                    return Err(Error::CacheParse {
                        line: line_no,
                        reason: "values must be non-decreasing".into(),
                    });
                }
            }
            values.push(value);
        }
        if values.is_empty() {
            return Err(Error::CacheParse {
                line: 1,
                reason: "cache is empty".into(),
            });
        }
        Ok(Self { values })
    }

    /// Renders the cache text (one decimal value per line).
    pub fn to_cache_string(&self) -> String {
        let mut out = String::new();
        for value in &self.values {
            out.push_str(&value.to_string());
            out.push('\n');
        }
        out
    }

    /// Loads a cache file.
    pub fn load_cache(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_cache_str(&text)
    }

    /// Writes the cache file, replacing any existing content.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_cache_string())?;
        Ok(())
    }
}

/// One-shot `p(n)` by the recurrence.
pub fn p_euler(n: u64) -> CountValue {
    PartitionTable::build(n).values[usize::try_from(n).expect("fits")].clone()
}
