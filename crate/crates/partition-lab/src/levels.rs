//! The level decomposition `p(n) = S_1(n) + S_2(n) + ... + S_K(n)`,
//! `K = floor(sqrt(n))`.
//!
//! Level `k >= 3` is a nested sum over index vectors `(a_3, ..., a_k)`:
//!
//! * index bound: `a_m <= floor((n - (k^2 - m) - T_m) / m)` where
//!   `T_m = sum_{l > m} l * (a_l - 1)`,
//! * correction: `D = sum_{m=3}^{k} m * (a_m - 1)`,
//! * value: `(prod a_m) * sum_{i=1}^{floor(R/2)} i * (R - 1 - 2(i-1))` with
//!   `R = n - (k^2 - 2) - D`.
//!
//! Levels 1 and 2 are the base cases `S_1(n) = n` and the single sum with
//! an empty index vector.
//!
//! Since every bound for `a_m` is equivalent to a partial-displacement
//! inequality, a vector is in bounds exactly when `D <= n - k^2`; regrouping
//! by displacement turns the nested sum into a dot product between a
//! displacement histogram (coefficients of `prod_m 1/(1-x^m)^2`) and the
//! closed-form inner sum. [`s_level`] uses that route, which is polynomial
//! in `n`; [`s_level_by_vectors`] walks the nested sums literally and serves
//! as the cross-checking route.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{CountValue, Error, Result};

/// Integer square root: the largest `r` with `r * r <= n`.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// An index vector `(a_3, ..., a_k)` addressing one inner sum of level `k`.
///
/// For `k = 2` the vector is empty; `k = 1` has no vectors at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelIndexVector {
    level: u32,
    /// `a[i]` is the index `a_{i+3}`; empty exactly when `level == 2`.
    a: Vec<u64>,
}

impl LevelIndexVector {
    /// Builds a vector for `level >= 2` with entries `(a_3, ..., a_k)`.
    pub fn new(level: u32, a: Vec<u64>) -> Result<Self> {
        let expected = level.saturating_sub(2) as usize;
        if level < 2 || a.len() != expected {
            return Err(Error::Notation {
                input: format!("level {level} with indices {a:?}"),
                reason: format!("level k needs exactly k-2 indices, got {}", a.len()),
            });
        }
        if a.contains(&0) {
            return Err(Error::Notation {
                input: format!("level {level} with indices {a:?}"),
                reason: "indices must be >= 1".into(),
            });
        }
        Ok(Self { level, a })
    }

    /// The empty vector of level 2.
    pub fn level2() -> Self {
        Self {
            level: 2,
            a: Vec::new(),
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Entries `(a_3, ..., a_k)` in that order.
    pub fn indices(&self) -> &[u64] {
        &self.a
    }

    /// `D = sum_{m=3}^{k} m * (a_m - 1)`.
    pub fn displacement(&self) -> u64 {
        self.a
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64 + 3) * (a - 1))
            .sum()
    }

    /// `prod_{m=3}^{k} a_m` (empty product = 1).
    pub fn multiplier(&self) -> CountValue {
        let mut acc = CountValue::from(1u32);
        for &a in &self.a {
            acc *= CountValue::from(a);
        }
        acc
    }

    /// Subscript label: the level first, then `a_k` down to `a_3`, so the
    /// level-4 vector `(a_3=2, a_4=1)` is `S_412`. Falls back to a
    /// dot-separated form once any component exceeds one digit.
    pub fn label(&self) -> String {
        let mut fields: Vec<u64> = vec![u64::from(self.level)];
        fields.extend(self.a.iter().rev());
        if fields.iter().all(|&f| f <= 9) {
            let digits: String = fields.iter().map(u64::to_string).collect();
            format!("S_{digits}")
        } else {
            let dotted: Vec<String> = fields.iter().map(u64::to_string).collect();
            format!("S_{}", dotted.join("."))
        }
    }
}

impl fmt::Display for LevelIndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Closed form of the inner sum `sum_{i=1}^{floor(R/2)} i * (R - 1 - 2(i-1))`
/// for `R >= 2`; empty (zero) for `R <= 1`.
fn inner_sum(r: i128) -> u128 {
    if r < 2 {
        return 0;
    }
    let r = r as u128;
    let m = r / 2;
    // Summands i * (R - 1 - 2(i-1)) are concave in i, so positivity at both
    // endpoints implies positivity throughout.
    debug_assert!(r > 1, "first summand must be >= 1");
    debug_assert!(m * (r + 1 - 2 * m) >= 1, "last summand must be >= 1");
    (r + 1) * m * (m + 1) / 2 - m * (m + 1) * (2 * m + 1) / 3
}

/// Evaluates one inner sum: `(prod a_m) * sum_i i * (R - 1 - 2(i-1))` with
/// `R = n - (k^2 - 2) - D`. Out-of-bound vectors simply yield 0.
///
/// `k` must equal `v.level()`.
pub fn s_inner(k: u32, n: u64, v: &LevelIndexVector) -> CountValue {
    assert_eq!(k, v.level(), "index vector belongs to a different level");
    let ksq = i128::from(k) * i128::from(k);
    let r = i128::from(n) - (ksq - 2) - i128::from(v.displacement());
    let inner = inner_sum(r);
    if inner == 0 {
        return CountValue::zero();
    }
    v.multiplier() * CountValue::from(inner)
}

/// Lists every in-bounds index vector of level `k >= 3` for a given `n`, in
/// the nesting order of the defining sum (outermost index `a_k` slowest).
pub fn index_vectors(k: u32, n: u64) -> Vec<LevelIndexVector> {
    assert!(k >= 3, "index vectors exist only for levels k >= 3");
    let mut out = Vec::new();
    let mut stack = vec![0u64; (k - 2) as usize];
    descend(k, n, k, 0, &mut stack, &mut out);
    out
}

/// Chooses `a_m` for `m` descending from `k` to 3. `t` carries
/// `sum_{l > m} l * (a_l - 1)`.
fn descend(k: u32, n: u64, m: u32, t: u64, stack: &mut Vec<u64>, out: &mut Vec<LevelIndexVector>) {
    let ksq = i128::from(k) * i128::from(k);
    let numerator = i128::from(n) - (ksq - i128::from(m)) - i128::from(t);
    if numerator < i128::from(m) {
        return; // bound below 1: an empty sum
    }
    let bound = (numerator / i128::from(m)) as u64;
    for a in 1..=bound {
        stack[(m - 3) as usize] = a;
        let t_next = t + u64::from(m) * (a - 1);
        if m == 3 {
            out.push(LevelIndexVector {
                level: k,
                a: stack.clone(),
            });
        } else {
            descend(k, n, m - 1, t_next, stack, out);
        }
    }
}

/// `S_k(n)` via the displacement-histogram regrouping. Exact, polynomial in
/// `n`, and identical to the literal nested sums (see
/// [`s_level_by_vectors`]).
pub fn s_level(k: u32, n: u64) -> CountValue {
    assert!(k >= 1, "levels are numbered from 1");
    if k == 1 {
        return CountValue::from(n);
    }
    let ksq = u64::from(k) * u64::from(k);
    if n < ksq {
        return CountValue::zero();
    }
    let budget = usize::try_from(n - ksq).expect("budget fits in usize");
    // Coefficients of prod_{m=3}^{k} 1/(1-x^m)^2 up to x^budget: histogram
    // of sum-of-multipliers by displacement. Each 1/(1-x^m) factor is a
    // stride-m running sum.
    let mut hist = vec![CountValue::zero(); budget + 1];
    hist[0] = CountValue::from(1u32);
    for m in 3..=k as usize {
        for _ in 0..2 {
            for d in m..=budget {
                let add = hist[d - m].clone();
                hist[d] += add;
            }
        }
    }
    let mut acc = CountValue::zero();
    for (d, weight) in hist.iter().enumerate() {
        // R = n - (k^2 - 2) - d = budget + 2 - d >= 2 for every d in range.
        let r = (budget - d) as i128 + 2;
        acc += weight * CountValue::from(inner_sum(r));
    }
    acc
}

/// `S_k(n)` by walking the nested sums index vector by index vector.
///
/// This is the formula exactly as displayed; it costs one `s_inner` per
/// vector and the vector count grows super-polynomially, so prefer
/// [`s_level`] outside cross-checks and per-vector reporting.
pub fn s_level_by_vectors(k: u32, n: u64) -> CountValue {
    assert!(k >= 1, "levels are numbered from 1");
    match k {
        1 => CountValue::from(n),
        2 => s_inner(2, n, &LevelIndexVector::level2()),
        _ => {
            let mut acc = CountValue::zero();
            for v in index_vectors(k, n) {
                acc += s_inner(k, n, &v);
            }
            acc
        }
    }
}

/// Per-level decomposition of `p(n)`.
///
/// `total` always equals the sum of the per-level values; that the total
/// equals `p(n)` is the Theorem being machine-checked, so it is enforced in
/// tests rather than by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelBreakdown {
    n: u64,
    per_level: BTreeMap<u32, CountValue>,
    total: CountValue,
    zero_convention: bool,
}

impl LevelBreakdown {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Map `k -> S_k(n)` for `k = 1..=floor(sqrt(n))`; empty for `n = 0`.
    pub fn per_level(&self) -> &BTreeMap<u32, CountValue> {
        &self.per_level
    }

    pub fn total(&self) -> &CountValue {
        &self.total
    }

    /// True only for `n = 0`, where the total 1 is the `p(0) = 1`
    /// convention rather than a sum of levels.
    pub fn zero_convention(&self) -> bool {
        self.zero_convention
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("breakdown serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn from_parts(n: u64, per_level: BTreeMap<u32, CountValue>) -> Self {
        let total = per_level.values().sum();
        Self {
            n,
            per_level,
            total,
            zero_convention: false,
        }
    }
}

impl Serialize for LevelBreakdown {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = 3 + usize::from(self.zero_convention);
        let mut state = serializer.serialize_struct("LevelBreakdown", fields)?;
        state.serialize_field("n", &self.n)?;
        state.serialize_field("levels", &LevelsAsStrings(&self.per_level))?;
        state.serialize_field("total", &self.total.to_string())?;
        if self.zero_convention {
            state.serialize_field("p0_convention", &true)?;
        }
        state.end()
    }
}

/// Renders the level map with decimal-string values, keys in numeric order.
struct LevelsAsStrings<'a>(&'a BTreeMap<u32, CountValue>);

impl Serialize for LevelsAsStrings<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LevelBreakdown {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Dto {
            n: u64,
            levels: BTreeMap<String, String>,
            total: String,
            #[serde(default, rename = "p0_convention")]
            zero_convention: bool,
        }

        let dto = Dto::deserialize(deserializer)?;
        let parse_count = |text: &str, what: &str| -> std::result::Result<CountValue, D::Error> {
            if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(D::Error::custom(format!(
                    "{what} must be a decimal string, got {text:?}"
                )));
            }
            Ok(text.parse().expect("digit-only string parses"))
        };

        let total = parse_count(&dto.total, "total")?;
        let mut per_level = BTreeMap::new();
        for (key, value) in &dto.levels {
            let k: u32 = key
                .parse()
                .map_err(|_| D::Error::custom(format!("level key {key:?} is not an integer")))?;
            per_level.insert(k, parse_count(value, "level value")?);
        }

        if dto.n == 0 {
            if !per_level.is_empty() || total != CountValue::from(1u32) {
                return Err(D::Error::custom(
                    "n = 0 breakdown must have no levels and total 1",
                ));
            }
            return Ok(LevelBreakdown {
                n: 0,
                per_level,
                total,
                zero_convention: true,
            });
        }
        if dto.zero_convention {
            return Err(D::Error::custom("p0_convention applies only to n = 0"));
        }
        // Compare lazily: a forged huge n must not allocate a huge range.
        let k_max = isqrt(dto.n) as u32;
        let spans_levels =
            per_level.len() as u64 == u64::from(k_max) && per_level.keys().copied().eq(1..=k_max);
        if !spans_levels {
            let found: Vec<u32> = per_level.keys().copied().collect();
            return Err(D::Error::custom(format!(
                "levels must cover exactly 1..={k_max} for n = {}, got {found:?}",
                dto.n
            )));
        }
        let sum: CountValue = per_level.values().sum();
        if sum != total {
            return Err(D::Error::custom(format!(
                "total {total} does not match the level sum {sum}"
            )));
        }
        Ok(LevelBreakdown {
            n: dto.n,
            per_level,
            total,
            zero_convention: false,
        })
    }
}

/// `p(n)` assembled level by level (sequential).
pub fn p_combinatorial(n: u64) -> LevelBreakdown {
    if n == 0 {
        return LevelBreakdown {
            n: 0,
            per_level: BTreeMap::new(),
            total: CountValue::from(1u32),
            zero_convention: true,
        };
    }
    let levels = (1..=isqrt(n) as u32).map(|k| (k, s_level(k, n))).collect();
    LevelBreakdown::from_parts(n, levels)
}

/// `p(n)` with levels evaluated concurrently.
///
/// Levels are independent and all arithmetic is exact, so the result is
/// bit-for-bit identical to [`p_combinatorial`].
pub fn p_combinatorial_parallel(n: u64) -> LevelBreakdown {
    if n == 0 {
        return p_combinatorial(0);
    }
    let levels: BTreeMap<u32, CountValue> = (1..=isqrt(n) as u32)
        .into_par_iter()
        .map(|k| (k, s_level(k, n)))
        .collect();
    LevelBreakdown::from_parts(n, levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::PartitionTable;

    fn vector(level: u32, a: &[u64]) -> LevelIndexVector {
        LevelIndexVector::new(level, a.to_vec()).unwrap()
    }

    #[test]
    fn worked_example_inner_sums() {
        assert_eq!(
            s_inner(2, 21, &LevelIndexVector::level2()),
            CountValue::from(330u32)
        );
        let s3: Vec<u32> = (1..=5)
            .map(|j| {
                s_inner(3, 21, &vector(3, &[j]))
                    .try_into()
                    .expect("small value")
            })
            .collect();
        assert_eq!(s3, vec![140, 140, 90, 32, 5]);
        assert_eq!(s_inner(4, 21, &vector(4, &[1, 1])), CountValue::from(20u32));
        assert_eq!(s_inner(4, 21, &vector(4, &[2, 1])), CountValue::from(10u32));
        assert_eq!(s_inner(4, 21, &vector(4, &[1, 2])), CountValue::from(4u32));
    }

    #[test]
    fn out_of_bounds_vectors_contribute_zero() {
        assert_eq!(s_inner(3, 12, &vector(3, &[3])), CountValue::zero());
        assert_eq!(s_inner(4, 12, &vector(4, &[1, 1])), CountValue::zero());
        assert_eq!(
            s_inner(2, 3, &LevelIndexVector::level2()),
            CountValue::zero()
        );
    }

    #[test]
    fn index_vector_fixtures() {
        let got: Vec<Vec<u64>> = index_vectors(4, 21)
            .iter()
            .map(|v| v.indices().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 1], vec![2, 1], vec![1, 2]]);

        assert!(index_vectors(3, 8).is_empty());

        let got: Vec<Vec<u64>> = index_vectors(5, 25)
            .iter()
            .map(|v| v.indices().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn index_vectors_are_exactly_the_bounded_displacements() {
        // A vector is in bounds iff its displacement is at most n - k^2, so
        // the vector list must match a direct displacement filter.
        for k in 3..=5u32 {
            for n in 0..=60u64 {
                let vectors = index_vectors(k, n);
                for v in &vectors {
                    assert!(v.displacement() + u64::from(k) * u64::from(k) <= n);
                }
                let budget = n.checked_sub(u64::from(k) * u64::from(k));
                let expected = match budget {
                    None => 0,
                    Some(b) => count_bounded_displacements(k, b),
                };
                assert_eq!(vectors.len() as u64, expected, "k={k} n={n}");
            }
        }
    }

    fn count_bounded_displacements(k: u32, budget: u64) -> u64 {
        // Number of (a_3..a_k) with sum m(a_m - 1) <= budget, counted by a
        // plain generating-function convolution with unit weights.
        let budget = budget as usize;
        let mut counts = vec![0u64; budget + 1];
        counts[0] = 1;
        for m in 3..=k as usize {
            for d in m..=budget {
                counts[d] += counts[d - m];
            }
        }
        counts.iter().sum()
    }

    #[test]
    fn level_fixtures() {
        assert_eq!(s_level(1, 7), CountValue::from(7u32));
        assert_eq!(s_level(2, 16), CountValue::from(140u32));
        assert_eq!(s_level(2, 21), CountValue::from(330u32));
        assert_eq!(s_level(3, 21), CountValue::from(407u32));
        assert_eq!(s_level(4, 21), CountValue::from(34u32));
        assert_eq!(s_level(4, 15), CountValue::zero());
    }

    #[test]
    fn levels_open_with_a_single_partition() {
        for k in 2..=17u32 {
            let n = u64::from(k) * u64::from(k);
            assert_eq!(s_level(k, n), CountValue::from(1u32), "k={k}");
        }
    }

    #[test]
    fn histogram_route_matches_literal_nested_sums() {
        for n in 0..=140u64 {
            for k in 1..=isqrt(n) as u32 {
                assert_eq!(s_level(k, n), s_level_by_vectors(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn sixteen_row_table_columns_reproduce() {
        let s2: Vec<u64> = vec![0, 0, 0, 1, 2, 5, 8, 14, 20, 30, 40, 55, 70, 91, 112, 140];
        let s31: Vec<u64> = vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 5, 8, 14, 20, 30, 40];
        let s32: Vec<u64> = vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 10, 16, 28];
        let s33: Vec<u64> = vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 6];
        let s411: Vec<u64> = vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1];
        for n in 1..=16u64 {
            let i = (n - 1) as usize;
            assert_eq!(s_level(1, n), CountValue::from(n), "S_1({n})");
            assert_eq!(s_level(2, n), CountValue::from(s2[i]), "S_2({n})");
            assert_eq!(
                s_inner(3, n, &vector(3, &[1])),
                CountValue::from(s31[i]),
                "S_31({n})"
            );
            assert_eq!(
                s_inner(3, n, &vector(3, &[2])),
                CountValue::from(s32[i]),
                "S_32({n})"
            );
            assert_eq!(
                s_inner(3, n, &vector(3, &[3])),
                CountValue::from(s33[i]),
                "S_33({n})"
            );
            assert_eq!(
                s_inner(4, n, &vector(4, &[1, 1])),
                CountValue::from(s411[i]),
                "S_411({n})"
            );
        }
    }

    #[test]
    fn levels_are_monotone_in_n() {
        for k in 1..=4u32 {
            for n in 0..=100u64 {
                assert!(s_level(k, n) <= s_level(k, n + 1), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn breakdown_of_21_matches_the_worked_example() {
        let b = p_combinatorial(21);
        let levels: Vec<(u32, u32)> = b
            .per_level()
            .iter()
            .map(|(&k, v)| (k, v.try_into().expect("small value")))
            .collect();
        assert_eq!(levels, vec![(1, 21), (2, 330), (3, 407), (4, 34)]);
        assert_eq!(b.total(), &CountValue::from(792u32));
        assert!(!b.zero_convention());
    }

    #[test]
    fn breakdown_edge_cases() {
        let one = p_combinatorial(1);
        assert_eq!(one.total(), &CountValue::from(1u32));
        assert_eq!(one.per_level().len(), 1);

        let zero = p_combinatorial(0);
        assert_eq!(zero.total(), &CountValue::from(1u32));
        assert!(zero.per_level().is_empty());
        assert!(zero.zero_convention());
    }

    #[test]
    fn breakdown_of_100_matches_frozen_levels() {
        let expected: Vec<(u32, u64)> = vec![
            (1, 100),
            (2, 40425),
            (3, 1982880),
            (4, 22073380),
            (5, 71158238),
            (6, 71899478),
            (7, 21788694),
            (8, 1610074),
            (9, 16022),
            (10, 1),
        ];
        let b = p_combinatorial(100);
        let got: Vec<(u32, u64)> = b
            .per_level()
            .iter()
            .map(|(&k, v)| (k, v.try_into().expect("fits u64")))
            .collect();
        assert_eq!(got, expected);
        assert_eq!(b.total(), &CountValue::from(190569292u64));
    }

    #[test]
    fn theorem_holds_on_a_small_sweep() {
        let table = PartitionTable::build(120);
        for n in 0..=120u64 {
            assert_eq!(p_combinatorial(n).total(), table.get(n).unwrap(), "p({n})");
        }
    }

    #[test]
    fn parallel_evaluation_is_bit_identical() {
        for n in [0u64, 1, 21, 64, 100] {
            assert_eq!(p_combinatorial(n), p_combinatorial_parallel(n));
        }
    }

    #[test]
    fn breakdown_json_is_stable_and_round_trips() {
        let b = p_combinatorial(21);
        let json = b.to_json_string();
        assert_eq!(
            json,
            r#"{"n":21,"levels":{"1":"21","2":"330","3":"407","4":"34"},"total":"792"}"#
        );
        assert_eq!(LevelBreakdown::from_json_str(&json).unwrap(), b);

        let zero = p_combinatorial(0);
        let json = zero.to_json_string();
        assert_eq!(
            json,
            r#"{"n":0,"levels":{},"total":"1","p0_convention":true}"#
        );
        assert_eq!(LevelBreakdown::from_json_str(&json).unwrap(), zero);
    }

    #[test]
    fn breakdown_json_rejects_inconsistent_documents() {
        let cases = [
            // total does not match the level sum
            r#"{"n":21,"levels":{"1":"21","2":"330","3":"407","4":"34"},"total":"793"}"#,
            // missing level 4
            r#"{"n":21,"levels":{"1":"21","2":"330","3":"407"},"total":"758"}"#,
            // non-decimal count
            r#"{"n":21,"levels":{"1":"21","2":"330","3":"407","4":"thirty"},"total":"792"}"#,
            // zero convention on a positive n
            r#"{"n":21,"levels":{"1":"21","2":"330","3":"407","4":"34"},"total":"792","p0_convention":true}"#,
            // n = 0 with levels
            r#"{"n":0,"levels":{"1":"1"},"total":"1"}"#,
        ];
        for text in cases {
            assert!(LevelBreakdown::from_json_str(text).is_err(), "{text}");
        }
    }

    #[test]
    fn labels_follow_the_subscript_convention() {
        assert_eq!(LevelIndexVector::level2().label(), "S_2");
        assert_eq!(vector(3, &[4]).label(), "S_34");
        assert_eq!(vector(4, &[2, 1]).label(), "S_412");
        assert_eq!(vector(4, &[1, 2]).label(), "S_421");
        assert_eq!(vector(3, &[12]).label(), "S_3.12");
    }

    #[test]
    fn isqrt_is_exact() {
        for n in 0..=2000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "n={n}");
        }
        assert_eq!(isqrt(u64::MAX), (1u64 << 32) - 1);
    }
}
