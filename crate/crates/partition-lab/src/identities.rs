//! Machine checks for the Gaussian-binomial identities: Pascal analogues,
//! both q-binomial theorems, the Jacobi triple product, the partition
//! interpretation of coefficients, the grid identity, and conjugation
//! duality.
//!
//! Every check is exact. The two infinite identities are verified on
//! truncation-validity regions: monomials the truncation provably does not
//! affect. Each verifier returns a report rather than a bare boolean so
//! failures carry their first counterexample.

use num_bigint::BigInt;

use crate::euler::p_euler;
use crate::multipoly::{Monomial, MultiPoly, Truncation};
use crate::partition::{
    count_restricted, enumerate_matching, LargestPart, Partition, PartitionConstraint, PartsCount,
};
use crate::qpoly::{QBinomCache, QPolynomial};
use crate::{CountValue, Error, Result};

/// Cost guard for [`verify_finite_qbt`].
pub const FINITE_QBT_CAP: u64 = 30;

/// Cost guard for [`interpretation_check`]: `n + m` at most this.
pub const INTERPRETATION_CAP: u64 = 14;

/// Cost guard for [`grid_identity`] and [`duality_check`].
pub const GRID_CAP: u64 = 60;

/// First mismatching monomial of a failed expansion comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDifference {
    pub monomial: Monomial,
    pub left: BigInt,
    pub right: BigInt,
}

fn difference_of(lhs: &MultiPoly, rhs: &MultiPoly) -> Option<TermDifference> {
    lhs.first_difference(rhs)
        .map(|(monomial, left, right)| TermDifference {
            monomial,
            left,
            right,
        })
}

/// Outcome of comparing two exact expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionReport {
    pub equal: bool,
    pub first_difference: Option<TermDifference>,
}

impl ExpansionReport {
    fn from_sides(lhs: &MultiPoly, rhs: &MultiPoly) -> Self {
        let first_difference = difference_of(lhs, rhs);
        Self {
            equal: first_difference.is_none(),
            first_difference,
        }
    }
}

/// Result of checking both Pascal analogues at `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalReport {
    pub n: u32,
    pub k: u32,
    /// Smallest exponent `e` for which `[n k] = q^e [n-1 k] + [n-1 k-1]`
    /// holds, or `None` if no exponent works. The identity is sometimes
    /// quoted with an unspecified power of `q`; exact arithmetic pins it to
    /// `e = k` (uniquely, unless `k = n` where the `q^e` term multiplies
    /// zero and any `e` works, reported as 0).
    pub first_exponent: Option<u32>,
    /// Whether `[n k] = [n-1 k] + q^{n-k} [n-1 k-1]` holds.
    pub second_holds: bool,
}

/// Checks the two Pascal identities for `1 <= k <= n`.
pub fn verify_pascal(n: u32, k: u32) -> PascalReport {
    assert!((1..=n).contains(&k), "verify_pascal needs 1 <= k <= n");
    let mut cache = QBinomCache::new();
    let lhs = cache.get(n, k).clone();
    let upper = cache.get(n - 1, k).clone();
    let diagonal = cache.get(n - 1, k - 1).clone();

    let second_holds = upper.add_shifted(&diagonal, (n - k) as usize) == lhs;

    let max_e = lhs.degree().unwrap_or(0);
    let first_exponent = (0..=max_e)
        .find(|&e| diagonal.add_shifted(&upper, e) == lhs)
        .map(|e| e as u32);

    PascalReport {
        n,
        k,
        first_exponent,
        second_holds,
    }
}

/// Converts an unsigned univariate polynomial into a `(q, t, a)` term with
/// the given `t` exponent.
fn lift_qpoly(poly: &QPolynomial, t: i64) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (q, coeff) in poly.coeffs().iter().enumerate() {
        out.add_term(BigInt::from(coeff.clone()), Monomial::new(q as u32, t, 0));
    }
    out
}

/// Finite q-binomial theorem:
/// `prod_{k=0}^{n-1} (1 + q^k t) = sum_{k=0}^{n} q^{k(k-1)/2} [n k] t^k`.
///
/// Both sides are expanded exactly (no truncation); `n` is capped at
/// [`FINITE_QBT_CAP`].
pub fn verify_finite_qbt(n: u32) -> Result<ExpansionReport> {
    if u64::from(n) > FINITE_QBT_CAP {
        return Err(Error::CapExceeded {
            what: "finite q-binomial theorem expansion",
            requested: u64::from(n),
            cap: FINITE_QBT_CAP,
        });
    }
    let no_trunc = Truncation::none();
    let mut lhs = MultiPoly::one();
    for k in 0..n {
        let factor = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(1),
            Monomial::new(k, 1, 0),
        ));
        lhs = lhs.mul(&factor, &no_trunc);
    }

    let mut cache = QBinomCache::new();
    let mut rhs = MultiPoly::zero();
    for k in 0..=n {
        let shift = k * k.saturating_sub(1) / 2;
        let poly = cache.get(n, k).clone();
        let term = lift_qpoly(&poly, i64::from(k));
        rhs = rhs.add(&term.mul(
            &MultiPoly::from_term(BigInt::from(1), Monomial::new(shift, 0, 0)),
            &no_trunc,
        ));
    }
    Ok(ExpansionReport::from_sides(&lhs, &rhs))
}

/// Report for the truncated infinite q-binomial theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedQbtReport {
    /// The verified region: q-exponents `0..=q_region`, t-exponents
    /// `0..=t_region` (requested orders clipped to the summation depth `K`,
    /// beyond which truncation artifacts would leak in).
    pub q_region: u32,
    pub t_region: i64,
    pub equal: bool,
    pub first_difference: Option<TermDifference>,
}

/// Infinite q-binomial theorem, truncated at depth `K`:
///
/// `sum_{k>=0} [(1-a)(1-qa)...(1-q^{k-1}a) / ((1-q)...(1-q^k))] t^k
///  = prod_{k>=0} (1 - q^k a t) / (1 - q^k t)`.
///
/// `a` is a third formal variable. Both sides are expanded through index
/// `K` and compared on the region unaffected by the cutoff. The theorem is
/// sometimes misquoted with the product starting at `k = 1`; exact
/// expansion shows it must start at `k = 0` (a `k = 1` product already
/// disagrees at the monomial `t`), and this implementation uses the
/// `k = 0` form.
pub fn verify_infinite_qbt_truncated(k_max: u32, dq: u32, dt: u32) -> TruncatedQbtReport {
    assert!(
        k_max >= 1 && dq >= 1 && dt >= 1,
        "truncation orders must be positive"
    );
    let q_region = dq.min(k_max);
    let t_region = i64::from(dt.min(k_max));
    let trunc = Truncation::qt(dq, i64::from(dt));

    // Sum side: maintain the k-th numerator and denominator incrementally.
    let mut sum = MultiPoly::zero();
    let mut numerator = MultiPoly::one(); // (1-a)(1-qa)...(1-q^{k-1}a)
    let mut denominator = MultiPoly::one(); // expanded 1/((1-q)...(1-q^k))
    for k in 0..=k_max {
        if k > 0 {
            let a_factor = MultiPoly::one().add(&MultiPoly::from_term(
                BigInt::from(-1),
                Monomial::new(k - 1, 0, 1),
            ));
            numerator = numerator.mul(&a_factor, &trunc);
            denominator = denominator.mul(&MultiPoly::geometric_series(k, 0, 0, &trunc), &trunc);
        }
        let t_k = MultiPoly::from_term(BigInt::from(1), Monomial::new(0, i64::from(k), 0));
        sum = sum.add(&numerator.mul(&denominator, &trunc).mul(&t_k, &trunc));
    }

    // Product side, factors k = 0..=K: (1 - q^k a t) * 1/(1 - q^k t).
    let mut product = MultiPoly::one();
    for k in 0..=k_max {
        let at_factor = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(-1),
            Monomial::new(k, 1, 1),
        ));
        product = product.mul(&at_factor, &trunc);
        product = product.mul(&MultiPoly::geometric_series(k, 1, 0, &trunc), &trunc);
    }

    let in_region = |m: &Monomial| m.q <= q_region && m.t <= t_region;
    let lhs = sum.restrict(in_region);
    let rhs = product.restrict(in_region);
    let first_difference = difference_of(&lhs, &rhs);
    TruncatedQbtReport {
        q_region,
        t_region,
        equal: first_difference.is_none(),
        first_difference,
    }
}

/// Jacobi triple product, truncated to `J` factors and q-degree `D`:
///
/// `prod_{j=1}^{J} (1+q^{2j-1}z)(1+q^{2j-1}z^{-1})(1-q^{2j})
///  = sum_{j=-J}^{J} q^{j^2} z^j`  (on q-degree <= D).
///
/// Factors beyond `J` first disturb q-degree `2J + 1`, so `D <= 2J` is
/// required; larger `D` is refused rather than silently clipped.
pub fn verify_jacobi_truncated(j_max: u32, degree: u32) -> Result<ExpansionReport> {
    assert!(
        j_max >= 1 && degree >= 1,
        "depth and degree must be positive"
    );
    if degree > 2 * j_max {
        return Err(Error::TruncationTooShallow {
            depth: j_max,
            valid: 2 * j_max,
            requested: degree,
        });
    }
    let trunc = Truncation::q_only(degree);
    // z is represented by the t exponent; negative powers are fine.
    let mut product = MultiPoly::one();
    for j in 1..=j_max {
        let odd = 2 * j - 1;
        let z_up = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(1),
            Monomial::new(odd, 1, 0),
        ));
        let z_down = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(1),
            Monomial::new(odd, -1, 0),
        ));
        let even = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(-1),
            Monomial::new(2 * j, 0, 0),
        ));
        product = product
            .mul(&z_up, &trunc)
            .mul(&z_down, &trunc)
            .mul(&even, &trunc);
    }

    let mut sum = MultiPoly::zero();
    for j in -i64::from(j_max)..=i64::from(j_max) {
        let square = (j * j) as u32;
        if square <= degree {
            sum.add_term(BigInt::from(1), Monomial::new(square, j, 0));
        }
    }
    Ok(ExpansionReport::from_sides(&product, &sum))
}

/// Result of the three-way coefficient interpretation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpretationReport {
    pub n: u64,
    pub m: u64,
    pub r: u64,
    /// Coefficient of `q^r` in `[n+m n]`.
    pub coefficient: CountValue,
    /// Partitions of `n+m+1+r` into exactly `n+1` parts, greatest `= m+1`.
    pub new_count: CountValue,
    /// Partitions of `r` into at most `m` parts, each at most `n`.
    pub classical_count: CountValue,
    pub all_equal: bool,
}

/// Checks that the coefficient of `q^r` in `[n+m n]` counts partitions both
/// ways (the classical bounded-box reading and the new exact-shape reading).
pub fn interpretation_check(n: u64, m: u64, r: u64) -> Result<InterpretationReport> {
    if n + m > INTERPRETATION_CAP {
        return Err(Error::CapExceeded {
            what: "interpretation check (n + m)",
            requested: n + m,
            cap: INTERPRETATION_CAP,
        });
    }
    let poly = crate::qpoly::qbinom((n + m) as u32, n as u32);
    let coefficient = poly.coeff(usize::try_from(r).expect("r fits in usize"));
    let new_count = count_restricted(
        n + m + 1 + r,
        &PartitionConstraint::new(PartsCount::Exactly(n + 1), LargestPart::Equals(m + 1)),
    )?;
    let classical_count = count_restricted(
        r,
        &PartitionConstraint::new(PartsCount::AtMost(m), LargestPart::AtMost(n)),
    )?;
    let all_equal = coefficient == new_count && coefficient == classical_count;
    Ok(InterpretationReport {
        n,
        m,
        r,
        coefficient,
        new_count,
        classical_count,
        all_equal,
    })
}

/// Witness sets for one coefficient under both interpretations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientWitnesses {
    pub report: InterpretationReport,
    /// Partitions of `n+m+1+r` into `n+1` parts with greatest part `m+1`.
    pub new_witnesses: Vec<Partition>,
    /// Partitions of `r` into at most `m` parts, each at most `n`.
    pub classical_witnesses: Vec<Partition>,
}

/// Lists the witnesses behind [`interpretation_check`].
pub fn coefficient_witnesses(n: u64, m: u64, r: u64) -> Result<CoefficientWitnesses> {
    let report = interpretation_check(n, m, r)?;
    let new_witnesses = enumerate_matching(
        n + m + 1 + r,
        &PartitionConstraint::new(PartsCount::Exactly(n + 1), LargestPart::Equals(m + 1)),
    )?;
    let classical_witnesses = enumerate_matching(
        r,
        &PartitionConstraint::new(PartsCount::AtMost(m), LargestPart::AtMost(n)),
    )?;
    Ok(CoefficientWitnesses {
        report,
        new_witnesses,
        classical_witnesses,
    })
}

/// Result of the grid reconstruction of `p(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridReport {
    pub n: u64,
    pub grid_sum: CountValue,
    pub p_value: CountValue,
    pub equal: bool,
}

/// Grid identity: summing the coefficient of `q^{N-a-b+1}` in
/// `[a+b-2, a-1]` over all cells `a, b >= 1` with `a + b <= N + 1`
/// reconstructs `p(N)`.
pub fn grid_identity(n: u64) -> Result<GridReport> {
    if n == 0 || n > GRID_CAP {
        return Err(Error::CapExceeded {
            what: "grid identity",
            requested: n,
            cap: GRID_CAP,
        });
    }
    let mut cache = QBinomCache::new();
    let mut grid_sum = CountValue::from(0u32);
    for a in 1..=n {
        for b in 1..=(n + 1 - a) {
            let r = n + 1 - a - b;
            let poly = cache.get((a + b - 2) as u32, (a - 1) as u32);
            grid_sum += poly.coeff(usize::try_from(r).expect("r fits in usize"));
        }
    }
    let p_value = p_euler(n);
    let equal = grid_sum == p_value;
    Ok(GridReport {
        n,
        grid_sum,
        p_value,
        equal,
    })
}

/// Result of the conjugation-duality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub count_ab: CountValue,
    pub count_ba: CountValue,
    pub counts_equal: bool,
    /// Whether conjugation maps the `(a parts, greatest b)` witness set
    /// exactly onto the `(b parts, greatest a)` witness set.
    pub conjugation_bijects: bool,
}

/// Checks `p(N | exactly a parts, greatest = b) = p(N | exactly b parts,
/// greatest = a)`, and that conjugation realizes the bijection.
pub fn duality_check(n: u64, a: u64, b: u64) -> Result<DualityReport> {
    if n > GRID_CAP {
        return Err(Error::CapExceeded {
            what: "duality check",
            requested: n,
            cap: GRID_CAP,
        });
    }
    let ab = PartitionConstraint::new(PartsCount::Exactly(a), LargestPart::Equals(b));
    let ba = PartitionConstraint::new(PartsCount::Exactly(b), LargestPart::Equals(a));
    let count_ab = count_restricted(n, &ab)?;
    let count_ba = count_restricted(n, &ba)?;

    let mut conjugated: Vec<Partition> = enumerate_matching(n, &ab)?
        .iter()
        .map(Partition::conjugate)
        .collect();
    crate::partition::sort_by_ascending_parts(&mut conjugated);
    let other = enumerate_matching(n, &ba)?;
    let conjugation_bijects = conjugated == other;

    Ok(DualityReport {
        n,
        a,
        b,
        counts_equal: count_ab == count_ba,
        count_ab,
        count_ba,
        conjugation_bijects,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_fixtures_hold() {
        for (n, k) in [(2u32, 1u32), (6, 3), (10, 4)] {
            let report = verify_pascal(n, k);
            assert_eq!(report.first_exponent, Some(k), "({n},{k}) first identity");
            assert!(report.second_holds, "({n},{k}) second identity");
        }
    }

    #[test]
    fn pascal_exponent_is_k_everywhere_below_the_diagonal() {
        for n in 1..=15u32 {
            for k in 1..=n {
                let report = verify_pascal(n, k);
                assert!(report.second_holds, "({n},{k})");
                let expected = if k < n { Some(k) } else { Some(0) };
                assert_eq!(report.first_exponent, expected, "({n},{k})");
            }
        }
    }

    #[test]
    fn finite_qbt_holds_for_small_n() {
        for n in [0u32, 1, 4, 12] {
            let report = verify_finite_qbt(n).unwrap();
            assert!(report.equal, "n={n}: {:?}", report.first_difference);
        }
        assert!(verify_finite_qbt(31).is_err());
    }

    #[test]
    fn infinite_qbt_holds_on_the_truncation_region() {
        let report = verify_infinite_qbt_truncated(8, 8, 8);
        assert!(report.equal, "{:?}", report.first_difference);
        assert_eq!(report.q_region, 8);
        assert_eq!(report.t_region, 8);
    }

    #[test]
    fn infinite_qbt_smallest_case_matches_hand_expansion() {
        let report = verify_infinite_qbt_truncated(1, 1, 1);
        assert!(report.equal, "{:?}", report.first_difference);
        // Both sides restricted to q,t <= 1: 1 + t + qt - at - qat.
        let trunc = Truncation::qt(1, 1);
        let mut expected = MultiPoly::one();
        expected.add_term(BigInt::from(1), Monomial::new(0, 1, 0));
        expected.add_term(BigInt::from(1), Monomial::new(1, 1, 0));
        expected.add_term(BigInt::from(-1), Monomial::new(0, 1, 1));
        expected.add_term(BigInt::from(-1), Monomial::new(1, 1, 1));
        // Rebuild the sum side independently to pin the five terms.
        let mut sum = MultiPoly::one();
        let numerator = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(-1),
            Monomial::new(0, 0, 1),
        ));
        let denominator = MultiPoly::geometric_series(1, 0, 0, &trunc);
        let t = MultiPoly::from_term(BigInt::from(1), Monomial::new(0, 1, 0));
        sum = sum.add(&numerator.mul(&denominator, &trunc).mul(&t, &trunc));
        assert_eq!(sum, expected);
    }

    #[test]
    fn infinite_qbt_region_is_clipped_to_depth() {
        let report = verify_infinite_qbt_truncated(4, 9, 4);
        assert!(report.equal, "{:?}", report.first_difference);
        assert_eq!(report.q_region, 4, "requested Dq=9 must clip to K=4");
        assert_eq!(report.t_region, 4);
    }

    #[test]
    fn jacobi_fixtures_hold() {
        let report = verify_jacobi_truncated(5, 10).unwrap();
        assert!(report.equal, "{:?}", report.first_difference);

        assert!(matches!(
            verify_jacobi_truncated(3, 7),
            Err(Error::TruncationTooShallow {
                depth: 3,
                valid: 6,
                requested: 7,
            })
        ));
    }

    #[test]
    fn jacobi_smallest_case_has_exactly_three_terms() {
        // (1+qz)(1+qz^{-1})(1-q^2) restricted to degree <= 2: the q^2 terms
        // cancel, leaving 1 + qz + qz^{-1} — the sum side exactly.
        let report = verify_jacobi_truncated(1, 2).unwrap();
        assert!(report.equal, "{:?}", report.first_difference);

        let trunc = Truncation::q_only(2);
        let z_up = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(1),
            Monomial::new(1, 1, 0),
        ));
        let z_down = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(1),
            Monomial::new(1, -1, 0),
        ));
        let even = MultiPoly::one().add(&MultiPoly::from_term(
            BigInt::from(-1),
            Monomial::new(2, 0, 0),
        ));
        let product = z_up.mul(&z_down, &trunc).mul(&even, &trunc);
        let terms: Vec<(Monomial, BigInt)> =
            product.terms().map(|(m, c)| (*m, c.clone())).collect();
        assert_eq!(
            terms,
            vec![
                (Monomial::new(0, 0, 0), BigInt::from(1)),
                (Monomial::new(1, -1, 0), BigInt::from(1)),
                (Monomial::new(1, 1, 0), BigInt::from(1)),
            ]
        );
    }

    #[test]
    fn interpretation_fixtures_hold() {
        let report = interpretation_check(3, 3, 3).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.coefficient, CountValue::from(3u32));

        let witnesses = coefficient_witnesses(3, 3, 3).unwrap();
        let strings: Vec<String> = witnesses
            .new_witnesses
            .iter()
            .map(Partition::ascending_string)
            .collect();
        assert_eq!(strings, vec!["1144", "1234", "2224"]);
        let classical: Vec<String> = witnesses
            .classical_witnesses
            .iter()
            .map(Partition::ascending_string)
            .collect();
        assert_eq!(classical, vec!["111", "12", "3"]);

        let report = interpretation_check(2, 4, 4).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.coefficient, CountValue::from(3u32));

        // Beyond the degree bound every count is zero.
        let report = interpretation_check(3, 4, 13).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.coefficient, CountValue::from(0u32));

        assert!(interpretation_check(8, 7, 0).is_err());
    }

    #[test]
    fn interpretation_holds_exhaustively_to_twelve() {
        for n in 0..=12u64 {
            for m in 0..=(12 - n) {
                for r in 0..=(n * m + 2) {
                    let report = interpretation_check(n, m, r).unwrap();
                    assert!(
                        report.all_equal,
                        "n={n} m={m} r={r}: coeff={} new={} classical={}",
                        report.coefficient, report.new_count, report.classical_count
                    );
                }
            }
        }
    }

    #[test]
    fn grid_identity_fixtures_hold() {
        assert_eq!(grid_identity(1).unwrap().grid_sum, CountValue::from(1u32));
        assert_eq!(grid_identity(4).unwrap().grid_sum, CountValue::from(5u32));
        assert_eq!(grid_identity(7).unwrap().grid_sum, CountValue::from(15u32));
        for n in 1..=25u64 {
            assert!(grid_identity(n).unwrap().equal, "N={n}");
        }
        assert!(grid_identity(61).is_err());
        assert!(grid_identity(0).is_err());
    }

    #[test]
    fn duality_fixtures_hold() {
        let report = duality_check(10, 4, 4).unwrap();
        assert!(report.counts_equal);
        assert!(report.conjugation_bijects);
        assert_eq!(report.count_ab, CountValue::from(3u32));

        let report = duality_check(9, 1, 9).unwrap();
        assert!(report.counts_equal);
        assert!(report.conjugation_bijects);
        assert_eq!(report.count_ab, CountValue::from(1u32));

        let report = duality_check(13, 4, 4).unwrap();
        assert!(report.counts_equal);
        assert!(report.conjugation_bijects);

        // Sweep small cases, including empty witness sets.
        for n in 1..=18u64 {
            for a in 1..=n {
                for b in 1..=n {
                    let report = duality_check(n, a, b).unwrap();
                    assert!(report.counts_equal, "n={n} a={a} b={b}");
                    assert!(report.conjugation_bijects, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn witness_table_for_row_six_lists_every_coefficient() {
        // Row [6 k]: the coefficient of q^r lists the partitions of 7 + r
        // into 7 - k parts with greatest part k + 1.
        let rows: [&[&[&str]]; 7] = [
            &[&["1111111"]],
            &[
                &["111112"],
                &["111122"],
                &["111222"],
                &["112222"],
                &["122222"],
                &["222222"],
            ],
            &[
                &["11113"],
                &["11123"],
                &["11133", "11223"],
                &["11233", "12223"],
                &["11333", "12233", "22223"],
                &["12333", "22233"],
                &["13333", "22333"],
                &["23333"],
                &["33333"],
            ],
            &[
                &["1114"],
                &["1124"],
                &["1134", "1224"],
                &["1144", "1234", "2224"],
                &["1244", "1334", "2234"],
                &["1344", "2244", "2334"],
                &["1444", "2344", "3334"],
                &["2444", "3344"],
                &["3444"],
                &["4444"],
            ],
            &[
                &["115"],
                &["125"],
                &["135", "225"],
                &["145", "235"],
                &["155", "245", "335"],
                &["255", "345"],
                &["355", "445"],
                &["455"],
                &["555"],
            ],
            &[&["16"], &["26"], &["36"], &["46"], &["56"], &["66"]],
            &[&["7"]],
        ];
        let mut cache = QBinomCache::new();
        for (k, row) in rows.iter().enumerate() {
            let k = k as u64;
            let poly = cache.get(6, k as u32).clone();
            assert_eq!(poly.degree(), Some(row.len() - 1), "[6 {k}] degree");
            for (r, &expected) in row.iter().enumerate() {
                let constraint = PartitionConstraint::new(
                    PartsCount::Exactly(7 - k),
                    LargestPart::Equals(k + 1),
                );
                let witnesses = enumerate_matching(7 + r as u64, &constraint).unwrap();
                let strings: Vec<String> =
                    witnesses.iter().map(Partition::ascending_string).collect();
                assert_eq!(strings, expected, "[6 {k}] q^{r}");
                assert_eq!(
                    poly.coeff(r),
                    CountValue::from(expected.len()),
                    "[6 {k}] coeff q^{r}"
                );
            }
        }
    }
}
