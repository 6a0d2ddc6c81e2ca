//! Named verification suites: each cross-checks one claim family and
//! reports pass/fail with a first counterexample.
//!
//! The closed-forms suite takes its coefficient tables as a parameter so a
//! test harness can inject a corrupted table and confirm the suite catches
//! it; the CLI always passes the canonical tables.

use crate::closed_forms::ClosedFormTables;
use crate::euler::PartitionTable;
use crate::identities::{
    duality_check, grid_identity, interpretation_check, verify_finite_qbt,
    verify_infinite_qbt_truncated, verify_jacobi_truncated, verify_pascal,
};
use crate::levels::{isqrt, p_combinatorial, s_level};
use crate::partition::enumerate_partitions;
use crate::CountValue;

/// Identifier of one verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteId {
    /// `p_combinatorial(n) = p_euler(n)` on `[0, max_n]`.
    Theorem,
    /// Closed forms vs. nested sums on `[4..=max_n]` / `[9..=max_n]`.
    ClosedForms,
    /// `p_euler(n) = |enumerate_partitions(n)|` on `[0, min(max_n, 40)]`.
    Oracle,
    /// Both Pascal identities, `n <= min(max_n, 15)`.
    Pascal,
    /// Finite q-binomial theorem, `n <= min(max_n, 12)`.
    FiniteQbt,
    /// Infinite q-binomial theorem truncated at depth 8.
    InfiniteQbt,
    /// Jacobi triple product, 5 factors, degree 10.
    Jacobi,
    /// Coefficient interpretations, `n + m <= min(max_n, 12)`.
    Interpretation,
    /// Grid reconstruction of `p(N)`, `N <= min(max_n, 40)`.
    Grid,
    /// Conjugation duality, exhaustive for `n <= min(max_n, 18)`.
    Duality,
    /// Durfee-side census vs. `S_k(n)`, `n <= min(max_n, 40)`. A hypothesis
    /// under observation, not a claim: excluded from the default gate.
    Durfee,
}

impl SuiteId {
    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Theorem => "theorem",
            SuiteId::ClosedForms => "closed-forms",
            SuiteId::Oracle => "oracle",
            SuiteId::Pascal => "pascal",
            SuiteId::FiniteQbt => "finite-qbt",
            SuiteId::InfiniteQbt => "infinite-qbt",
            SuiteId::Jacobi => "jacobi",
            SuiteId::Interpretation => "interpretation",
            SuiteId::Grid => "grid",
            SuiteId::Duality => "duality",
            SuiteId::Durfee => "durfee",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        DEFAULT_SUITES
            .iter()
            .chain(std::iter::once(&SuiteId::Durfee))
            .copied()
            .find(|s| s.name() == name)
    }
}

/// The gating suites, in reporting order.
pub const DEFAULT_SUITES: &[SuiteId] = &[
    SuiteId::Theorem,
    SuiteId::ClosedForms,
    SuiteId::Oracle,
    SuiteId::Pascal,
    SuiteId::FiniteQbt,
    SuiteId::InfiniteQbt,
    SuiteId::Jacobi,
    SuiteId::Interpretation,
    SuiteId::Grid,
    SuiteId::Duality,
];

/// Result of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub passed: bool,
    /// Range summary when passing; first counterexample when failing.
    pub detail: String,
}

impl SuiteOutcome {
    fn pass(id: SuiteId, detail: String) -> Self {
        Self {
            suite: id.name().to_string(),
            passed: true,
            detail,
        }
    }

    fn fail(id: SuiteId, detail: String) -> Self {
        Self {
            suite: id.name().to_string(),
            passed: false,
            detail,
        }
    }
}

/// Runs one suite with sweeps bounded by `max_n` (each suite also applies
/// its own documented cap).
pub fn run_suite(id: SuiteId, max_n: u64) -> SuiteOutcome {
    match id {
        SuiteId::Theorem => theorem_suite(max_n),
        SuiteId::ClosedForms => closed_forms_suite_with(&ClosedFormTables::canonical(), max_n),
        SuiteId::Oracle => oracle_suite(max_n.min(40)),
        SuiteId::Pascal => pascal_suite(max_n.min(15) as u32),
        SuiteId::FiniteQbt => finite_qbt_suite(max_n.min(12) as u32),
        SuiteId::InfiniteQbt => infinite_qbt_suite(),
        SuiteId::Jacobi => jacobi_suite(),
        SuiteId::Interpretation => interpretation_suite(max_n.min(12)),
        SuiteId::Grid => grid_suite(max_n.min(40)),
        SuiteId::Duality => duality_suite(max_n.min(18)),
        SuiteId::Durfee => durfee_suite(max_n.min(40)),
    }
}

/// Runs every default suite.
pub fn run_default_suites(max_n: u64) -> Vec<SuiteOutcome> {
    DEFAULT_SUITES
        .iter()
        .map(|&id| run_suite(id, max_n))
        .collect()
}

fn theorem_suite(max_n: u64) -> SuiteOutcome {
    let mut table = PartitionTable::build(max_n);
    for n in 0..=max_n {
        let breakdown = p_combinatorial(n);
        let expected = table.p(n);
        if breakdown.total() != expected {
            return SuiteOutcome::fail(
                SuiteId::Theorem,
                format!(
                    "first mismatch at n={n}: combinatorial={}, euler={expected}",
                    breakdown.total()
                ),
            );
        }
    }
    SuiteOutcome::pass(
        SuiteId::Theorem,
        format!("p(n) matches Euler recurrence for all n in [0, {max_n}]"),
    )
}

/// Closed-forms suite against caller-provided coefficient tables.
pub fn closed_forms_suite_with(tables: &ClosedFormTables, max_n: u64) -> SuiteOutcome {
    let s2_top = max_n.max(4);
    for n in 4..=s2_top {
        let closed = tables.s2(n).expect("n >= 4 is in domain");
        let nested = s_level(2, n);
        if closed != nested {
            return SuiteOutcome::fail(
                SuiteId::ClosedForms,
                format!("level 2 mismatch at n={n}: closed={closed}, nested={nested}"),
            );
        }
    }
    let s3_top = max_n.max(9);
    for n in 9..=s3_top {
        let closed = tables.s3(n).expect("n >= 9 is in domain");
        let nested = s_level(3, n);
        if closed != nested {
            return SuiteOutcome::fail(
                SuiteId::ClosedForms,
                format!("level 3 mismatch at n={n}: closed={closed}, nested={nested}"),
            );
        }
    }
    SuiteOutcome::pass(
        SuiteId::ClosedForms,
        format!("S_2 on [4, {s2_top}] and S_3 on [9, {s3_top}] match the nested sums"),
    )
}

fn oracle_suite(max_n: u64) -> SuiteOutcome {
    let table = PartitionTable::build(max_n);
    for n in 0..=max_n {
        let count = enumerate_partitions(n)
            .expect("oracle sweep stays under the enumeration cap")
            .len();
        if table.get(n) != Some(&CountValue::from(count)) {
            return SuiteOutcome::fail(
                SuiteId::Oracle,
                format!(
                    "mismatch at n={n}: euler={}, enumeration={count}",
                    table.get(n).expect("table covers n")
                ),
            );
        }
    }
    SuiteOutcome::pass(
        SuiteId::Oracle,
        format!("Euler recurrence matches enumeration for all n in [0, {max_n}]"),
    )
}

fn pascal_suite(max_n: u32) -> SuiteOutcome {
    for n in 1..=max_n {
        for k in 1..=n {
            let report = verify_pascal(n, k);
            let expected_exponent = if k < n { Some(k) } else { Some(0) };
            if !report.second_holds || report.first_exponent != expected_exponent {
                return SuiteOutcome::fail(
                    SuiteId::Pascal,
                    format!(
                        "(n={n}, k={k}): first exponent {:?}, second holds: {}",
                        report.first_exponent, report.second_holds
                    ),
                );
            }
        }
    }
    SuiteOutcome::pass(
        SuiteId::Pascal,
        format!("both identities hold for all 1 <= k <= n <= {max_n} (first with exponent k)"),
    )
}

fn finite_qbt_suite(max_n: u32) -> SuiteOutcome {
    for n in 0..=max_n {
        let report = verify_finite_qbt(n).expect("suite bound stays under the cap");
        if !report.equal {
            let diff = report
                .first_difference
                .expect("unequal implies a difference");
            return SuiteOutcome::fail(
                SuiteId::FiniteQbt,
                format!(
                    "n={n}: first difference at q^{} t^{}: {} vs {}",
                    diff.monomial.q, diff.monomial.t, diff.left, diff.right
                ),
            );
        }
    }
    SuiteOutcome::pass(
        SuiteId::FiniteQbt,
        format!("product and sum sides agree exactly for all n <= {max_n}"),
    )
}

fn infinite_qbt_suite() -> SuiteOutcome {
    let report = verify_infinite_qbt_truncated(8, 8, 8);
    if report.equal {
        SuiteOutcome::pass(
            SuiteId::InfiniteQbt,
            format!(
                "sides agree on q <= {}, t <= {} at depth 8",
                report.q_region, report.t_region
            ),
        )
    } else {
        let diff = report
            .first_difference
            .expect("unequal implies a difference");
        SuiteOutcome::fail(
            SuiteId::InfiniteQbt,
            format!(
                "first difference at q^{} t^{} a^{}: {} vs {}",
                diff.monomial.q, diff.monomial.t, diff.monomial.a, diff.left, diff.right
            ),
        )
    }
}

fn jacobi_suite() -> SuiteOutcome {
    let report = verify_jacobi_truncated(5, 10).expect("10 <= 2*5 passes the guard");
    if report.equal {
        SuiteOutcome::pass(
            SuiteId::Jacobi,
            "5-factor product matches the theta sum through degree 10".to_string(),
        )
    } else {
        let diff = report
            .first_difference
            .expect("unequal implies a difference");
        SuiteOutcome::fail(
            SuiteId::Jacobi,
            format!(
                "first difference at q^{} z^{}: {} vs {}",
                diff.monomial.q, diff.monomial.t, diff.left, diff.right
            ),
        )
    }
}

fn interpretation_suite(cap: u64) -> SuiteOutcome {
    for n in 0..=cap {
        for m in 0..=(cap - n) {
            for r in 0..=(n * m + 2) {
                let report =
                    interpretation_check(n, m, r).expect("suite bound stays under the cap");
                if !report.all_equal {
                    return SuiteOutcome::fail(
                        SuiteId::Interpretation,
                        format!(
                            "n={n} m={m} r={r}: coeff={}, new={}, classical={}",
                            report.coefficient, report.new_count, report.classical_count
                        ),
                    );
                }
            }
        }
    }
    SuiteOutcome::pass(
        SuiteId::Interpretation,
        format!("coefficients count partitions both ways for all n + m <= {cap}"),
    )
}

fn grid_suite(max_n: u64) -> SuiteOutcome {
    for n in 1..=max_n {
        let report = grid_identity(n).expect("suite bound stays under the cap");
        if !report.equal {
            return SuiteOutcome::fail(
                SuiteId::Grid,
                format!(
                    "N={n}: grid sum {} but p({n}) = {}",
                    report.grid_sum, report.p_value
                ),
            );
        }
    }
    SuiteOutcome::pass(
        SuiteId::Grid,
        format!("grid sums reconstruct p(N) for all N in [1, {max_n}]"),
    )
}

fn duality_suite(max_n: u64) -> SuiteOutcome {
    for n in 1..=max_n {
        for a in 1..=n {
            for b in 1..=n {
                let report = duality_check(n, a, b).expect("suite bound stays under the cap");
                if !report.counts_equal || !report.conjugation_bijects {
                    return SuiteOutcome::fail(
                        SuiteId::Duality,
                        format!(
                            "n={n} a={a} b={b}: counts {} vs {}, conjugation bijection: {}",
                            report.count_ab, report.count_ba, report.conjugation_bijects
                        ),
                    );
                }
            }
        }
    }
    SuiteOutcome::pass(
        SuiteId::Duality,
        format!("counts match and conjugation bijects for all n <= {max_n}"),
    )
}

fn durfee_suite(max_n: u64) -> SuiteOutcome {
    for n in 1..=max_n {
        let mut census = vec![0u64; (isqrt(n) + 1) as usize];
        for p in enumerate_partitions(n).expect("durfee sweep stays under the enumeration cap") {
            census[p.durfee_side() as usize] += 1;
        }
        for k in 1..=isqrt(n) as u32 {
            let level = s_level(k, n);
            let counted = CountValue::from(census[k as usize]);
            if level != counted {
                return SuiteOutcome::fail(
                    SuiteId::Durfee,
                    format!(
                        "hypothesis fails at n={n}, k={k}: S_k={level}, Durfee census={counted}"
                    ),
                );
            }
        }
    }
    SuiteOutcome::pass(
        SuiteId::Durfee,
        format!("S_k(n) equals the Durfee-side-k census for all n <= {max_n} (hypothesis)"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_default_suites_pass_at_forty() {
        for outcome in run_default_suites(40) {
            assert!(outcome.passed, "{}: {}", outcome.suite, outcome.detail);
        }
    }

    #[test]
    fn durfee_suite_is_opt_in_and_passes() {
        assert!(!DEFAULT_SUITES.contains(&SuiteId::Durfee));
        let outcome = run_suite(SuiteId::Durfee, 40);
        assert!(outcome.passed, "{}", outcome.detail);
    }

    #[test]
    fn corrupted_s2_coefficients_are_caught_and_named() {
        let mut tables = ClosedFormTables::canonical();
        tables.s2[0].coeffs[2] += 1;
        let outcome = closed_forms_suite_with(&tables, 60);
        assert!(!outcome.passed);
        assert!(
            outcome.detail.contains("level 2"),
            "detail must name level 2: {}",
            outcome.detail
        );
    }

    #[test]
    fn corrupted_s3_coefficient_is_caught_and_named() {
        let mut tables = ClosedFormTables::canonical();
        tables.s3[3].coeffs[0] += 7;
        let outcome = closed_forms_suite_with(&tables, 60);
        assert!(!outcome.passed);
        assert!(outcome.detail.contains("level 3"), "{}", outcome.detail);
    }

    #[test]
    fn suite_names_round_trip() {
        for &id in DEFAULT_SUITES {
            assert_eq!(SuiteId::parse(id.name()), Some(id));
        }
        assert_eq!(SuiteId::parse("durfee"), Some(SuiteId::Durfee));
        assert_eq!(SuiteId::parse("nope"), None);
    }
}
