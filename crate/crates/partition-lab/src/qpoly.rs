//! Gaussian (q-binomial) polynomials with exact unsigned coefficients.
//!
//! `[n k]` is defined by the rational expression
//! `(1-q^n)...(1-q^{n-k+1}) / ((1-q)...(1-q^k))` for `k <= n` and 0 for
//! `k > n`, but it is always a polynomial. Construction here uses only the
//! exact Pascal recurrence
//!
//! `[n k] = [n-1 k] + q^{n-k} * [n-1 k-1]`
//!
//! (never division), so every coefficient is an exact nonnegative integer.
//! The defining rational form appears once more in the test suite, as a
//! cross-check via polynomial multiplication.

use num_traits::Zero;

use crate::CountValue;

/// A polynomial in `q` with arbitrary-precision unsigned coefficients.
///
/// Dense representation: `coeffs[r]` is the coefficient of `q^r`. Trailing
/// zeros are trimmed; the zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<CountValue>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![CountValue::from(1u32)],
        }
    }

    /// Builds from dense coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<CountValue>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor for fixtures.
    pub fn from_u64_coeffs(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| CountValue::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^r` (zero beyond the degree).
    pub fn coeff(&self, r: usize) -> CountValue {
        self.coeffs.get(r).cloned().unwrap_or_else(CountValue::zero)
    }

    /// Dense coefficients, lowest exponent first.
    pub fn coeffs(&self) -> &[CountValue] {
        &self.coeffs
    }

    /// Value at `q = 1`.
    pub fn coeff_sum(&self) -> CountValue {
        self.coeffs.iter().sum()
    }

    /// Whether the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// `self + q^shift * other`.
    pub fn add_shifted(&self, other: &Self, shift: usize) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        let len = self.coeffs.len().max(other.coeffs.len() + shift);
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, CountValue::zero());
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[shift + i] += c;
        }
        Self::from_coeffs(coeffs)
    }
}

/// Memoized Pascal triangle of Gaussian polynomials.
///
/// Not thread-safe (interior growth through `&mut self`); confine an
/// instance to one thread. Distinct instances always agree, so duplicating
/// work across threads is harmless.
#[derive(Debug, Default)]
pub struct QBinomCache {
    /// `rows[n][k]` holds `[n k]`; row `n` has `n + 1` entries.
    rows: Vec<Vec<QPolynomial>>,
}

impl QBinomCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[n k]`, built on demand via `[n k] = [n-1 k] + q^{n-k} [n-1 k-1]`.
    pub fn get(&mut self, n: u32, k: u32) -> &QPolynomial {
        static ZERO: QPolynomial = QPolynomial { coeffs: Vec::new() };
        if k > n {
            return &ZERO;
        }
        let n = n as usize;
        let k = k as usize;
        if self.rows.is_empty() {
            self.rows.push(vec![QPolynomial::one()]);
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("rows start non-empty");
            let row_n = self.rows.len();
            let mut row = Vec::with_capacity(row_n + 1);
            row.push(QPolynomial::one());
            for j in 1..=row_n {
                let upper = prev.get(j).cloned().unwrap_or_else(QPolynomial::zero);
                let diagonal = &prev[j - 1];
                row.push(upper.add_shifted(diagonal, row_n - j));
            }
            self.rows.push(row);
        }
        &self.rows[n][k]
    }
}

/// One-shot `[n k]` keeping a single Pascal row in memory, so large
/// arguments do not pay for the whole triangle.
pub fn qbinom(n: u32, k: u32) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    let k = k.min(n - k); // [n k] and [n n-k] are the same polynomial
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for m in 1..=n {
        // Entries above the new diagonal keep [m m] = 1; the rest update in
        // place, descending so row[j - 1] is still the previous row's value.
        let top = if m <= k {
            row.push(QPolynomial::one());
            (m - 1) as usize
        } else {
            k as usize
        };
        for j in (1..=top).rev() {
            row[j] = row[j].add_shifted(&row[j - 1], (m as usize) - j);
        }
    }
    row.swap_remove(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;
    use proptest::prelude::*;

    #[test]
    fn row_four_matches_the_printed_polynomials() {
        assert_eq!(qbinom(4, 0), QPolynomial::from_u64_coeffs(&[1]));
        assert_eq!(qbinom(4, 1), QPolynomial::from_u64_coeffs(&[1, 1, 1, 1]));
        assert_eq!(qbinom(4, 2), QPolynomial::from_u64_coeffs(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(4, 3), QPolynomial::from_u64_coeffs(&[1, 1, 1, 1]));
        assert_eq!(qbinom(4, 4), QPolynomial::from_u64_coeffs(&[1]));
    }

    #[test]
    fn row_six_matches_the_printed_polynomials() {
        let expected: [&[u64]; 7] = [
            &[1],
            &[1, 1, 1, 1, 1, 1],
            &[1, 1, 2, 2, 3, 2, 2, 1, 1],
            &[1, 1, 2, 3, 3, 3, 3, 2, 1, 1],
            &[1, 1, 2, 2, 3, 2, 2, 1, 1],
            &[1, 1, 1, 1, 1, 1],
            &[1],
        ];
        for (k, coeffs) in expected.iter().enumerate() {
            assert_eq!(
                qbinom(6, k as u32),
                QPolynomial::from_u64_coeffs(coeffs),
                "[6 {k}]"
            );
        }
    }

    #[test]
    fn edge_rows_are_trivial() {
        for n in 0..20u32 {
            assert_eq!(qbinom(n, 0), QPolynomial::one());
            assert_eq!(qbinom(n, n), QPolynomial::one());
            assert!(qbinom(n, n + 1).is_zero());
            assert!(qbinom(n, n + 7).is_zero());
        }
    }

    #[test]
    fn gaussian_invariants_hold_up_to_twenty() {
        let mut cache = QBinomCache::new();
        for n in 0..=20u32 {
            for k in 0..=n {
                let poly = cache.get(n, k).clone();
                assert!(poly.is_palindromic(), "[{n} {k}] palindrome");
                assert_eq!(
                    poly.degree(),
                    Some((k * (n - k)) as usize),
                    "[{n} {k}] degree"
                );
                assert_eq!(
                    poly.coeff_sum(),
                    binomial(CountValue::from(n), CountValue::from(k)),
                    "[{n} {k}] at q=1"
                );
                assert_eq!(poly, cache.get(n, n - k).clone(), "[{n} {k}] symmetry");
            }
        }
    }

    #[test]
    fn cache_and_one_shot_agree() {
        let mut cache = QBinomCache::new();
        for (n, k) in [(5u32, 2u32), (9, 4), (12, 6), (12, 6)] {
            assert_eq!(cache.get(n, k), &qbinom(n, k));
        }
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = QPolynomial::from_u64_coeffs(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeff(7), CountValue::zero());
        assert!(QPolynomial::from_u64_coeffs(&[0, 0]).is_zero());
        assert_eq!(QPolynomial::zero().degree(), None);
    }

    #[test]
    fn add_shifted_matches_hand_expansion() {
        // (1 + q) + q^2 * (1 + q) = 1 + q + q^2 + q^3
        let p = QPolynomial::from_u64_coeffs(&[1, 1]);
        assert_eq!(
            p.add_shifted(&p, 2),
            QPolynomial::from_u64_coeffs(&[1, 1, 1, 1])
        );
        assert_eq!(p.add_shifted(&QPolynomial::zero(), 5), p);
    }

    proptest! {
        #[test]
        fn random_gaussian_polynomials_keep_their_invariants(
            n in 0u32..=24,
            offset in 0u32..=24,
        ) {
            let k = offset % (n + 1);
            let poly = qbinom(n, k);
            prop_assert!(poly.is_palindromic());
            prop_assert_eq!(poly.degree(), Some((k * (n - k)) as usize));
            prop_assert_eq!(
                poly.coeff_sum(),
                binomial(CountValue::from(n), CountValue::from(k))
            );
            prop_assert_eq!(poly, qbinom(n, n - k));
        }
    }
}
