//! Sparse multivariate polynomials for identity expansion.
//!
//! Monomials are `q^i * t^j * a^l` with `i, l >= 0`; `j` may be negative
//! because the Jacobi triple product uses a Laurent variable (there `t`
//! plays the role of `z`). Coefficients are signed arbitrary-precision
//! integers. Multiplication takes a [`Truncation`] and discards
//! out-of-range monomials eagerly, so partial products stay small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// Exponent triple `(q, t, a)`; ordering is lexicographic on that triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: u32,
    pub t: i64,
    pub a: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0, a: 0 };

    pub fn new(q: u32, t: i64, a: u32) -> Self {
        Self { q, t, a }
    }
}

/// Degree caps applied during multiplication; `None` means unbounded.
/// The `t` cap bounds only positive exponents (Laurent tails in the Jacobi
/// product are bounded by the factor count, not by truncation).
#[derive(Debug, Clone, Copy, Default)]
pub struct Truncation {
    pub max_q: Option<u32>,
    pub max_t: Option<i64>,
}

impl Truncation {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn q_only(max_q: u32) -> Self {
        Self {
            max_q: Some(max_q),
            max_t: None,
        }
    }

    pub fn qt(max_q: u32, max_t: i64) -> Self {
        Self {
            max_q: Some(max_q),
            max_t: Some(max_t),
        }
    }

    fn admits(&self, m: &Monomial) -> bool {
        self.max_q.is_none_or(|cap| m.q <= cap) && self.max_t.is_none_or(|cap| m.t <= cap)
    }
}

/// A sparse signed polynomial in `(q, t, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_term(BigInt::from(1), Monomial::ONE)
    }

    pub fn from_term(coeff: BigInt, monomial: Monomial) -> Self {
        let mut poly = Self::zero();
        poly.add_term(coeff, monomial);
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, monomial: &Monomial) -> BigInt {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Adds `coeff * monomial`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, coeff: BigInt, monomial: Monomial) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&monomial);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), *m);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(-c.clone(), *m);
        }
        out
    }

    /// Product with eager truncation.
    pub fn mul(&self, other: &Self, trunc: &Truncation) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = Monomial {
                    q: ma.q + mb.q,
                    t: ma.t + mb.t,
                    a: ma.a + mb.a,
                };
                if !trunc.admits(&m) {
                    continue;
                }
                out.add_term(ca * cb, m);
            }
        }
        out
    }

    /// Keeps only monomials satisfying the predicate.
    pub fn restrict<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if keep(m) {
                out.add_term(c.clone(), *m);
            }
        }
        out
    }

    /// Smallest monomial (in `(q, t, a)` order) where the two polynomials
    /// disagree, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, BigInt, BigInt)> {
        let keys = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>();
        for m in keys {
            let a = self.coeff(&m);
            let b = other.coeff(&m);
            if a != b {
                return Some((m, a, b));
            }
        }
        None
    }

    /// Truncated expansion of `1 / (1 - q^dq * t^dt * a^da)` as the
    /// geometric series `sum_s (q^dq t^dt a^da)^s`.
    ///
    /// At least one positive step among `dq`, `dt` is required so the series
    /// leaves the truncation region (otherwise it would not terminate).
    pub fn geometric_series(dq: u32, dt: i64, da: u32, trunc: &Truncation) -> Self {
        assert!(
            (dq > 0 && trunc.max_q.is_some()) || (dt > 0 && trunc.max_t.is_some()),
            "geometric series needs a truncated increasing exponent"
        );
        let mut out = Self::zero();
        let mut m = Monomial::ONE;
        loop {
            if !trunc.admits(&m) {
                break;
            }
            out.add_term(BigInt::from(1), m);
            m = Monomial {
                q: m.q + dq,
                t: m.t + dt,
                a: m.a + da,
            };
        }
        out
    }
}
