//! Polynomial closed forms for the second and third levels.
//!
//! On each residue class the level is a fixed combination of binomial
//! coefficients `C((n - shift)/period, t)`:
//!
//! * `S_2`: two parity classes, period 2, four coefficients each (a cubic);
//! * `S_3`: six classes keyed by `n mod 6`, period 6, six coefficients each
//!   (a quintic, top coefficient always 216).
//!
//! The coefficient tables are data, not code, so every constant can be
//! audited in one place and swapped for fault-injection tests. `C(x, t)` is
//! taken as 0 for `x < t`, which extends each form down to the smallest `n`
//! of its class.

use num_integer::binomial;
use num_traits::Zero;

use crate::{CountValue, Error, Result};

/// One residue class's closed form: coefficients against the binomial basis
/// `C((n - shift)/period, t)`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassForm {
    pub level: u32,
    /// Smallest `n` of the class; also the subtrahend in the basis argument.
    pub shift: u64,
    pub period: u64,
    pub coeffs: Vec<u64>,
}

impl ResidueClassForm {
    /// Evaluates the form at `n`, which must lie in the class
    /// (`n >= shift` and `n ≡ shift (mod period)`).
    pub fn evaluate(&self, n: u64) -> CountValue {
        assert!(n >= self.shift && (n - self.shift).is_multiple_of(self.period));
        let x = CountValue::from((n - self.shift) / self.period);
        let mut acc = CountValue::zero();
        for (t, &coeff) in self.coeffs.iter().enumerate() {
            let t = CountValue::from(t);
            if x < t {
                continue; // C(x, t) = 0 below the diagonal
            }
            acc += CountValue::from(coeff) * binomial(x.clone(), t);
        }
        acc
    }
}

/// Coefficient tables for levels 2 and 3, indexable by residue class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormTables {
    /// Indexed by `n mod 2`: `[even, odd]`.
    pub s2: [ResidueClassForm; 2],
    /// Indexed by `n mod 6`.
    pub s3: [ResidueClassForm; 6],
}

impl ClosedFormTables {
    /// The canonical coefficient tables.
    pub fn canonical() -> Self {
        let s2_form = |shift: u64, coeffs: &[u64]| ResidueClassForm {
            level: 2,
            shift,
            period: 2,
            coeffs: coeffs.to_vec(),
        };
        let s3_form = |shift: u64, coeffs: &[u64]| ResidueClassForm {
            level: 3,
            shift,
            period: 6,
            coeffs: coeffs.to_vec(),
        };
        Self {
            s2: [s2_form(4, &[1, 4, 5, 2]), s2_form(5, &[2, 6, 6, 2])],
            // Position r holds the class n ≡ r (mod 6); the shifts 12, 13,
            // 14, 9, 10, 11 are the smallest members of those classes.
            s3: [
                s3_form(12, &[10, 148, 590, 992, 756, 216]),
                s3_form(13, &[18, 203, 712, 1103, 792, 216]),
                s3_form(14, &[30, 272, 850, 1220, 828, 216]),
                s3_form(9, &[1, 48, 310, 695, 648, 216]),
                s3_form(10, &[2, 72, 390, 788, 684, 216]),
                s3_form(11, &[5, 105, 483, 887, 720, 216]),
            ],
        }
    }

    /// `S_2(n)` for `n >= 4` from the parity-class form.
    pub fn s2(&self, n: u64) -> Result<CountValue> {
        if n < 4 {
            return Err(Error::DomainTooSmall {
                op: "s2_closed",
                n,
                min: 4,
            });
        }
        Ok(self.s2[(n % 2) as usize].evaluate(n))
    }

    /// `S_3(n)` for `n >= 9` from the mod-6 class form.
    pub fn s3(&self, n: u64) -> Result<CountValue> {
        if n < 9 {
            return Err(Error::DomainTooSmall {
                op: "s3_closed",
                n,
                min: 9,
            });
        }
        Ok(self.s3[(n % 6) as usize].evaluate(n))
    }
}

/// `S_2(n)` for `n >= 4` using the canonical coefficients.
pub fn s2_closed(n: u64) -> Result<CountValue> {
    ClosedFormTables::canonical().s2(n)
}

/// `S_3(n)` for `n >= 9` using the canonical coefficients.
pub fn s3_closed(n: u64) -> Result<CountValue> {
    ClosedFormTables::canonical().s3(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levels::s_level;
    use num_bigint::BigInt;

    #[test]
    fn fixtures_match_the_worked_values() {
        assert_eq!(s2_closed(21).unwrap(), CountValue::from(330u32));
        assert_eq!(s2_closed(16).unwrap(), CountValue::from(140u32));
        assert_eq!(s2_closed(4).unwrap(), CountValue::from(1u32));
        assert_eq!(s3_closed(21).unwrap(), CountValue::from(407u32));
        assert_eq!(s3_closed(9).unwrap(), CountValue::from(1u32));
        assert_eq!(s3_closed(14).unwrap(), CountValue::from(30u32));
    }

    #[test]
    fn domain_violations_are_refused() {
        for n in 0..4u64 {
            assert!(s2_closed(n).is_err(), "s2({n})");
        }
        for n in 0..9u64 {
            assert!(s3_closed(n).is_err(), "s3({n})");
        }
    }

    #[test]
    fn closed_forms_match_the_nested_sums() {
        for n in 4..=150u64 {
            assert_eq!(s2_closed(n).unwrap(), s_level(2, n), "S_2({n})");
        }
        for n in 9..=150u64 {
            assert_eq!(s3_closed(n).unwrap(), s_level(3, n), "S_3({n})");
        }
    }

    #[test]
    fn coefficient_tables_have_the_documented_shape() {
        let tables = ClosedFormTables::canonical();
        for form in &tables.s2 {
            assert_eq!(form.level, 2);
            assert_eq!(form.period, 2);
            assert_eq!(form.coeffs.len(), 4);
        }
        // Each class's shift lies in the class it is indexed under.
        for (r, form) in tables.s3.iter().enumerate() {
            assert_eq!(form.level, 3);
            assert_eq!(form.period, 6);
            assert_eq!(form.coeffs.len(), 6);
            assert_eq!(*form.coeffs.last().unwrap(), 216);
            assert_eq!(form.shift % 6, r as u64);
        }
    }

    /// Newton's forward-difference interpolation through `points.len()`
    /// samples, evaluated at integer offset `x` from the first sample.
    fn newton_extrapolate(points: &[BigInt], x: usize) -> BigInt {
        let mut table: Vec<BigInt> = points.to_vec();
        let mut acc = BigInt::from(0);
        let mut basis = BigInt::from(1); // C(x, t) * t! accumulated as a product
        let mut factorial = BigInt::from(1);
        for t in 0..points.len() {
            acc += &table[0] * &basis / &factorial;
            for i in 0..table.len() - t - 1 {
                table[i] = &table[i + 1] - &table[i];
            }
            basis *= BigInt::from(x as i64 - t as i64);
            factorial *= BigInt::from(t as i64 + 1);
        }
        acc
    }

    #[test]
    fn s2_is_cubic_on_each_parity_class() {
        // Four samples determine a cubic; the fifth must then be predicted.
        for start in [4u64, 5] {
            let samples: Vec<BigInt> = (0..5)
                .map(|i| BigInt::from(s2_closed(start + 2 * i).unwrap()))
                .collect();
            let predicted = newton_extrapolate(&samples[..4], 4);
            assert_eq!(predicted, samples[4], "class starting at {start}");
        }
    }

    #[test]
    fn s3_is_quintic_on_each_residue_class() {
        for start in [9u64, 10, 11, 12, 13, 14] {
            let samples: Vec<BigInt> = (0..7)
                .map(|i| BigInt::from(s3_closed(start + 6 * i).unwrap()))
                .collect();
            let predicted = newton_extrapolate(&samples[..6], 6);
            assert_eq!(predicted, samples[6], "class starting at {start}");
        }
    }
}
