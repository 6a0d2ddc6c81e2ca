//! Hardy-Ramanujan leading-term estimate for `p(n)`.
//!
//! The convergent series for `p(n)` truncated to its first term gives
//!
//! `p(n) ~ (1/(pi*sqrt(2))) * d/dn [ sinh(c*lambda_n) / lambda_n ]`
//!
//! with `c = pi*sqrt(2/3)` and `lambda_n = sqrt(n - 1/24)`. The derivative
//! is evaluated analytically (no finite differences):
//!
//! `estimate = (1/(pi*sqrt(2))) * (c*lambda*cosh(c*lambda) - sinh(c*lambda)) / (2*lambda^3)`.
//!
//! Arithmetic is standard double precision. The estimate is meaningful for
//! `n <= 2000`; `sinh` overflows only near `c*lambda ~ 710` (n around
//! 76000), far beyond that documented range, at which point [`EstimateReport::rounded`]
//! degrades to zero.

use num_traits::FromPrimitive;

use crate::CountValue;

/// Result of the leading-term estimate at a single `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    pub n: u64,
    /// `sqrt(n - 1/24)`.
    pub lambda: f64,
    /// The leading-term value (floating point, approximate).
    pub estimate: f64,
    /// `estimate` rounded to the nearest integer (zero if the floating-point
    /// evaluation overflowed; see the module docs for the validity range).
    pub rounded: CountValue,
}

impl EstimateReport {
    /// Relative error against an exact reference value.
    pub fn relative_error(&self, exact: &CountValue) -> f64 {
        let exact = biguint_to_f64(exact);
        ((self.estimate - exact) / exact).abs()
    }
}

fn biguint_to_f64(v: &CountValue) -> f64 {
    // Adequate for error reporting; exact values near 1e308 are out of scope.
    v.to_string().parse::<f64>().expect("decimal parses as f64")
}

/// Evaluates the Hardy-Ramanujan leading term at `n >= 1`.
pub fn hr_leading_estimate(n: u64) -> EstimateReport {
    assert!(n >= 1, "the leading-term estimate requires n >= 1");
    let c = std::f64::consts::PI * (2.0f64 / 3.0).sqrt();
    let lambda = (n as f64 - 1.0 / 24.0).sqrt();
    let x = c * lambda;
    let numerator = x * x.cosh() - x.sinh();
    let estimate = numerator / (2.0 * lambda.powi(3)) / (std::f64::consts::PI * 2.0f64.sqrt());
    let rounded = CountValue::from_f64(estimate.round()).unwrap_or_default();
    EstimateReport {
        n,
        lambda,
        estimate,
        rounded,
    }
}
