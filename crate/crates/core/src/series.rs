//! Truncated power series with exact integer coefficients.
//!
//! Used as a counting oracle independent of the enumerators: the coefficient
//! of q^n in Π_{k≥1} (1 − q^k)^{−2} is the number of two-color partitions of n.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::SeriesError;

/// c_0 + c_1 q + ⋯ + c_N q^N + O(q^{N+1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Series from coefficients; the truncation order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        TruncatedSeries::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    /// 1 − q^k truncated at `order`.
    pub fn one_minus_power(k: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::one(order);
        if k <= order {
            s.coeffs[k] -= 1;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        write!(f, "{body} + O(q^{})", self.order() + 1)
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
) -> Result<TruncatedSeries, SeriesError> {
    if a.order() != b.order() {
        return Err(SeriesError::OrderMismatch(a.order(), b.order()));
    }
    let n = a.order();
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=n - i].iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// Multiplicative inverse; the constant term must be ±1.
pub fn series_recip(a: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let c0 = &a.coeffs[0];
    if !(c0.is_one() || (-c0).is_one()) {
        return Err(SeriesError::NonUnitConstant);
    }
    // c0 is its own inverse
    let n = a.order();
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    out.push(c0.clone());
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            acc += &a.coeffs[i] * &out[k - i];
        }
        out.push(-(c0 * acc));
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// Coefficients of Π_{k=1..N} (1 − q^k)^{−2} through q^N.
pub fn two_color_coefficients(order: usize) -> Vec<BigInt> {
    let mut denom = TruncatedSeries::one(order);
    for k in 1..=order {
        let factor = TruncatedSeries::one_minus_power(k, order);
        denom = series_mul(&denom, &factor).expect("orders match");
        denom = series_mul(&denom, &factor).expect("orders match");
    }
    series_recip(&denom)
        .expect("constant term is 1")
        .into_coeffs()
}
