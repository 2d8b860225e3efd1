//! Truncated Laurent series in `Z((t))`: exact coefficients up to a cutoff.

use super::laurent::LaurentPoly;
use super::ratfun::RatFun;
use crate::error::ArithError;
use num::{BigInt, One, Signed, Zero};
use std::fmt;

/// An element of `Z((t))` known exactly up to (and including) degree `cutoff`,
/// stored as coefficients of `t^(lowest), t^(lowest+1), ..., t^cutoff`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    lowest: i64,
    coeffs: Vec<BigInt>,
    cutoff: i64,
}

impl TruncSeries {
    pub fn zero(cutoff: i64) -> Self {
        TruncSeries {
            lowest: 0,
            coeffs: Vec::new(),
            cutoff,
        }
    }

    pub fn from_coeffs(lowest: i64, coeffs: Vec<BigInt>, cutoff: i64) -> Self {
        let mut s = TruncSeries {
            lowest,
            coeffs,
            cutoff,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        // Drop coefficients beyond the cutoff, then strip leading/trailing zeros.
        let keep = (self.cutoff - self.lowest + 1).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lowest += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lowest = 0;
        }
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: i64) -> BigInt {
        if deg < self.lowest || deg > self.cutoff {
            return BigInt::zero();
        }
        self.coeffs
            .get((deg - self.lowest) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (self.lowest + k as i64, c))
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Addition; the result is valid up to the minimum of the two cutoffs.
    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let cutoff = self.cutoff.min(other.cutoff);
        if self.is_zero() && other.is_zero() {
            return TruncSeries::zero(cutoff);
        }
        let lowest = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.lowest,
            (_, true) => self.lowest,
            _ => self.lowest.min(other.lowest),
        };
        let coeffs = (lowest..=cutoff)
            .map(|d| self.coeff(d) + other.coeff(d))
            .collect();
        TruncSeries::from_coeffs(lowest, coeffs, cutoff)
    }

    /// Equality of the exactly-known ranges: agree on all degrees up to the
    /// minimum cutoff.
    pub fn eq_trunc(&self, other: &TruncSeries) -> bool {
        let cutoff = self.cutoff.min(other.cutoff);
        let lo = self
            .coeffs
            .first()
            .map(|_| self.lowest)
            .into_iter()
            .chain(other.coeffs.first().map(|_| other.lowest))
            .min();
        match lo {
            None => true,
            Some(lo) => (lo..=cutoff).all(|d| self.coeff(d) == other.coeff(d)),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O(t^{})", self.cutoff + 1);
        }
        let p = LaurentPoly::from_pairs(self.iter().map(|(d, c)| (d, c.clone())));
        write!(f, "{} + O(t^{})", p, self.cutoff + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Expand a rational function as a truncated series in `Z((t))`.
///
/// The expansion exists in `Z((t))` exactly when, after factoring `t`-powers
/// out of the denominator, the denominator's constant term is a unit; other
/// inputs are rejected with [`ArithError::NotBoundedBelow`].
pub fn series_expand(f: &RatFun, cutoff: i64) -> Result<TruncSeries, ArithError> {
    if f.is_zero() {
        return Ok(TruncSeries::zero(cutoff));
    }
    let num = f.numerator();
    let den = f.denominator();
    let num_lo = num.min_exp().unwrap();
    // The canonical denominator already has minimal exponent 0.
    let c0 = den.coeff(0);
    if !c0.abs().is_one() {
        return Err(ArithError::NotBoundedBelow(f.to_string()));
    }
    let lowest = num_lo;
    let len = (cutoff - lowest + 1).max(0) as usize;
    // Invert the denominator as a power series: inv[0] = 1/c0 and
    // inv[k] = -1/c0 * sum_{j=1..k} den[j] * inv[k-j].
    let c0inv = c0.clone(); // c0 is +-1, so 1/c0 = c0.
    let mut inv = vec![BigInt::zero(); len];
    if len > 0 {
        inv[0] = c0inv.clone();
        for k in 1..len {
            let mut acc = BigInt::zero();
            for j in 1..=k as i64 {
                let d = den.coeff(j);
                if !d.is_zero() {
                    acc += d * &inv[k - j as usize];
                }
            }
            inv[k] = -&c0inv * acc;
        }
    }
    // Multiply by the numerator, truncating at the cutoff.
    let mut out = vec![BigInt::zero(); len];
    for (e, c) in num.iter() {
        let off = (e - num_lo) as usize;
        for (k, ic) in inv.iter().enumerate() {
            if off + k < len {
                out[off + k] = &out[off + k] + c * ic;
            }
        }
    }
    Ok(TruncSeries::from_coeffs(lowest, out, cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[(i64, i64)], den: &[(i64, i64)]) -> RatFun {
        RatFun::new(
            LaurentPoly::from_pairs(num.iter().copied()),
            LaurentPoly::from_pairs(den.iter().copied()),
        )
    }

    #[test]
    fn geometric_series() {
        let f = rf(&[(0, 1)], &[(0, 1), (2, -1)]);
        let s = series_expand(&f, 6).unwrap();
        let expected = TruncSeries::from_coeffs(
            0,
            [1, 0, 1, 0, 1, 0, 1].map(BigInt::from).to_vec(),
            6,
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn rank_one_invariants_series() {
        // 1/((1-t^2)(1-t^4)) counts partitions into parts {2, 4}.
        let f = rf(&[(0, 1)], &[(0, 1), (2, -1), (4, -1), (6, 1)]);
        let s = series_expand(&f, 8).unwrap();
        let expected = TruncSeries::from_coeffs(
            0,
            [1, 0, 1, 0, 2, 0, 2, 0, 3].map(BigInt::from).to_vec(),
            8,
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn shifted_geometric() {
        let f = rf(&[(-2, 1)], &[(0, 1), (2, -1)]);
        let s = series_expand(&f, 2).unwrap();
        let expected =
            TruncSeries::from_coeffs(-2, [1, 0, 1, 0, 1].map(BigInt::from).to_vec(), 2);
        assert_eq!(s, expected);
    }

    #[test]
    fn not_bounded_below() {
        let f = rf(&[(0, 1)], &[(0, 2), (1, 1)]);
        assert!(series_expand(&f, 5).is_err());
    }

    #[test]
    fn additive() {
        let f = rf(&[(0, 1)], &[(0, 1), (2, -1)]);
        let g = rf(&[(1, 3)], &[(0, 1), (1, -1)]);
        let lhs = series_expand(&(&f + &g), 10).unwrap();
        let rhs = series_expand(&f, 10).unwrap().add(&series_expand(&g, 10).unwrap());
        assert_eq!(lhs, rhs);
    }
}
