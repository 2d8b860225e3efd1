//! Exact coefficient arithmetic: Laurent polynomials `Z[t, t^{-1}]`, rational
//! functions `Q(t)` with a canonical form, the bar involution `t -> t^{-1}`,
//! balanced quantum integers, and truncated series expansion into `Z((t))`.
//!
//! No floating point appears anywhere in this crate; every comparison made by
//! the verification suites is an exact identity of rational functions or of
//! truncated integer series.

mod laurent;
mod ratfun;
mod series;

pub use laurent::{qfactorial, qint, LaurentPoly};
pub use ratfun::{qbinom, RatFun};
pub use series::{series_expand, TruncSeries};

/// Default truncation cutoff for series comparisons.
pub const DEFAULT_CUTOFF: i64 = 20;

/// `1 - t^2` as a Laurent polynomial, the ubiquitous rank-one denominator.
pub fn one_minus_t2() -> LaurentPoly {
    LaurentPoly::from_pairs([(0, 1), (2, -1)])
}

/// `(1 - t^2)^(-n)` as a rational function.
pub fn inv_one_minus_t2_pow(n: u64) -> RatFun {
    RatFun::new(LaurentPoly::one(), one_minus_t2()).pow(n as i64)
}
