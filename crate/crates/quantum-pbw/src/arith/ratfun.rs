//! Exact rational functions in one variable `t` with integer numerator and
//! denominator data, i.e. elements of `Q(t)`.

use super::laurent::LaurentPoly;
use crate::error::ArithError;
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A rational function `num / den` in canonical form:
///
/// * `den` is a nonzero polynomial (minimal exponent 0) with positive leading
///   coefficient;
/// * `num` and `den` share no polynomial factor and no integer content;
/// * the zero element is `0 / 1`.
///
/// With these normalizations equality is syntactic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Dense integer polynomial utilities for gcd computation. Index = degree.
mod dense {
    use num::{BigInt, Signed, Zero};

    pub fn trim(v: &mut Vec<BigInt>) {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn content(v: &[BigInt]) -> BigInt {
        let mut g = BigInt::zero();
        for c in v {
            g = num::integer::gcd(g, c.abs());
        }
        g
    }

    pub fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
        let c = content(&v);
        if c.is_zero() {
            return v;
        }
        for x in v.iter_mut() {
            *x = &*x / &c;
        }
        if v.last().map_or(false, |c| c.is_negative()) {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
        v
    }

    /// Pseudo-remainder of `a` by `b` (`b` nonzero): repeatedly replaces
    /// `a` by `lb * a - la * t^(deg a - deg b) * b` until `deg a < deg b`.
    pub fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
        let db = b.len() - 1;
        let lb = b.last().unwrap().clone();
        trim(&mut a);
        while a.len() > db {
            let da = a.len() - 1;
            let la = a.last().unwrap().clone();
            for x in a.iter_mut() {
                *x = &*x * &lb;
            }
            for (k, bc) in b.iter().enumerate() {
                a[da - db + k] = &a[da - db + k] - &la * bc;
            }
            trim(&mut a);
        }
        a
    }

    /// Primitive polynomial gcd via a primitive pseudo-remainder sequence.
    pub fn gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
        let mut a = primitive(a);
        let mut b = primitive(b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive(pseudo_rem(a, &b));
            a = b;
            b = r;
        }
        a
    }

    /// Exact division `a / b`, panicking if the division is not exact over Q
    /// or the quotient is not integral.
    pub fn exact_div(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
        use num::BigRational;
        let db = b.len() - 1;
        let lb = BigRational::from(b.last().unwrap().clone());
        let mut ra: Vec<BigRational> = a.drain(..).map(BigRational::from).collect();
        let mut q: Vec<BigRational> =
            vec![BigRational::zero(); ra.len().saturating_sub(db)];
        while ra.last().map_or(false, |c| c.is_zero()) {
            ra.pop();
        }
        while ra.len() > db {
            let da = ra.len() - 1;
            let coef = ra.last().unwrap() / &lb;
            q[da - db] = coef.clone();
            for (k, bc) in b.iter().enumerate() {
                let sub = &coef * BigRational::from(bc.clone());
                ra[da - db + k] = &ra[da - db + k] - sub;
            }
            while ra.last().map_or(false, |c| c.is_zero()) {
                ra.pop();
            }
        }
        assert!(ra.is_empty(), "non-exact polynomial division");
        q.iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral quotient");
                c.to_integer()
            })
            .collect()
    }
}

fn to_dense(p: &LaurentPoly) -> (i64, Vec<BigInt>) {
    // Returns (shift, dense coefficients) with p = t^shift * poly, poly(0) != 0.
    if p.is_zero() {
        return (0, Vec::new());
    }
    let lo = p.min_exp().unwrap();
    let hi = p.max_exp().unwrap();
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.iter() {
        v[(e - lo) as usize] = c.clone();
    }
    (lo, v)
}

fn from_dense(shift: i64, v: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_pairs(
        v.iter()
            .enumerate()
            .map(|(k, c)| (shift + k as i64, c.clone())),
    )
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RatFun::from(LaurentPoly::from_int(c))
    }

    /// The monomial `t^e`.
    pub fn t_pow(e: i64) -> Self {
        RatFun::from(LaurentPoly::term(e, 1))
    }

    /// Build `num / den` in canonical form. Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun::zero();
        }
        let (sn, mut dn) = to_dense(&num);
        let (sd, mut dd) = to_dense(&den);
        let shift = sn - sd;
        // Remove the common polynomial factor.
        let g = dense::gcd(dn.clone(), dd.clone());
        if g.len() > 1 {
            dn = dense::exact_div(dn, &g);
            dd = dense::exact_div(dd, &g);
        }
        // Remove common integer content.
        let k = num::integer::gcd(dense::content(&dn), dense::content(&dd));
        if !k.is_one() {
            dn = dn.iter().map(|c| c / &k).collect();
            dd = dd.iter().map(|c| c / &k).collect();
        }
        // Positive leading coefficient of the denominator.
        if dd.last().unwrap().is_negative() {
            dn = dn.iter().map(|c| -c).collect();
            dd = dd.iter().map(|c| -c).collect();
        }
        RatFun {
            num: from_dense(shift, &dn),
            den: from_dense(0, &dd),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// If the value is a Laurent polynomial, return it.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// The bar involution `t -> t^{-1}`.
    pub fn bar(&self) -> Self {
        RatFun::new(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// The truncated Laurent-series expansion in `Z((t))` up to degree `cutoff`.
    pub fn series(&self, cutoff: i64) -> Result<super::series::TruncSeries, ArithError> {
        super::series::series_expand(self, cutoff)
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero");
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The quantum binomial `[n choose k] = [n]! / ([k]! [n-k]!)`, always a
/// Laurent polynomial.
pub fn qbinom(n: u64, k: u64) -> LaurentPoly {
    assert!(k <= n);
    let num = RatFun::from(super::laurent::qfactorial(n));
    let den = RatFun::from(&super::laurent::qfactorial(k) * &super::laurent::qfactorial(n - k));
    (&num / &den)
        .as_laurent()
        .expect("quantum binomial is a Laurent polynomial")
}
