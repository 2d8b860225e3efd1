//! Laurent polynomials over the integers, `Z[t, t^{-1}]`.

use num::{BigInt, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial with integer coefficients, stored sparsely as a map
/// from exponent to coefficient. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 1)
    }

    /// The monomial `c * t^e`.
    pub fn term(exp: i64, coef: impl Into<BigInt>) -> Self {
        let mut coeffs = BTreeMap::new();
        let c: BigInt = coef.into();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::term(0, c)
    }

    /// Build from (exponent, coefficient) pairs, summing duplicates.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// The bar involution `t -> t^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Greatest common divisor of the coefficients (non-negative; 0 for the
    /// zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = num::integer::gcd(g, c.abs());
        }
        g
    }

    /// Exact division by an integer scalar; panics if not exact.
    pub fn div_int(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero());
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| {
                    let (q, r) = num::Integer::div_rem(c, d);
                    assert!(r.is_zero(), "non-exact scalar division");
                    (*k, q)
                })
                .collect(),
        }
    }

    /// True if every coefficient is non-negative.
    pub fn coeffs_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// True if the polynomial lies in `N[t]`: non-negative coefficients and
    /// no negative exponents.
    pub fn in_nat_t(&self) -> bool {
        self.coeffs_nonnegative() && self.min_exp().map_or(true, |e| e >= 0)
    }

    /// True if the polynomial lies in `t Z[t]`.
    pub fn in_t_zt(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 1)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in rhs.coeffs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest degree first, as one writes by hand.
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, abs) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coef = abs != BigInt::from(1) || *e == 0;
            if show_coef {
                write!(f, "{}", abs)?;
            }
            if *e != 0 {
                if show_coef {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The balanced quantum integer `[n] = t^{n-1} + t^{n-3} + ... + t^{1-n}`.
pub fn qint(n: u64) -> LaurentPoly {
    LaurentPoly::from_pairs((0..n).map(|k| (n as i64 - 1 - 2 * k as i64, 1)))
}

/// The balanced quantum factorial `[n]! = [1][2]...[n]`.
pub fn qfactorial(n: u64) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for k in 1..=n {
        p = &p * &qint(k);
    }
    p
}
