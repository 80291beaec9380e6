use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Ring};

/// Arbitrary precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Q(pub BigRational);

impl Q {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Q(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(n: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Q(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Q(BigRational::zero())
    }

    pub fn one() -> Self {
        Q(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Q(self.0.abs())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn ceil(&self) -> BigInt {
        let (q, r) = self.0.numer().div_mod_floor(self.0.denom());
        if r.is_zero() {
            q
        } else {
            q + 1
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Q {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
                let d: BigInt = d.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
                if d.is_zero() {
                    return Err(format!("zero denominator in {s:?}"));
                }
                Ok(Q::new(n, d))
            }
            None => s
                .parse::<BigInt>()
                .map(Q::from_bigint)
                .map_err(|_| format!("bad rational {s:?}")),
        }
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Self {
        Q::from_int(n)
    }
}

impl Ring for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Q(&self.0 + &rhs.0)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Q(&self.0 - &rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        Q(&self.0 * &rhs.0)
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        self.divide(d)
    }
    fn negate(&self) -> Self {
        Q(-&self.0)
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q::zero()
    }
    fn one() -> Self {
        Q::one()
    }
    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Q(self.0.recip()))
    }
    fn from_q(q: &Q) -> Self {
        q.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<'a> $tr<&'a Q> for &'a Q {
            type Output = Q;
            fn $m(self, rhs: &'a Q) -> Q {
                Q(&self.0 $op &rhs.0)
            }
        }
        impl $tr for Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                Q(self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
forward_binop!(Div, div, /);

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl PartialEq<i64> for Q {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Q {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let x: Q = "6/-4".parse().unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!("7".parse::<Q>().unwrap(), 7);
        assert!("1/0".parse::<Q>().is_err());
    }

    #[test]
    fn floor_ceil() {
        let x = Q::new(-7, 2);
        assert_eq!(x.floor(), BigInt::from(-4));
        assert_eq!(x.ceil(), BigInt::from(-3));
        assert_eq!(Q::from_int(5).ceil(), BigInt::from(5));
    }
}
