//! Exact scalar towers and multivariate Laurent polynomial arithmetic.
//!
//! Everything here is exact. The coefficient fields are the rationals ([`Q`]),
//! the sixth cyclotomic field ([`Cyc6`]) and univariate rational functions
//! ([`RatFunc`], used for the symbolic parameters `u = q^{1/2}` and `a`).
//! [`MultiLaurent`] is generic over any of them.

mod cyclotomic;
mod json;
mod laurent;
mod monomial;
mod ratfunc;
mod rational;
mod ratscalar;
mod upoly;
mod var;

pub use cyclotomic::Cyc6;
pub use json::{JsonCoeff, JsonField, LaurentJson, TermJson};
pub use laurent::MultiLaurent;
pub use monomial::{Mono, MAX_VARS};
pub use ratfunc::RatFunc;
pub use rational::Q;
pub use ratscalar::RatScalar;
pub use upoly::UPoly;
pub use var::{Universe, Var};

use std::fmt;

/// Commutative ring operations shared by scalars and polynomials.
///
/// Method names avoid the `std::ops` names so both can be in scope at once.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Exact quotient if `d` divides `self` in this ring.
    fn try_div(&self, d: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.times(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A field with context-free constants.
pub trait Field: Ring + fmt::Display + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_q(q: &Q) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_q(&Q::from_int(n))
    }

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.times(&r))
    }

    /// Integer power, negative exponents allowed for nonzero elements.
    fn powi(&self, k: i32) -> Option<Self> {
        if k >= 0 {
            Some(self.pow(k as u32))
        } else {
            self.inv().map(|r| r.pow(k.unsigned_abs()))
        }
    }
}

/// Coefficient fields that contain `u = q^{1/2}`: rational functions of a
/// generic `u`, or `Cyc6` with `u = ε` (so `q = ω`, `s = u⁶ = 1`).
pub trait UField: JsonField {
    fn upow(k: i32) -> Self;

    /// Whether the value is a Laurent polynomial in `u`.
    fn is_laurent_in_u(&self) -> bool {
        true
    }
}

impl UField for RatFunc {
    fn upow(k: i32) -> Self {
        RatFunc::monomial(Q::one(), k)
    }

    fn is_laurent_in_u(&self) -> bool {
        self.is_laurent()
    }
}

impl UField for Cyc6 {
    fn upow(k: i32) -> Self {
        Cyc6::epsilon().powi(k).expect("epsilon is a unit")
    }
}
