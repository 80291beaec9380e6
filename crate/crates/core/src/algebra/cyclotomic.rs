use std::fmt;

use super::{Field, Ring, Q};

/// Element `a0 + a1·ε` of the sixth cyclotomic field, where `ε` is a
/// primitive sixth root of unity reduced by `ε² = ε − 1`.
///
/// `ω = ε²` is a primitive cube root of unity, so the stochastic point
/// `q = ω` with `q^{1/2} = ε` lives here.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyc6 {
    pub a0: Q,
    pub a1: Q,
}

impl Cyc6 {
    pub fn new(a0: Q, a1: Q) -> Self {
        Cyc6 { a0, a1 }
    }

    pub fn rational(a0: Q) -> Self {
        Cyc6 { a0, a1: Q::zero() }
    }

    /// The primitive sixth root `ε`.
    pub fn epsilon() -> Self {
        Cyc6 { a0: Q::zero(), a1: Q::one() }
    }

    /// `ω = ε² = ε − 1`.
    pub fn omega() -> Self {
        Cyc6::epsilon().times(&Cyc6::epsilon())
    }

    pub fn is_rational(&self) -> bool {
        self.a1.is_zero()
    }

    /// Complex conjugate, `ε ↦ ε⁻¹ = 1 − ε`.
    pub fn conj(&self) -> Self {
        Cyc6 { a0: &self.a0 + &self.a1, a1: -self.a1.clone() }
    }

    /// Field norm `a0² + a0·a1 + a1²`.
    pub fn norm(&self) -> Q {
        &(&(&self.a0 * &self.a0) + &(&self.a0 * &self.a1)) + &(&self.a1 * &self.a1)
    }
}

impl fmt::Display for Cyc6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a0.is_zero(), self.a1.is_zero()) {
            (_, true) => write!(f, "{}", self.a0),
            (true, false) => write!(f, "{}*e", self.a1),
            (false, false) => write!(f, "({} + {}*e)", self.a0, self.a1),
        }
    }
}

impl fmt::Debug for Cyc6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for Cyc6 {
    fn zero_like(&self) -> Self {
        Cyc6::default()
    }
    fn one_like(&self) -> Self {
        Cyc6::rational(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Cyc6 { a0: &self.a0 + &rhs.a0, a1: &self.a1 + &rhs.a1 }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Cyc6 { a0: &self.a0 - &rhs.a0, a1: &self.a1 - &rhs.a1 }
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.a1.is_zero() {
            return Cyc6 { a0: &self.a0 * &rhs.a0, a1: &self.a0 * &rhs.a1 };
        }
        if rhs.a1.is_zero() {
            return Cyc6 { a0: &self.a0 * &rhs.a0, a1: &self.a1 * &rhs.a0 };
        }
        // (a + bε)(c + dε) = ac + (ad + bc)ε + bd(ε − 1)
        let bd = &self.a1 * &rhs.a1;
        Cyc6 {
            a0: &(&self.a0 * &rhs.a0) - &bd,
            a1: &(&(&self.a0 * &rhs.a1) + &(&self.a1 * &rhs.a0)) + &bd,
        }
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        self.divide(d)
    }
    fn negate(&self) -> Self {
        Cyc6 { a0: -self.a0.clone(), a1: -self.a1.clone() }
    }
}

impl Field for Cyc6 {
    fn zero() -> Self {
        Cyc6::default()
    }
    fn one() -> Self {
        Cyc6::rational(Q::one())
    }
    fn inv(&self) -> Option<Self> {
        if self.a1.is_zero() {
            return self.a0.inv().map(Cyc6::rational);
        }
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(Cyc6 { a0: &c.a0 * &n, a1: &c.a1 * &n })
    }
    fn from_q(q: &Q) -> Self {
        Cyc6::rational(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a0: i64, a1: i64) -> Cyc6 {
        Cyc6::new(Q::from_int(a0), Q::from_int(a1))
    }

    #[test]
    fn sixth_root_relations() {
        let e = Cyc6::epsilon();
        assert_eq!(e.pow(6), Cyc6::one());
        assert_ne!(e.pow(3), Cyc6::one());
        let w = Cyc6::omega();
        assert_eq!(w.times(&w).plus(&w).plus(&Cyc6::one()), Cyc6::zero());
        // u + 1/u at u = ε
        assert_eq!(e.plus(&e.inv().unwrap()), Cyc6::one());
    }

    #[test]
    fn square_of_one_plus_epsilon() {
        // Oracle: expand with ε² = ε − 1 by hand in coordinates.
        // (1 + ε)² = 1 + 2ε + ε² = 1 + 2ε + (ε − 1) = 3ε
        let x = c(1, 1);
        assert_eq!(x.times(&x), c(0, 3));
    }

    #[test]
    fn inverse_round_trip() {
        for (a, b) in [(1, 1), (2, -3), (0, 5), (-7, 0)] {
            let x = c(a, b);
            assert_eq!(x.times(&x.inv().unwrap()), Cyc6::one());
        }
        assert!(Cyc6::zero().inv().is_none());
    }
}
