use std::fmt;

use super::upoly::{fmt_term, join_terms};
use super::{Cyc6, Field, Ring, UPoly, Q};

/// Univariate rational function `x^shift · num / den` over `Q`.
///
/// Canonical form: `num` and `den` are coprime, neither is divisible by `x`,
/// `den` is monic. Zero is `num = 0, den = 1, shift = 0`. Laurent
/// polynomials are exactly the values with `den = 1`, which keeps the common
/// case free of gcd computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i32,
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(RatFunc::normalized(0, num, den))
    }

    fn normalized(shift: i32, num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (ln, ld) = (num.low_order(), den.low_order());
        let (mut num, mut den) = (num.shift_down(ln), den.shift_down(ld));
        let shift = shift + ln as i32 - ld as i32;
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g).unwrap();
                den = den.exact_div(&g).unwrap();
            }
            let lc = den.leading().unwrap().clone();
            if !lc.is_one() {
                let inv = lc.inv().unwrap();
                num = num.scale(&inv);
                den = den.scale(&inv);
            }
        }
        RatFunc { shift, num, den }
    }

    /// The Laurent monomial `c·x^k`.
    pub fn monomial(c: Q, k: i32) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: k, num: UPoly::constant(c), den: UPoly::one() }
    }

    pub fn x() -> Self {
        RatFunc::monomial(Q::one(), 1)
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc::normalized(0, p, UPoly::one())
    }

    /// Build a Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent(terms: &[(i32, Q)]) -> Self {
        terms.iter().fold(RatFunc::zero(), |acc, (k, c)| acc.plus(&RatFunc::monomial(c.clone(), *k)))
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// Laurent terms `(exponent, coefficient)` when the denominator is 1.
    pub fn laurent_terms(&self) -> Option<Vec<(i32, Q)>> {
        if !self.is_laurent() {
            return None;
        }
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (self.shift + k as i32, c.clone()))
                .collect(),
        )
    }

    /// Lowest and highest exponent of a nonzero Laurent polynomial.
    pub fn laurent_span(&self) -> Option<(i32, i32)> {
        if !self.is_laurent() || self.num.is_zero() {
            return None;
        }
        Some((self.shift, self.shift + self.num.degree().unwrap() as i32))
    }

    /// Substitute `x ↦ 1/x`.
    pub fn invert_var(&self) -> Self {
        if self.is_zero() {
            return RatFunc::zero();
        }
        // x^{-s} n(1/x)/d(1/x) = x^{-s - deg n + deg d} rev(n)/rev(d)
        let dn = self.num.degree().unwrap() as i32;
        let dd = self.den.degree().unwrap() as i32;
        RatFunc::normalized(-self.shift - dn + dd, self.num.reversed(), self.den.reversed())
    }

    /// Evaluate at a point of any field containing `Q`; `None` at a pole.
    pub fn eval<F: Field>(&self, x: &F) -> Option<F> {
        if self.is_zero() {
            return Some(F::zero());
        }
        let d = self.den.eval(x);
        let n = self.num.eval(x);
        let p = x.powi(self.shift)?;
        n.times(&p).divide(&d)
    }

    pub fn eval_cyc(&self, x: &Cyc6) -> Option<Cyc6> {
        self.eval(x)
    }

    /// Constant value if this is a rational constant.
    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        (self.shift == 0 && self.den.is_one() && self.num.degree() == Some(0)).then(|| self.num.coeff(0))
    }

    /// Derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return RatFunc::zero();
        }
        // f = x^s n/d,  f' = x^{s-1} (s n d + x n' d - x n d') / d²
        let s = Q::from_int(self.shift as i64);
        let x = UPoly::x();
        let top = self
            .num
            .mul(&self.den)
            .scale(&s)
            .add(&x.mul(&self.num.derivative()).mul(&self.den))
            .sub(&x.mul(&self.num).mul(&self.den.derivative()));
        RatFunc::normalized(self.shift - 1, top, self.den.mul(&self.den))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        if self.is_laurent() {
            let mut parts = Vec::new();
            for (k, c) in self.laurent_terms().unwrap().iter().rev() {
                parts.push(fmt_term(c, var, *k as i64));
            }
            return join_terms(&parts);
        }
        let num = RatFunc { shift: self.shift, num: self.num.clone(), den: UPoly::one() };
        format!("({})/({})", num.fmt_var(var), self.den.fmt_var(var))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("u"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.shift == 0 && self.den.is_one() && self.num.is_one()
    }

    fn plus(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = rhs.num.shift_up((rhs.shift - s) as usize);
        if self.den == rhs.den {
            return RatFunc::normalized(s, a.add(&b), self.den.clone());
        }
        let top = a.mul(&rhs.den).add(&b.mul(&self.den));
        RatFunc::normalized(s, top, self.den.mul(&rhs.den))
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { shift, num: self.num.mul(&rhs.num), den: UPoly::one() };
        }
        RatFunc::normalized(shift, self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        self.divide(d)
    }
    fn negate(&self) -> Self {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc { shift: 0, num: UPoly::zero(), den: UPoly::one() }
    }
    fn one() -> Self {
        RatFunc { shift: 0, num: UPoly::one(), den: UPoly::one() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::normalized(-self.shift, self.den.clone(), self.num.clone()))
    }
    fn from_q(q: &Q) -> Self {
        RatFunc::monomial(q.clone(), 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> RatFunc {
        RatFunc::laurent(&terms.iter().map(|&(k, c)| (k, Q::from_int(c))).collect::<Vec<_>>())
    }

    #[test]
    fn laurent_arithmetic_stays_laurent() {
        let a = lp(&[(-2, 1), (1, 3)]);
        let b = lp(&[(2, 1), (0, -1)]);
        let p = a.times(&b);
        assert!(p.is_laurent());
        assert_eq!(p, lp(&[(0, 1), (-2, -1), (3, 3), (1, -3)]));
    }

    #[test]
    fn division_cancels() {
        // (1 - u^2)/(1 - u) = 1 + u
        let one_minus_q = lp(&[(0, 1), (2, -1)]);
        let x = one_minus_q.divide(&lp(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(x, lp(&[(0, 1), (1, 1)]));
        let y = lp(&[(0, 1)]).divide(&one_minus_q).unwrap();
        assert!(!y.is_laurent());
        assert_eq!(y.times(&one_minus_q), RatFunc::one());
    }

    #[test]
    fn inversion_and_eval() {
        let a = lp(&[(-1, 2), (3, 1)]);
        assert_eq!(a.invert_var(), lp(&[(1, 2), (-3, 1)]));
        let v = a.eval(&Q::from_int(2)).unwrap();
        assert_eq!(v, Q::new(9, 1));
        let e = Cyc6::epsilon();
        let t = lp(&[(1, 1), (-1, 1)]).eval(&e).unwrap();
        assert_eq!(t, Cyc6::one());
    }

    #[test]
    fn derivative_of_quotient() {
        // d/da log(6a² + 18a + 9) at a = 1 is 30/33
        let z = RatFunc::from_poly(UPoly::from_ints(&[9, 18, 6]));
        let r = z.derivative().divide(&z).unwrap();
        assert_eq!(r.eval(&Q::one()).unwrap(), Q::new(10, 11));
    }
}
