use std::fmt;

use super::{Field, Ring, Q};

/// Dense univariate polynomial over `Q`, coefficients in ascending degree
/// order with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Q>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        UPoly::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        UPoly::monomial(Q::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::from_coeffs(c.iter().map(|&n| Q::from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    /// Multiplicity of `x` as a factor (0 for the zero polynomial).
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Q::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    /// Divide by `x^k`; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        UPoly { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        UPoly::from_coeffs(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&c * b);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UPoly::zero(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        if rhs.is_one() || self.is_one() {
            return UPoly::one();
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Q::from_int(k as i64))
                .collect(),
        )
    }

    /// Horner evaluation in any field containing `Q`.
    pub fn eval<F: Field>(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(&F::from_q(c));
        }
        acc
    }

    /// Substitute `x ↦ 1/x` and multiply by `x^deg`, i.e. reverse coefficients.
    pub fn reversed(&self) -> Self {
        UPoly::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn content_and_primitive(&self) -> (Q, Self) {
        // content = gcd of numerators / lcm of denominators, sign of leading coeff
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return (Q::zero(), UPoly::zero());
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in &self.coeffs {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let mut content = Q::new(g, l);
        if self.leading().unwrap().is_negative() {
            content = -content;
        }
        let inv = content.inv().unwrap();
        (content, self.scale(&inv))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            parts.push(fmt_term(c, var, k as i64));
        }
        join_terms(&parts)
    }
}

pub(crate) fn fmt_term(c: &Q, var: &str, k: i64) -> String {
    let mono = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    if mono.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        mono
    } else if *c == -1 {
        format!("-{mono}")
    } else {
        format!("{c}*{mono}")
    }
}

pub(crate) fn join_terms(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for UPoly {
    fn zero_like(&self) -> Self {
        UPoly::zero()
    }
    fn one_like(&self) -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        self.exact_div(d)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (x - 1)(x + 2) and (x - 1)(x - 3)
        let a = UPoly::from_ints(&[-2, 1, 1]);
        let b = UPoly::from_ints(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), UPoly::from_ints(&[-1, 1]));
        let (q, r) = a.div_rem(&UPoly::from_ints(&[-1, 1]));
        assert_eq!(q, UPoly::from_ints(&[2, 1]));
        assert!(r.is_zero());
        assert!(a.exact_div(&UPoly::from_ints(&[1, 1])).is_none());
    }

    #[test]
    fn eval_and_derivative() {
        let p = UPoly::from_ints(&[9, 18, 6]);
        assert_eq!(p.eval(&Q::from_int(1)), 33);
        assert_eq!(p.derivative().eval(&Q::from_int(1)), 30);
    }

    #[test]
    fn display() {
        assert_eq!(UPoly::from_ints(&[9, -18, 6]).fmt_var("a"), "6*a^2 - 18*a + 9");
        assert_eq!(UPoly::zero().to_string(), "0");
    }
}
