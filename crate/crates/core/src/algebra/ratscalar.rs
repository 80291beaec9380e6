use std::fmt;

use rustc_hash::FxHashMap;

use super::{Field, Mono, MultiLaurent, Ring, Universe, Var};
use crate::error::{Error, Result};

/// Fraction of two multivariate Laurent polynomials.
///
/// Normalization is deliberately cheap: the monomial content of the
/// denominator is moved into the numerator, the denominator's leading
/// coefficient is made 1, and the fraction collapses whenever the
/// denominator divides the numerator. No multivariate gcd is attempted, so
/// equality is tested by cross-multiplication.
#[derive(Clone)]
pub struct RatScalar<C> {
    num: MultiLaurent<C>,
    den: MultiLaurent<C>,
}

impl<C: Field> RatScalar<C> {
    pub fn new(num: MultiLaurent<C>, den: MultiLaurent<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatScalar::normalized(num, den))
    }

    pub fn from_poly(p: MultiLaurent<C>) -> Self {
        let den = MultiLaurent::one(p.universe());
        RatScalar { num: p, den }
    }

    pub fn zero(universe: &Universe) -> Self {
        RatScalar::from_poly(MultiLaurent::zero(universe))
    }

    pub fn one(universe: &Universe) -> Self {
        RatScalar::from_poly(MultiLaurent::one(universe))
    }

    pub fn constant(universe: &Universe, c: C) -> Self {
        RatScalar::from_poly(MultiLaurent::constant(universe, c))
    }

    pub fn var(universe: &Universe, v: Var) -> Self {
        RatScalar::from_poly(MultiLaurent::var(universe, v))
    }

    fn normalized(num: MultiLaurent<C>, den: MultiLaurent<C>) -> Self {
        let u = den.universe().clone();
        if num.is_zero() {
            return RatScalar::zero(&u);
        }
        if den.len() == 1 {
            let q = num.exact_div(&den).expect("single-term division");
            return RatScalar::from_poly(q);
        }
        if let Some(q) = num.exact_div(&den) {
            return RatScalar::from_poly(q);
        }
        let m = den.monomial_content();
        let (_, lc) = den.leading().unwrap().clone();
        let lc_inv = lc.inv().unwrap();
        let den = den.mul_term(&m.inv(), &lc_inv);
        let num = num.mul_term(&m.inv(), &lc_inv);
        RatScalar { num, den }
    }

    pub fn numerator(&self) -> &MultiLaurent<C> {
        &self.num
    }

    pub fn denominator(&self) -> &MultiLaurent<C> {
        &self.den
    }

    pub fn universe(&self) -> &Universe {
        self.num.universe()
    }

    /// The Laurent polynomial this equals, if the denominator cancelled.
    pub fn as_poly(&self) -> Option<&MultiLaurent<C>> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<MultiLaurent<C>> {
        if self.den.is_one() {
            Some(self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        RatScalar::new(self.den.clone(), self.num.clone())
    }

    pub fn divide(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatScalar::normalized(self.num.times(&rhs.den), self.den.times(&rhs.num)))
    }

    pub fn map<F: Fn(&MultiLaurent<C>) -> MultiLaurent<C>>(&self, f: F) -> Result<Self> {
        RatScalar::new(f(&self.num), f(&self.den))
    }

    /// Evaluate with all variables bound.
    pub fn eval(&self, values: &[C]) -> Result<C> {
        let d = self.den.eval(values).ok_or(Error::PoleHit)?;
        let n = self.num.eval(values).ok_or(Error::PoleHit)?;
        n.divide(&d).ok_or(Error::PoleHit)
    }
}

impl<C: Field> Ring for RatScalar<C> {
    fn zero_like(&self) -> Self {
        RatScalar::zero(self.universe())
    }
    fn one_like(&self) -> Self {
        RatScalar::one(self.universe())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatScalar::normalized(self.num.plus(&rhs.num), self.den.clone());
        }
        let num = self.num.times(&rhs.den).plus(&rhs.num.times(&self.den));
        RatScalar::normalized(num, self.den.times(&rhs.den))
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return RatScalar::from_poly(self.num.times(&rhs.num));
        }
        RatScalar::normalized(self.num.times(&rhs.num), self.den.times(&rhs.den))
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        self.divide(d).ok()
    }
    fn negate(&self) -> Self {
        RatScalar { num: self.num.negate(), den: self.den.clone() }
    }
}

impl<C: Field> PartialEq for RatScalar<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.times(&other.den) == other.num.times(&self.den)
    }
}

impl<C: Field> fmt::Display for RatScalar<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<C: Field> fmt::Debug for RatScalar<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Field> MultiLaurent<C> {
    /// Substitute rational expressions for variables. Monomial bindings stay
    /// in the Laurent ring; general bindings are combined over the common
    /// denominator `∏ n_v^{max(0,-lo_v)} d_v^{max(0,hi_v)}`.
    pub fn substitute(&self, bindings: &[(Var, RatScalar<C>)]) -> Result<RatScalar<C>> {
        let u = self.universe().clone();
        let mono: Option<Vec<(Var, C, Mono)>> = bindings
            .iter()
            .map(|(v, r)| {
                let p = r.as_poly()?;
                match p.terms() {
                    [(m, c)] => Some((*v, c.clone(), *m)),
                    _ => None,
                }
            })
            .collect();
        if let Some(map) = mono {
            return Ok(RatScalar::from_poly(self.subst_monomial(&map)));
        }
        if self.is_zero() {
            return Ok(RatScalar::zero(&u));
        }
        let mut den = MultiLaurent::one(&u);
        let mut plan = Vec::new();
        for (v, r) in bindings {
            let Some((lo, hi)) = self.degree_profile(*v).ok() else { continue };
            let (nv, dv) = (r.numerator(), r.denominator());
            if nv.is_zero() && lo < 0 {
                return Err(Error::PoleHit);
            }
            let (pn, pd) = ((-lo).max(0), hi.max(0));
            den = den.times(&nv.pow(pn as u32)).times(&dv.pow(pd as u32));
            plan.push((u.idx(*v), nv, dv, pn, pd));
        }
        let mut cache: FxHashMap<(usize, i32), MultiLaurent<C>> = FxHashMap::default();
        let mut acc: FxHashMap<Mono, C> = FxHashMap::default();
        for (m, c) in self.terms() {
            let mut base = *m;
            let mut factor = MultiLaurent::constant(&u, c.clone());
            for (k, nv, dv, pn, pd) in &plan {
                let e = m.get(*k);
                base = base.with(*k, 0);
                let f = cache
                    .entry((*k, e))
                    .or_insert_with(|| nv.pow((e + pn) as u32).times(&dv.pow((pd - e) as u32)));
                factor = factor.times(f);
            }
            for (fm, fc) in factor.terms() {
                let mm = fm.mul(&base);
                match acc.get_mut(&mm) {
                    Some(x) => *x = x.plus(fc),
                    None => {
                        acc.insert(mm, fc.clone());
                    }
                }
            }
        }
        let num = MultiLaurent::from_terms(&u, acc.into_iter().collect());
        RatScalar::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Q;
    use proptest::prelude::*;

    type P = MultiLaurent<Q>;

    fn uni() -> Universe {
        Universe::spectral(2, &[Var::U])
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec((proptest::collection::vec(-2i32..3, 3), -4i64..5), 1..6).prop_map(|ts| {
            P::from_terms(&uni(), ts.into_iter().map(|(e, c)| (Mono::from_exps(&e), Q::from_int(c))).collect())
        })
    }

    #[test]
    fn monomial_substitution() {
        let u = uni();
        let f = P::term(&u, &[(Var::Z(1), 1), (Var::Z(2), -1)], Q::one());
        let b = RatScalar::from_poly(P::term(&u, &[(Var::U, -6), (Var::Z(1), -1)], Q::one()));
        let r = f.substitute(&[(Var::Z(1), b)]).unwrap();
        let want = P::term(&u, &[(Var::U, -6), (Var::Z(1), -1), (Var::Z(2), -1)], Q::one());
        assert_eq!(r.as_poly(), Some(&want));
    }

    #[test]
    fn substitution_to_zero_and_pole() {
        let u = uni();
        let z = P::var(&u, Var::Z(1));
        let f = z.minus(&P::one(&u));
        let r = f.substitute(&[(Var::Z(1), RatScalar::one(&u))]).unwrap();
        assert!(r.is_zero());
        let g = P::var_pow(&u, Var::Z(1), -1).plus(&z);
        let zero = RatScalar::zero(&u);
        assert_eq!(g.substitute(&[(Var::Z(1), zero)]), Err(Error::PoleHit));
        assert!(RatScalar::new(z, P::zero(&u)).is_err());
    }

    #[test]
    fn general_substitution() {
        // z1 + 1/z1 at z1 = (z2 + 1)/z2... compare with direct fraction arithmetic
        let u = uni();
        let z1 = P::var(&u, Var::Z(1));
        let z2 = P::var(&u, Var::Z(2));
        let f = z1.plus(&P::var_pow(&u, Var::Z(1), -1));
        let b = RatScalar::new(z2.plus(&P::one(&u)), z2.minus(&P::one(&u))).unwrap();
        let got = f.substitute(&[(Var::Z(1), b.clone())]).unwrap();
        let want = b.plus(&b.inv().unwrap());
        assert_eq!(got, want);
    }

    proptest! {
        #[test]
        fn fraction_reduces(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            let r = RatScalar::new(f.times(&g), g).unwrap();
            prop_assert_eq!(r.as_poly(), Some(&f));
        }

        #[test]
        fn field_operations(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assume!(!g.is_zero() && !h.is_zero());
            let x = RatScalar::new(f.clone(), g.clone()).unwrap();
            let y = RatScalar::new(g.clone(), h.clone()).unwrap();
            prop_assert_eq!(x.times(&y), RatScalar::new(f.clone(), h.clone()).unwrap());
            prop_assert!(x.minus(&x).is_zero());
            prop_assert_eq!(x.plus(&y).minus(&y), x);
        }
    }
}
