use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;

use super::{Field, Mono, Ring, Universe, Var};
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial over a coefficient field `C`.
///
/// Terms are kept sorted in ascending graded lexicographic order with no
/// zero coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq)]
pub struct MultiLaurent<C> {
    universe: Universe,
    terms: Vec<(Mono, C)>,
}

impl<C: Field> MultiLaurent<C> {
    pub fn zero(universe: &Universe) -> Self {
        MultiLaurent { universe: universe.clone(), terms: Vec::new() }
    }

    pub fn one(universe: &Universe) -> Self {
        MultiLaurent::constant(universe, C::one())
    }

    pub fn constant(universe: &Universe, c: C) -> Self {
        MultiLaurent::monomial(universe, Mono::one(), c)
    }

    pub fn monomial(universe: &Universe, m: Mono, c: C) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MultiLaurent { universe: universe.clone(), terms }
    }

    pub fn var(universe: &Universe, v: Var) -> Self {
        MultiLaurent::var_pow(universe, v, 1)
    }

    pub fn var_pow(universe: &Universe, v: Var, e: i32) -> Self {
        MultiLaurent::monomial(universe, Mono::var(universe.idx(v), e), C::one())
    }

    /// Monomial from `(variable, exponent)` pairs times a coefficient.
    pub fn term(universe: &Universe, powers: &[(Var, i32)], c: C) -> Self {
        let mut m = Mono::one();
        for &(v, e) in powers {
            let k = universe.idx(v);
            m = m.with(k, m.get(k) + e);
        }
        MultiLaurent::monomial(universe, m, c)
    }

    /// Canonicalize an arbitrary list of terms.
    pub fn from_terms(universe: &Universe, terms: Vec<(Mono, C)>) -> Self {
        let mut map: FxHashMap<Mono, C> = FxHashMap::default();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(acc) => *acc = acc.plus(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        MultiLaurent::from_map(universe, map)
    }

    fn from_map(universe: &Universe, map: FxHashMap<Mono, C>) -> Self {
        let mut terms: Vec<(Mono, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MultiLaurent { universe: universe.clone(), terms }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn terms(&self) -> &[(Mono, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.universe.len()
    }

    /// The constant value, if this polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading term in graded lexicographic order.
    pub fn leading(&self) -> Option<&(Mono, C)> {
        self.terms.last()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    fn check(&self, rhs: &Self) {
        assert!(
            self.universe.same(&rhs.universe),
            "variable universes differ: {:?} vs {:?}",
            self.universe,
            rhs.universe
        );
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MultiLaurent::zero(&self.universe);
        }
        MultiLaurent {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a.times(c))).collect(),
        }
    }

    /// Multiply by the single term `c·m`; order is preserved.
    pub fn mul_term(&self, m: &Mono, c: &C) -> Self {
        if c.is_zero() {
            return MultiLaurent::zero(&self.universe);
        }
        let terms = if c.is_one() {
            self.terms.iter().map(|(a, x)| (a.mul(m), x.clone())).collect()
        } else {
            self.terms.iter().map(|(a, x)| (a.mul(m), x.times(c))).collect()
        };
        MultiLaurent { universe: self.universe.clone(), terms }
    }

    fn merge(a: &[(Mono, C)], b: &[(Mono, C)], negate_b: bool) -> Vec<(Mono, C)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate_b { b[j].1.negate() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_b { a[i].1.minus(&b[j].1) } else { a[i].1.plus(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_b { t.1.negate() } else { t.1.clone() };
            out.push((t.0, c));
        }
        out
    }

    /// Sum of many polynomials in one pass.
    pub fn sum<'a>(universe: &Universe, items: impl IntoIterator<Item = &'a Self>) -> Self
    where
        C: 'a,
    {
        let mut map: FxHashMap<Mono, C> = FxHashMap::default();
        for p in items {
            for (m, c) in &p.terms {
                match map.get_mut(m) {
                    Some(acc) => *acc = acc.plus(c),
                    None => {
                        map.insert(*m, c.clone());
                    }
                }
            }
        }
        MultiLaurent::from_map(universe, map)
    }

    /// Apply a map to exponent vectors that is injective on this support.
    fn remap(&self, f: impl Fn(&Mono) -> Mono) -> Self {
        let mut terms: Vec<(Mono, C)> = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MultiLaurent { universe: self.universe.clone(), terms }
    }

    /// Exchange two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        let (i, j) = (self.universe.idx(a), self.universe.idx(b));
        self.remap(|m| m.swap(i, j))
    }

    /// Substitute `v ↦ 1/v`.
    pub fn invert_var(&self, v: Var) -> Self {
        let k = self.universe.idx(v);
        self.remap(|m| m.with(k, -m.get(k)))
    }

    /// Monomial substitution: each listed variable `v` is replaced by
    /// `c·m` where `m` is a Laurent monomial in the same universe and `c` a
    /// nonzero constant. Unlisted variables pass through.
    pub fn subst_monomial(&self, map: &[(Var, C, Mono)]) -> Self {
        let idx: Vec<(usize, &C, &Mono)> = map.iter().map(|(v, c, m)| (self.universe.idx(*v), c, m)).collect();
        let mut pow_cache: FxHashMap<(usize, i32), (C, Mono)> = FxHashMap::default();
        let mut out: FxHashMap<Mono, C> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut mono = *m;
            let mut coeff = c.clone();
            for &(k, cv, mv) in &idx {
                let e = m.get(k);
                if e == 0 {
                    continue;
                }
                mono = mono.with(k, 0);
                let (pc, pm) = pow_cache
                    .entry((k, e))
                    .or_insert_with(|| {
                        let pc = cv.powi(e).expect("monomial substitution with zero constant");
                        let mut pm = Mono::one();
                        let base = if e > 0 { *mv } else { mv.inv() };
                        for _ in 0..e.unsigned_abs() {
                            pm = pm.mul(&base);
                        }
                        (pc, pm)
                    })
                    .clone();
                coeff = coeff.times(&pc);
                mono = mono.mul(&pm);
            }
            match out.get_mut(&mono) {
                Some(acc) => *acc = acc.plus(&coeff),
                None => {
                    out.insert(mono, coeff);
                }
            }
        }
        MultiLaurent::from_map(&self.universe, out)
    }

    /// Map coefficients into another field (e.g. specialize `u`).
    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> MultiLaurent<D> {
        let terms: Vec<(Mono, D)> = self
            .terms
            .iter()
            .map(|(m, c)| (*m, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultiLaurent { universe: self.universe.clone(), terms }
    }

    /// Like [`map_coeffs`](Self::map_coeffs) but the map may fail.
    pub fn try_map_coeffs<D: Field, E>(&self, f: impl Fn(&C) -> std::result::Result<D, E>) -> std::result::Result<MultiLaurent<D>, E> {
        let mut out = FxHashMap::default();
        for (m, c) in &self.terms {
            out.insert(*m, f(c)?);
        }
        Ok(MultiLaurent::from_map(&self.universe, out))
    }

    /// Re-express in a universe that contains all variables of this one.
    pub fn embed(&self, target: &Universe) -> Self {
        if self.universe.same(target) {
            return self.clone();
        }
        let map: Vec<usize> = self.universe.vars().iter().map(|&v| target.idx(v)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = Mono::one();
                for (k, &t) in map.iter().enumerate() {
                    nm = nm.with(t, m.get(k));
                }
                (nm, c.clone())
            })
            .collect();
        MultiLaurent::from_terms(target, terms)
    }

    /// Restrict to a smaller universe; fails if a dropped variable occurs.
    pub fn restrict(&self, target: &Universe) -> Option<Self> {
        let n = self.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = Mono::one();
            for k in 0..n {
                let e = m.get(k);
                match target.index_of(self.universe.vars()[k]) {
                    Some(t) => nm = nm.with(t, e),
                    None if e == 0 => {}
                    None => return None,
                }
            }
            terms.push((nm, c.clone()));
        }
        Some(MultiLaurent::from_terms(target, terms))
    }

    /// Set one variable to a constant.
    pub fn eval_var(&self, v: Var, value: &C) -> Option<Self> {
        let k = self.universe.idx(v);
        let mut cache: FxHashMap<i32, C> = FxHashMap::default();
        let mut out: FxHashMap<Mono, C> = FxHashMap::default();
        for (m, c) in &self.terms {
            let e = m.get(k);
            let p = match cache.get(&e) {
                Some(p) => p.clone(),
                None => {
                    let p = value.powi(e)?;
                    cache.insert(e, p.clone());
                    p
                }
            };
            let nm = m.with(k, 0);
            let t = c.times(&p);
            match out.get_mut(&nm) {
                Some(acc) => *acc = acc.plus(&t),
                None => {
                    out.insert(nm, t);
                }
            }
        }
        Some(MultiLaurent::from_map(&self.universe, out))
    }

    /// Evaluate with every variable bound (values aligned with the universe).
    /// `None` if a zero value meets a negative exponent.
    pub fn eval(&self, values: &[C]) -> Option<C> {
        assert_eq!(values.len(), self.nvars());
        let n = self.nvars();
        let mut caches: Vec<FxHashMap<i32, C>> = vec![FxHashMap::default(); n];
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..n {
                let e = m.get(k);
                if e == 0 {
                    continue;
                }
                let p = match caches[k].get(&e) {
                    Some(p) => p.clone(),
                    None => {
                        let p = values[k].powi(e)?;
                        caches[k].insert(e, p.clone());
                        p
                    }
                };
                t = t.times(&p);
            }
            acc = acc.plus(&t);
        }
        Some(acc)
    }

    /// Exact division in the Laurent ring. `None` if `g` does not divide.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        self.check(g);
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let n = self.nvars();
        if g.terms.len() == 1 {
            let (m, c) = &g.terms[0];
            return Some(self.mul_term(&m.inv(), &c.inv()?));
        }
        let mg = g.terms.iter().skip(1).fold(g.terms[0].0, |acc, t| acc.gcd(&t.0, n));
        let mf = self.terms.iter().skip(1).fold(self.terms[0].0, |acc, t| acc.gcd(&t.0, n));
        let gp: Vec<(Mono, C)> = g.terms.iter().map(|(m, c)| (m.div(&mg), c.clone())).collect();
        let (lm, lc) = gp.last().unwrap().clone();
        let lc_inv = lc.inv()?;
        let mut rem: BTreeMap<Mono, C> = self.terms.iter().map(|(m, c)| (m.div(&mf), c.clone())).collect();
        let mut quot: Vec<(Mono, C)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !m.divisible_by(&lm, n) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = c.times(&lc_inv);
            for (gm, gc) in gp.iter().take(gp.len() - 1) {
                let pm = gm.mul(&tm);
                let pc = gc.times(&tc);
                match rem.get_mut(&pm) {
                    Some(x) => {
                        *x = x.minus(&pc);
                        if x.is_zero() {
                            rem.remove(&pm);
                        }
                    }
                    None => {
                        rem.insert(pm, pc.negate());
                    }
                }
            }
            quot.push((tm, tc));
        }
        let shift = mf.div(&mg);
        let mut q = MultiLaurent::from_terms(&self.universe, quot);
        q = q.mul_term(&shift, &C::one());
        Some(q)
    }

    /// `Some(h)` with `self = g·h` exactly, else `None`.
    pub fn divides_into(g: &Self, f: &Self) -> Option<Self> {
        f.exact_div(g)
    }

    /// Divided difference `(f(x_a↔x_b) − f)/(x_b − x_a)`, computed term by
    /// term from the geometric-sum identity.
    pub fn divided_difference(&self, a: Var, b: Var) -> Self {
        let (i, j) = (self.universe.idx(a), self.universe.idx(b));
        let mut out: FxHashMap<Mono, C> = FxHashMap::default();
        let mut push = |m: Mono, c: C| match out.get_mut(&m) {
            Some(acc) => *acc = acc.plus(&c),
            None => {
                out.insert(m, c);
            }
        };
        for (m, c) in &self.terms {
            let (p, r) = (m.get(i), m.get(j));
            if p == r {
                continue;
            }
            // x_a^p x_b^r ↦ (x_a^r x_b^p − x_a^p x_b^r)/(x_b − x_a)
            //   = sign · (x_a x_b)^lo · Σ_{k<n} x_b^k x_a^{n-1-k},  n = |p − r|
            let lo = p.min(r);
            let n = (p - r).abs();
            let coeff = if p > r { c.clone() } else { c.negate() };
            for k in 0..n {
                let mm = m.with(i, lo + n - 1 - k).with(j, lo + k);
                push(mm, coeff.clone());
            }
        }
        MultiLaurent::from_map(&self.universe, out)
    }

    /// Inversion difference `(f(1/x) − f(x))/(1/x − x)` in variable `v`.
    pub fn tilde_difference(&self, v: Var) -> Self {
        let k = self.universe.idx(v);
        let mut out: FxHashMap<Mono, C> = FxHashMap::default();
        for (m, c) in &self.terms {
            let e = m.get(k);
            if e == 0 {
                continue;
            }
            // x^e ↦ sign(e) · Σ_{j<|e|} x^{|e|-1-2j}
            let n = e.abs();
            let coeff = if e > 0 { c.clone() } else { c.negate() };
            for j in 0..n {
                let mm = m.with(k, n - 1 - 2 * j);
                match out.get_mut(&mm) {
                    Some(acc) => *acc = acc.plus(&coeff),
                    None => {
                        out.insert(mm, coeff.clone());
                    }
                }
            }
        }
        MultiLaurent::from_map(&self.universe, out)
    }

    /// `(min, max)` exponent of `v` over all terms.
    pub fn degree_profile(&self, v: Var) -> Result<(i32, i32)> {
        let k = self.universe.idx(v);
        let mut it = self.terms.iter().map(|(m, _)| m.get(k));
        let first = it.next().ok_or(Error::DegreeOfZero)?;
        Ok(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// `(min, max)` of the summed exponents of `vars` over all terms.
    pub fn total_degree_profile(&self, vars: &[Var]) -> Result<(i32, i32)> {
        let ks: Vec<usize> = vars.iter().map(|&v| self.universe.idx(v)).collect();
        let mut it = self.terms.iter().map(|(m, _)| ks.iter().map(|&k| m.get(k)).sum::<i32>());
        let first = it.next().ok_or(Error::DegreeOfZero)?;
        Ok(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Which variables occur with a nonzero exponent.
    pub fn support_vars(&self) -> Vec<Var> {
        let n = self.nvars();
        (0..n)
            .filter(|&k| self.terms.iter().any(|(m, _)| m.get(k) != 0))
            .map(|k| self.universe.vars()[k])
            .collect()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Mono {
        let n = self.nvars();
        match self.terms.first() {
            None => Mono::one(),
            Some(first) => self.terms.iter().skip(1).fold(first.0, |acc, t| acc.gcd(&t.0, n)),
        }
    }

    pub fn format_with(&self, coeff: impl Fn(&C) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names: Vec<String> = self.universe.vars().iter().map(|v| v.name()).collect();
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = (0..names.len())
                .filter_map(|k| match m.get(k) {
                    0 => None,
                    1 => Some(names[k].clone()),
                    e => Some(format!("{}^{}", names[k], e)),
                })
                .collect();
            let cs = coeff(c);
            let atomic = !cs[1..].contains([' ', '+', '-', '/']) || cs.starts_with('(');
            let cs = if atomic { cs } else { format!("({cs})") };
            let part = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", cs, mono.join("*"))
            };
            parts.push(part);
        }
        super::upoly::join_terms(&parts)
    }
}

impl<C: Field> Ring for MultiLaurent<C> {
    fn zero_like(&self) -> Self {
        MultiLaurent::zero(&self.universe)
    }
    fn one_like(&self) -> Self {
        MultiLaurent::one(&self.universe)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        MultiLaurent { universe: self.universe.clone(), terms: Self::merge(&self.terms, &rhs.terms, false) }
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        MultiLaurent { universe: self.universe.clone(), terms: Self::merge(&self.terms, &rhs.terms, true) }
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        self.exact_div(d)
    }
    fn negate(&self) -> Self {
        MultiLaurent {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c.negate())).collect(),
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return MultiLaurent::zero(&self.universe);
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        if small.terms.len() <= 4 {
            let mut acc = big.mul_term(&small.terms[0].0, &small.terms[0].1);
            for (m, c) in &small.terms[1..] {
                let part = big.mul_term(m, c);
                acc.terms = Self::merge(&acc.terms, &part.terms, false);
            }
            return acc;
        }
        let mut map: FxHashMap<Mono, C> = FxHashMap::default();
        map.reserve(big.terms.len() * 2);
        for (ms, cs) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ms.mul(mb);
                let c = cs.times(cb);
                match map.get_mut(&m) {
                    Some(acc) => *acc = acc.plus(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        MultiLaurent::from_map(&self.universe, map)
    }
}

impl<C: Field> fmt::Display for MultiLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|c| c.to_string()))
    }
}

impl<C: Field> fmt::Debug for MultiLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Q;
    use proptest::prelude::*;

    type P = MultiLaurent<Q>;

    fn uni() -> Universe {
        Universe::spectral(3, &[Var::Zeta])
    }

    fn z(u: &Universe, i: u8) -> P {
        P::var(u, Var::Z(i))
    }

    fn c(u: &Universe, n: i64) -> P {
        P::constant(u, Q::from_int(n))
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec((proptest::collection::vec(-3i32..4, 4), -5i64..6), 0..8).prop_map(|ts| {
            let u = uni();
            P::from_terms(&u, ts.into_iter().map(|(e, c)| (Mono::from_exps(&e), Q::from_int(c))).collect())
        })
    }

    #[test]
    fn additive_inverse_and_identity() {
        let u = uni();
        let a = z(&u, 1).minus(&z(&u, 2));
        let b = z(&u, 2).minus(&z(&u, 1));
        assert!(a.plus(&b).is_zero());
        let f = z(&u, 1).times(&P::var_pow(&u, Var::Z(2), -1)).minus(&c(&u, 1));
        assert_eq!(f.times(&P::one(&u)), f);
    }

    #[test]
    fn divided_difference_examples() {
        let u = uni();
        let (z1, z2) = (z(&u, 1), z(&u, 2));
        assert_eq!(z1.divided_difference(Var::Z(1), Var::Z(2)), P::one(&u));
        assert_eq!(z1.times(&z1).divided_difference(Var::Z(1), Var::Z(2)), z1.plus(&z2));
        let sym = z1.times(&z2).plus(&z1).plus(&z2);
        assert!(sym.divided_difference(Var::Z(1), Var::Z(2)).is_zero());
    }

    #[test]
    fn tilde_difference_examples() {
        let u = uni();
        let z3 = z(&u, 3);
        let inv = P::var_pow(&u, Var::Z(3), -1);
        assert_eq!(z3.tilde_difference(Var::Z(3)), P::one(&u));
        assert!(z3.plus(&inv).tilde_difference(Var::Z(3)).is_zero());
        assert_eq!(z3.times(&z3).tilde_difference(Var::Z(3)), z3.plus(&inv));
    }

    #[test]
    fn exact_division() {
        let u = uni();
        let (z1, z2) = (z(&u, 1), z(&u, 2));
        let f = z1.times(&z2).plus(&z1);
        assert_eq!(f.exact_div(&z1), Some(z2.plus(&c(&u, 1))));
        let g = z1.minus(&c(&u, 1));
        assert!(z1.plus(&c(&u, 1)).exact_div(&g).is_none());
    }

    #[test]
    fn degree_profiles() {
        let u = uni();
        assert_eq!(c(&u, 1).degree_profile(Var::Z(1)), Ok((0, 0)));
        assert_eq!(P::zero(&u).degree_profile(Var::Z(1)), Err(Error::DegreeOfZero));
        let f = z(&u, 1).plus(&P::var_pow(&u, Var::Z(1), -2).times(&z(&u, 2)));
        assert_eq!(f.degree_profile(Var::Z(1)), Ok((-2, 1)));
        assert_eq!(f.total_degree_profile(&[Var::Z(1), Var::Z(2)]), Ok((-1, 1)));
    }

    /// Independent route: `(swap(f) − f)` divided by `(z2 − z1)` with the
    /// general long-division algorithm.
    fn dd_oracle(f: &P) -> P {
        let u = f.universe().clone();
        let num = f.swap_vars(Var::Z(1), Var::Z(2)).minus(f);
        num.exact_div(&z(&u, 2).minus(&z(&u, 1))).expect("antisymmetric numerator divides")
    }

    proptest! {
        #[test]
        fn divided_difference_matches_division_oracle(f in arb_poly()) {
            let d = f.divided_difference(Var::Z(1), Var::Z(2));
            prop_assert_eq!(&d, &dd_oracle(&f));
            prop_assert_eq!(d.swap_vars(Var::Z(1), Var::Z(2)), d.clone());
            prop_assert!(d.divided_difference(Var::Z(1), Var::Z(2)).is_zero());
        }

        #[test]
        fn tilde_difference_properties(f in arb_poly()) {
            let u = f.universe().clone();
            let d = f.tilde_difference(Var::Z(3));
            prop_assert_eq!(d.invert_var(Var::Z(3)), d.clone());
            let num = f.invert_var(Var::Z(3)).minus(&f);
            let den = P::var_pow(&u, Var::Z(3), -1).minus(&z(&u, 3));
            prop_assert_eq!(num.exact_div(&den).unwrap(), d);
            let g = f.plus(&f.invert_var(Var::Z(3)));
            prop_assert!(g.tilde_difference(Var::Z(3)).is_zero());
        }

        #[test]
        fn product_division_round_trip(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            let p = f.times(&g);
            prop_assert_eq!(p.exact_div(&g), Some(f));
        }

        #[test]
        fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(f.times(&g), g.times(&f));
            prop_assert_eq!(f.times(&g.plus(&h)), f.times(&g).plus(&f.times(&h)));
            prop_assert_eq!(f.plus(&g).minus(&g), f);
        }
    }
}
