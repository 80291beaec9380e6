//! Spectral-parameter dependent operators on loop vectors: the bulk `Ř`,
//! the boundary `K`, the scattering matrices `S_i`, and identity checkers.

use rayon::prelude::*;

use crate::algebra::{Cyc6, Field, MultiLaurent, RatFunc, Ring, UField, Universe, Var, Q};
use crate::error::{Error, Result};
use crate::link::Basis;
use crate::report::Check;
use crate::sample::Sampler;

/// Model parameters embedded in a scalar ring.
#[derive(Clone, Debug)]
pub struct Params<S> {
    pub q: S,
    pub q_inv: S,
    pub zeta: S,
    pub zeta_inv: S,
    /// Bulk loop weight, `-q - 1/q` unless deliberately perturbed.
    pub tau: S,
}

impl<S: Ring> Params<S> {
    pub fn new(q: S, q_inv: S, zeta: S, zeta_inv: S) -> Self {
        let tau = q.plus(&q_inv).negate();
        Params { q, q_inv, zeta, zeta_inv, tau }
    }

    pub fn with_tau(mut self, tau: S) -> Self {
        self.tau = tau;
        self
    }
}

impl<F: Field> Params<F> {
    pub fn field(q: F, zeta: F) -> Self {
        let qi = q.inv().expect("q must be nonzero");
        let zi = zeta.inv().expect("zeta must be nonzero");
        Params::new(q, qi, zeta, zi)
    }
}

impl<C: UField> Params<MultiLaurent<C>> {
    /// `q = u²` in the coefficients and `ζ` as a variable of `universe`.
    pub fn laurent(universe: &Universe) -> Self {
        let c = |x: C| MultiLaurent::constant(universe, x);
        Params::new(
            c(C::upow(2)),
            c(C::upow(-2)),
            MultiLaurent::var(universe, Var::Zeta),
            MultiLaurent::var_pow(universe, Var::Zeta, -1),
        )
    }
}

/// Vector with a common denominator: `num / den`.
#[derive(Clone, Debug)]
pub struct FracVector<S> {
    pub num: Vec<S>,
    pub den: S,
}

impl<S: Ring> FracVector<S> {
    pub fn from_vec(v: Vec<S>) -> Self {
        let den = v[0].one_like();
        FracVector { num: v, den }
    }

    pub fn unit(dim: usize, k: usize, one: &S) -> Self {
        let mut num = vec![one.zero_like(); dim];
        num[k] = one.clone();
        FracVector { num, den: one.clone() }
    }

    /// Projective equality by cross-multiplication.
    pub fn same_as(&self, other: &Self) -> bool {
        self.num.len() == other.num.len()
            && self.num.iter().zip(&other.num).all(|(a, b)| a.times(&other.den) == b.times(&self.den))
    }

    /// The plain vector, if the denominator divides every entry.
    pub fn value(&self) -> Option<Vec<S>> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.iter().map(|x| x.try_div(&self.den)).collect()
    }

    /// Divide the numerator by `d` if it divides every entry, else fold `d`
    /// into the denominator.
    fn divide_by(mut self, d: &S) -> Self {
        if let Some(v) = self.num.iter().map(|x| x.try_div(d)).collect::<Option<Vec<S>>>() {
            self.num = v;
        } else {
            self.den = self.den.times(d);
        }
        self
    }

    /// Sum of entries over the denominator, as a pair.
    pub fn total(&self) -> (S, S) {
        let s = self.num.iter().fold(self.den.zero_like(), |acc, x| acc.plus(x));
        (s, self.den.clone())
    }
}

/// `Ř_i(x) v` with `Ř_i(x) = [(qx − 1/q) I + (x − 1) e_i] / (q − x/q)`.
pub fn apply_r<S: Ring>(basis: &Basis, p: &Params<S>, i: usize, x: &S, v: &FracVector<S>) -> Result<FracVector<S>> {
    if i == 0 || i >= basis.size() {
        return Err(Error::InvalidSite { site: i, size: basis.size() });
    }
    let den = p.q.minus(&x.times(&p.q_inv));
    if den.is_zero() {
        return Err(Error::RPole);
    }
    let one = x.one_like();
    let alpha = p.q.times(x).minus(&p.q_inv);
    let beta = x.minus(&one);
    let ev = basis.apply_e_vec(i, &v.num, &p.tau);
    let num = v.num.iter().zip(&ev).map(|(a, b)| alpha.times(a).plus(&beta.times(b))).collect();
    Ok(FracVector { num, den: v.den.clone() }.divide_by(&den))
}

/// `K(x) v` with
/// `K(x) = [(x − q²/ζ)(x − ζ/q) I + (1 − q)(1 − x²) f] / [(qx − ζ/q)(x − q/ζ)]`.
pub fn apply_k<S: Ring>(basis: &Basis, p: &Params<S>, x: &S, v: &FracVector<S>) -> Result<FracVector<S>> {
    let one = x.one_like();
    let qq = p.q.times(&p.q);
    let zq = p.zeta.times(&p.q_inv);
    let den = p.q.times(x).minus(&zq).times(&x.minus(&p.q.times(&p.zeta_inv)));
    if den.is_zero() {
        return Err(Error::KPole);
    }
    let alpha = x.minus(&qq.times(&p.zeta_inv)).times(&x.minus(&zq));
    let beta = one.minus(&p.q).times(&one.minus(&x.times(x)));
    let fv = basis.apply_f_vec(&v.num);
    let num = v.num.iter().zip(&fv).map(|(a, b)| alpha.times(a).plus(&beta.times(b))).collect();
    Ok(FracVector { num, den: v.den.clone() }.divide_by(&den))
}

/// Spectral parameters `z_1..z_L` and the shift `s`, with inverses.
#[derive(Clone, Debug)]
pub struct Spectral<S> {
    pub z: Vec<S>,
    pub z_inv: Vec<S>,
    pub s: S,
    pub s_inv: S,
}

impl<F: Field> Spectral<F> {
    pub fn field(z: Vec<F>, s: F) -> Self {
        let z_inv = z.iter().map(|x| x.inv().expect("nonzero spectral parameter")).collect();
        let s_inv = s.inv().expect("nonzero shift");
        Spectral { z, z_inv, s, s_inv }
    }
}

impl<S: Ring> Spectral<S> {
    /// Copy with `z_j ↦ s z_j` (1-based `j`).
    pub fn shifted(&self, j: usize) -> Self {
        let mut out = self.clone();
        out.z[j - 1] = self.z[j - 1].times(&self.s);
        out.z_inv[j - 1] = self.z_inv[j - 1].times(&self.s_inv);
        out
    }
}

/// `S_i v`, 1-based `i`, evaluating the operator word right to left:
/// `Ř_i(s z_i/z_{i+1})…Ř_{L−1}(s z_i/z_L) K(1/(s z_i)) Ř_{L−1}(s z_L z_i)…
/// Ř_i(s z_{i+1} z_i) Ř_{i−1}(s z_{i−1} z_i)…Ř_1(s z_1 z_i) Ř_1(z_i/z_1)…
/// Ř_{i−1}(z_i/z_{i−1})`.
pub fn apply_scattering<S: Ring>(
    basis: &Basis,
    p: &Params<S>,
    sp: &Spectral<S>,
    i: usize,
    v: &FracVector<S>,
) -> Result<FracVector<S>> {
    let l = basis.size();
    if i == 0 || i > l {
        return Err(Error::InvalidSite { site: i, size: l });
    }
    let z = |k: usize| &sp.z[k - 1];
    let zi = |k: usize| &sp.z_inv[k - 1];
    let mut w = v.clone();
    for k in (1..i).rev() {
        w = apply_r(basis, p, k, &z(i).times(zi(k)), &w)?;
    }
    let szi = sp.s.times(z(i));
    for k in 1..l {
        let other = if k < i { z(k) } else { z(k + 1) };
        w = apply_r(basis, p, k, &szi.times(other), &w)?;
    }
    w = apply_k(basis, p, &sp.s_inv.times(zi(i)), &w)?;
    for k in (i..l).rev() {
        w = apply_r(basis, p, k, &szi.times(zi(k + 1)), &w)?;
    }
    Ok(w)
}

fn unit_vectors<S: Ring>(basis: &Basis, one: &S) -> Vec<FracVector<S>> {
    (0..basis.dim()).map(|k| FracVector::unit(basis.dim(), k, one)).collect()
}

/// Compare two operator words on every basis vector.
fn same_operator<S: Ring>(
    basis: &Basis,
    one: &S,
    lhs: impl Fn(&FracVector<S>) -> Result<FracVector<S>>,
    rhs: impl Fn(&FracVector<S>) -> Result<FracVector<S>>,
) -> Result<Option<usize>> {
    for (k, e) in unit_vectors(basis, one).iter().enumerate() {
        if !lhs(e)?.same_as(&rhs(e)?) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Which integrability identities to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    UnitarityR,
    UnitarityK,
    YangBaxter,
    Reflection,
    FarCommutation,
    BoundaryCommutation,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::UnitarityR,
        Identity::UnitarityK,
        Identity::YangBaxter,
        Identity::Reflection,
        Identity::FarCommutation,
        Identity::BoundaryCommutation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::UnitarityR => "R(z)R(1/z) = I",
            Identity::UnitarityK => "K(z)K(1/z) = I",
            Identity::YangBaxter => "Yang-Baxter",
            Identity::Reflection => "reflection",
            Identity::FarCommutation => "[R_i(z), R_j(w)] = 0, |i-j| > 1",
            Identity::BoundaryCommutation => "[K(z), R_i(w)] = 0, i < L-1",
        }
    }
}

/// Check one identity at given `z, w` (with inverses) on all applicable
/// sites. Returns the failing site/basis index, if any.
pub fn check_identity<S: Ring>(
    basis: &Basis,
    p: &Params<S>,
    id: Identity,
    z: &S,
    z_inv: &S,
    w: &S,
    w_inv: &S,
) -> Result<Option<String>> {
    let l = basis.size();
    let one = z.one_like();
    let r = |i: usize, x: &S, v: &FracVector<S>| apply_r(basis, p, i, x, v);
    let k = |x: &S, v: &FracVector<S>| apply_k(basis, p, x, v);
    let zw = z.times(w);
    let zw_inv = z_inv.times(w_inv);
    let tag = |what: String, hit: Option<usize>| hit.map(|b| format!("{what}, basis {}", basis.pattern(b)));
    match id {
        Identity::UnitarityR => {
            for i in 1..l {
                let hit = same_operator(basis, &one, |v| r(i, z, &r(i, z_inv, v)?), |v| Ok(v.clone()))?;
                if let Some(t) = tag(format!("i={i}"), hit) {
                    return Ok(Some(t));
                }
            }
        }
        Identity::UnitarityK => {
            let hit = same_operator(basis, &one, |v| k(z, &k(z_inv, v)?), |v| Ok(v.clone()))?;
            if let Some(t) = tag("K".into(), hit) {
                return Ok(Some(t));
            }
        }
        Identity::YangBaxter => {
            for i in 1..l.saturating_sub(1) {
                let hit = same_operator(
                    basis,
                    &one,
                    |v| r(i, z, &r(i + 1, &zw, &r(i, w, v)?)?),
                    |v| r(i + 1, w, &r(i, &zw, &r(i + 1, z, v)?)?),
                )?;
                if let Some(t) = tag(format!("i={i}"), hit) {
                    return Ok(Some(t));
                }
            }
        }
        Identity::Reflection => {
            if l >= 2 {
                let m = l - 1;
                let w_over_z = w.times(z_inv);
                // R(w/z) K(z) R(1/(wz)) K(w) = K(w) R(1/(wz)) K(z) R(w/z)
                let hit = same_operator(
                    basis,
                    &one,
                    |v| r(m, &w_over_z, &k(z, &r(m, &zw_inv, &k(w, v)?)?)?),
                    |v| k(w, &r(m, &zw_inv, &k(z, &r(m, &w_over_z, v)?)?)?),
                )?;
                if let Some(t) = tag("reflection".into(), hit) {
                    return Ok(Some(t));
                }
            }
        }
        Identity::FarCommutation => {
            for i in 1..l {
                for j in i + 2..l {
                    let hit = same_operator(basis, &one, |v| r(i, z, &r(j, w, v)?), |v| r(j, w, &r(i, z, v)?))?;
                    if let Some(t) = tag(format!("i={i}, j={j}"), hit) {
                        return Ok(Some(t));
                    }
                }
            }
        }
        Identity::BoundaryCommutation => {
            for i in 1..l.saturating_sub(1) {
                let hit = same_operator(basis, &one, |v| k(z, &r(i, w, v)?), |v| r(i, w, &k(z, v)?))?;
                if let Some(t) = tag(format!("i={i}"), hit) {
                    return Ok(Some(t));
                }
            }
        }
    }
    Ok(None)
}

/// Symbolic check in `z, w, ζ` with `q = u²` generic.
pub fn verify_symbolic(l: usize, tau_shift: i64) -> Vec<Check> {
    let basis = Basis::new(l);
    let uni = Universe::new(&[Var::Z(1), Var::Z(2), Var::Zeta]);
    let mut p = Params::<MultiLaurent<RatFunc>>::laurent(&uni);
    if tau_shift != 0 {
        let t = p.tau.plus(&MultiLaurent::constant(&uni, RatFunc::from_int(tau_shift)));
        p = p.with_tau(t);
    }
    let v = |k: u8, e: i32| MultiLaurent::var_pow(&uni, Var::Z(k), e);
    let (z, zi, w, wi) = (v(1, 1), v(1, -1), v(2, 1), v(2, -1));
    Identity::ALL
        .par_iter()
        .map(|&id| {
            let name = format!("{} (L={l}, symbolic)", id.name());
            match check_identity(&basis, &p, id, &z, &zi, &w, &wi) {
                Ok(None) => Check::pass(name),
                Ok(Some(wit)) => Check::fail(name, wit),
                Err(e) => Check::fail(name, e.to_string()),
            }
        })
        .collect()
}

/// Check at seeded random rational points `(q, ζ, z, w)`.
pub fn verify_sampled(l: usize, samples: usize, seed: u64, tau_shift: i64) -> Vec<Check> {
    let basis = Basis::new(l);
    let mut sampler = Sampler::new(seed);
    let points: Vec<[Q; 4]> = (0..samples).map(|_| [(); 4].map(|_| sampler.rational())).collect();
    Identity::ALL
        .par_iter()
        .map(|&id| {
            let name = format!("{} (L={l}, {samples} points, seed {seed})", id.name());
            for pt in &points {
                let [q, zeta, z, w] = pt.clone();
                let mut p = Params::field(q.clone(), zeta.clone());
                if tau_shift != 0 {
                    let t = &p.tau + &Q::from_int(tau_shift);
                    p = p.with_tau(t);
                }
                let res = check_identity(&basis, &p, id, &z, &z.inv().unwrap(), &w, &w.inv().unwrap());
                match res {
                    Ok(None) | Err(Error::RPole | Error::KPole) => {}
                    Ok(Some(wit)) => return Check::fail(name, format!("q={q}, zeta={zeta}, z={z}, w={w}: {wit}")),
                    Err(e) => return Check::fail(name, e.to_string()),
                }
            }
            Check::pass(name)
        })
        .collect()
}

/// The scattering commutation relation at random points. With `stochastic`
/// the check runs at `q = ω`, `s = 1`, where the `S_i` commute outright.
pub fn verify_comm_s(l: usize, samples: usize, seed: u64, stochastic: bool) -> Check {
    let basis = Basis::new(l);
    let mut sampler = Sampler::new(seed);
    let name = if stochastic {
        format!("S_i S_j = S_j S_i at q=omega, s=1 (L={l}, {samples} points)")
    } else {
        format!("S_i(..s z_j..) S_j = S_j(..s z_i..) S_i (L={l}, {samples} points)")
    };
    for _ in 0..samples {
        let zs: Vec<Q> = sampler.rationals(l);
        let (q, zeta, s) = (sampler.rational(), sampler.rational(), sampler.rational());
        let res = if stochastic {
            let lift = |x: &Q| Cyc6::rational(x.clone());
            let p = Params::field(Cyc6::omega(), lift(&zeta));
            let sp = Spectral::field(zs.iter().map(lift).collect(), Cyc6::one());
            comm_s_at(&basis, &p, &sp)
        } else {
            let p = Params::field(q.clone(), zeta.clone());
            let sp = Spectral::field(zs.clone(), s.clone());
            comm_s_at(&basis, &p, &sp)
        };
        match res {
            Ok(None) | Err(Error::RPole | Error::KPole) => {}
            Ok(Some(w)) => {
                return Check::fail(name, format!("q={q}, zeta={zeta}, s={s}, z={zs:?}: {w}"));
            }
            Err(e) => return Check::fail(name, e.to_string()),
        }
    }
    Check::pass(name)
}

fn comm_s_at<S: Ring>(basis: &Basis, p: &Params<S>, sp: &Spectral<S>) -> Result<Option<String>> {
    let l = basis.size();
    let one = p.q.one_like();
    for i in 1..=l {
        for j in i + 1..=l {
            let hit = same_operator(
                basis,
                &one,
                |v| apply_scattering(basis, p, &sp.shifted(j), i, &apply_scattering(basis, p, sp, j, v)?),
                |v| apply_scattering(basis, p, &sp.shifted(i), j, &apply_scattering(basis, p, sp, i, v)?),
            )?;
            if let Some(b) = hit {
                return Ok(Some(format!("i={i}, j={j}, basis {}", basis.pattern(b))));
            }
        }
    }
    Ok(None)
}

/// At `q = ω` the all-ones covector is fixed by every `Ř_i`, `K` and `S_i`.
pub fn verify_left_eigenvector(l: usize, samples: usize, seed: u64) -> Check {
    let basis = Basis::new(l);
    let mut sampler = Sampler::new(seed);
    let name = format!("all-ones covector fixed by R, K, S at q=omega (L={l})");
    let one = Cyc6::one();
    let lift = |x: Q| Cyc6::rational(x);
    for _ in 0..samples {
        let zeta = lift(sampler.rational());
        let x = lift(sampler.rational());
        let p = Params::field(Cyc6::omega(), zeta);
        let sp = Spectral::field(sampler.rationals(l).into_iter().map(lift).collect(), Cyc6::one());
        for e in unit_vectors(&basis, &one) {
            let mut images = Vec::new();
            for i in 1..l {
                images.push(apply_r(&basis, &p, i, &x, &e));
            }
            images.push(apply_k(&basis, &p, &x, &e));
            for i in 1..=l {
                images.push(apply_scattering(&basis, &p, &sp, i, &e));
            }
            for img in images {
                match img {
                    Ok(v) => {
                        let (s, d) = v.total();
                        if s != d {
                            return Check::fail(name, format!("image sum {s} over {d}"));
                        }
                    }
                    Err(Error::RPole | Error::KPole) => {}
                    Err(err) => return Check::fail(name, err.to_string()),
                }
            }
        }
    }
    Check::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp() -> Params<Q> {
        Params::field(Q::new(2, 3), Q::new(5, 7))
    }

    #[test]
    fn r_and_k_at_one_are_identity() {
        let b = Basis::new(4);
        let p = qp();
        for k in 0..b.dim() {
            let e = FracVector::unit(b.dim(), k, &Q::one());
            for i in 1..4 {
                assert!(apply_r(&b, &p, i, &Q::one(), &e).unwrap().same_as(&e));
            }
            assert!(apply_k(&b, &p, &Q::one(), &e).unwrap().same_as(&e));
        }
    }

    #[test]
    fn poles_are_reported() {
        let b = Basis::new(2);
        let p = qp();
        let e = FracVector::unit(2, 0, &Q::one());
        let q2 = &p.q * &p.q;
        assert_eq!(apply_r(&b, &p, 1, &q2, &e).unwrap_err(), Error::RPole);
        let pole = &p.q * &p.zeta_inv;
        assert_eq!(apply_k(&b, &p, &pole, &e).unwrap_err(), Error::KPole);
    }

    #[test]
    fn symbolic_identities_small() {
        for l in 2..=3 {
            for c in verify_symbolic(l, 0) {
                assert!(c.passed(), "{c}");
            }
        }
    }

    #[test]
    fn sampled_identities() {
        for l in 2..=4 {
            for c in verify_sampled(l, 5, 11, 0) {
                assert!(c.passed(), "{c}");
            }
        }
    }

    #[test]
    fn perturbed_tau_breaks_yang_baxter() {
        let ybe = verify_sampled(3, 3, 5, 1).into_iter().find(|c| c.identity.starts_with("Yang")).unwrap();
        assert!(!ybe.passed());
    }

    #[test]
    fn scattering_relations() {
        assert!(verify_comm_s(3, 3, 1, false).passed());
        assert!(verify_comm_s(3, 3, 2, true).passed());
        assert!(verify_left_eigenvector(3, 3, 3).passed());
    }
}
