//! Stochastic point: `H = Σ e_i + a f` at loop weight 1 and its
//! Perron–Frobenius vector as polynomials in `a`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Cyc6, Field, RatFunc, Ring, UPoly, Q};
use crate::error::{Error, Result};
use crate::link::Basis;
use crate::linalg::{kernel, kernel_fraction_free};
use crate::sumrule::interpolate;
use crate::operators::{apply_scattering, FracVector, Params, Spectral};
use crate::qkz::QkzSolution;
use crate::report::Check;
use crate::sample::Sampler;

/// Dense `H` over `Q[a]`, columns indexed by source pattern.
pub fn hamiltonian(basis: &Basis) -> Vec<Vec<UPoly>> {
    let n = basis.dim();
    let mut h = vec![vec![UPoly::zero(); n]; n];
    for s in 0..n {
        for i in 1..basis.size() {
            let (t, _) = basis.e_action(i, s);
            h[t][s] = h[t][s].add(&UPoly::one());
        }
        let t = basis.f_action(s);
        h[t][s] = h[t][s].add(&UPoly::x());
    }
    h
}

/// `L − 1 + a`
pub fn eigenvalue(l: usize) -> UPoly {
    UPoly::from_ints(&[l as i64 - 1, 1])
}

#[derive(Clone, Debug)]
pub struct GroundState {
    pub basis: Arc<Basis>,
    pub components: Vec<UPoly>,
}

/// Kernel of `H − (L−1+a)` over `Q(a)`, rescaled so the empty pattern
/// reads `a^{⌊L/2⌋}`.
///
/// The kernel is computed over `Q` at integer `a`, interpolated, and then
/// certified: a one-dimensional kernel at any point bounds the generic
/// dimension by one, and `HΨ = (L−1+a)Ψ` is checked exactly.
pub fn ground_state(l: usize) -> Result<GroundState> {
    let basis = Basis::new(l);
    let n = basis.dim();
    let e = basis.empty_index();
    let h = hamiltonian(&basis);
    let mut nodes = l / 2 + 2;
    let mut values: Vec<(Q, Vec<Q>)> = Vec::new();
    loop {
        while values.len() < nodes {
            let a = Q::from_int(values.len() as i64 + 1);
            let lam = eigenvalue(l).eval(&a);
            let m: Vec<Vec<Q>> = (0..n)
                .map(|r| (0..n).map(|c| if r == c { h[r][c].eval(&a) - lam.clone() } else { h[r][c].eval(&a) }).collect())
                .collect();
            let ker = kernel(&m, n);
            if ker.len() != 1 {
                return Err(Error::DegenerateGroundSpace(ker.len()));
            }
            let scale = a.pow((l / 2) as u32) / ker[0][e].clone();
            values.push((a, ker[0].iter().map(|x| x * &scale).collect()));
        }
        let components: Vec<UPoly> = (0..n)
            .map(|k| interpolate(&values.iter().map(|(a, v)| (a.clone(), v[k].clone())).collect::<Vec<_>>()))
            .collect();
        let gs = GroundState { basis: basis.clone(), components };
        if gs.check_eigen() && gs.components[e] == UPoly::monomial(Q::one(), l / 2) {
            return Ok(gs);
        }
        if nodes > 4 * n {
            return Err(Error::Inconsistent("ground state interpolation did not close".into()));
        }
        nodes *= 2;
    }
}

/// Same vector by fraction-free elimination directly over `Q[a]`.
pub fn ground_state_fraction_free(l: usize) -> Result<GroundState> {
    let basis = Basis::new(l);
    let n = basis.dim();
    let lam = eigenvalue(l);
    let mut m = hamiltonian(&basis);
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = row[k].sub(&lam);
    }
    let ker = kernel_fraction_free(&m, n);
    if ker.len() != 1 {
        return Err(Error::DegenerateGroundSpace(ker.len()));
    }
    let v = &ker[0];
    let g = v.iter().fold(UPoly::zero(), |acc, x| if acc.is_zero() { x.clone() } else { acc.gcd(x) });
    let v: Vec<UPoly> = v.iter().map(|x| x.exact_div(&g).expect("gcd divides")).collect();
    // the empty component is now c·a^k; rescale it to a^{⌊L/2⌋}
    let e = &v[basis.empty_index()];
    let k = e.low_order();
    if e.degree() != Some(k) {
        return Err(Error::ConventionMismatch(format!("empty component {e} is not a monomial")));
    }
    let want = l / 2;
    let c = e.coeff(k).inv().ok_or(Error::PoleHit)?;
    let components = v
        .iter()
        .map(|x| {
            let x = x.scale(&c);
            if want >= k {
                Ok(x.shift_up(want - k))
            } else if x.low_order() >= k - want {
                Ok(x.shift_down(k - want))
            } else {
                Err(Error::ConventionMismatch("normalized component is not polynomial".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroundState { basis, components })
}

impl GroundState {
    pub fn size(&self) -> usize {
        self.basis.size()
    }

    /// `Σ_π Ψ_π(a)`
    pub fn a_polynomial_sum(&self) -> UPoly {
        self.components.iter().fold(UPoly::zero(), |acc, p| acc.add(p))
    }

    pub fn at(&self, a: &Q) -> Vec<Q> {
        self.components.iter().map(|p| p.eval(a)).collect()
    }

    /// `HΨ = (L−1+a)Ψ` exactly.
    pub fn check_eigen(&self) -> bool {
        let h = hamiltonian(&self.basis);
        let lam = eigenvalue(self.size());
        h.iter().zip(&self.components).all(|(row, psi)| {
            let lhs = row.iter().zip(&self.components).fold(UPoly::zero(), |acc, (x, y)| acc.add(&x.mul(y)));
            lhs == lam.mul(psi)
        })
    }

    pub fn nonnegative_integral(&self) -> bool {
        self.components.iter().all(|p| p.coeffs().iter().all(|c| c.is_integer() && !c.is_negative()))
    }

    /// At `a = 0` only patterns with `⌊L/2⌋` arcs survive.
    pub fn check_a_zero(&self) -> Check {
        let want = self.size() / 2;
        let ok = self
            .basis
            .patterns()
            .iter()
            .zip(&self.components)
            .all(|(p, c)| c.coeff(0).is_zero() != (p.arcs().len() == want));
        Check::from_bool(format!("a = 0 support of Psi_{}", self.size()), ok, String::new)
    }
}

/// Every column of `H` sums to `L − 1 + a`.
pub fn check_column_sums(basis: &Basis) -> bool {
    let h = hamiltonian(basis);
    let lam = eigenvalue(basis.size());
    (0..basis.dim()).all(|s| h.iter().fold(UPoly::zero(), |acc, row| acc.add(&row[s])) == lam)
}

/// Components at `z_i = ζ = 1` as polynomials in `τ′ = u + 1/u`, divided
/// by their common factor.
#[derive(Clone, Debug, Serialize)]
pub struct TauPrime {
    pub size: usize,
    #[serde(serialize_with = "ser_polys")]
    pub components: Vec<UPoly>,
    pub positive: bool,
}

fn ser_polys<S: serde::Serializer>(v: &[UPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.fmt_var("t'")))
}

/// Write a Laurent polynomial in `u` invariant under `u → 1/u` as a
/// polynomial in `u + 1/u`.
pub fn to_tau_prime(f: &RatFunc) -> Result<UPoly> {
    let mut terms = f.laurent_terms().ok_or_else(|| Error::NotInversionInvariant(f.to_string()))?;
    let tp = RatFunc::laurent(&[(1, Q::one()), (-1, Q::one())]);
    let mut rest = f.clone();
    let mut out: Vec<Q> = Vec::new();
    while let Some((top, c)) = terms.last().cloned() {
        let (lo, _) = terms[0].clone();
        if top != -lo || top < 0 {
            return Err(Error::NotInversionInvariant(f.to_string()));
        }
        let k = top as usize;
        if out.len() <= k {
            out.resize(k + 1, Q::zero());
        }
        out[k] = c.clone();
        rest = rest.minus(&tp.pow(top as u32).times(&RatFunc::monomial(c, 0)));
        terms = rest.laurent_terms().unwrap_or_default();
    }
    Ok(UPoly::from_coeffs(out))
}

pub fn tau_prime_components(sol: &QkzSolution<RatFunc>) -> Result<TauPrime> {
    let ones = vec![RatFunc::one(); sol.universe.len()];
    let vals = sol.components.iter().map(|c| c.eval(&ones).ok_or(Error::PoleHit)).collect::<Result<Vec<_>>>()?;
    if let Some(bad) = vals.iter().find(|v| !v.is_laurent() || v.is_zero()) {
        return Err(Error::NotInversionInvariant(bad.to_string()));
    }
    // common factor in Q[u], then one common power of u to centre the vector
    let g = vals.iter().fold(UPoly::zero(), |acc, x| if acc.is_zero() { x.numerator().clone() } else { acc.gcd(x.numerator()) });
    let reduced: Vec<(i32, UPoly)> = vals.iter().map(|x| (x.shift(), x.numerator().exact_div(&g).expect("gcd divides"))).collect();
    let twice_centre: Vec<i32> = reduced.iter().map(|(sh, p)| 2 * sh + p.degree().unwrap() as i32).collect();
    if twice_centre.iter().any(|&c| c != twice_centre[0]) || twice_centre[0] % 2 != 0 {
        return Err(Error::NotInversionInvariant(format!("components centred at {twice_centre:?}/2")));
    }
    let centre = twice_centre[0] / 2;
    let polys = reduced
        .into_iter()
        .map(|(sh, p)| to_tau_prime(&RatFunc::from_poly(p).times(&RatFunc::monomial(Q::one(), sh - centre))))
        .collect::<Result<Vec<_>>>()?;
    let mut components = polys;
    // clear denominators and the rational content so the vector is primitive
    let mut content: Option<Q> = None;
    for p in &components {
        for c in p.coeffs() {
            if !c.is_zero() {
                content = Some(match content {
                    None => c.abs(),
                    Some(g) => q_gcd(&g, c),
                });
            }
        }
    }
    if let Some(c) = content {
        let inv = c.inv().unwrap();
        let flip = components[sol.basis.empty_index()].leading().is_some_and(|x| x.is_negative());
        let inv = if flip { -inv } else { inv };
        components = components.iter().map(|p| p.scale(&inv)).collect();
    }
    let positive = components.iter().all(|p| p.coeffs().iter().all(|c| c.is_integer() && !c.is_negative()));
    Ok(TauPrime { size: sol.size(), components, positive })
}

fn q_gcd(a: &Q, b: &Q) -> Q {
    use num_integer::Integer;
    Q::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

/// `S_i Ψ(z) = Ψ(z)` at `q = ω`, `s = 1` and seeded rational points.
pub fn scattering_fixed_point(sol: &QkzSolution<Cyc6>, samples: usize, seed: u64) -> Check {
    let l = sol.size();
    let basis = &sol.basis;
    let mut sampler = Sampler::new(seed);
    let name = format!("S_i Psi_{l} = Psi_{l} at {samples} points");
    for _ in 0..samples {
        let r = sampler.retry(
            |s| (s.rationals(l), s.rational()),
            |(zq, zetaq)| {
                let z: Vec<Cyc6> = zq.iter().cloned().map(Cyc6::rational).collect();
                let zeta = Cyc6::rational(zetaq.clone());
                let mut vals = z.clone();
                vals.push(zeta.clone());
                let psi = sol.components.iter().map(|c| c.eval(&vals).ok_or(Error::PoleHit)).collect::<Result<Vec<_>>>()?;
                let p = Params::field(Cyc6::omega(), zeta);
                let sp = Spectral::field(z, Cyc6::one());
                let v = FracVector::from_vec(psi.clone());
                for i in 1..=l {
                    let w = apply_scattering(basis, &p, &sp, i, &v)?;
                    if !w.same_as(&v) {
                        return Ok(Some(i));
                    }
                }
                Ok(None)
            },
        );
        match r {
            Ok((_, None)) => {}
            Ok((pt, Some(i))) => return Check::fail(name, format!("S_{i} at z={:?}, zeta={}", pt.0, pt.1)),
            Err(e) => return Check::fail(name, e.to_string()),
        }
    }
    Check::pass(name)
}

/// `Ψ_L(1, ..., 1; ζ = 1)` at `q = ω` is proportional to the ground state at
/// `a = 1`.
pub fn homogeneous_limit_matches(sol: &QkzSolution<Cyc6>, gs: &GroundState) -> Check {
    let ones = vec![Cyc6::one(); sol.universe.len()];
    let name = format!("Psi_{}(1..1) proportional to the a = 1 ground state", sol.size());
    let psi: Option<Vec<Cyc6>> = sol.components.iter().map(|c| c.eval(&ones)).collect();
    let Some(psi) = psi else { return Check::fail(name, "pole") };
    let g: Vec<Cyc6> = gs.at(&Q::one()).into_iter().map(Cyc6::rational).collect();
    let e = sol.basis.empty_index();
    let Some(r) = psi[e].divide(&g[e]) else { return Check::fail(name, "zero base component") };
    let ok = psi.iter().zip(&g).all(|(x, y)| *x == y.times(&r));
    Check::from_bool(name, ok, || format!("{psi:?} vs {g:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[&[i64]]) -> Vec<UPoly> {
        v.iter().map(|c| UPoly::from_ints(c)).collect()
    }

    #[test]
    fn size_two() {
        let b = Basis::new(2);
        let h = hamiltonian(&b);
        let a = UPoly::x();
        assert_eq!(h, vec![vec![a.clone(), a], vec![UPoly::one(), UPoly::one()]]);
        let gs = ground_state(2).unwrap();
        assert_eq!(gs.components, ints(&[&[0, 1], &[1]]));
        assert_eq!(gs.a_polynomial_sum(), UPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn both_methods_agree() {
        for l in 1..=6 {
            assert_eq!(ground_state(l).unwrap().components, ground_state_fraction_free(l).unwrap().components, "L={l}");
        }
    }

    #[test]
    fn single_site() {
        let gs = ground_state(1).unwrap();
        assert_eq!(gs.components, ints(&[&[1]]));
    }

    #[test]
    fn tau_prime_conversion() {
        // u² + 2 + u⁻² = τ′²
        let f = RatFunc::laurent(&[(2, Q::one()), (0, Q::from_int(2)), (-2, Q::one())]);
        assert_eq!(to_tau_prime(&f).unwrap(), UPoly::from_ints(&[0, 0, 1]));
        let g = RatFunc::laurent(&[(1, Q::one())]);
        assert!(to_tau_prime(&g).is_err());
    }
}
