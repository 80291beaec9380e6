//! Sum rule at `q = ω`, symplectic characters and the counting formulas.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{Cyc6, Field, Mono, MultiLaurent, RatFunc, Ring, UPoly, Universe, Var, Q};
use crate::error::{Error, Result};
use crate::link::Basis;
use crate::linalg::{det, kernel};
use crate::operators::{apply_scattering, FracVector, Params, Spectral};
use crate::qkz::{Poly, QkzSolution};
use crate::report::Check;
use crate::sample::Sampler;

/// `h_j = j + ⌈j/2⌉ − 1` for `j = 1..n`: `1, 2, 4, 5, 7, 8, ...`
pub fn weights(n: usize) -> Vec<i32> {
    (1..=n as i32).map(|j| j + (j + 1) / 2 - 1).collect()
}

/// Specialize `u → ε` (so `q = ω`, `s = 1`).
pub fn specialize(sol: &QkzSolution<RatFunc>) -> Result<QkzSolution<Cyc6>> {
    let eps = Cyc6::epsilon();
    let components = sol
        .components
        .par_iter()
        .map(|p| p.try_map_coeffs(|c| c.eval_cyc(&eps).ok_or(Error::PoleHit)))
        .collect::<Result<Vec<_>>>()?;
    Ok(QkzSolution { basis: sol.basis.clone(), universe: sol.universe.clone(), components })
}

/// `Z_L = Σ_π Ψ_π`.
pub fn sum_rule(sol: &QkzSolution<Cyc6>) -> Poly<Cyc6> {
    sol.components.iter().fold(Poly::zero(&sol.universe), |acc, p| acc.plus(p))
}

/// `det(x_i^{e_j} − x_i^{−e_j})` expanded over permutations and signs.
pub fn alternant<F: Field>(uni: &Universe, vars: &[Var], exps: &[i32]) -> MultiLaurent<F> {
    let n = vars.len();
    assert_eq!(n, exps.len());
    let idx: Vec<usize> = vars.iter().map(|&v| uni.idx(v)).collect();
    let mut terms = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut odd = false;
    permutations(&mut perm, 0, &mut odd, &mut |p, odd| {
        for signs in 0u32..(1 << n) {
            let mut m = Mono::one();
            let mut neg = odd;
            for i in 0..n {
                let e = exps[p[i]];
                if signs >> i & 1 == 1 {
                    m = m.with(idx[i], -e);
                    neg = !neg;
                } else {
                    m = m.with(idx[i], e);
                }
            }
            terms.push((m, if neg { F::one().negate() } else { F::one() }));
        }
    });
    MultiLaurent::from_terms(uni, terms)
}

fn permutations(p: &mut Vec<usize>, k: usize, odd: &mut bool, f: &mut impl FnMut(&[usize], bool)) {
    if k == p.len() {
        f(p, *odd);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        if i != k {
            *odd = !*odd;
        }
        permutations(p, k + 1, odd, f);
        p.swap(k, i);
        if i != k {
            *odd = !*odd;
        }
    }
}

/// `χ_n(x_1..x_n)` as an exact Laurent polynomial.
pub fn symplectic_char<F: Field>(uni: &Universe, vars: &[Var]) -> MultiLaurent<F> {
    let n = vars.len();
    let num = alternant::<F>(uni, vars, &weights(n));
    let den = alternant::<F>(uni, vars, &(1..=n as i32).collect::<Vec<_>>());
    num.exact_div(&den).expect("Weyl denominator divides the numerator")
}

fn alternant_at<F: Field>(points: &[F], exps: &[i32]) -> F {
    let m: Vec<Vec<F>> = points
        .iter()
        .map(|x| exps.iter().map(|&e| x.powi(e).unwrap().minus(&x.powi(-e).unwrap())).collect())
        .collect();
    det(&m)
}

/// `χ_n` at a point, as a ratio of determinants.
pub fn symplectic_char_at<F: Field>(points: &[F]) -> Result<F> {
    let n = points.len();
    if points.iter().any(|x| x.is_zero()) {
        return Err(Error::PoleHit);
    }
    let den = alternant_at(points, &(1..=n as i32).collect::<Vec<_>>());
    if den.is_zero() {
        return Err(Error::WeylDenominatorZero);
    }
    Ok(alternant_at(points, &weights(n)).divide(&den).unwrap())
}

/// Partition of `χ_n`: `λ_i = h_{n+1−i} − (n+1−i)`.
pub fn partition(n: usize) -> Vec<usize> {
    let h = weights(n);
    (0..n).map(|i| (h[n - 1 - i] - (n - i) as i32) as usize).collect()
}

/// Complete homogeneous symmetric functions `h_0..h_kmax` of the alphabet
/// `x_1^{±1}, ..., x_n^{±1}`.
fn complete_series<F: Field>(points: &[F], kmax: usize) -> Result<Vec<F>> {
    let mut h = vec![F::zero(); kmax + 1];
    h[0] = F::one();
    for x in points {
        let xi = x.inv().ok_or(Error::PoleHit)?;
        for y in [x, &xi] {
            for k in 1..=kmax {
                let t = h[k - 1].times(y);
                h[k] = h[k].plus(&t);
            }
        }
    }
    Ok(h)
}

/// `χ_n` at a point through the symplectic Jacobi–Trudi determinant
/// `det(h_{λ_i−i+1} | h_{λ_i−i+j} + h_{λ_i−i−j+2})`, which needs no
/// distinct points.
pub fn symplectic_char_jt<F: Field>(points: &[F]) -> Result<F> {
    let n = points.len();
    let lam = partition(n);
    let h = complete_series(points, lam[0] + n)?;
    let hk = |k: i64| if k < 0 { F::zero() } else { h[k as usize].clone() };
    let m: Vec<Vec<F>> = (1..=n as i64)
        .map(|i| {
            let l = lam[i as usize - 1] as i64;
            (1..=n as i64)
                .map(|j| if j == 1 { hk(l - i + 1) } else { hk(l - i + j).plus(&hk(l - i - j + 2)) })
                .collect()
        })
        .collect();
    Ok(det(&m))
}

/// `χ_n(1, ..., 1, ζ)` at a rational `ζ`.
pub fn chi_homogeneous_at(n: usize, zeta: &Q) -> Result<Q> {
    let mut pts = vec![Q::one(); n - 1];
    pts.push(zeta.clone());
    symplectic_char_jt(&pts)
}

/// `χ_n(1, ..., 1, ζ) = P(ζ + 1/ζ)`; returns `P`. The degree in `ζ` is at
/// most `h_n − n`, and one extra interpolation node is used as a check.
pub fn chi_homogeneous_w(n: usize) -> Result<UPoly> {
    let d = weights(n)[n - 1] as usize - n;
    let nodes: Vec<Q> = (0..d + 2).map(|k| Q::from_int(k as i64 + 2)).collect();
    let pts = nodes
        .iter()
        .map(|z| Ok((z + &z.inv().unwrap(), chi_homogeneous_at(n, z)?)))
        .collect::<Result<Vec<_>>>()?;
    let p = interpolate(&pts[..d + 1]);
    let (w, v) = &pts[d + 1];
    if p.eval(w) != *v {
        return Err(Error::Inconsistent(format!("chi_{n} has higher degree in zeta")));
    }
    Ok(p)
}

/// Lagrange interpolation through `(x, y)` pairs with distinct `x`.
pub fn interpolate(pts: &[(Q, Q)]) -> UPoly {
    let mut acc = UPoly::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = UPoly::one();
        let mut den = Q::one();
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                basis = basis.mul(&UPoly::from_coeffs(vec![-xj.clone(), Q::one()]));
                den = den * (xi - xj);
            }
        }
        acc = acc.add(&basis.scale(&(yi / &den)));
    }
    acc
}

/// Weyl dimension formula for `χ_n(1, ..., 1)`.
pub fn weyl_dimension(n: usize) -> Q {
    let h: Vec<Q> = weights(n).into_iter().map(|x| Q::from_int(x as i64)).collect();
    let mut acc = Q::one();
    for i in 0..n {
        for j in i..n {
            let (a, b) = (Q::from_int(i as i64 + 1), Q::from_int(j as i64 + 1));
            if i < j {
                acc = acc * (&h[j] - &h[i]) / (&b - &a);
            }
            acc = acc * (&h[i] + &h[j]) / (&a + &b);
        }
    }
    acc
}

/// `⌈n(n−2)/4⌉`
pub fn three_power(n: usize) -> u32 {
    let v = n as i64 * (n as i64 - 2);
    (v.div_euclid(4) + i64::from(v.rem_euclid(4) != 0)).max(0) as u32
}

/// `χ_n(1, ..., 1) · 3^{−⌈n(n−2)/4⌉}`
pub fn chi_scaled(n: usize) -> Q {
    weyl_dimension(n) / Q::from_int(3).pow(three_power(n))
}

fn factorial(n: i64) -> Q {
    (1..=n).fold(Q::one(), |acc, k| acc * Q::from_int(k))
}

/// `⌊3k/2 + 1⌋ (3k)! k! / ((2k+1)! (2k)!)`
fn mills_factor(k: i64) -> Q {
    Q::from_int((3 * k) / 2 + 1) * factorial(3 * k) * factorial(k) / (factorial(2 * k + 1) * factorial(2 * k))
}

/// Product side of the scaled character: `k` runs over `1..n−1` with
/// `n − 1 − k` even.
pub fn chi_scaled_product(n: usize) -> Q {
    let n = n as i64;
    (1..n).filter(|k| (n - 1 - k) % 2 == 0).fold(Q::one(), |acc, k| acc * mills_factor(k))
}

/// Number of HVSASMs of size `2L+3`.
pub fn hvsasm_count(l: usize) -> BigInt {
    let v = (1..=l as i64).fold(Q::one(), |acc, k| acc * mills_factor(k));
    v.to_integer().expect("integer product")
}

fn var_z(i: usize) -> Var {
    Var::Z(i as u8)
}

/// Sum rule against `χ_L(z) χ_{L+1}(z, ζ)`, symbolically.
pub fn verify_zdet_symbolic(sol: &QkzSolution<Cyc6>) -> Check {
    let l = sol.basis.size();
    let uni = &sol.universe;
    let zs: Vec<Var> = (1..=l).map(var_z).collect();
    let mut zz = zs.clone();
    zz.push(Var::Zeta);
    let rhs = symplectic_char::<Cyc6>(uni, &zs).times(&symplectic_char::<Cyc6>(uni, &zz));
    let z = sum_rule(sol);
    Check::from_bool(format!("Z_{l} = chi_{l} chi_{} symbolically", l + 1), z == rhs, || {
        format!("difference has {} terms", z.minus(&rhs).len())
    })
}

/// The fixed vector of every `S_i` at `q = ω`, `s = 1`, normalized so that
/// the empty pattern carries the base component.
pub fn fixed_vector_at(basis: &Basis, zeta: &Cyc6, z: &[Cyc6]) -> Result<Vec<Cyc6>> {
    let l = basis.size();
    let n = basis.dim();
    let p = Params::field(Cyc6::omega(), zeta.clone());
    let sp = Spectral::field(z.to_vec(), Cyc6::one());
    let shifted = |i: usize| -> Result<Vec<Vec<Cyc6>>> {
        let mut m = vec![vec![Cyc6::zero(); n]; n];
        for k in 0..n {
            let col = apply_scattering(basis, &p, &sp, i, &FracVector::unit(n, k, &Cyc6::one()))?;
            let inv = col.den.inv().unwrap();
            for r in 0..n {
                m[r][k] = col.num[r].times(&inv);
            }
            m[k][k] = m[k][k].minus(&Cyc6::one());
        }
        Ok(m)
    };
    // add scattering matrices until the common fixed space is a line, then
    // confirm the remaining ones fix it
    let mut rows: Vec<Vec<Cyc6>> = Vec::new();
    let mut ker = Vec::new();
    let mut used = 0;
    while used < l {
        used += 1;
        rows.extend(shifted(used)?);
        ker = kernel(&rows, n);
        if ker.len() <= 1 {
            break;
        }
    }
    if ker.len() != 1 {
        return Err(Error::DegenerateGroundSpace(ker.len()));
    }
    for i in used + 1..=l {
        let w = apply_scattering(basis, &p, &sp, i, &FracVector::from_vec(ker[0].clone()))?;
        if !w.same_as(&FracVector::from_vec(ker[0].clone())) {
            return Err(Error::DegenerateGroundSpace(0));
        }
    }
    let v = &ker[0];
    // the base component at q = ω, s = 1, factor by factor
    let q = Cyc6::omega();
    let qi = q.inv().unwrap();
    let mut base = Cyc6::one();
    for i in 0..l {
        for j in i + 1..l {
            let zi = z[i].inv().ok_or(Error::PoleHit)?;
            let zj = z[j].inv().ok_or(Error::PoleHit)?;
            let a = q.times(&z[i]).times(&zj).minus(&qi);
            let b = z[j].times(&qi).minus(&q.times(&zi));
            base = base.times(&a).times(&b);
        }
    }
    let e = basis.empty_index();
    let scale = base.divide(&v[e]).ok_or(Error::PoleHit)?;
    Ok(v.iter().map(|x| x.times(&scale)).collect())
}

/// Sum rule against the character product at seeded rational points, with
/// `Ψ` taken as the common fixed vector of the scattering matrices.
pub fn verify_zdet_points(l: usize, samples: usize, seed: u64) -> Check {
    let basis = Basis::new(l);
    let mut sampler = Sampler::new(seed);
    let name = format!("Z_{l} = chi_{l} chi_{} at {samples} points (seed {seed})", l + 1);
    for _ in 0..samples {
        let drawn = sampler.retry(
            |s| (s.rationals(l), s.rational()),
            |(zq, zetaq)| {
                let z: Vec<Cyc6> = zq.iter().cloned().map(Cyc6::rational).collect();
                let zeta = Cyc6::rational(zetaq.clone());
                let v = fixed_vector_at(&basis, &zeta, &z)?;
                let sum = v.iter().fold(Cyc6::zero(), |a, x| a.plus(x));
                let mut zz = z.clone();
                zz.push(zeta);
                let rhs = symplectic_char_at(&z)?.times(&symplectic_char_at(&zz)?);
                Ok((sum, rhs))
            },
        );
        match drawn {
            Ok((pt, (sum, rhs))) if sum != rhs => {
                return Check::fail(name, format!("z={:?}, zeta={}: {sum} vs {rhs}", pt.0, pt.1));
            }
            Ok(_) => {}
            Err(e) => return Check::fail(name, e.to_string()),
        }
    }
    Check::pass(name)
}

/// `Z_L|_{z_L = q² z_{L−1}} = Z_{L−2} (1 − q z/ζ)(ζ − q²/z) ∏ (1 − q z/z_i)²(z_i − q²/z)²`
/// with `z = z_{L−1}`; `small` is `Z_{L−2}`, `None` meaning 1.
pub fn verify_recz(big: &Poly<Cyc6>, l: usize, small: Option<&Poly<Cyc6>>) -> Check {
    let uni = big.universe().clone();
    let q = Cyc6::omega();
    let q2 = q.times(&q);
    let m = l - 1;
    let km = uni.idx(var_z(m));
    let lhs = big.subst_monomial(&[(var_z(l), q2.clone(), Mono::var(km, 1))]);
    let mono = |powers: &[(Var, i32)], c: Cyc6| MultiLaurent::term(&uni, powers, c);
    let one = Poly::one(&uni);
    let zm = var_z(m);
    let mut rhs = one
        .minus(&mono(&[(zm, 1), (Var::Zeta, -1)], q.clone()))
        .times(&mono(&[(Var::Zeta, 1)], Cyc6::one()).minus(&mono(&[(zm, -1)], q2.clone())));
    for i in 1..m {
        let a = one.minus(&mono(&[(zm, 1), (var_z(i), -1)], q.clone()));
        let b = mono(&[(var_z(i), 1)], Cyc6::one()).minus(&mono(&[(zm, -1)], q2.clone()));
        let f = a.times(&b);
        rhs = rhs.times(&f).times(&f);
    }
    if let Some(s) = small {
        rhs = rhs.times(&s.embed(&uni));
    }
    Check::from_bool(format!("Z_{l} at z_{l} = q^2 z_{m} reduces to Z_{}", l - 2), lhs == rhs, String::new)
}

/// `χ_n|_{z_n = q² z_{n−1}} = χ_{n−2} ∏ (1 − q z_{n−1}/z_i)(z_i − q²/z_{n−1})` at points.
pub fn verify_chi_recurrence(n: usize, samples: usize, seed: u64) -> Check {
    let mut sampler = Sampler::new(seed);
    let q = Cyc6::omega();
    let q2 = q.times(&q);
    let name = format!("chi_{n} recurrence at {samples} points");
    for _ in 0..samples {
        let r = sampler.retry(
            |s| s.rationals(n - 1),
            |zq| {
                let mut z: Vec<Cyc6> = zq.iter().cloned().map(Cyc6::rational).collect();
                let w = z[n - 2].clone();
                z.push(q2.times(&w));
                let lhs = symplectic_char_at(&z)?;
                let small = if n > 2 { symplectic_char_at(&z[..n - 2])? } else { Cyc6::one() };
                let winv = w.inv().ok_or(Error::PoleHit)?;
                let mut rhs = small;
                for zi in &z[..n - 2] {
                    let a = Cyc6::one().minus(&q.times(&w).times(&zi.inv().ok_or(Error::PoleHit)?));
                    let b = zi.minus(&q2.times(&winv));
                    rhs = rhs.times(&a).times(&b);
                }
                Ok(lhs == rhs)
            },
        );
        match r {
            Ok((_, true)) => {}
            Ok((pt, false)) => return Check::fail(name, format!("{pt:?}")),
            Err(e) => return Check::fail(name, e.to_string()),
        }
    }
    Check::pass(name)
}

/// Symmetric in the `z_i` and invariant under each `z_i → 1/z_i`.
pub fn verify_z_symmetry(z: &Poly<Cyc6>, l: usize) -> Check {
    let sym = (1..l).all(|i| z.swap_vars(var_z(i), var_z(i + 1)) == *z);
    let inv = (1..=l).all(|i| z.invert_var(var_z(i)) == *z);
    Check::from_bool(format!("Z_{l} symmetric and inversion invariant"), sym && inv, || format!("sym {sym}, inv {inv}"))
}

/// `Z_L(1, ..., 1; ζ = 1)`
pub fn homogeneous_value(z: &Poly<Cyc6>) -> Cyc6 {
    z.eval(&vec![Cyc6::one(); z.nvars()]).unwrap()
}

/// `H_n(h) = Σ_i h_i^n / ∏_{j≠i}(h_j − h_i)` taken literally.
pub fn schur_sum(n: u32, h: &[Q]) -> Result<Q> {
    let mut acc = Q::zero();
    for (i, hi) in h.iter().enumerate() {
        let mut den = Q::one();
        for (j, hj) in h.iter().enumerate() {
            if i != j {
                let d = hj - hi;
                if d.is_zero() {
                    return Err(Error::RepeatedH);
                }
                den = den * d;
            }
        }
        acc = acc + hi.pow(n) / den;
    }
    Ok(acc)
}

/// One-row Schur function `s_m(h)`, the complete homogeneous sum.
pub fn complete_homogeneous(m: u32, h: &[Q]) -> Q {
    // e_k-free recursion over the number of variables
    let mut row = vec![Q::zero(); m as usize + 1];
    row[0] = Q::one();
    for x in h {
        for k in 1..=m as usize {
            let t = &row[k - 1] * x;
            row[k] = &row[k] + &t;
        }
    }
    row[m as usize].clone()
}

/// Sign relating the literal `H_n` to `s_{n−N+1}`: with denominators
/// `h_j − h_i` the identity holds with `(−1)^{N−1}`.
pub fn schur_sign(n_vars: usize) -> Q {
    if n_vars % 2 == 1 {
        Q::one()
    } else {
        Q::from_int(-1)
    }
}

/// `H_n = 0` for `n < N−1`, else `(−1)^{N−1} s_{n−N+1}`.
pub fn schur_identity_holds(n: u32, h: &[Q]) -> Result<bool> {
    let big_n = h.len() as u32;
    let lhs = schur_sum(n, h)?;
    let rhs = if n + 1 < big_n {
        Q::zero()
    } else {
        schur_sign(h.len()) * complete_homogeneous(n + 1 - big_n, h)
    };
    Ok(lhs == rhs)
}

/// `⌊L/2⌋ (1 − (5⌊(L+1)/2⌋ + 2) / (2(2L+3)))`
pub fn rho_closed(l: usize) -> Q {
    let l = l as i64;
    Q::from_int(l / 2) * (Q::one() - Q::new(5 * ((l + 1) / 2) + 2, 2 * (2 * l + 3)))
}

/// `Z'(1)/Z(1)` for a polynomial in `a`.
pub fn log_derivative_at_one(z: &UPoly) -> Q {
    z.derivative().eval(&Q::one()) / z.eval(&Q::one())
}

/// `Σ_{i=1}^{L+1} (h_i² − i²)` directly and from the closed form.
pub fn h_square_sum(l: usize) -> (Q, Q) {
    let h = weights(l + 1);
    let direct: i64 = h.iter().enumerate().map(|(i, &x)| (x as i64).pow(2) - (i as i64 + 1).pow(2)).sum();
    let li = l as i64;
    let closed = Q::new((li + 1) * (li / 2) * (5 * ((li + 1) / 2) + 2), 3);
    (Q::from_int(direct), closed)
}

/// Second log derivative of `χ_{L+1}(1, ..., 1, ζ)` at `ζ = 1`, and the
/// value `Σ(h_i² − i²)/((L+1)(2L+3))` it should equal.
pub fn symplectic_log_second_derivative(l: usize) -> (Q, Q) {
    // w = ζ + 1/ζ has w'(1) = 0 and w''(1) = 2
    let p = chi_homogeneous_w(l + 1).expect("character interpolation");
    let two = Q::from_int(2);
    let lhs = &two * &p.derivative().eval(&two) / p.eval(&two);
    let li = l as i64;
    let rhs = h_square_sum(l).0 / Q::from_int((li + 1) * (2 * li + 3));
    (lhs, rhs)
}

/// `Z_L(a) = 3^{−L(L−1)/2} a^{⌊L/2⌋} χ_L(1..1) χ_{L+1}(1..1, ζ)` with
/// `a = 3/(ζ + 1 + 1/ζ)`, as a polynomial in `a`.
pub fn z_of_a_from_characters(l: usize) -> Result<UPoly> {
    let coeffs = chi_homogeneous_w(l + 1)?.coeffs().to_vec();
    let m = l / 2;
    if coeffs.len() > m + 1 {
        return Err(Error::Unsupported(format!("degree {} in w exceeds {m}", coeffs.len() - 1)));
    }
    // a^m Σ c_k (3/a − 1)^k = Σ c_k (3 − a)^k a^{m−k}
    let three_minus_a = UPoly::from_ints(&[3, -1]);
    let mut acc = UPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let term = three_minus_a.pow(k as u32).mul(&UPoly::monomial(c.clone(), m - k));
        acc = acc.add(&term);
    }
    let pref = weyl_dimension(l) / Q::from_int(3).pow((l * (l - 1) / 2) as u32);
    Ok(acc.scale(&pref))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_scaled_values() {
        assert_eq!(weights(6), vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(weyl_dimension(3), Q::from_int(6));
        assert_eq!(weyl_dimension(4), Q::from_int(27));
        let scaled: Vec<Q> = (1..=7).map(chi_scaled).collect();
        let expect: Vec<Q> = [1, 1, 2, 3, 11, 26, 170].iter().map(|&x| Q::from_int(x)).collect();
        assert_eq!(scaled, expect);
        for n in 1..=9 {
            assert_eq!(chi_scaled(n), chi_scaled_product(n), "n={n}");
        }
    }

    #[test]
    fn hvsasm_sequence() {
        let v: Vec<BigInt> = (1..=6).map(hvsasm_count).collect();
        let expect: Vec<BigInt> = [1, 2, 6, 33, 286, 4420].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(v, expect);
        assert_eq!(hvsasm_count(0), BigInt::from(1));
    }

    #[test]
    fn chi_one_and_three() {
        let uni = Universe::spectral(3, &[]);
        let c1 = symplectic_char::<Q>(&uni, &[Var::Z(1)]);
        assert!(c1.is_one());
        let c3 = symplectic_char::<Q>(&uni, &[Var::Z(1), Var::Z(2), Var::Z(3)]);
        let pts = [Q::new(2, 3), Q::new(-5, 7), Q::new(3, 1)];
        assert_eq!(c3.eval(&pts).unwrap(), symplectic_char_at(&pts).unwrap());
        // direct 3x3 determinant ratio
        let h = [1, 2, 4];
        let num: Vec<Vec<Q>> = pts.iter().map(|x| h.iter().map(|&e| x.pow(e) - x.pow(e).inv().unwrap()).collect()).collect();
        let den: Vec<Vec<Q>> = pts.iter().map(|x| (1..=3).map(|e| x.pow(e) - x.pow(e).inv().unwrap()).collect()).collect();
        assert_eq!(c3.eval(&pts).unwrap(), det(&num) / det(&den));
    }

    #[test]
    fn homogeneous_chi_matches_symbolic() {
        let uni = Universe::new(&[Var::Z(1), Var::Z(2), Var::Zeta]);
        let c = symplectic_char::<Q>(&uni, &[Var::Z(1), Var::Z(2), Var::Zeta]);
        let p = chi_homogeneous_w(3).unwrap();
        for z in [Q::new(3, 7), Q::new(-5, 2)] {
            let v = c.eval(&[Q::one(), Q::one(), z.clone()]).unwrap();
            assert_eq!(v, p.eval(&(&z + &z.inv().unwrap())));
        }
    }

    #[test]
    fn jacobi_trudi_matches_weyl_ratio() {
        assert_eq!(partition(6), vec![2, 2, 1, 1, 0, 0]);
        let mut sampler = Sampler::new(7);
        for n in 1..=6 {
            let pts = sampler.rationals(n);
            assert_eq!(symplectic_char_jt(&pts).unwrap(), symplectic_char_at(&pts).unwrap(), "n={n}");
        }
    }

    #[test]
    fn degenerate_points_are_rejected() {
        let pts = [Q::new(2, 3), Q::new(2, 3)];
        assert_eq!(symplectic_char_at(&pts).unwrap_err(), Error::WeylDenominatorZero);
        assert_eq!(symplectic_char_at(&[Q::one()]).unwrap_err(), Error::WeylDenominatorZero);
    }

    #[test]
    fn homogeneous_chi_matches_weyl() {
        for n in 1..=7 {
            let p = chi_homogeneous_w(n).unwrap();
            assert_eq!(p.eval(&Q::from_int(2)), weyl_dimension(n), "n={n}");
        }
    }

    #[test]
    fn schur_identity_small() {
        let h = [Q::from_int(1), Q::from_int(2)];
        // 1/(2−1) + 2/(1−2)
        assert_eq!(schur_sum(1, &h).unwrap(), Q::from_int(-1));
        assert_eq!(schur_sum(2, &h).unwrap(), Q::from_int(-3));
        let h3 = [Q::from_int(1), Q::from_int(2), Q::from_int(4)];
        assert!(schur_sum(0, &h3).unwrap().is_zero());
        assert!(schur_sum(1, &h3).unwrap().is_zero());
        for n in 0..8 {
            assert!(schur_identity_holds(n, &h3).unwrap());
        }
        assert_eq!(schur_sum(1, &[Q::one(), Q::one()]).unwrap_err(), Error::RepeatedH);
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho_closed(1), Q::zero());
        assert_eq!(rho_closed(2), Q::new(1, 2));
        assert_eq!(rho_closed(4), Q::new(10, 11));
        assert_eq!(log_derivative_at_one(&UPoly::from_ints(&[1, 1])), Q::new(1, 2));
        assert_eq!(log_derivative_at_one(&UPoly::from_ints(&[9, 18, 6])), Q::new(10, 11));
        for l in 1..=8 {
            let (a, b) = h_square_sum(l);
            assert_eq!(a, b, "L={l}");
        }
    }

    #[test]
    fn z_of_a_small() {
        assert_eq!(z_of_a_from_characters(2).unwrap(), UPoly::from_ints(&[1, 1]));
        assert_eq!(z_of_a_from_characters(4).unwrap(), UPoly::from_ints(&[9, 18, 6]));
    }

    #[test]
    fn symplectic_second_derivative() {
        for l in 1..=5 {
            let (a, b) = symplectic_log_second_derivative(l);
            assert_eq!(a, b, "L={l}");
        }
    }
}
