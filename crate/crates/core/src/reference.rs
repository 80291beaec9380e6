//! Closed forms of the smallest solutions and sums, written out term by term
//! so they can be compared against the constructed ones.

use crate::algebra::{Cyc6, Field, RatFunc, Ring, Universe, Var, Q};
use crate::link::LinkPattern;
use crate::qkz::{universe, Poly, Shift};

type Term<'a> = (&'a [(Var, i32)], &'a [(i32, i64)]);

/// `Σ c · q^k · z^e` with `q = u²`.
fn lin(uni: &Universe, terms: &[Term]) -> Poly {
    terms.iter().fold(Poly::zero(uni), |acc, (vars, q)| {
        let c = RatFunc::laurent(&q.iter().map(|&(k, c)| (2 * k, Q::from_int(c))).collect::<Vec<_>>());
        acc.plus(&Poly::term(uni, vars, c))
    })
}

const Z1: Var = Var::Z(1);
const Z2: Var = Var::Z(2);
const Z3: Var = Var::Z(3);
const ZETA: Var = Var::Zeta;

fn pat(s: &str) -> LinkPattern {
    s.parse().expect("valid pattern")
}

/// `(z_i/z_j − q⁻²)(z_j − q⁻¹/z_i)`
fn pair(uni: &Universe, i: Var, j: Var) -> Poly {
    lin(uni, &[(&[(i, 1), (j, -1)], &[(0, 1)]), (&[], &[(-2, -1)])])
        .times(&lin(uni, &[(&[(j, 1)], &[(0, 1)]), (&[(i, -1)], &[(-1, -1)])]))
}

/// `(q − q⁻¹ζ/z)(z − q/ζ)`
fn wall(uni: &Universe, z: Var) -> Poly {
    lin(uni, &[(&[], &[(1, 1)]), (&[(ZETA, 1), (z, -1)], &[(-1, -1)])])
        .times(&lin(uni, &[(&[(z, 1)], &[(0, 1)]), (&[(ZETA, -1)], &[(1, -1)])]))
}

pub fn size_two_components() -> Vec<(LinkPattern, Poly)> {
    let u = universe(2, Shift::Fixed);
    let minus_q2 = lin(&u, &[(&[], &[(-2, -1)])]);
    vec![(pat(".."), pair(&u, Z1, Z2)), (pat("()"), minus_q2.times(&wall(&u, Z2)))]
}

/// The size-three components. In the last one the final term is taken as
/// `q⁻²(1+q⁻¹) z_2⁻¹ z_3⁻¹`; read as `z_2 z_3⁻¹` it does not solve the system.
pub fn size_three_components() -> Vec<(LinkPattern, Poly)> {
    let u = universe(3, Shift::Fixed);
    let base = pair(&u, Z1, Z2).times(&pair(&u, Z1, Z3)).times(&pair(&u, Z2, Z3));

    let bracket = lin(
        &u,
        &[
            (&[(Z1, 1)], &[(-2, -1)]),
            (&[(Z2, 1)], &[(-2, -1)]),
            (&[(Z3, 1)], &[(-3, 1), (-4, 1)]),
            (&[(Z1, -1)], &[(-5, -1)]),
            (&[(Z2, -1)], &[(-5, -1)]),
            (&[(Z3, -1)], &[(-3, 1), (-4, 1)]),
        ],
    );
    let one = pair(&u, Z1, Z2).times(&wall(&u, Z3)).times(&bracket);

    let pre = lin(&u, &[(&[(Z2, 1), (Z3, -1)], &[(0, 1)]), (&[], &[(-2, -1)])])
        .times(&lin(&u, &[(&[(Z3, 1)], &[(0, 1)]), (&[(Z2, -1)], &[(-2, -1)])]));
    let mixed = lin(
        &u,
        &[
            (&[(Z1, 1), (Z2, 1)], &[(-1, -1)]),
            (&[(Z1, 1), (Z3, 1)], &[(-1, -1)]),
            (&[(Z2, 1), (Z3, 1)], &[(-2, 1), (-3, 1)]),
            (&[(Z1, 1), (Z2, -1)], &[(-1, -1)]),
            (&[(Z1, 1), (Z3, -1)], &[(-1, -1)]),
            (&[(Z1, -1), (Z2, 1)], &[(-4, -1)]),
            (&[(Z1, -1), (Z3, 1)], &[(-4, -1)]),
            (&[(Z2, 1), (Z3, -1)], &[(-2, 1), (-3, 1)]),
            (&[(Z2, -1), (Z3, 1)], &[(-2, 1), (-3, 1)]),
            (&[], &[(-1, -1), (-2, 1), (-3, 1), (-4, -1)]),
            (&[(Z1, -1), (Z2, -1)], &[(-4, -1)]),
            (&[(Z1, -1), (Z3, -1)], &[(-4, -1)]),
            (&[(Z2, -1), (Z3, -1)], &[(-2, 1), (-3, 1)]),
        ],
    );
    let zeta_part = lin(&u, &[(&[(ZETA, 1)], &[(-3, 1)]), (&[(ZETA, -1)], &[(0, 1)])]).times(&lin(
        &u,
        &[
            (&[(Z1, 1)], &[(0, 1), (1, 1)]),
            (&[(Z2, 1)], &[(-1, -1)]),
            (&[(Z3, 1)], &[(-1, -1)]),
            (&[(Z1, -1)], &[(-2, 1), (-3, 1)]),
            (&[(Z2, -1)], &[(-1, -1)]),
            (&[(Z3, -1)], &[(-1, -1)]),
        ],
    ));
    let two = pre.times(&mixed.plus(&zeta_part));

    vec![(pat("..."), base), (pat(".()"), one), (pat("()."), two)]
}

/// `Σ_v (v + 1/v)` in the `q = ω` field.
fn e1(uni: &Universe, vars: &[Var]) -> Poly<Cyc6> {
    vars.iter()
        .fold(Poly::zero(uni), |acc, &v| acc.plus(&Poly::var(uni, v)).plus(&Poly::var_pow(uni, v, -1)))
}

pub fn size_two_sum() -> Poly<Cyc6> {
    let u = universe(2, Shift::Fixed);
    e1(&u, &[Z1, Z2, ZETA])
}

/// `e(z) · (3 + Σ_{i≠j} z_i/z_j + Σ_{i<j} (z_i z_j + 1/(z_i z_j)) + e(ζ) e(z))`
pub fn size_three_sum() -> Poly<Cyc6> {
    let u = universe(3, Shift::Fixed);
    let zs = [Z1, Z2, Z3];
    let first = e1(&u, &zs);
    let mut second = Poly::constant(&u, Cyc6::from_int(3));
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            second = second.plus(&Poly::term(&u, &[(zs[i], 1), (zs[j], -1)], Cyc6::one()));
            if i < j {
                second = second
                    .plus(&Poly::term(&u, &[(zs[i], 1), (zs[j], 1)], Cyc6::one()))
                    .plus(&Poly::term(&u, &[(zs[i], -1), (zs[j], -1)], Cyc6::one()));
            }
        }
    }
    second = second.plus(&e1(&u, &[ZETA]).times(&first));
    first.times(&second)
}

/// The stochastic size-four ground state as polynomials in `a`, in canonical order.
pub fn size_four_ground_state() -> Vec<Vec<i64>> {
    vec![vec![0, 0, 1], vec![0, 3], vec![0, 6, 2], vec![3], vec![0, 6, 3], vec![6, 3]]
}

/// The size-four Hamiltonian, entries `c + d a` as `(c, d)`.
pub fn size_four_hamiltonian() -> Vec<Vec<(i64, i64)>> {
    let z = (0, 0);
    let (one, a, one_a) = ((1, 0), (0, 1), (1, 1));
    vec![
        vec![a, a, z, z, z, z],
        vec![one, one, one, z, z, z],
        vec![one, one, one_a, a, one, z],
        vec![z, z, z, one, z, one],
        vec![one, z, one, z, one_a, a],
        vec![z, one, z, (2, 0), one, (2, 0)],
    ]
}

/// `τ′` component vectors for sizes 2, 3, 4, coefficients in increasing degree.
pub fn tau_prime_vectors(l: usize) -> Option<Vec<Vec<i64>>> {
    Some(match l {
        2 => vec![vec![1], vec![1]],
        3 => vec![vec![1], vec![2], vec![2, 0, 1]],
        4 => vec![vec![1], vec![3], vec![6, 0, 2], vec![2, 0, 1], vec![5, 0, 3, 0, 1], vec![7, 0, 2]],
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_two_base_matches_product() {
        let b: Poly = crate::qkz::base_component(2, Shift::Fixed);
        assert_eq!(size_two_components()[0].1, b);
        let b3: Poly = crate::qkz::base_component(3, Shift::Fixed);
        assert_eq!(size_three_components()[0].1, b3);
    }

    #[test]
    fn sums_are_symmetric_in_zeta_inversion() {
        let z = size_three_sum();
        assert_eq!(z.invert_var(ZETA), z);
    }
}
