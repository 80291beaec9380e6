use mixedloop::algebra::{Cyc6, UPoly, Q};
use mixedloop::groundstate::*;
use mixedloop::link::Basis;
use mixedloop::qkz;
use mixedloop::sumrule;

fn ints(rows: &[&[i64]]) -> Vec<UPoly> {
    rows.iter().map(|c| UPoly::from_ints(c)).collect()
}

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_int(x)).collect()
}

#[test]
fn size_four_matrix() {
    let a = |c: i64, d: i64| UPoly::from_ints(&[c, d]);
    let expect = vec![
        vec![a(0, 1), a(0, 1), a(0, 0), a(0, 0), a(0, 0), a(0, 0)],
        vec![a(1, 0), a(1, 0), a(1, 0), a(0, 0), a(0, 0), a(0, 0)],
        vec![a(1, 0), a(1, 0), a(1, 1), a(0, 1), a(1, 0), a(0, 0)],
        vec![a(0, 0), a(0, 0), a(0, 0), a(1, 0), a(0, 0), a(1, 0)],
        vec![a(1, 0), a(0, 0), a(1, 0), a(0, 0), a(1, 1), a(0, 1)],
        vec![a(0, 0), a(1, 0), a(0, 0), a(2, 0), a(1, 0), a(2, 0)],
    ];
    assert_eq!(hamiltonian(&Basis::new(4)), expect);
}

#[test]
fn size_four_ground_state() {
    let gs = ground_state(4).unwrap();
    let expect = ints(&[&[0, 0, 1], &[0, 3], &[0, 6, 2], &[3], &[0, 6, 3], &[6, 3]]);
    assert_eq!(gs.components, expect);
    assert_eq!(gs.at(&Q::one()), qs(&[1, 3, 8, 3, 9, 9]));
    assert_eq!(gs.at(&Q::zero()), qs(&[0, 0, 0, 3, 0, 6]));
    assert_eq!(gs.a_polynomial_sum(), UPoly::from_ints(&[9, 18, 6]));
    assert!(gs.check_a_zero().passed());
}

#[test]
fn ground_states_up_to_eight() {
    for l in 1..=8 {
        let b = Basis::new(l);
        assert!(check_column_sums(&b), "L={l}");
        let gs = ground_state(l).unwrap();
        assert!(gs.check_eigen(), "L={l}");
        assert!(gs.nonnegative_integral(), "L={l}");
        assert!(gs.check_a_zero().passed(), "L={l}");
        let z = gs.a_polynomial_sum();
        assert_eq!(z, sumrule::z_of_a_from_characters(l).unwrap(), "L={l}");
        assert_eq!(sumrule::log_derivative_at_one(&z), sumrule::rho_closed(l));
    }
}

#[test]
fn small_tau_prime_vectors() {
    let tp = |l| tau_prime_components(&qkz::build_solution(l).unwrap()).unwrap();
    assert_eq!(tp(2).components, ints(&[&[1], &[1]]));
    assert_eq!(tp(3).components, ints(&[&[1], &[2], &[2, 0, 1]]));
    let t4 = tp(4);
    assert_eq!(t4.components, ints(&[&[1], &[3], &[6, 0, 2], &[2, 0, 1], &[5, 0, 3, 0, 1], &[7, 0, 2]]));
    assert!(t4.positive);
    // τ′ = 1 is the stochastic point
    let at_one: Vec<Q> = t4.components.iter().map(|p| p.eval(&Q::one())).collect();
    assert_eq!(at_one, qs(&[1, 3, 8, 3, 9, 9]));
}

#[test]
fn fixed_point_and_homogeneous_limit() {
    for l in 2..=4 {
        let sol = qkz::build::<Cyc6>(l, Default::default()).unwrap().solution;
        let c = scattering_fixed_point(&sol, 4, 5);
        assert!(c.passed(), "{c}");
        let gs = ground_state(l).unwrap();
        assert!(homogeneous_limit_matches(&sol, &gs).passed(), "L={l}");
    }
}
