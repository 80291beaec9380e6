use mixedloop::algebra::Q;
use mixedloop::groundstate::{eigenvalue, ground_state, hamiltonian};
use mixedloop::link::{Basis, LinkPattern};
use mixedloop::{operators, sumrule};
use proptest::prelude::*;

fn pattern() -> impl Strategy<Value = LinkPattern> {
    (1usize..=8).prop_flat_map(|l| {
        let n = Basis::new(l).dim();
        (Just(l), 0..n).prop_map(|(l, k)| Basis::new(l).pattern(k).clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn encoding_round_trips(p in pattern()) {
        prop_assert_eq!(p.encoding().parse::<LinkPattern>().unwrap(), p);
    }

    #[test]
    fn generators_square_correctly(p in pattern(), i in 1usize..8) {
        prop_assert_eq!(p.apply_f().apply_f(), p.apply_f());
        if i < p.len() {
            let (once, _) = p.apply_e(i).unwrap();
            let (twice, loops) = once.apply_e(i).unwrap();
            prop_assert_eq!(twice, once);
            prop_assert_eq!(loops, 1);
        }
    }

    #[test]
    fn ground_state_at_rational_a(l in 1usize..=5, num in -30i64..=30, den in 1i64..=9) {
        let a = Q::new(num, den);
        let gs = ground_state(l).unwrap();
        let h = hamiltonian(&gs.basis);
        let psi = gs.at(&a);
        let lam = eigenvalue(l).eval(&a);
        for (row, want) in h.iter().zip(&psi) {
            let got = row.iter().zip(&psi).fold(Q::zero(), |acc, (x, p)| acc + x.eval(&a) * p.clone());
            prop_assert_eq!(got, lam.clone() * want.clone());
        }
    }

    #[test]
    fn integrability_at_any_seed(l in 2usize..=4, seed in any::<u64>()) {
        for c in operators::verify_sampled(l, 1, seed, 0) {
            prop_assert!(c.passed(), "{}", c);
        }
    }

    #[test]
    fn character_recurrence_at_any_seed(n in 2usize..=5, seed in any::<u64>()) {
        let c = sumrule::verify_chi_recurrence(n, 1, seed);
        prop_assert!(c.passed(), "{}", c);
    }
}
