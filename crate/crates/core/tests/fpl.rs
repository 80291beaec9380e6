use mixedloop::fpl::*;
use mixedloop::groundstate::ground_state;
use mixedloop::sumrule::hvsasm_count;
use num_bigint::BigInt;

#[test]
fn totals_follow_the_product_formula() {
    for (l, want) in [(1, 1), (2, 2), (3, 6), (4, 33), (5, 286)] {
        let n = 2 * l + 3;
        let all = enumerate_hvsfpl(n);
        assert_eq!(all.len(), want, "n={n}");
        assert_eq!(hvsasm_count(l), BigInt::from(want));
        let mut asms: Vec<Asm> = all.iter().map(|c| fpl_to_asm(c).unwrap()).collect();
        for (c, a) in all.iter().zip(&asms) {
            assert!(a.is_hv_symmetric());
            assert_eq!(&asm_to_fpl(a).unwrap(), c);
        }
        asms.sort();
        asms.dedup();
        assert_eq!(asms.len(), want);
    }
}

#[test]
fn size_seven_has_one_weighted_configuration() {
    let all = enumerate_hvsfpl(7);
    let mut w: Vec<usize> = all.iter().map(|c| refined_weight(&fpl_to_asm(c).unwrap())).collect();
    w.sort();
    assert_eq!(w, vec![0, 1]);
    // fewest -1 entries carries no weight
    let plain = all.iter().map(|c| fpl_to_asm(c).unwrap()).min_by_key(|a| a.count_minus_ones()).unwrap();
    assert_eq!(refined_weight(&plain), 0);
}

#[test]
fn class_vectors_match_ground_states() {
    let t = classify(&enumerate_hvsfpl(11)).unwrap();
    assert_eq!(t.counts, vec![1, 3, 8, 3, 9, 9]);
    assert_eq!(classify(&enumerate_hvsfpl(9)).unwrap().counts, vec![1, 2, 3]);
    assert_eq!(classify(&enumerate_hvsfpl(7)).unwrap().counts, vec![1, 1]);
    for l in 1..=5 {
        let r = verify_conjectures(l).unwrap();
        assert!(r.counts_verified(), "L={l}");
        assert!(r.refined_verified(), "L={l}: {r:?}");
        assert_eq!(r.statistic_disagreements, 0);
    }
}

#[test]
fn weighted_total_is_the_sum_rule() {
    for l in 2..=4 {
        let t = classify(&enumerate_hvsfpl(2 * l + 3)).unwrap();
        let total = t.polys.iter().fold(mixedloop::algebra::UPoly::zero(), |acc, p| acc.add(p));
        assert_eq!(total, ground_state(l).unwrap().a_polynomial_sum());
    }
}
