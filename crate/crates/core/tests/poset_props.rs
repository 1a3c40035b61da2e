//! Property tests for covering polynomials on random posets, checked
//! against the brute-force order in `common`.

mod common;

use common::{poset_from, staircase_oracle, BruteOrder};
use covpoly::poset::format;
use covpoly::poset::upper_ideal_lattice;
use covpoly::{Polynomial, Poset};
use proptest::prelude::*;

/// A random relation on `0..n` oriented `i < j`, so always acyclic.
fn relation(max_size: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_size).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.3), slots).prop_map(move |mask| {
            let mut pairs = Vec::new();
            let mut bit = mask.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if bit.next().unwrap() {
                        pairs.push((i, j));
                    }
                }
            }
            (n, pairs)
        })
    })
}

fn dev(p: &Poset) -> Polynomial {
    p.deviation_polynomial().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn covering_data_matches_brute_force((n, pairs) in relation(10)) {
        let poset = poset_from(n, &pairs);
        let order = BruteOrder::new(n, &pairs);
        prop_assert_eq!(poset.upper_covering_polynomial(), order.upper());
        prop_assert_eq!(poset.lower_covering_polynomial(), order.lower());
        prop_assert_eq!(poset.num_edges(), order.edges());
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(poset.leq(a, b), order.leq[a][b]);
            }
        }
    }

    #[test]
    fn values_and_derivatives_agree_at_one((n, pairs) in relation(10)) {
        let poset = poset_from(n, &pairs);
        let up = poset.upper_covering_polynomial();
        let low = poset.lower_covering_polynomial();
        prop_assert_eq!(up.evaluate(1), n as i64);
        prop_assert_eq!(low.evaluate(1), n as i64);
        prop_assert_eq!(up.derivative_at_one(), low.derivative_at_one());
        prop_assert_eq!(&dev(&poset) * &(&Polynomial::q_minus_one() * &Polynomial::q_minus_one()), &up - &low);
    }

    #[test]
    fn triple_identity((n, pairs) in relation(9)) {
        let poset = poset_from(n, &pairs);
        let (wedge, vee) = poset.triple_counts();
        prop_assert_eq!(wedge as i64 - vee as i64, 2 * dev(&poset).evaluate(1));
    }

    #[test]
    fn opposite_negates_deviation((n, pairs) in relation(9)) {
        let poset = poset_from(n, &pairs);
        let opposite = poset.opposite();
        prop_assert_eq!(dev(&opposite), -dev(&poset));
        prop_assert_eq!(opposite.opposite().hasse_edges(), poset.hasse_edges());
    }

    #[test]
    fn sum_and_product_rules((n, a) in relation(6), (m, b) in relation(6)) {
        let (p, q) = (poset_from(n, &a), poset_from(m, &b));
        let sum = Poset::disjoint_sum(&p, &q);
        prop_assert_eq!(dev(&sum), &dev(&p) + &dev(&q));
        let product = Poset::direct_product(&p, &q);
        prop_assert_eq!(product.len(), n * m);
        prop_assert_eq!(
            product.upper_covering_polynomial(),
            &p.upper_covering_polynomial() * &q.upper_covering_polynomial()
        );
        let expected = &(&p.upper_covering_polynomial() * &dev(&q))
            + &(&q.lower_covering_polynomial() * &dev(&p));
        prop_assert_eq!(dev(&product), expected);
    }

    #[test]
    fn self_dual_product_has_zero_deviation((n, pairs) in relation(6)) {
        let p = poset_from(n, &pairs);
        prop_assert!(dev(&Poset::direct_product(&p, &p.opposite())).is_zero());
    }

    #[test]
    fn antichains_match_brute_force((n, pairs) in relation(11)) {
        let poset = poset_from(n, &pairs);
        prop_assert_eq!(poset.antichain_polynomial(), BruteOrder::new(n, &pairs).antichains());
    }

    #[test]
    fn ideal_lattice_is_distributive_with_zero_deviation((n, pairs) in relation(8)) {
        let ground = poset_from(n, &pairs);
        let order = BruteOrder::new(n, &pairs);
        let lattice = upper_ideal_lattice(&ground, 1 << 12).unwrap();
        prop_assert_eq!(lattice.len(), order.upper_ideals().len());
        let as_poset = lattice.to_poset();
        prop_assert!(as_poset.is_distributive_lattice());
        prop_assert!(dev(&as_poset).is_zero());
        let minima = ground.minimal_elements().len();
        let maxima = ground.maximal_elements().len();
        prop_assert_eq!(dev(&as_poset.remove_bottom().unwrap()), staircase_oracle(maxima));
        prop_assert_eq!(dev(&as_poset.remove_top().unwrap()), -staircase_oracle(minima));
    }

    #[test]
    fn file_format_round_trips((n, pairs) in relation(10)) {
        let poset = poset_from(n, &pairs);
        let back = format::parse(&format::write(&poset)).unwrap();
        prop_assert_eq!(back.hasse_edges(), poset.hasse_edges());
        prop_assert_eq!(back.labels(), poset.labels());
    }
}

#[test]
fn chain_and_antichain() {
    let chain = Poset::chain(5);
    assert_eq!(
        chain.upper_covering_polynomial(),
        Polynomial::new(vec![1, 4])
    );
    assert!(dev(&chain).is_zero());
    let antichain = Poset::antichain(4);
    assert_eq!(
        antichain.antichain_polynomial(),
        Polynomial::new(vec![1, 4, 6, 4, 1])
    );
}

#[test]
fn boolean_lattice_removals() {
    // J*(3-element antichain) is the Boolean lattice on 3 atoms.
    let lattice = upper_ideal_lattice(&Poset::antichain(3), 64)
        .unwrap()
        .to_poset();
    assert_eq!(
        dev(&lattice.remove_bottom().unwrap()),
        Polynomial::new(vec![2, 1])
    );
    assert_eq!(
        dev(&lattice.remove_top().unwrap()),
        Polynomial::new(vec![-2, -1])
    );
}
