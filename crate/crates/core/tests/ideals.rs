//! Ad-nilpotent and strictly positive ideals.

use covpoly::ideals::{
    ad0_polynomial, ad_polynomial, bc_ad_closed_form, family_report, good_poset_check, ratio_check,
    IdealFamily,
};
use covpoly::poset::upper_ideal_lattice;
use covpoly::{RootSystem, RootSystemType};

fn small_types() -> Vec<RootSystemType> {
    RootSystemType::all_reduced(5)
}

#[test]
fn explicit_lattices_match_antichain_counts() {
    for ty in small_types() {
        let rs = RootSystem::build(ty).unwrap();
        let lattice = upper_ideal_lattice(rs.root_poset(), 1 << 16).unwrap();
        let poly = ad_polynomial(&rs);
        assert_eq!(lattice.len() as i64, poly.evaluate(1), "{ty}");
        assert_eq!(lattice.upper_covering_polynomial(), poly, "{ty}");
        assert_eq!(lattice.lower_covering_polynomial(), poly, "{ty}");
        let as_poset = lattice.to_poset();
        assert!(as_poset.is_distributive_lattice(), "{ty}");
        assert!(as_poset.deviation_polynomial().unwrap().is_zero(), "{ty}");
    }
}

#[test]
fn ratios_hold_for_both_families() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        assert!(
            ratio_check(&family_report(&rs, IdealFamily::Ad).unwrap()).unwrap(),
            "{ty}"
        );
        if ty.rank >= 2 {
            assert!(
                ratio_check(&family_report(&rs, IdealFamily::Ad0).unwrap()).unwrap(),
                "{ty}"
            );
        }
    }
}

#[test]
fn root_posets_are_good() {
    for ty in small_types() {
        let rs = RootSystem::build(ty).unwrap();
        assert!(good_poset_check(rs.root_poset()).unwrap(), "{ty}");
        if ty.rank >= 2 {
            assert!(good_poset_check(&rs.without_simples()).unwrap(), "{ty}");
        }
    }
}

#[test]
fn bc_closed_form_is_not_palindromic() {
    for n in 2..=6 {
        let poly = bc_ad_closed_form(n);
        assert!(!poly.is_palindromic(n), "n={n}");
        let b = RootSystem::build(format!("B{}", n + 1).parse().unwrap()).unwrap();
        assert_eq!(ad0_polynomial(&b).unwrap(), poly);
    }
}

#[test]
fn g2_counts() {
    let g2 = RootSystem::build("G2".parse().unwrap()).unwrap();
    assert_eq!(ad_polynomial(&g2).evaluate(1), 8);
    assert_eq!(ad0_polynomial(&g2).unwrap().evaluate(1), 5);
}
