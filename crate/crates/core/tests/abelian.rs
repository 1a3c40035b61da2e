//! Abelian ideals beyond the acceptance run: the unique-extension
//! classification, degrees, and structural observations on the table.

use covpoly::abelian::{
    ab_covering_polynomials, apply_reflection, enumerate_minuscule, initial_state,
    unique_extension_ideals, AbelianError, ExtensionCase,
};
use covpoly::rootsystem::Family;
use covpoly::{RootSystem, RootSystemType};

fn build(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap()).unwrap()
}

fn degree(p: &covpoly::Polynomial) -> usize {
    p.degree().finite().unwrap_or(0)
}

#[test]
fn unique_extensions_are_classified() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        let report = enumerate_minuscule(&rs).unwrap();
        let cases = unique_extension_ideals(&rs, &report).unwrap();
        assert_eq!(
            cases
                .iter()
                .filter(|(_, c)| *c == ExtensionCase::Empty)
                .count(),
            1,
            "{ty}"
        );
        // The upper polynomial's [q^0] and lower's count agree with the list.
        let (_, lower, _) = ab_covering_polynomials(&report).unwrap();
        assert_eq!(lower.coeff(1), cases.len() as i64, "{ty}");
    }
}

#[test]
fn upper_degree_is_max_orthogonal_simple_roots() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        let (upper, _, _) = ab_covering_polynomials(&enumerate_minuscule(&rs).unwrap()).unwrap();
        assert_eq!(degree(&upper), rs.max_orthogonal_simple_roots(), "{ty}");
    }
    for n in 4..=8 {
        let rs = build(&format!("D{n}"));
        let (upper, _, _) = ab_covering_polynomials(&enumerate_minuscule(&rs).unwrap()).unwrap();
        assert_eq!(degree(&upper), n / 2 + 1, "D{n}");
    }
}

#[test]
fn lower_degree_exceeds_upper_only_for_even_a() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        let (upper, lower, _) =
            ab_covering_polynomials(&enumerate_minuscule(&rs).unwrap()).unwrap();
        let expected_gap = usize::from(ty.family == Family::A && ty.rank % 2 == 0);
        assert_eq!(degree(&lower), degree(&upper) + expected_gap, "{ty}");
    }
}

#[test]
fn commutative_roots_count_linear_term() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        let (upper, _, _) = ab_covering_polynomials(&enumerate_minuscule(&rs).unwrap()).unwrap();
        assert_eq!(
            rs.commutative_roots().unwrap().len() as i64,
            upper.coeff(1),
            "{ty}"
        );
    }
}

#[test]
fn long_simple_roots_count_lower_constant_term() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        let (_, lower, _) = ab_covering_polynomials(&enumerate_minuscule(&rs).unwrap()).unwrap();
        assert_eq!(rs.long_simple().len() as i64, lower.coeff(0), "{ty}");
    }
}

#[test]
fn reflection_guard() {
    let rs = build("A2");
    let start = initial_state(&rs).unwrap();
    assert_eq!(
        apply_reflection(&rs, &start, 1).unwrap_err(),
        AbelianError::NotExtendable { index: 1, value: 0 }
    );
    let first = apply_reflection(&rs, &start, 0).unwrap();
    assert_eq!(first.shift, vec![-1, 1, 1]);
    let second = apply_reflection(&rs, &first, 1).unwrap();
    assert_eq!(second.shift, vec![0, -1, 2]);
}

#[test]
fn bc_is_rejected() {
    assert!(matches!(
        enumerate_minuscule(&build("BC3")),
        Err(AbelianError::NotReduced(_))
    ));
}
