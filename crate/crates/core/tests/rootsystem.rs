//! Root system data checked against known constants.

use covpoly::rootsystem::{cartan_matrix, Family};
use covpoly::{RootSystem, RootSystemType};

fn build(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap()).unwrap()
}

#[test]
fn positive_root_counts() {
    let known = [
        ("A1", 1),
        ("A5", 15),
        ("B4", 16),
        ("C4", 16),
        ("D4", 12),
        ("D6", 30),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
        ("F4", 24),
        ("G2", 6),
        ("BC1", 2),
        ("BC3", 12),
    ];
    for (name, count) in known {
        assert_eq!(build(name).num_positive(), count, "{name}");
    }
}

#[test]
fn highest_root_marks() {
    let known: [(&str, &[i64]); 8] = [
        ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
        ("E7", &[2, 2, 3, 4, 3, 2, 1]),
        ("E6", &[1, 2, 2, 3, 2, 1]),
        ("F4", &[2, 3, 4, 2]),
        ("G2", &[3, 2]),
        ("B5", &[1, 2, 2, 2, 2]),
        ("C5", &[2, 2, 2, 2, 1]),
        ("D6", &[1, 2, 2, 2, 1, 1]),
    ];
    for (name, marks) in known {
        assert_eq!(build(name).theta().coords, marks.to_vec(), "{name}");
    }
}

#[test]
fn coxeter_numbers() {
    let known = [
        ("A7", 8),
        ("B5", 10),
        ("C6", 12),
        ("D7", 12),
        ("E6", 12),
        ("E7", 18),
        ("E8", 30),
        ("F4", 12),
        ("G2", 6),
    ];
    for (name, h) in known {
        let rs = build(name);
        assert_eq!(rs.coxeter_number(), Some(h), "{name}");
        assert_eq!(2 * rs.num_positive() as i64, h * rs.rank() as i64, "{name}");
    }
    assert_eq!(build("BC3").coxeter_number(), None);
}

#[test]
fn cartan_entries_follow_bourbaki_numbering() {
    // B: alpha_n short, so (alpha_{n-1}, alpha_n^vee) = -2.
    let b3 = cartan_matrix(Family::B, 3);
    assert_eq!(b3[1][2], -2);
    assert_eq!(b3[2][1], -1);
    let c3 = cartan_matrix(Family::C, 3);
    assert_eq!(c3[1][2], -1);
    assert_eq!(c3[2][1], -2);
    // G2: alpha_1 short.
    let g2 = cartan_matrix(Family::G, 2);
    assert_eq!(g2[0][1], -1);
    assert_eq!(g2[1][0], -3);
    // E8: alpha_2 attaches to alpha_4.
    let e8 = cartan_matrix(Family::E, 8);
    assert_eq!(e8[1][3], -1);
    assert_eq!(e8[1][2], 0);
}

#[test]
fn extended_cartan_row_zero_is_minus_theta() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        let ext = rs.extended_cartan();
        assert_eq!(ext[0][0], 2, "{ty}");
        // delta = sum c_i alpha_i pairs to zero with every coroot.
        let marks = rs.marks();
        for j in 0..ext.len() {
            let total: i64 = (0..ext.len()).map(|i| marks[i] * ext[i][j]).sum();
            assert_eq!(total, 0, "{ty}");
        }
    }
}

#[test]
fn long_roots_and_simply_laced() {
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        assert!(rs.is_long(rs.theta()), "{ty}");
        let all_long = rs.long_roots().len() == rs.num_positive();
        assert_eq!(all_long, rs.is_simply_laced(), "{ty}");
    }
    assert_eq!(build("C4").long_roots().len(), 4);
    assert_eq!(build("B4").long_roots().len(), 12);
    assert_eq!(build("G2").long_simple(), vec![1]);
}

#[test]
fn theta_pairings() {
    let c3 = build("C3");
    assert_eq!(c3.pairing(c3.theta(), 1), 2);
    assert_eq!(c3.pairing(c3.theta(), 3), 0);
    let a4 = build("A4");
    assert_eq!(a4.pairing(a4.theta(), 1), 1);
    assert_eq!(a4.pairing(a4.theta(), 4), 1);
    assert_eq!(a4.pairing(a4.theta(), 2), 0);
}

#[test]
fn branching_node_and_cubic_term() {
    for (name, branching) in [
        ("D4", true),
        ("E6", true),
        ("A5", false),
        ("F4", false),
        ("B3", false),
    ] {
        assert_eq!(build(name).has_branching_node(), branching, "{name}");
    }
    for ty in RootSystemType::all_reduced(8) {
        let rs = RootSystem::build(ty).unwrap();
        let cubic = rs.root_poset().upper_covering_polynomial().coeff(3) != 0;
        if rs.is_simply_laced() {
            assert_eq!(cubic, rs.has_branching_node(), "{ty}");
        }
    }
    // F4 has no branching node but its root poset has an element covering three.
    assert_eq!(
        build("F4")
            .root_poset()
            .upper_covering_polynomial()
            .coeff(3),
        1
    );
}

#[test]
fn invalid_types_are_rejected() {
    for bad in ["A0", "B1", "E9", "F5", "G3", "X2", "", "E"] {
        assert!(bad.parse::<RootSystemType>().is_err(), "{bad}");
    }
    assert!(RootSystem::build("D2".parse().unwrap()).is_err());
}
