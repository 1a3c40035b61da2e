//! Ad-nilpotent ideals: `AD = J*(Delta+)` and the strictly positive
//! `AD_0 = J*(Delta+ \ Pi)`.
//!
//! Both covering polynomials of `J*(L)` equal the antichain polynomial of
//! `L`, so the lattices are counted through antichains and never built.

use num_rational::Ratio;
use thiserror::Error;

use crate::closedforms::{binomial, coxeter_number};
use crate::polynomial::Polynomial;
use crate::poset::{upper_ideal_lattice, Poset, PosetError, DEFAULT_IDEAL_BUDGET};
use crate::rootsystem::{RootSystem, RootSystemType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealsError {
    #[error("conjectural coefficient for n={n}, k={k} is not an integer: {value}")]
    NonIntegral { n: i64, k: i64, value: Ratio<i64> },
    #[error("strictly positive ideals need rank at least 2, got {0}")]
    RankTooSmall(RootSystemType),
    #[error("{0} has no Coxeter number")]
    NotReduced(RootSystemType),
    #[error("n must be at least {min}, got {n}")]
    OutOfRange { n: i64, min: i64 },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealFamily {
    Ad,
    Ad0,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFamilyReport {
    pub root_type: RootSystemType,
    pub family: IdealFamily,
    pub polynomial: Polynomial,
    /// Number of ideals.
    pub total: i64,
    /// Number of Hasse edges of the ideal lattice.
    pub edges: i64,
    pub ratio: Ratio<i64>,
}

pub fn ad_polynomial(rs: &RootSystem) -> Polynomial {
    rs.root_poset().antichain_polynomial()
}

pub fn ad0_polynomial(rs: &RootSystem) -> Result<Polynomial, IdealsError> {
    if rs.rank() < 2 {
        return Err(IdealsError::RankTooSmall(rs.root_type()));
    }
    Ok(rs.without_simples().antichain_polynomial())
}

/// `sum_k C(n,k) C(n+1,k) q^k`, the ideal count polynomial of `AD_0(B_{n+1})`.
pub fn bc_ad_closed_form(n: usize) -> Polynomial {
    let n = n as i64;
    Polynomial::new(
        (0..=n)
            .map(|k| binomial(n, k) * binomial(n + 1, k))
            .collect(),
    )
}

/// `C(n-1,k)^2 + (k-2)/(n-1) C(n-1,k) C(n-1,k-1)`, the conjectured
/// `q^k`-coefficient of the `AD_0(D_n)` polynomial.
pub fn ad0_dn_conjecture_coefficient(n: i64, k: i64) -> Result<i64, IdealsError> {
    if n < 4 {
        return Err(IdealsError::OutOfRange { n, min: 4 });
    }
    let c = binomial(n - 1, k);
    let value = Ratio::from_integer(c * c)
        + Ratio::new(k - 2, n - 1) * Ratio::from_integer(c * binomial(n - 1, k - 1));
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(IdealsError::NonIntegral { n, k, value })
    }
}

/// The conjectured `AD_0(D_n)` polynomial, all coefficients.
pub fn ad0_dn_conjecture(n: i64) -> Result<Polynomial, IdealsError> {
    let coeffs = (0..=n)
        .map(|k| ad0_dn_conjecture_coefficient(n, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

pub fn family_report(
    rs: &RootSystem,
    family: IdealFamily,
) -> Result<IdealFamilyReport, IdealsError> {
    let polynomial = match family {
        IdealFamily::Ad => ad_polynomial(rs),
        IdealFamily::Ad0 => ad0_polynomial(rs)?,
    };
    let total = polynomial.evaluate(1);
    let edges = polynomial.derivative_at_one();
    Ok(IdealFamilyReport {
        root_type: rs.root_type(),
        family,
        polynomial,
        total,
        edges,
        ratio: Ratio::new(edges, total),
    })
}

/// The expected edges-per-ideal ratio: `n/2` for `AD`, `(n/2)(h-2)/(h-1)`
/// for `AD_0`.
pub fn expected_ratio(ty: RootSystemType, family: IdealFamily) -> Result<Ratio<i64>, IdealsError> {
    let h = coxeter_number(ty).ok_or(IdealsError::NotReduced(ty))?;
    let half_rank = Ratio::new(ty.rank as i64, 2);
    Ok(match family {
        IdealFamily::Ad => half_rank,
        IdealFamily::Ad0 => half_rank * Ratio::new(h - 2, h - 1),
    })
}

pub fn ratio_check(report: &IdealFamilyReport) -> Result<bool, IdealsError> {
    Ok(report.ratio == expected_ratio(report.root_type, report.family)?)
}

/// For graded `L` with maximal chains of `r` elements, checks
/// `#E(J*(L)) / #J*(L) = #L / (r+1)`.
pub fn good_poset_check(ground: &Poset) -> Result<bool, IdealsError> {
    let r = ground.graded_rank().ok_or(PosetError::NotGraded)?;
    let lattice = upper_ideal_lattice(ground, DEFAULT_IDEAL_BUDGET)?;
    let lhs = Ratio::new(lattice.num_edges() as i64, lattice.len() as i64);
    let rhs = Ratio::new(ground.len() as i64, r as i64 + 1);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn ad_small() {
        assert_eq!(ad_polynomial(&rs("A1")), poly![1, 1]);
        assert_eq!(ad_polynomial(&rs("A2")), poly![1, 3, 1]);
        assert_eq!(ad0_polynomial(&rs("A3")).unwrap(), poly![1, 3, 1]);
        assert_eq!(ad0_polynomial(&rs("G2")).unwrap(), poly![1, 4]);
        assert!(matches!(
            ad0_polynomial(&rs("A1")),
            Err(IdealsError::RankTooSmall(_))
        ));
    }

    #[test]
    fn bc_closed_form() {
        let p = bc_ad_closed_form(2);
        assert_eq!(p, poly![1, 6, 3]);
        assert_eq!(p.evaluate(1), 10);
        assert_eq!(p.derivative_at_one(), 12);
        assert_eq!(ad_polynomial(&rs("BC2")), p);
    }

    #[test]
    fn dn_conjecture() {
        assert_eq!(ad0_dn_conjecture_coefficient(4, 0).unwrap(), 1);
        assert_eq!(
            ad0_dn_conjecture(4).unwrap(),
            ad0_polynomial(&rs("D4")).unwrap()
        );
        assert_eq!(
            ad0_dn_conjecture(5).unwrap(),
            ad0_polynomial(&rs("D5")).unwrap()
        );
        assert!(ad0_dn_conjecture_coefficient(3, 1).is_err());
    }

    #[test]
    fn ratios() {
        let a2 = family_report(&rs("A2"), IdealFamily::Ad).unwrap();
        assert_eq!((a2.total, a2.edges), (5, 5));
        assert_eq!(a2.ratio, Ratio::from_integer(1));
        assert!(ratio_check(&a2).unwrap());
        let f4 = family_report(&rs("F4"), IdealFamily::Ad0).unwrap();
        assert_eq!((f4.total, f4.edges), (66, 120));
        assert_eq!(f4.ratio, Ratio::new(20, 11));
        assert!(ratio_check(&f4).unwrap());
        let e6 = family_report(&rs("E6"), IdealFamily::Ad).unwrap();
        assert_eq!(e6.ratio, Ratio::from_integer(3));
        let bc = family_report(&rs("BC2"), IdealFamily::Ad).unwrap();
        assert!(matches!(ratio_check(&bc), Err(IdealsError::NotReduced(_))));
    }

    #[test]
    fn good_posets() {
        assert!(good_poset_check(rs("A3").root_poset()).unwrap());
        assert!(good_poset_check(&rs("B3").without_simples()).unwrap());
        assert!(good_poset_check(&Poset::chain(1)).unwrap());
        let vee =
            Poset::from_relations(Poset::default_labels(3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(good_poset_check(&vee).unwrap());
        let ungraded =
            Poset::from_relations(Poset::default_labels(4), &[(0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(
            good_poset_check(&ungraded).unwrap_err(),
            IdealsError::Poset(PosetError::NotGraded)
        );
    }
}
