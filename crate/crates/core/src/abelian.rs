//! Abelian ideals of the root poset.
//!
//! They are enumerated twice: directly, as upper ideals with no two members
//! summing to a root, and through minuscule affine Weyl group elements, where
//! each ideal carries a shift vector `k` with `w^{-1}(alpha_i) = -mu_i + k_i
//! delta`. The second route also gives the map `tau(I) = w(2 delta - theta)`
//! onto the long positive roots.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::polynomial::Polynomial;
use crate::poset::{Poset, PosetError, UpperIdeal};
use crate::rootsystem::{RootSystem, RootSystemType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("{0} is not reduced; its abelian ideals are those of C{n}", n = .0.rank)]
    NotReduced(RootSystemType),
    #[error("generator {index} cannot be applied: k_{index} = {value}, expected 1")]
    NotExtendable { index: usize, value: i64 },
    #[error("tau is undefined on the empty ideal")]
    EmptyIdeal,
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("ideal {0} with a unique extension fits no known case")]
    ClassificationGap(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinusculeState {
    /// Generators in application order; `w = s_{j_m} ... s_{j_1}`.
    pub word: Vec<usize>,
    /// `(k_0, ..., k_n)`.
    pub shift: Vec<i64>,
    /// Signed roots `mu_0..mu_n` in simple-root coordinates.
    pub mu: Vec<Vec<i64>>,
    pub ideal: UpperIdeal,
}

/// The point `z` with `(z, alpha_i) = k_i`, stored by its pairings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZVector {
    pub pairing_values: Vec<i64>,
}

impl MinusculeState {
    pub fn z_vector(&self) -> ZVector {
        ZVector {
            pairing_values: self.shift[1..].to_vec(),
        }
    }
}

fn require_reduced(rs: &RootSystem) -> Result<(), AbelianError> {
    if rs.root_type().is_reduced() {
        Ok(())
    } else {
        Err(AbelianError::NotReduced(rs.root_type()))
    }
}

fn sum_is_root(rs: &RootSystem, a: usize, b: usize) -> bool {
    let sum: Vec<i64> = rs.roots()[a]
        .coords
        .iter()
        .zip(&rs.roots()[b].coords)
        .map(|(x, y)| x + y)
        .collect();
    rs.index_of(&sum).is_some()
}

/// All abelian upper ideals, by extension from the empty ideal. Order is
/// breadth first, so ideals appear by size.
pub fn enumerate_direct(rs: &RootSystem) -> Result<Vec<UpperIdeal>, AbelianError> {
    require_reduced(rs)?;
    let poset = rs.root_poset();
    let mut found = vec![UpperIdeal::empty(poset.len())];
    let mut seen: HashMap<UpperIdeal, ()> = HashMap::new();
    seen.insert(found[0].clone(), ());
    let mut cursor = 0;
    while cursor < found.len() {
        let current = found[cursor].clone();
        for x in poset.max_outside(current.bits()) {
            if sum_is_root(rs, x, x) || current.iter().any(|y| sum_is_root(rs, x, y)) {
                continue;
            }
            let next = current.with(x);
            if seen.insert(next.clone(), ()).is_none() {
                found.push(next);
            }
        }
        cursor += 1;
    }
    Ok(found)
}

pub fn initial_state(rs: &RootSystem) -> Result<MinusculeState, AbelianError> {
    require_reduced(rs)?;
    let n = rs.rank();
    let mut shift = vec![0i64; n + 1];
    shift[0] = 1;
    let mut mu = vec![rs.theta().coords.clone()];
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = -1;
        mu.push(v);
    }
    Ok(MinusculeState {
        word: Vec::new(),
        shift,
        mu,
        ideal: UpperIdeal::empty(rs.num_positive()),
    })
}

/// Left-multiplies by `s_j`, which adds `mu_j` to the ideal. The update uses
/// column `j` of the extended Cartan matrix.
pub fn apply_reflection(
    rs: &RootSystem,
    state: &MinusculeState,
    j: usize,
) -> Result<MinusculeState, AbelianError> {
    let kj = state.shift[j];
    if kj != 1 {
        return Err(AbelianError::NotExtendable {
            index: j,
            value: kj,
        });
    }
    let ext = rs.extended_cartan();
    let added = state.mu[j].clone();
    let root = rs.index_of(&added).ok_or_else(|| {
        AbelianError::InternalMismatch(format!("mu_{j} = {added:?} is not a positive root"))
    })?;
    if state.ideal.contains(root) {
        return Err(AbelianError::InternalMismatch(format!(
            "root {} already in the ideal",
            rs.roots()[root]
        )));
    }
    let mut next = state.clone();
    for i in 0..next.shift.len() {
        let a = ext[i][j];
        next.shift[i] -= a * kj;
        for (m, &v) in next.mu[i].iter_mut().zip(&added) {
            *m -= a * v;
        }
    }
    next.word.push(j);
    next.ideal = state.ideal.with(root);
    Ok(next)
}

/// `(kappa, iota)`: counts of `-1` and `+1` entries of the shift vector.
pub fn stats_from_shift(state: &MinusculeState) -> (usize, usize) {
    let kappa = state.shift.iter().filter(|&&k| k == -1).count();
    let iota = state.shift.iter().filter(|&&k| k == 1).count();
    (kappa, iota)
}

/// Checks `-1 <= (z, gamma) <= 2` on every positive root and
/// `k_0 = 1 - (z, theta)`.
pub fn kostant_check(rs: &RootSystem, state: &MinusculeState) -> bool {
    let z = &state.shift[1..];
    let pair = |coords: &[i64]| -> i64 { coords.iter().zip(z).map(|(c, k)| c * k).sum() };
    rs.roots()
        .iter()
        .all(|g| (-1..=2).contains(&pair(&g.coords)))
        && state.shift[0] == 1 - pair(&rs.theta().coords)
}

/// Checks the structural constraints on a shift vector: entries in
/// `-1..=2`, at most one `2` sitting on a long simple root, `k_0 <= 1`, and
/// `sum c_i k_i = 1`.
pub fn shift_constraints_hold(rs: &RootSystem, state: &MinusculeState) -> bool {
    let k = &state.shift;
    let twos: Vec<usize> = (0..k.len()).filter(|&i| k[i] == 2).collect();
    let twos_ok = match twos.as_slice() {
        [] => true,
        [i] => *i >= 1 && rs.long_flags()[*i - 1],
        _ => false,
    };
    let marks = rs.marks();
    let weighted: i64 = marks.iter().zip(k).map(|(c, k)| c * k).sum();
    k.iter().all(|v| (-1..=2).contains(v)) && twos_ok && k[0] <= 1 && weighted == 1
}

/// `w(2 delta - theta)` as a root index; errors if the result is not a long
/// positive root with zero `delta` part.
pub fn tau(rs: &RootSystem, state: &MinusculeState) -> Result<usize, AbelianError> {
    if state.ideal.is_empty() {
        return Err(AbelianError::EmptyIdeal);
    }
    let theta = rs.theta().coords.clone();
    let mut x: Vec<i64> = theta.iter().map(|c| -c).collect();
    let mut d: i64 = 2;
    for &j in &state.word {
        if j == 0 {
            let p = rs.coroot_pairing(&x, &theta);
            for (xi, ti) in x.iter_mut().zip(&theta) {
                *xi -= p * ti;
            }
            d += p;
        } else {
            let p = rs.pairing_coords(&x, j - 1);
            x[j - 1] -= p;
        }
    }
    let idx = rs.index_of(&x).filter(|_| d == 0);
    match idx {
        Some(i) if rs.long_flags()[i] => Ok(i),
        _ => Err(AbelianError::InternalMismatch(format!(
            "tau landed on {x:?} + {d} delta"
        ))),
    }
}

#[derive(Debug, Clone)]
pub struct AbReport {
    pub root_type: RootSystemType,
    /// Ideals in breadth-first discovery order.
    pub ideals: Vec<UpperIdeal>,
    pub states: Vec<MinusculeState>,
    /// `tau` per ideal; `None` for the empty ideal.
    pub tau: Vec<Option<usize>>,
    /// Inclusion order on `ideals`, same indexing.
    pub poset: Poset,
    index: HashMap<UpperIdeal, usize>,
}

impl AbReport {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn position(&self, ideal: &UpperIdeal) -> Option<usize> {
        self.index.get(ideal).copied()
    }

    /// Ideal indices grouped by `tau`.
    pub fn fibers(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, t) in self.tau.iter().enumerate() {
            if let Some(mu) = t {
                out.entry(*mu).or_default().push(i);
            }
        }
        out
    }

    /// Unique minimal and maximal members of the fiber over `mu`, if both
    /// exist.
    pub fn fiber_bounds(&self, mu: usize) -> Option<(usize, usize)> {
        let members = self.fibers().remove(&mu)?;
        let sub = self.poset.induced(&members);
        match (
            sub.minimal_elements().as_slice(),
            sub.maximal_elements().as_slice(),
        ) {
            ([lo], [hi]) => Some((members[*lo], members[*hi])),
            _ => None,
        }
    }
}

fn inclusion_poset(
    rs: &RootSystem,
    ideals: &[UpperIdeal],
    index: &HashMap<UpperIdeal, usize>,
) -> Poset {
    let ground = rs.root_poset();
    let mut covers = Vec::new();
    for (i, ideal) in ideals.iter().enumerate() {
        for x in ground.max_outside(ideal.bits()) {
            if let Some(&j) = index.get(&ideal.with(x)) {
                covers.push((i, j));
            }
        }
    }
    let labels = ideals
        .iter()
        .map(|ideal| {
            let members: Vec<String> = ideal.iter().map(|r| rs.roots()[r].label()).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    Poset::from_covers(labels, &covers).expect("inclusion order is acyclic")
}

/// Breadth-first closure of [`apply_reflection`] from the identity, with
/// generators tried in ascending order and states deduplicated by ideal.
pub fn enumerate_minuscule(rs: &RootSystem) -> Result<AbReport, AbelianError> {
    let start = initial_state(rs)?;
    let mut states = vec![start];
    let mut index: HashMap<UpperIdeal, usize> = HashMap::new();
    index.insert(states[0].ideal.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for j in 0..=rs.rank() {
            if states[cur].shift[j] != 1 {
                continue;
            }
            let next = apply_reflection(rs, &states[cur], j)?;
            if !index.contains_key(&next.ideal) {
                index.insert(next.ideal.clone(), states.len());
                queue.push_back(states.len());
                states.push(next);
            }
        }
    }
    let ideals: Vec<UpperIdeal> = states.iter().map(|s| s.ideal.clone()).collect();
    let tau = states
        .iter()
        .map(|s| {
            if s.ideal.is_empty() {
                Ok(None)
            } else {
                tau(rs, s).map(Some)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let poset = inclusion_poset(rs, &ideals, &index);
    Ok(AbReport {
        root_type: rs.root_type(),
        ideals,
        states,
        tau,
        poset,
        index,
    })
}

/// Covers `I -> I'` in `Ab` with `tau(I') != tau(I)`.
pub fn escaping_extensions(report: &AbReport, ideal: usize) -> usize {
    let mu = report.tau[ideal];
    report
        .poset
        .covers_of(ideal)
        .iter()
        .filter(|&&j| report.tau[j] != mu)
        .count()
}

/// `(K^up, K^low, Delta)` of `Ab`, from poset statistics and from shift
/// vectors, which must agree ideal by ideal.
pub fn ab_covering_polynomials(
    report: &AbReport,
) -> Result<(Polynomial, Polynomial, Polynomial), AbelianError> {
    let stats = report.poset.covering_stats();
    for (i, state) in report.states.iter().enumerate() {
        let from_shift = stats_from_shift(state);
        if from_shift != (stats.kappa[i], stats.iota[i]) {
            return Err(AbelianError::InternalMismatch(format!(
                "ideal {} has poset stats ({}, {}) but shift stats {:?}",
                report.poset.label(i),
                stats.kappa[i],
                stats.iota[i],
                from_shift
            )));
        }
    }
    let upper = report.poset.upper_covering_polynomial();
    let lower = report.poset.lower_covering_polynomial();
    let deviation = report.poset.deviation_polynomial()?;
    Ok((upper, lower, deviation))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtensionCase {
    /// The empty ideal.
    Empty,
    /// Maximal in its fiber over a non-simple root with one positive
    /// simple pairing.
    FiberTop,
    /// Inside the fiber over a long simple root.
    SimpleFiber,
}

/// Every ideal with exactly one abelian extension, with its case. Also
/// checks that each case-(b) ideal really has a single extension.
pub fn unique_extension_ideals(
    rs: &RootSystem,
    report: &AbReport,
) -> Result<Vec<(usize, ExtensionCase)>, AbelianError> {
    let n = rs.rank();
    let positive_simple = |mu: usize| -> usize {
        (1..=n)
            .filter(|&j| rs.pairing(&rs.roots()[mu], j) > 0)
            .count()
    };
    let fiber_top = |mu: usize| report.fiber_bounds(mu).map(|(_, hi)| hi);

    let mut out = Vec::new();
    for i in 0..report.len() {
        let extensions = report.poset.covers_of(i).len();
        let case = match report.tau[i] {
            None => Some(ExtensionCase::Empty),
            Some(mu) if mu < n => Some(ExtensionCase::SimpleFiber),
            Some(mu) if positive_simple(mu) == 1 && fiber_top(mu) == Some(i) => {
                Some(ExtensionCase::FiberTop)
            }
            Some(_) => None,
        };
        match (extensions, case) {
            (1, Some(c)) => out.push((i, c)),
            (1, None) => {
                return Err(AbelianError::ClassificationGap(
                    report.poset.label(i).to_string(),
                ))
            }
            (_, Some(ExtensionCase::Empty)) | (_, Some(ExtensionCase::FiberTop)) => {
                return Err(AbelianError::InternalMismatch(format!(
                    "ideal {} should have one extension, has {extensions}",
                    report.poset.label(i)
                )))
            }
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn direct_a2() {
        let a2 = rs("A2");
        let ideals = enumerate_direct(&a2).unwrap();
        assert_eq!(ideals.len(), 4);
        let as_sets: Vec<Vec<usize>> = ideals.iter().map(|i| i.iter().collect()).collect();
        // roots: 0 = alpha1, 1 = alpha2, 2 = theta
        assert_eq!(as_sets, vec![vec![], vec![2], vec![0, 2], vec![1, 2]]);
        assert_eq!(enumerate_direct(&rs("A1")).unwrap().len(), 2);
    }

    #[test]
    fn shift_updates_a2() {
        let a2 = rs("A2");
        let s0 = initial_state(&a2).unwrap();
        assert_eq!(s0.shift, vec![1, 0, 0]);
        assert_eq!(s0.mu[0], a2.theta().coords);
        assert_eq!(stats_from_shift(&s0), (0, 1));
        assert!(kostant_check(&a2, &s0));

        let s1 = apply_reflection(&a2, &s0, 0).unwrap();
        assert_eq!(s1.shift, vec![-1, 1, 1]);
        assert_eq!(s1.ideal.iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(stats_from_shift(&s1), (1, 2));
        assert_eq!(tau(&a2, &s1).unwrap(), 2);

        let s2 = apply_reflection(&a2, &s1, 1).unwrap();
        assert_eq!(s2.shift, vec![0, -1, 2]);
        assert_eq!(s2.ideal.iter().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(stats_from_shift(&s2), (1, 0));
        assert!(kostant_check(&a2, &s2));
        // k_2 = 2 forces tau = alpha_2
        assert_eq!(tau(&a2, &s2).unwrap(), 1);

        assert_eq!(
            apply_reflection(&a2, &s0, 1).unwrap_err(),
            AbelianError::NotExtendable { index: 1, value: 0 }
        );
        assert_eq!(tau(&a2, &s0).unwrap_err(), AbelianError::EmptyIdeal);
    }

    #[test]
    fn small_reports() {
        for t in ["A1", "A3", "B3", "C3", "D4", "G2", "F4"] {
            let r = rs(t);
            let report = enumerate_minuscule(&r).unwrap();
            assert_eq!(report.len(), 1 << r.rank(), "{t}");
            let mut direct = enumerate_direct(&r).unwrap();
            let mut mins = report.ideals.clone();
            direct.sort();
            mins.sort();
            assert_eq!(direct, mins, "{t}");
            assert!(
                report.states.iter().all(|s| shift_constraints_hold(&r, s)),
                "{t}"
            );
        }
    }

    #[test]
    fn covering_polynomials() {
        let report = enumerate_minuscule(&rs("F4")).unwrap();
        let (up, low, dev) = ab_covering_polynomials(&report).unwrap();
        assert_eq!((up, low, dev), (poly![1, 10, 5], poly![2, 8, 6], poly![-1]));
        let report = enumerate_minuscule(&rs("C3")).unwrap();
        let (up, low, _) = ab_covering_polynomials(&report).unwrap();
        assert_eq!(up, poly![1, 6, 1]);
        assert_eq!(low, up);
        let report = enumerate_minuscule(&rs("A1")).unwrap();
        let (up, low, _) = ab_covering_polynomials(&report).unwrap();
        assert_eq!((up, low), (poly![1, 1], poly![1, 1]));
    }

    #[test]
    fn unique_extensions_a2() {
        let a2 = rs("A2");
        let report = enumerate_minuscule(&a2).unwrap();
        let list = unique_extension_ideals(&a2, &report).unwrap();
        assert_eq!(list, vec![(0, ExtensionCase::Empty)]);
    }

    #[test]
    fn rejects_bc() {
        let bc = rs("BC3");
        assert_eq!(
            enumerate_minuscule(&bc).unwrap_err(),
            AbelianError::NotReduced(bc.root_type())
        );
        assert!(AbelianError::NotReduced(bc.root_type())
            .to_string()
            .contains("C3"));
    }
}
