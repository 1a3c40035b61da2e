//! The distributive lattice `J*(L)` of upper ideals of a poset `L`.
//!
//! Ideals are enumerated by breadth-first extension from the empty ideal:
//! `I` is covered in `J*(L)` exactly by `I + {x}` for `x` maximal in `L \ I`.
//! Covering statistics come straight from the ideal, `kappa(I) = |min(I)|`
//! and `iota(I) = |max(L \ I)|`, so the lattice never needs its own order
//! rows unless [`IdealLattice::to_poset`] is called.

use std::collections::HashMap;

use super::{generating_polynomial, Poset, PosetError, UpperIdeal};
use crate::polynomial::Polynomial;

/// Default cap on the number of ideals enumerated.
pub const DEFAULT_IDEAL_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<UpperIdeal>,
    /// Hasse edges `(i, j)`: ideal `i` is covered by ideal `j`.
    covers: Vec<(usize, usize)>,
    kappa: Vec<usize>,
    iota: Vec<usize>,
}

/// Enumerates `J*(L)`, failing once more than `budget` ideals are found.
pub fn upper_ideal_lattice(ground: &Poset, budget: usize) -> Result<IdealLattice, PosetError> {
    let n = ground.len();
    let mut ideals = vec![UpperIdeal::empty(n)];
    let mut index: HashMap<UpperIdeal, usize> = HashMap::new();
    index.insert(ideals[0].clone(), 0);
    let mut covers = Vec::new();
    let mut kappa = Vec::new();
    let mut iota = Vec::new();

    let mut cursor = 0;
    while cursor < ideals.len() {
        let current = ideals[cursor].clone();
        kappa.push(ground.min_of(current.bits()).len());
        let extensions = ground.max_outside(current.bits());
        iota.push(extensions.len());
        for x in extensions {
            let next = current.with(x);
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if ideals.len() >= budget {
                        return Err(PosetError::BudgetExceeded(budget));
                    }
                    let j = ideals.len();
                    index.insert(next.clone(), j);
                    ideals.push(next);
                    j
                }
            };
            covers.push((cursor, j));
        }
        cursor += 1;
    }
    Ok(IdealLattice {
        ideals,
        covers,
        kappa,
        iota,
    })
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Ideals in breadth-first order (by size, then discovery).
    pub fn ideals(&self) -> &[UpperIdeal] {
        &self.ideals
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn num_edges(&self) -> usize {
        self.covers.len()
    }

    pub fn kappa(&self) -> &[usize] {
        &self.kappa
    }

    pub fn iota(&self) -> &[usize] {
        &self.iota
    }

    pub fn upper_covering_polynomial(&self) -> Polynomial {
        generating_polynomial(self.kappa.iter().copied())
    }

    pub fn lower_covering_polynomial(&self) -> Polynomial {
        generating_polynomial(self.iota.iter().copied())
    }

    /// Materializes the lattice as a [`Poset`] ordered by inclusion.
    pub fn to_poset(&self) -> Poset {
        let labels = self.ideals.iter().map(ideal_label).collect();
        Poset::from_covers(labels, &self.covers).expect("inclusion order is acyclic")
    }

    /// Sub-poset of ideals with at most `m` elements, which is downward
    /// closed in the lattice.
    pub fn truncated_poset(&self, m: usize) -> Poset {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| self.ideals[i].len() <= m)
            .collect();
        let mut position = vec![usize::MAX; self.len()];
        for (k, &i) in keep.iter().enumerate() {
            position[i] = k;
        }
        let labels = keep.iter().map(|&i| ideal_label(&self.ideals[i])).collect();
        let covers: Vec<_> = self
            .covers
            .iter()
            .filter(|&&(a, b)| position[a] != usize::MAX && position[b] != usize::MAX)
            .map(|&(a, b)| (position[a], position[b]))
            .collect();
        Poset::from_covers(labels, &covers).expect("inclusion order is acyclic")
    }
}

fn ideal_label(ideal: &UpperIdeal) -> String {
    let members: Vec<String> = ideal.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", members.join(","))
}
