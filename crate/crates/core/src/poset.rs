//! Finite posets, their Hasse diagrams and covering statistics.
//!
//! Elements are dense indices `0..len()`. The order is kept as two families of
//! bitset rows (`up[x]` = elements `>= x`, `down[x]` = elements `<= x`) next to
//! the Hasse diagram in both directions.
//!
//! For an element `x`, `kappa(x)` is the number of elements covered by `x`
//! and `iota(x)` the number of elements covering `x`. The upper and lower
//! covering polynomials are the generating functions of these statistics.

pub mod format;
mod lattice;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::polynomial::{PolyError, Polynomial};

pub use lattice::{upper_ideal_lattice, IdealLattice, DEFAULT_IDEAL_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("order relations contain a directed cycle")]
    CycleDetected,
    #[error("element index {index} out of range for a poset of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("poset has no unique {0} element")]
    NotUnique(&'static str),
    #[error("number of upper ideals exceeds the budget of {0}")]
    BudgetExceeded(usize),
    #[error("poset is not graded")]
    NotGraded,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Per-element covering statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringStats {
    pub kappa: Vec<usize>,
    pub iota: Vec<usize>,
}

/// An upward-closed subset of some carrier poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpperIdeal {
    members: FixedBitSet,
}

impl UpperIdeal {
    /// Wraps a bitset without checking closure; see [`Poset::is_upper_ideal`].
    pub fn from_bits(members: FixedBitSet) -> Self {
        UpperIdeal { members }
    }

    pub fn empty(carrier_len: usize) -> Self {
        UpperIdeal {
            members: FixedBitSet::with_capacity(carrier_len),
        }
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn with(&self, x: usize) -> UpperIdeal {
        let mut members = self.members.clone();
        members.insert(x);
        UpperIdeal { members }
    }

    pub fn is_subset(&self, other: &UpperIdeal) -> bool {
        self.members.is_subset(&other.members)
    }
}

#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    hasse_up: Vec<Vec<usize>>,
    hasse_down: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds the poset generated by `pairs`, each `(x, y)` meaning `x <= y`.
    /// The relation is closed reflexively and transitively; the Hasse diagram
    /// is its transitive reduction.
    pub fn from_relations(
        labels: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        let n = labels.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(x, y) in pairs {
            for index in [x, y] {
                if index >= n {
                    return Err(PosetError::IndexOutOfRange { index, size: n });
                }
            }
            if x == y {
                continue;
            }
            succ[x].push(y);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }

        // Kahn's algorithm; `order` is a linear extension if acyclic
        let mut indegree = vec![0usize; n];
        for s in &succ {
            for &y in s {
                indegree[y] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &succ[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            return Err(PosetError::CycleDetected);
        }

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(x);
            for &y in &succ[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }

        // a cover of x must be a direct successor not reachable through another one
        let mut hasse_up = vec![Vec::new(); n];
        for x in 0..n {
            for &y in &succ[x] {
                let shadowed = succ[x].iter().any(|&z| z != y && up[z].contains(y));
                if !shadowed {
                    hasse_up[x].push(y);
                }
            }
        }
        Ok(Poset::assemble(labels, up, hasse_up))
    }

    /// Builds from explicit cover pairs `(x, y)`, `x` covered by `y`. Input
    /// need not be reduced.
    pub fn from_covers(
        labels: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        Poset::from_relations(labels, covers)
    }

    fn assemble(labels: Vec<String>, up: Vec<FixedBitSet>, hasse_up: Vec<Vec<usize>>) -> Poset {
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        let mut hasse_down = vec![Vec::new(); n];
        for (x, ys) in hasse_up.iter().enumerate() {
            for &y in ys {
                hasse_down[y].push(x);
            }
        }
        Poset {
            labels,
            up,
            down,
            hasse_up,
            hasse_down,
        }
    }

    /// Labels `0..n` as strings.
    pub fn default_labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_relations(Poset::default_labels(n), &[]).expect("antichain is acyclic")
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relations(Poset::default_labels(n), &pairs).expect("chain is acyclic")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Elements `>= x`, including `x`.
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// Elements `<= x`, including `x`.
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// Elements covering `x`.
    pub fn covers_of(&self, x: usize) -> &[usize] {
        &self.hasse_up[x]
    }

    /// Elements covered by `x`.
    pub fn covered_by(&self, x: usize) -> &[usize] {
        &self.hasse_down[x]
    }

    /// Hasse edges `(x, y)` with `x` covered by `y`, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .hasse_up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn num_edges(&self) -> usize {
        self.hasse_up.iter().map(Vec::len).sum()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.hasse_down[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.hasse_up[x].is_empty())
            .collect()
    }

    pub fn covering_stats(&self) -> CoveringStats {
        CoveringStats {
            kappa: self.hasse_down.iter().map(Vec::len).collect(),
            iota: self.hasse_up.iter().map(Vec::len).collect(),
        }
    }

    pub fn upper_covering_polynomial(&self) -> Polynomial {
        generating_polynomial(self.hasse_down.iter().map(Vec::len))
    }

    pub fn lower_covering_polynomial(&self) -> Polynomial {
        generating_polynomial(self.hasse_up.iter().map(Vec::len))
    }

    /// `(K^up - K^low) / (q - 1)^2`.
    pub fn deviation_polynomial(&self) -> Result<Polynomial, PosetError> {
        let diff = self.upper_covering_polynomial() - self.lower_covering_polynomial();
        Ok(diff.divide_by_q_minus_one_squared()?)
    }

    /// Induced subposet on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let n = keep.len();
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                if self.leq(x, y) {
                    up[i].insert(j);
                }
            }
        }
        let mut position = vec![usize::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            position[x] = i;
        }
        // new covers of x: minimal kept elements reachable through removed ones
        let mut hasse_up = vec![Vec::new(); n];
        for (i, &x) in keep.iter().enumerate() {
            let mut reached: Vec<usize> = Vec::new();
            let mut visited = FixedBitSet::with_capacity(self.len());
            let mut stack: Vec<usize> = self.hasse_up[x].clone();
            while let Some(y) = stack.pop() {
                if visited.put(y) {
                    continue;
                }
                if position[y] != usize::MAX {
                    reached.push(y);
                } else {
                    stack.extend_from_slice(&self.hasse_up[y]);
                }
            }
            for &y in &reached {
                if !reached.iter().any(|&z| z != y && self.leq(z, y)) {
                    hasse_up[i].push(position[y]);
                }
            }
        }
        Poset::assemble(labels, up, hasse_up)
    }

    /// No relations between the two parts; `b`'s elements are shifted by
    /// `a.len()`.
    pub fn disjoint_sum(a: &Poset, b: &Poset) -> Poset {
        let off = a.len();
        let mut labels: Vec<String> = a.labels.iter().map(|l| format!("L:{l}")).collect();
        labels.extend(b.labels.iter().map(|l| format!("R:{l}")));
        let mut pairs = a.hasse_edges();
        pairs.extend(b.hasse_edges().into_iter().map(|(x, y)| (x + off, y + off)));
        Poset::from_relations(labels, &pairs).expect("sum of posets is acyclic")
    }

    /// Componentwise order on `a x b`; element `(i, j)` has index
    /// `i * b.len() + j`.
    pub fn direct_product(a: &Poset, b: &Poset) -> Poset {
        let m = b.len();
        let mut labels = Vec::with_capacity(a.len() * m);
        for la in &a.labels {
            for lb in &b.labels {
                labels.push(format!("({la},{lb})"));
            }
        }
        let mut pairs = Vec::new();
        for i in 0..a.len() {
            for j in 0..m {
                for &i2 in &a.hasse_up[i] {
                    pairs.push((i * m + j, i2 * m + j));
                }
                for &j2 in &b.hasse_up[j] {
                    pairs.push((i * m + j, i * m + j2));
                }
            }
        }
        Poset::from_relations(labels, &pairs).expect("product of posets is acyclic")
    }

    pub fn opposite(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            hasse_up: self.hasse_down.clone(),
            hasse_down: self.hasse_up.clone(),
        }
    }

    /// Generating function of antichains by size, by depth-first enumeration
    /// over the index order, pruning comparable candidates.
    pub fn antichain_polynomial(&self) -> Polynomial {
        let n = self.len();
        let mut counts: Vec<i64> = vec![0; n + 1];
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        let incomparable: Vec<FixedBitSet> = (0..n)
            .map(|x| {
                let mut row = all.clone();
                row.difference_with(&self.up[x]);
                row.difference_with(&self.down[x]);
                row
            })
            .collect();

        fn descend(
            candidates: &FixedBitSet,
            size: usize,
            incomparable: &[FixedBitSet],
            counts: &mut [i64],
        ) {
            counts[size] += 1;
            for x in candidates.ones() {
                let mut next = candidates.clone();
                next.intersect_with(&incomparable[x]);
                // only later elements, so each antichain is produced once
                next.set_range(..x + 1, false);
                descend(&next, size + 1, incomparable, counts);
            }
        }
        descend(&all, 0, &incomparable, &mut counts);
        Polynomial::new(counts)
    }

    pub fn is_upper_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|x| self.up[x].is_subset(set))
    }

    /// Minimal elements of an upward-closed set.
    pub fn min_of(&self, set: &FixedBitSet) -> Vec<usize> {
        set.ones()
            .filter(|&x| self.hasse_down[x].iter().all(|&y| !set.contains(y)))
            .collect()
    }

    /// Maximal elements of the complement of `set`.
    pub fn max_outside(&self, set: &FixedBitSet) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| !set.contains(x) && self.hasse_up[x].iter().all(|&y| set.contains(y)))
            .collect()
    }

    pub fn unique_top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn unique_bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn remove_top(&self) -> Result<Poset, PosetError> {
        let top = self.unique_top().ok_or(PosetError::NotUnique("maximal"))?;
        let keep: Vec<_> = (0..self.len()).filter(|&x| x != top).collect();
        Ok(self.induced(&keep))
    }

    pub fn remove_bottom(&self) -> Result<Poset, PosetError> {
        let bottom = self
            .unique_bottom()
            .ok_or(PosetError::NotUnique("minimal"))?;
        let keep: Vec<_> = (0..self.len()).filter(|&x| x != bottom).collect();
        Ok(self.induced(&keep))
    }

    /// Counts of ordered `wedge` triples (two distinct elements covered by a
    /// common element) and `vee` triples (two distinct elements covering a
    /// common element).
    pub fn triple_counts(&self) -> (u64, u64) {
        let count = |adj: &Vec<Vec<usize>>| -> u64 {
            let mut total = 0u64;
            for nbrs in adj {
                for &a in nbrs {
                    for &b in nbrs {
                        if a != b {
                            total += 1;
                        }
                    }
                }
            }
            total
        };
        (count(&self.hasse_down), count(&self.hasse_up))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut common = self.up[x].clone();
        common.intersect_with(&self.up[y]);
        let size = common.count_ones(..);
        common.ones().find(|&z| self.up[z].count_ones(..) == size)
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut common = self.down[x].clone();
        common.intersect_with(&self.down[y]);
        let size = common.count_ones(..);
        common.ones().find(|&z| self.down[z].count_ones(..) == size)
    }

    /// True iff every pair has a meet and a join and meets distribute over
    /// joins. The empty poset is not a lattice.
    pub fn is_distributive_lattice(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for x in 0..n {
            for y in x..n {
                let (Some(m), Some(j)) = (self.meet(x, y), self.join(x, y)) else {
                    return false;
                };
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in y..n {
                    let lhs = meet[x * n + join[y * n + z]];
                    let rhs = join[meet[x * n + y] * n + meet[x * n + z]];
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Longest chain size ending at each element and starting at a minimal
    /// element, together with the shortest such size.
    fn chain_lengths(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let mut longest = vec![0usize; n];
        let mut shortest = vec![usize::MAX; n];
        for x in self.linear_extension() {
            if self.hasse_down[x].is_empty() {
                longest[x] = 1;
                shortest[x] = 1;
            } else {
                longest[x] = 1 + self.hasse_down[x]
                    .iter()
                    .map(|&y| longest[y])
                    .max()
                    .unwrap();
                shortest[x] = 1 + self.hasse_down[x]
                    .iter()
                    .map(|&y| shortest[y])
                    .min()
                    .unwrap();
            }
        }
        (longest, shortest)
    }

    /// Elements ordered so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.down[x].count_ones(..));
        order
    }

    /// Size of the longest chain, if all maximal chains share it.
    pub fn graded_rank(&self) -> Option<usize> {
        let (longest, shortest) = self.chain_lengths();
        if longest != shortest {
            return None;
        }
        let tops: Vec<usize> = self
            .maximal_elements()
            .iter()
            .map(|&x| longest[x])
            .collect();
        match tops.first() {
            None => Some(0),
            Some(&r) if tops.iter().all(|&t| t == r) => Some(r),
            _ => None,
        }
    }

    /// Checks that `map` (self index -> other index) is an order isomorphism.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || map.len() != n {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for &y in map {
            if y >= n || seen.contains(y) {
                return false;
            }
            seen.insert(y);
        }
        (0..n).all(|x| {
            let mut image: Vec<usize> = self.hasse_up[x].iter().map(|&y| map[y]).collect();
            image.sort_unstable();
            let mut target = other.hasse_up[map[x]].clone();
            target.sort_unstable();
            image == target
        })
    }
}

fn generating_polynomial(stats: impl Iterator<Item = usize>) -> Polynomial {
    let mut coeffs: Vec<i64> = Vec::new();
    for s in stats {
        if coeffs.len() <= s {
            coeffs.resize(s + 1, 0);
        }
        coeffs[s] += 1;
    }
    Polynomial::new(coeffs)
}
