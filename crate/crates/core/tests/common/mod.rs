//! Brute-force poset oracles shared by the integration tests. They work
//! from a raw relation list and share no code with the library.

#![allow(dead_code, clippy::needless_range_loop)]

use covpoly::{Polynomial, Poset};
use rand::Rng;

/// Reflexive-transitive closure of a relation on `0..n` as a boolean matrix.
pub struct BruteOrder {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
}

impl BruteOrder {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        BruteOrder { n, leq }
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// `b` covers `a`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && !(0..self.n).any(|c| self.lt(a, c) && self.lt(c, b))
    }

    pub fn edges(&self) -> usize {
        (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.covers(a, b))
            .count()
    }

    fn poly(stats: impl Iterator<Item = usize>) -> Polynomial {
        let mut coeffs = vec![0i64; 1];
        for s in stats {
            if coeffs.len() <= s {
                coeffs.resize(s + 1, 0);
            }
            coeffs[s] += 1;
        }
        Polynomial::new(coeffs)
    }

    pub fn upper(&self) -> Polynomial {
        Self::poly((0..self.n).map(|x| (0..self.n).filter(|&y| self.covers(y, x)).count()))
    }

    pub fn lower(&self) -> Polynomial {
        Self::poly((0..self.n).map(|x| (0..self.n).filter(|&y| self.covers(x, y)).count()))
    }

    /// Antichain counts by size, over all subsets.
    pub fn antichains(&self) -> Polynomial {
        let n = self.n;
        let mut coeffs = vec![0i64; n + 1];
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = members
                .iter()
                .all(|&a| members.iter().all(|&b| a == b || !self.leq[a][b]));
            if ok {
                coeffs[members.len()] += 1;
            }
        }
        Polynomial::new(coeffs)
    }

    /// Upper ideals as bitmasks, over all subsets.
    pub fn upper_ideals(&self) -> Vec<u32> {
        let n = self.n;
        (0u32..(1 << n))
            .filter(|&mask| {
                (0..n).all(|a| {
                    mask >> a & 1 == 0 || (0..n).all(|b| !self.leq[a][b] || mask >> b & 1 == 1)
                })
            })
            .collect()
    }
}

/// Relation pairs `i < j` drawn independently with probability `density`.
pub fn random_pairs<R: Rng>(rng: &mut R, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

pub fn poset_from(n: usize, pairs: &[(usize, usize)]) -> Poset {
    Poset::from_relations(Poset::default_labels(n), pairs).unwrap()
}

/// `(q^m - m q + m - 1) / (q - 1)^2 = (m-1) + (m-2) q + ... + q^{m-2}`,
/// written out term by term.
pub fn staircase_oracle(m: usize) -> Polynomial {
    let coeffs: Vec<i64> = (0..m.saturating_sub(1))
        .map(|k| (m - 1 - k) as i64)
        .collect();
    Polynomial::new(coeffs)
}
