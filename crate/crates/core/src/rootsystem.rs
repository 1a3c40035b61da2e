//! Irreducible root systems: positive roots in simple-root coordinates,
//! Cartan data and the root order.
//!
//! Simple roots follow the Bourbaki numbering. Internally simple root
//! `alpha_i` sits at index `i - 1` of [`RootSystem::roots`] and of the Cartan
//! matrix; the extended Cartan matrix is indexed `0..=n` with `0` the affine
//! node `alpha_0 = delta - theta`.
//!
//! The Cartan convention is `A[i][j] = (alpha_i, alpha_j^vee)`.

pub mod correspondence;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::poset::Poset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse root system type `{0}`")]
    Parse(String),
    #[error("{0} is reducible and has no highest root")]
    Reducible(RootSystemType),
    #[error("{0} is not reduced")]
    NotReduced(RootSystemType),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    /// Validates rank constraints. `D2` and `D3` are accepted as aliases.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family {
            Family::A | Family::BC => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.family != Family::BC
    }

    /// Every type in the standard tables up to `max_rank`: A1.., B2.., C2..,
    /// D4.., E6-8, F4, G2.
    pub fn all_reduced(max_rank: usize) -> Vec<RootSystemType> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            out.push(RootSystemType {
                family: Family::A,
                rank,
            });
        }
        for rank in 2..=max_rank {
            out.push(RootSystemType {
                family: Family::B,
                rank,
            });
        }
        for rank in 2..=max_rank {
            out.push(RootSystemType {
                family: Family::C,
                rank,
            });
        }
        for rank in 4..=max_rank {
            out.push(RootSystemType {
                family: Family::D,
                rank,
            });
        }
        for rank in 6..=max_rank.min(8) {
            out.push(RootSystemType {
                family: Family::E,
                rank,
            });
        }
        if max_rank >= 4 {
            out.push(RootSystemType {
                family: Family::F,
                rank: 4,
            });
        }
        if max_rank >= 2 {
            out.push(RootSystemType {
                family: Family::G,
                rank: 2,
            });
        }
        out
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let split = t
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| RootSystemError::Parse(s.to_string()))?;
        let (fam, num) = t.split_at(split);
        let family = match fam.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            "BC" => Family::BC,
            _ => return Err(RootSystemError::Parse(s.to_string())),
        };
        let rank = num
            .parse::<usize>()
            .map_err(|_| RootSystemError::Parse(s.to_string()))?;
        RootSystemType::new(family, rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn simple(n: usize, i: usize) -> Root {
        let mut coords = vec![0; n];
        coords[i] = 1;
        Root { coords }
    }

    pub fn label(&self) -> String {
        if self.coords.iter().all(|&c| (0..10).contains(&c)) {
            self.coords.iter().map(|c| c.to_string()).collect()
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: RootSystemType,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    cartan: Vec<Vec<i64>>,
    extended_cartan: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots, smallest = 1.
    simple_norms: Vec<i64>,
    theta: usize,
    theta_covector: Vec<i64>,
    coxeter_number: Option<i64>,
    long_flags: Vec<bool>,
    order: Poset,
}

pub fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        Family::A => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
        Family::B | Family::BC => {
            (1..n.saturating_sub(1)).for_each(|i| link(i - 1, i, -1, -1));
            if n >= 2 {
                link(n - 2, n - 1, -2, -1);
            }
        }
        Family::C => {
            (1..n.saturating_sub(1)).for_each(|i| link(i - 1, i, -1, -1));
            if n >= 2 {
                link(n - 2, n - 1, -1, -2);
            }
        }
        Family::D => {
            (1..n.saturating_sub(1)).for_each(|i| link(i - 1, i, -1, -1));
            if n >= 3 {
                link(n - 3, n - 1, -1, -1);
            }
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (3..n).for_each(|i| link(i - 1, i, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -1, -3),
    }
    a
}

/// Squared lengths of simple roots from the Cartan matrix, scaled so the
/// shortest is 1. Assumes a connected diagram.
fn simple_norms(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // ratios are 1, 2 or 3, so a start of 6 keeps every value integral
    let mut norms = vec![0i64; n];
    norms[0] = 6;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && norms[j] == 0 {
                // |a_j|^2 / |a_i|^2 = A[j][i] / A[i][j]
                norms[j] = norms[i] * cartan[j][i] / cartan[i][j];
                stack.push(j);
            }
        }
    }
    if norms.contains(&0) {
        // disconnected (D2): treat every component as simply laced
        return vec![1; n];
    }
    let min = *norms.iter().min().unwrap();
    norms.iter().map(|&x| x / min).collect()
}

impl RootSystem {
    pub fn build(ty: RootSystemType) -> Result<RootSystem, RootSystemError> {
        let n = ty.rank;
        let cartan = cartan_matrix(ty.family, n);
        let roots = match ty.family {
            Family::BC => bc_positive_roots(n),
            _ => closure_positive_roots(&cartan),
        };
        if ty.family == Family::D && n == 2 {
            return Err(RootSystemError::Reducible(ty));
        }
        let mut roots = roots;
        roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coords.cmp(&a.coords))
        });
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();
        let norms = simple_norms(&cartan);

        let order = build_root_order(&roots, &index, n);
        let tops = order.maximal_elements();
        let theta = match tops.as_slice() {
            [t] => *t,
            _ => return Err(RootSystemError::Reducible(ty)),
        };

        let mut rs = RootSystem {
            ty,
            roots,
            index,
            cartan,
            extended_cartan: Vec::new(),
            simple_norms: norms,
            theta,
            theta_covector: Vec::new(),
            coxeter_number: None,
            long_flags: Vec::new(),
            order,
        };
        let theta_root = rs.roots[theta].clone();
        rs.theta_covector = (0..n)
            .map(|i| rs.coroot_pairing(&Root::simple(n, i).coords, &theta_root.coords))
            .collect();
        let theta_norm = rs.norm2(&theta_root.coords);
        rs.long_flags = rs
            .roots
            .iter()
            .map(|r| rs.norm2(&r.coords) == theta_norm)
            .collect();
        if ty.is_reduced() {
            rs.coxeter_number = Some(theta_root.height() + 1);
        }

        let mut ext = vec![vec![0i64; n + 1]; n + 1];
        ext[0][0] = 2;
        for j in 0..n {
            // (alpha_0, alpha_j^vee) = -(theta, alpha_j^vee)
            ext[0][j + 1] = -rs.pairing(&theta_root, j + 1);
            // (alpha_i, alpha_0^vee) = -(alpha_i, theta^vee)
            ext[j + 1][0] = -rs.theta_covector[j];
            for i in 0..n {
                ext[i + 1][j + 1] = rs.cartan[i][j];
            }
        }
        rs.extended_cartan = ext;
        Ok(rs)
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Positive roots sorted by height; the first `rank()` are the simple
    /// roots in Bourbaki order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn extended_cartan(&self) -> &[Vec<i64>] {
        &self.extended_cartan
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    pub fn theta(&self) -> &Root {
        &self.roots[self.theta]
    }

    /// `(1, c_1, ..., c_n)`: coefficients of `delta = alpha_0 + theta`.
    pub fn marks(&self) -> Vec<i64> {
        std::iter::once(1)
            .chain(self.theta().coords.iter().copied())
            .collect()
    }

    /// `(alpha_i, theta^vee)` for `i = 1..n`.
    pub fn theta_covector(&self) -> &[i64] {
        &self.theta_covector
    }

    pub fn coxeter_number(&self) -> Option<i64> {
        self.coxeter_number
    }

    pub fn simple_norms(&self) -> &[i64] {
        &self.simple_norms
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simple_norms.iter().all(|&x| x == self.simple_norms[0])
    }

    /// `2 (x, y)` in units where the shortest simple root has squared
    /// length 1; symmetric and integral.
    pub fn form2(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += x[i] * y[j] * self.cartan[i][j] * self.simple_norms[j];
            }
        }
        acc
    }

    fn norm2(&self, x: &[i64]) -> i64 {
        self.form2(x, x)
    }

    /// `(x, y^vee) = 2 (x, y) / (y, y)` for a root `y`.
    pub fn coroot_pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let num = 2 * self.form2(x, y);
        let den = self.norm2(y);
        debug_assert_eq!(num % den, 0, "non-integral coroot pairing");
        num / den
    }

    /// `(gamma, alpha_j^vee) = sum_i c_i(gamma) A[i][j]`, `j` in `1..=n`.
    pub fn pairing(&self, gamma: &Root, j: usize) -> i64 {
        assert!(j >= 1 && j <= self.rank(), "simple index {j} out of range");
        self.pairing_coords(&gamma.coords, j - 1)
    }

    /// Same as [`pairing`](Self::pairing) with a zero-based simple index.
    pub fn pairing_coords(&self, coords: &[i64], j0: usize) -> i64 {
        coords
            .iter()
            .zip(&self.cartan)
            .map(|(&c, row)| c * row[j0])
            .sum()
    }

    pub fn is_long(&self, gamma: &Root) -> bool {
        self.norm2(&gamma.coords) == self.norm2(&self.theta().coords)
    }

    pub fn long_flags(&self) -> &[bool] {
        &self.long_flags
    }

    /// Long positive roots, as root indices.
    pub fn long_roots(&self) -> Vec<usize> {
        (0..self.num_positive())
            .filter(|&i| self.long_flags[i])
            .collect()
    }

    /// Long simple roots, as zero-based indices.
    pub fn long_simple(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.long_flags[i]).collect()
    }

    /// The root order: `gamma` covers `mu` iff `gamma - mu` is simple.
    pub fn root_poset(&self) -> &Poset {
        &self.order
    }

    /// Induced subposet on the non-simple roots, labelled by root.
    pub fn without_simples(&self) -> Poset {
        let keep: Vec<usize> = (self.rank()..self.num_positive()).collect();
        self.order.induced(&keep)
    }

    /// The root order with an extra bottom element `0` below the simple
    /// roots; `0` gets index `num_positive()`.
    pub fn with_zero(&self) -> Poset {
        let n = self.num_positive();
        let mut labels = self.order.labels().to_vec();
        labels.push("0".to_string());
        let mut pairs = self.order.hasse_edges();
        pairs.extend((0..self.rank()).map(|i| (n, i)));
        Poset::from_relations(labels, &pairs).expect("root order is acyclic")
    }

    /// True iff no two members of `set` sum to a root.
    pub fn is_abelian(&self, set: &FixedBitSet) -> bool {
        let members: Vec<usize> = set.ones().collect();
        for (k, &a) in members.iter().enumerate() {
            for &b in &members[k..] {
                let sum: Vec<i64> = self.roots[a]
                    .coords
                    .iter()
                    .zip(&self.roots[b].coords)
                    .map(|(x, y)| x + y)
                    .collect();
                if self.index.contains_key(&sum) {
                    return false;
                }
            }
        }
        true
    }

    /// Roots whose principal upper ideal is abelian.
    pub fn commutative_roots(&self) -> Result<Vec<usize>, RootSystemError> {
        if !self.ty.is_reduced() {
            return Err(RootSystemError::NotReduced(self.ty));
        }
        Ok((0..self.num_positive())
            .filter(|&g| self.is_abelian(self.order.up_set(g)))
            .collect())
    }

    /// Dynkin diagram has a node of degree at least three.
    pub fn has_branching_node(&self) -> bool {
        let n = self.rank();
        (0..n).any(|i| (0..n).filter(|&j| j != i && self.cartan[i][j] != 0).count() >= 3)
    }

    /// Largest set of pairwise orthogonal simple roots.
    pub fn max_orthogonal_simple_roots(&self) -> usize {
        let n = self.rank();
        (0u32..(1 << n))
            .filter(|mask| {
                (0..n).all(|i| {
                    (0..n).all(|j| {
                        i == j
                            || mask & (1 << i) == 0
                            || mask & (1 << j) == 0
                            || self.cartan[i][j] == 0
                    })
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Coordinates of `gamma` in the orthonormal basis `eps_1..eps_n`, for
    /// types B, C and BC.
    pub fn epsilon_coords(&self, gamma: &Root) -> Option<Vec<i64>> {
        let c = &gamma.coords;
        let n = self.rank();
        let mut v: Vec<i64> = (0..n)
            .map(|i| c[i] - if i > 0 { c[i - 1] } else { 0 })
            .collect();
        match self.ty.family {
            Family::B | Family::BC => Some(v),
            Family::C => {
                // alpha_n = 2 eps_n
                v[n - 1] = 2 * c[n - 1] - if n > 1 { c[n - 2] } else { 0 };
                Some(v)
            }
            _ => None,
        }
    }
}

fn build_root_order(roots: &[Root], index: &HashMap<Vec<i64>, usize>, n: usize) -> Poset {
    let labels = roots.iter().map(Root::label).collect();
    let mut pairs = Vec::new();
    for (m, mu) in roots.iter().enumerate() {
        for i in 0..n {
            let mut up = mu.coords.clone();
            up[i] += 1;
            if let Some(&g) = index.get(&up) {
                pairs.push((m, g));
            }
        }
    }
    Poset::from_relations(labels, &pairs).expect("root order is acyclic")
}

/// Positive roots generated height by height from the simple roots: for a
/// root `gamma != alpha_i` with `alpha_i`-string `gamma - p alpha_i .. gamma +
/// q alpha_i`, `p - q = (gamma, alpha_i^vee)`.
fn closure_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| Root::simple(n, i).coords).collect();
    let mut out = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            all.insert(r.clone(), ());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for gamma in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|k| gamma[k] * cartan[k][i]).sum();
                let mut p = 0;
                let mut probe = gamma.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = gamma.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        out.extend(layer.drain(..).map(|coords| Root { coords }));
        layer = next;
    }
    out
}

/// `BC_n`: the union of the `B_n` and `C_n` positive roots written over the
/// `B_n` simple roots, where `eps_i = alpha_i + ... + alpha_n`.
fn bc_positive_roots(n: usize) -> Vec<Root> {
    let to_simple = |v: &[i64]| -> Root {
        let mut acc = 0;
        let coords = v
            .iter()
            .map(|&x| {
                acc += x;
                acc
            })
            .collect();
        Root { coords }
    };
    let eps = |pairs: &[(usize, i64)]| -> Vec<i64> {
        let mut v = vec![0i64; n];
        for &(i, c) in pairs {
            v[i] += c;
        }
        v
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(to_simple(&eps(&[(i, 1), (j, -1)])));
            out.push(to_simple(&eps(&[(i, 1), (j, 1)])));
        }
        out.push(to_simple(&eps(&[(i, 1)])));
        out.push(to_simple(&eps(&[(i, 2)])));
    }
    out
}
