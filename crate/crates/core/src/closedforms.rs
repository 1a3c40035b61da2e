//! Closed forms for covering polynomials of root posets and abelian-ideal
//! posets, stored exceptional rows, the three-term recurrence and a few
//! diagnostic quantities.
//!
//! The table functions never enumerate, so they can serve as oracles for
//! the enumeration code.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::abelian;
use crate::ideals;
use crate::polynomial::Polynomial;
use crate::poset::{upper_ideal_lattice, Poset, DEFAULT_IDEAL_BUDGET};
use crate::rootsystem::{Family, RootSystem, RootSystemType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Upper,
    Lower,
    Deviation,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Upper => "upper",
            Which::Lower => "lower",
            Which::Deviation => "deviation",
        })
    }
}

/// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`. Computed row by row
/// along Pascal's triangle.
pub fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as usize;
    let mut row = vec![0i64; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// Builds `sum_k term(k) q^k` for `k = 0..=max_k`.
fn series(max_k: i64, term: impl Fn(i64) -> i64) -> Polynomial {
    Polynomial::new((0..=max_k).map(term).collect())
}

pub fn coxeter_number(ty: RootSystemType) -> Option<i64> {
    let n = ty.rank as i64;
    match ty.family {
        Family::A => Some(n + 1),
        Family::B | Family::C => Some(2 * n),
        Family::D => Some(2 * n - 2),
        Family::E => Some(match n {
            6 => 12,
            7 => 18,
            _ => 30,
        }),
        Family::F => Some(12),
        Family::G => Some(6),
        Family::BC => None,
    }
}

/// Covering polynomials of the root poset.
pub fn table1(ty: RootSystemType, which: Which) -> Option<Polynomial> {
    let n = ty.rank as i64;
    let c2 = |m: i64| binomial(m, 2);
    let (upper, lower) = match ty.family {
        Family::A => (
            Polynomial::new(vec![n, 0, c2(n)]),
            Polynomial::new(vec![1, 2 * n - 2, c2(n - 1)]),
        ),
        Family::B | Family::C => (
            Polynomial::new(vec![n, n - 1, (n - 1) * (n - 1)]),
            Polynomial::new(vec![1, 3 * n - 3, (n - 1) * (n - 2)]),
        ),
        Family::BC => (
            Polynomial::new(vec![n, n, n * (n - 1)]),
            Polynomial::new(vec![1, 3 * n - 2, (n - 1) * (n - 1)]),
        ),
        Family::D => (
            Polynomial::new(vec![n, n - 3, c2(n) + c2(n - 3), n - 3]),
            Polynomial::new(vec![1, 3 * n - 5, c2(n - 1) + c2(n - 3), n - 3]),
        ),
        // exceptional rows of the root-poset table
        Family::E => match n {
            6 => (
                Polynomial::new(vec![6, 5, 20, 5]),
                Polynomial::new(vec![1, 15, 15, 5]),
            ),
            7 => (
                Polynomial::new(vec![7, 10, 36, 10]),
                Polynomial::new(vec![1, 22, 30, 10]),
            ),
            _ => (
                Polynomial::new(vec![8, 21, 70, 21]),
                Polynomial::new(vec![1, 35, 63, 21]),
            ),
        },
        Family::F => (
            Polynomial::new(vec![4, 7, 12, 1]),
            Polynomial::new(vec![1, 13, 9, 1]),
        ),
        Family::G => (Polynomial::new(vec![2, 3, 1]), Polynomial::new(vec![1, 5])),
    };
    pick(upper, lower, which)
}

fn pick(upper: Polynomial, lower: Polynomial, which: Which) -> Option<Polynomial> {
    match which {
        Which::Upper => Some(upper),
        Which::Lower => Some(lower),
        Which::Deviation => (&upper - &lower).divide_by_q_minus_one_squared().ok(),
    }
}

/// Narayana polynomial `sum_k C(n+1,k) C(n+1,k+1)/(n+1) q^k`, the ideal
/// count polynomial of `AD(A_n)`.
pub fn narayana(n: i64) -> Polynomial {
    series(n, |k| binomial(n + 1, k) * binomial(n + 1, k + 1) / (n + 1))
}

/// Ideal-count polynomial of `AD_0`: stored exceptional rows, and the
/// classical closed forms for A, B and C.
pub fn table2(ty: RootSystemType) -> Option<Polynomial> {
    let n = ty.rank as i64;
    match (ty.family, n) {
        (Family::A, n) if n >= 2 => Some(narayana(n - 1)),
        (Family::B | Family::C, n) if n >= 2 => {
            Some(crate::ideals::bc_ad_closed_form(n as usize - 1))
        }
        // exceptional rows of the strictly positive ideal table
        (Family::G, 2) => Some(Polynomial::new(vec![1, 4])),
        (Family::F, 4) => Some(Polynomial::new(vec![1, 20, 35, 10])),
        (Family::E, 6) => Some(Polynomial::new(vec![1, 30, 135, 175, 70, 7])),
        (Family::E, 7) => Some(Polynomial::new(vec![1, 56, 420, 952, 770, 216, 16])),
        (Family::E, 8) => Some(Polynomial::new(vec![
            1, 112, 1323, 4774, 6622, 3696, 770, 44,
        ])),
        _ => None,
    }
}

/// Covering and deviation polynomials of the abelian-ideal poset, with the
/// deviation carrying its sign.
pub fn table3(ty: RootSystemType, which: Which) -> Option<Polynomial> {
    let n = ty.rank as i64;
    let c = binomial;
    let top = n + 3;
    let (upper, lower, deviation) = match ty.family {
        Family::A => (
            series(top, |k| c(n + 1, 2 * k)),
            series(top, |k| c(n, 2 * k + 1) + c(n, 2 * k - 2)),
            -series(top, |k| c(n - 1, 2 * k + 1)),
        ),
        Family::B if n >= 2 => (
            series(top, |k| c(n + 1, 2 * k)),
            series(top, |k| {
                c(n - 1, 2 * k + 1) + c(n, 2 * k - 1) + c(n - 1, 2 * k - 2)
            }),
            -series(top, |k| c(n - 2, 2 * k + 1)),
        ),
        Family::C => {
            let p = series(top, |k| c(n + 1, 2 * k));
            (p.clone(), p, Polynomial::zero())
        }
        Family::D if n >= 3 => (
            dn_upper_first_form(n),
            series(top, |k| c(n, 2 * k + 1) + c(n, 2 * k - 2)),
            -series(top, |k| c(n - 2, 2 * k + 1) + c(n - 3, 2 * k)),
        ),
        // exceptional rows of the abelian-ideal table
        Family::E => match n {
            6 => (
                Polynomial::new(vec![1, 25, 27, 11]),
                Polynomial::new(vec![6, 21, 20, 17]),
                Polynomial::new(vec![-5, -6]),
            ),
            7 => (
                Polynomial::new(vec![1, 34, 60, 30, 3]),
                Polynomial::new(vec![7, 35, 40, 43, 3]),
                Polynomial::new(vec![-6, -13]),
            ),
            _ => (
                Polynomial::new(vec![1, 44, 118, 76, 17]),
                Polynomial::new(vec![8, 49, 87, 95, 17]),
                Polynomial::new(vec![-7, -19]),
            ),
        },
        Family::F => (
            Polynomial::new(vec![1, 10, 5]),
            Polynomial::new(vec![2, 8, 6]),
            Polynomial::new(vec![-1]),
        ),
        Family::G => (
            Polynomial::new(vec![1, 3]),
            Polynomial::new(vec![1, 3]),
            Polynomial::zero(),
        ),
        _ => return None,
    };
    Some(match which {
        Which::Upper => upper,
        Which::Lower => lower,
        Which::Deviation => deviation,
    })
}

/// `sum_k C(n+2,2k) - 4 C(n-1,2k-2)`.
pub fn dn_upper_first_form(n: i64) -> Polynomial {
    series(n + 3, |k| {
        binomial(n + 2, 2 * k) - 4 * binomial(n - 1, 2 * k - 2)
    })
}

/// `sum_k C(n,2k) + C(n-1,2k-1) + C(n-2,2k-1) + C(n-2,2k-4)`.
pub fn dn_upper_second_form(n: i64) -> Polynomial {
    series(n + 3, |k| {
        binomial(n, 2 * k)
            + binomial(n - 1, 2 * k - 1)
            + binomial(n - 2, 2 * k - 1)
            + binomial(n - 2, 2 * k - 4)
    })
}

/// Smallest rank at which the classical abelian-ideal formulas apply.
pub fn classical_base_rank(family: Family) -> Option<usize> {
    match family {
        Family::A | Family::C => Some(1),
        Family::B => Some(2),
        Family::D => Some(3),
        _ => None,
    }
}

/// Checks `K_n = 2 K_{n-1} + (q-1) K_{n-2}` on a sequence of polynomials.
pub fn satisfies_recurrence(seq: &[Polynomial]) -> bool {
    seq.windows(3).all(|w| {
        let rhs = &(&w[1] * &Polynomial::constant(2)) + &(&Polynomial::q_minus_one() * &w[0]);
        rhs == w[2]
    })
}

/// The recurrence on both covering polynomials of the classical abelian
/// formulas, from the base rank up to `n_max`.
pub fn recurrence_check(family: Family, n_max: usize) -> bool {
    let Some(base) = classical_base_rank(family) else {
        return false;
    };
    [Which::Upper, Which::Lower].iter().all(|&which| {
        let seq: Vec<Polynomial> = (base..=n_max)
            .map(|n| table3(RootSystemType { family, rank: n }, which).expect("classical row"))
            .collect();
        satisfies_recurrence(&seq)
    })
}

/// Upper covering polynomials of `Ab` along `E3 = A2 x A1, E4 = A4, E5 = D5,
/// E6, E7, E8`.
pub fn e_chain_upper() -> Vec<Polynomial> {
    let e3 = &Polynomial::new(vec![1, 3]) * &Polynomial::new(vec![1, 1]);
    let mut chain = vec![
        e3,
        table3(
            RootSystemType {
                family: Family::A,
                rank: 4,
            },
            Which::Upper,
        )
        .unwrap(),
        table3(
            RootSystemType {
                family: Family::D,
                rank: 5,
            },
            Which::Upper,
        )
        .unwrap(),
    ];
    for rank in 6..=8 {
        chain.push(
            table3(
                RootSystemType {
                    family: Family::E,
                    rank,
                },
                Which::Upper,
            )
            .unwrap(),
        );
    }
    chain
}

/// Extrapolates the E-chain one step past `E8`. Has no known meaning.
pub fn speculative_e9_upper() -> Polynomial {
    let chain = e_chain_upper();
    let (e7, e8) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
    &(e8 * &Polynomial::constant(2)) + &(&Polynomial::q_minus_one() * e7)
}

/// `-Delta_Ab(1)`.
pub fn delta_ab_at_one(ty: RootSystemType) -> Option<i64> {
    let n = ty.rank as i64;
    let pow2 = |e: i64| if e >= 0 { 1i64 << e } else { 0 };
    Some(match ty.family {
        Family::A => {
            if n >= 2 {
                pow2(n - 2)
            } else {
                0
            }
        }
        Family::B => {
            if n >= 3 {
                pow2(n - 3)
            } else {
                0
            }
        }
        Family::C => 0,
        Family::D if n >= 4 => pow2(n - 3) + pow2(n - 4),
        Family::E => match n {
            6 => 11,
            7 => 19,
            _ => 26,
        },
        Family::F => 1,
        Family::G => 0,
        _ => return None,
    })
}

/// Covering polynomials of one family evaluated at `q = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinusOneValues {
    pub object: &'static str,
    pub upper: i64,
    pub lower: i64,
}

/// `K^up(-1)` and `K^low(-1)` for the root poset, `AD`, `AD_0` and `Ab`,
/// skipping families that are undefined for the type. Data only.
pub fn q_minus_one_report(rs: &RootSystem) -> Vec<MinusOneValues> {
    let at = |object, up: &Polynomial, low: &Polynomial| MinusOneValues {
        object,
        upper: up.evaluate(-1),
        lower: low.evaluate(-1),
    };
    let poset = rs.root_poset();
    let mut out = vec![at(
        "positive-roots",
        &poset.upper_covering_polynomial(),
        &poset.lower_covering_polynomial(),
    )];
    let ad = ideals::ad_polynomial(rs);
    out.push(at("ad", &ad, &ad));
    if let Ok(ad0) = ideals::ad0_polynomial(rs) {
        out.push(at("ad0", &ad0, &ad0));
    }
    if let Ok((up, low, _)) = abelian::enumerate_minuscule(rs)
        .and_then(|report| abelian::ab_covering_polynomials(&report))
    {
        out.push(at("ab", &up, &low));
    }
    out
}

/// One ground poset `L` and a truncation size `m` for which the deviation
/// polynomial of `J*(L)(<= m)` has a positive coefficient.
#[derive(Debug, Clone, Serialize)]
pub struct TruncationWitness {
    pub ground_edges: Vec<(usize, usize)>,
    pub ground_size: usize,
    pub m: usize,
    pub deviation: Polynomial,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TruncationSearch {
    pub posets_checked: usize,
    pub truncations_checked: usize,
    pub witnesses: Vec<TruncationWitness>,
}

/// Random poset on `n` elements: each pair `i < j` is related with the given
/// probability, transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_relations(Poset::default_labels(n), &pairs).expect("pairs respect index order")
}

/// Searches random ground posets for a truncation `J*(L)(<= m)` whose
/// deviation polynomial has a positive coefficient. Report only.
pub fn truncation_conjecture_search<R: Rng>(
    rng: &mut R,
    samples: usize,
    max_size: usize,
) -> TruncationSearch {
    let mut out = TruncationSearch::default();
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_size);
        let density = rng.gen_range(0.1..0.6);
        let ground = random_poset(rng, n, density);
        let Ok(lattice) = upper_ideal_lattice(&ground, DEFAULT_IDEAL_BUDGET) else {
            continue;
        };
        out.posets_checked += 1;
        for m in 0..=n {
            let truncated = lattice.truncated_poset(m);
            out.truncations_checked += 1;
            let deviation = truncated
                .deviation_polynomial()
                .expect("covering polynomials agree at 1");
            if deviation.coeffs().iter().any(|&c| c > 0) {
                out.witnesses.push(TruncationWitness {
                    ground_edges: ground.hasse_edges(),
                    ground_size: n,
                    m,
                    deviation,
                });
            }
        }
    }
    out
}
