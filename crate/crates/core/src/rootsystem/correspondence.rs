//! Order isomorphisms between `BC_n` and the non-simple parts of `B_{n+1}`
//! and `C_{n+1}`, and between the root posets of `B_m` and `C_m`.
//!
//! All maps act on `eps`-coordinates and are returned as index tables:
//! entry `i` is the image of source root `i` in the target system.

use super::{Family, RootSystem, RootSystemError, RootSystemType};

/// Shape of a root of type B, C or BC in the `eps` basis (zero-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Diff(usize, usize),
    Sum(usize, usize),
    Short(usize),
    Double(usize),
}

fn classify(v: &[i64]) -> Shape {
    let nz: Vec<(usize, i64)> = v
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .collect();
    match nz.as_slice() {
        [(i, 1)] => Shape::Short(*i),
        [(i, 2)] => Shape::Double(*i),
        [(i, 1), (j, -1)] => Shape::Diff(*i, *j),
        [(i, 1), (j, 1)] => Shape::Sum(*i, *j),
        _ => panic!("not a positive root of type B/C: {v:?}"),
    }
}

fn render(shape: Shape, n: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    match shape {
        Shape::Diff(i, j) => {
            v[i] = 1;
            v[j] = -1;
        }
        Shape::Sum(i, j) => {
            v[i] += 1;
            v[j] += 1;
        }
        Shape::Short(i) => v[i] = 1,
        Shape::Double(i) => v[i] = 2,
    }
    v
}

/// Simple-root coordinates from `eps` coordinates for type B/BC or C.
fn from_eps(family: Family, v: &[i64]) -> Vec<i64> {
    let n = v.len();
    let mut acc = 0;
    let mut c: Vec<i64> = v
        .iter()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect();
    if family == Family::C {
        // alpha_n = 2 eps_n, so the last coordinate is halved
        c[n - 1] /= 2;
    }
    c
}

fn build_map(
    source: &RootSystem,
    target: &RootSystem,
    image: impl Fn(Shape) -> Shape,
) -> Vec<usize> {
    let n = target.rank();
    source
        .roots()
        .iter()
        .map(|r| {
            let v = source.epsilon_coords(r).expect("eps coordinates");
            let w = render(image(classify(&v)), n);
            let coords = from_eps(target.root_type().family, &w);
            target
                .index_of(&coords)
                .unwrap_or_else(|| panic!("image {w:?} of {r} is not a root"))
        })
        .collect()
}

fn pair(family: Family, n: usize) -> Result<RootSystem, RootSystemError> {
    RootSystem::build(RootSystemType::new(family, n)?)
}

/// `BC_n -> C_{n+1}`, landing on the non-simple roots.
pub fn bc_to_c(n: usize) -> Result<(RootSystem, RootSystem, Vec<usize>), RootSystemError> {
    let bc = pair(Family::BC, n)?;
    let c = pair(Family::C, n + 1)?;
    let last = n;
    let map = build_map(&bc, &c, |s| match s {
        Shape::Diff(i, j) => Shape::Diff(i, j + 1),
        Shape::Sum(i, j) => Shape::Sum(i, j),
        Shape::Short(i) => Shape::Sum(i, last),
        Shape::Double(i) => Shape::Double(i),
    });
    Ok((bc, c, map))
}

/// `BC_n -> B_{n+1}`, landing on the non-simple roots.
pub fn bc_to_b(n: usize) -> Result<(RootSystem, RootSystem, Vec<usize>), RootSystemError> {
    let bc = pair(Family::BC, n)?;
    let b = pair(Family::B, n + 1)?;
    let map = build_map(&bc, &b, |s| match s {
        Shape::Diff(i, j) => Shape::Diff(i, j + 1),
        Shape::Sum(i, j) => Shape::Sum(i, j + 1),
        Shape::Short(i) => Shape::Short(i),
        Shape::Double(i) => Shape::Sum(i, i + 1),
    });
    Ok((bc, b, map))
}

/// `B_m -> C_m`: identity on simple roots, and the composite of the two
/// maps above on the rest.
pub fn b_to_c(m: usize) -> Result<(RootSystem, RootSystem, Vec<usize>), RootSystemError> {
    let b = pair(Family::B, m)?;
    let c = pair(Family::C, m)?;
    let last = m - 1;
    let map = build_map(&b, &c, |s| match s {
        Shape::Diff(i, j) => Shape::Diff(i, j),
        Shape::Sum(i, j) if j == i + 1 => Shape::Double(i),
        Shape::Sum(i, j) => Shape::Sum(i, j - 1),
        Shape::Short(i) if i == last => Shape::Double(i),
        Shape::Short(i) => Shape::Sum(i, last),
        Shape::Double(_) => unreachable!("B has no doubled roots"),
    });
    Ok((b, c, map))
}

/// Re-indexes `map` (into all roots of `target`) to positions within the
/// non-simple roots, as produced by [`RootSystem::without_simples`].
pub fn into_non_simple(target: &RootSystem, map: &[usize]) -> Option<Vec<usize>> {
    let rank = target.rank();
    map.iter()
        .map(|&i| if i >= rank { Some(i - rank) } else { None })
        .collect()
}
