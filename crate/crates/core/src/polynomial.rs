//! Exact integer polynomials in one indeterminate `q`.
//!
//! Coefficients are stored in ascending powers with trailing zeros stripped,
//! so two polynomials are equal iff their coefficient vectors are equal.
//! All arithmetic is checked: overflow of an `i64` coefficient panics instead
//! of wrapping. The `checked_*` variants return `None` instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// The dividend is not a multiple of `(q-1)^2`, i.e. its value or its
    /// first derivative at `q = 1` is nonzero.
    #[error("polynomial {0} is not divisible by (q-1)^2")]
    NotDivisible(Polynomial),
}

/// Degree of a polynomial. The zero polynomial has no degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl From<Vec<i64>> for Polynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<i64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, normalizing away
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Polynomial::new(vec![-1, 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            l => Degree::Finite(l - 1),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Option<Polynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k).checked_add(other.coeff(k))?);
        }
        Some(Polynomial::new(out))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Option<Polynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k).checked_sub(other.coeff(k))?);
        }
        Some(Polynomial::new(out))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Option<Polynomial> {
        if self.is_zero() || other.is_zero() {
            return Some(Polynomial::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(a.checked_mul(b)?)?;
            }
        }
        Some(Polynomial::new(out))
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|&a| a.checked_mul(c).expect("polynomial coefficient overflow"))
                .collect(),
        )
    }

    /// `p(x)`, evaluated by Horner's rule with overflow checks.
    pub fn checked_evaluate(&self, x: i64) -> Option<i64> {
        let mut acc: i64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x)?.checked_add(c)?;
        }
        Some(acc)
    }

    pub fn evaluate(&self, x: i64) -> i64 {
        self.checked_evaluate(x)
            .expect("integer overflow while evaluating polynomial")
    }

    /// `p'(1) = sum of i * c_i`. For a covering polynomial this is the edge
    /// count of the Hasse diagram.
    pub fn derivative_at_one(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .try_fold(0i64, |acc, (i, &c)| {
                acc.checked_add((i as i64).checked_mul(c)?)
            })
            .expect("integer overflow in derivative at one")
    }

    /// Exact quotient by `(q - 1)`, or `None` when `p(1) != 0`.
    fn divide_by_q_minus_one(&self) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        // synthetic division by the root 1, from the top coefficient down
        let n = self.coeffs.len();
        let mut quotient = vec![0i64; n - 1];
        let mut carry: i64 = 0;
        for k in (1..n).rev() {
            carry = carry.checked_add(self.coeffs[k])?;
            quotient[k - 1] = carry;
        }
        let remainder = carry.checked_add(self.coeffs[0])?;
        (remainder == 0).then(|| Polynomial::new(quotient))
    }

    /// Exact quotient by `(q - 1)^2`.
    pub fn divide_by_q_minus_one_squared(&self) -> Result<Polynomial, PolyError> {
        self.divide_by_q_minus_one()
            .and_then(|p| p.divide_by_q_minus_one())
            .ok_or_else(|| PolyError::NotDivisible(self.clone()))
    }

    /// True iff `c_i == c_{d-i}` for all `0 <= i <= d`.
    pub fn is_palindromic(&self, d: usize) -> bool {
        (0..=d).all(|i| self.coeff(i) == self.coeff(d - i))
            && self.degree().finite().is_none_or(|deg| deg <= d)
    }

    /// Renders with a custom variable name, highest power last.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let neg = c < 0;
            let abs = c.unsigned_abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 || abs != 1 {
                out.push_str(&abs.to_string());
            }
            out.push_str(&mono);
        }
        out
    }

    /// LaTeX rendering, e.g. `6+5q+20q^{2}+5q^{3}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.unsigned_abs();
            if k == 0 || abs != 1 {
                out.push_str(&abs.to_string());
            }
            match k {
                0 => {}
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{{{k}}}")),
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs)
            .expect("polynomial coefficient overflow")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs)
            .expect("polynomial coefficient overflow")
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("polynomial coefficient overflow")
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Shorthand for `Polynomial::new(vec![...])`.
#[macro_export]
macro_rules! poly {
    ($($c:expr),* $(,)?) => {
        $crate::polynomial::Polynomial::new(vec![$($c as i64),*])
    };
}

/// `q^{m-2} + 2q^{m-3} + ... + (m-1)`, the quotient of `q^m - mq + (m-1)` by
/// `(q-1)^2`. Zero for `m <= 1`.
pub fn staircase(m: usize) -> Polynomial {
    if m < 2 {
        return Polynomial::zero();
    }
    Polynomial::new((0..=m - 2).map(|k| (m - 1 - k) as i64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn add_examples() {
        assert_eq!(poly![1, 1] + poly![0, 1], poly![1, 2]);
        assert_eq!(poly![3, 4] + Polynomial::zero(), poly![3, 4]);
        // G2 rows of the root-poset table
        assert_eq!(poly![2, 3, 1] + poly![1, 5], poly![3, 8, 1]);
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = poly![1, 2, 0, 0];
        assert_eq!(p.coeffs(), &[1, 2]);
        assert_eq!(poly![1, 1] - poly![1, 1], Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), Degree::NegInfinity);
        assert_eq!(poly![0, 0, 3].degree(), Degree::Finite(2));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(poly![1, 1] * poly![1, 1], poly![1, 2, 1]);
        assert_eq!(poly![5, -2, 7] * Polynomial::one(), poly![5, -2, 7]);
        assert_eq!(poly![5, -2, 7] * Polynomial::zero(), Polynomial::zero());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(poly![1, 3].evaluate(1), 4);
        assert_eq!(poly![7, 3, 9].evaluate(0), 7);
        assert_eq!(poly![6, 5, 20, 5].evaluate(1), 36);
        assert_eq!(poly![1, 6, 1].evaluate(-1), -4);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(poly![1, 3].derivative_at_one(), 3);
        assert_eq!(poly![9].derivative_at_one(), 0);
        assert_eq!(poly![1, 20, 35, 10].derivative_at_one(), 120);
    }

    #[test]
    fn divide_examples() {
        // q^4 - 4q + 3
        let p = poly![3, -4, 0, 0, 1];
        assert_eq!(p.divide_by_q_minus_one_squared().unwrap(), poly![3, 2, 1]);
        assert_eq!(
            Polynomial::zero().divide_by_q_minus_one_squared().unwrap(),
            Polynomial::zero()
        );
        let diff = poly![2, 0, 1] - poly![1, 2];
        assert_eq!(diff.divide_by_q_minus_one_squared().unwrap(), poly![1]);
    }

    #[test]
    fn divide_rejects_nonmultiples() {
        assert!(matches!(
            poly![1, 1].divide_by_q_minus_one_squared(),
            Err(PolyError::NotDivisible(_))
        ));
        // p(1) = 0 but p'(1) != 0
        assert!(poly![-1, 1].divide_by_q_minus_one_squared().is_err());
    }

    #[test]
    fn palindromes() {
        assert!(poly![1, 3, 1].is_palindromic(2));
        assert!(poly![1].is_palindromic(0));
        assert!(!poly![1, 6, 3].is_palindromic(2));
        assert!(!poly![1, 3, 1].is_palindromic(3));
    }

    #[test]
    fn staircase_values() {
        assert_eq!(staircase(4), poly![3, 2, 1]);
        assert_eq!(staircase(3), poly![2, 1]);
        assert_eq!(staircase(1), Polynomial::zero());
        for m in 0..8usize {
            let mut num = vec![0i64; m + 1];
            num[m] += 1;
            if m >= 1 {
                num[1] -= m as i64;
            }
            num[0] += m as i64 - 1;
            if m == 0 {
                // q^0 - 0 - 1 = 0
                num = vec![0];
            }
            let p = Polynomial::new(num);
            assert_eq!(
                p.divide_by_q_minus_one_squared().unwrap(),
                staircase(m),
                "m={m}"
            );
        }
    }

    #[test]
    fn overflow_is_detected() {
        let big = Polynomial::constant(i64::MAX);
        assert!(big.checked_add(&Polynomial::one()).is_none());
        assert!(big.checked_mul(&Polynomial::constant(2)).is_none());
        assert!(poly![0, i64::MAX].checked_evaluate(2).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(poly![6, 5, 20, 5].to_string(), "6 + 5q + 20q^2 + 5q^3");
        assert_eq!(poly![-5, -6].to_string(), "-5 - 6q");
        assert_eq!(poly![0, 1].to_string(), "q");
        assert_eq!(poly![1, -1, 0, 2].to_latex(), "1-q+2q^{3}");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-50i64..50, 0..7).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), x in -5i64..=5) {
            prop_assert_eq!((&a + &b).evaluate(x), a.evaluate(x) + b.evaluate(x));
            prop_assert_eq!((&a * &b).evaluate(x), a.evaluate(x) * b.evaluate(x));
        }

        #[test]
        fn division_inverts_multiplication(p in small_poly()) {
            let sq = Polynomial::q_minus_one() * Polynomial::q_minus_one();
            prop_assert_eq!((&p * &sq).divide_by_q_minus_one_squared().unwrap(), p);
        }

        #[test]
        fn normalization_is_idempotent(raw in prop::collection::vec(-3i64..3, 0..8)) {
            let p = Polynomial::new(raw);
            prop_assert_eq!(Polynomial::new(p.coeffs().to_vec()), p.clone());
            prop_assert!(p.coeffs().last() != Some(&0));
        }
    }
}
