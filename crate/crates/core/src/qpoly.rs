//! Dense integer polynomials in `q`.
//!
//! Every trace evaluation in this crate lands in `Z[q]`, with degrees bounded
//! by the length of the indexing permutation, so a dense coefficient vector
//! with exact `i64` arithmetic is the right representation.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Integer polynomial in `q`, stored as ascending coefficients with a nonzero
/// leading coefficient (the zero polynomial stores an empty vector).
/// Serializes as the plain coefficient array.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl From<Vec<i64>> for QPoly {
    fn from(coeffs: Vec<i64>) -> Self {
        QPoly::from_coeffs(coeffs)
    }
}

impl From<QPoly> for Vec<i64> {
    fn from(p: QPoly) -> Self {
        p.coeffs
    }
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add_assign_scaled(&mut self, other: &QPoly, scale: i64) {
        if scale == 0 || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += scale * c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Exact division; errors when `self` is not a polynomial multiple of
    /// `divisor`.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly, Error> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let nd = self.coeffs.len() - 1;
        if nd < dd {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; nd - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c == 0 {
                continue;
            }
            if c % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let f = c / lead;
            quot[k] = f;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= f * d;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// Palindromic about degree `ell/2`, i.e. `c_k == c_{ell-k}` for all `k`.
    pub fn is_symmetric_about(&self, ell: usize) -> bool {
        if self.is_zero() {
            return true;
        }
        if self.coeffs.len() > ell + 1 {
            return false;
        }
        (0..=ell).all(|k| self.coeff(k) == self.coeff(ell - k))
    }

    /// Single-peak test on the coefficient sequence `c_0..c_ell`.
    pub fn is_unimodal_to(&self, ell: usize) -> bool {
        let seq: Vec<i64> = (0..=ell).map(|k| self.coeff(k)).collect();
        let peak = match seq.iter().enumerate().max_by_key(|(_, &c)| c) {
            Some((p, _)) => p,
            None => return true,
        };
        seq.windows(2).enumerate().all(|(i, w)| {
            if i < peak {
                w[0] <= w[1]
            } else {
                w[0] >= w[1]
            }
        })
    }

    /// Human-readable form, e.g. `1 + 3q + 6q^2`.
    pub fn display_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if mag == 1 && k > 0 {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{mag}{var}"));
            }
        }
        out
    }
}

/// `[a]_q = 1 + q + ... + q^{a-1}`, with `[0]_q = 0`.
pub fn q_int(a: usize) -> QPoly {
    QPoly::from_coeffs(vec![1; a])
}

/// `[a]_q! = [a]_q [a-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(a: usize) -> QPoly {
    let mut out = QPoly::one();
    for k in 1..=a {
        out = &out * &q_int(k);
    }
    out
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self.display_string())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_string())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, 1);
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_assign_scaled(rhs, 1);
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, -1);
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<i64> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: i64) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|&c| c * rhs).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(3).coeffs(), &[1, 1, 1]);
        assert!(q_int(0).is_zero());
        assert_eq!(q_factorial(0), QPoly::one());
        // [2]_q! [2]_q! / [1]_q! = (1+q)^2
        let v = (&q_factorial(2) * &q_factorial(2))
            .div_exact(&q_factorial(1))
            .unwrap();
        assert_eq!(v.coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn symmetry_and_unimodality() {
        let eta = QPoly::from_coeffs(vec![1, 3, 6, 6, 3, 1]);
        assert!(eta.is_symmetric_about(5));
        assert!(eta.is_unimodal_to(5));
        let eps = QPoly::from_coeffs(vec![0, 0, 1, 1]);
        assert!(eps.is_symmetric_about(5));
        assert!(eps.is_unimodal_to(5));
        let dip = QPoly::from_coeffs(vec![1, 0, 0, 1]);
        assert!(dip.is_symmetric_about(3));
        assert!(!dip.is_unimodal_to(3));
    }

    #[test]
    fn division_detects_remainders() {
        let p = QPoly::from_coeffs(vec![1, 1, 1]);
        assert_eq!(
            p.div_exact(&QPoly::from_coeffs(vec![1, 1])),
            Err(Error::InexactDivision)
        );
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-20i64..=20, 0..8).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn mul_commutes(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn exact_division_roundtrip(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }
    }
}
