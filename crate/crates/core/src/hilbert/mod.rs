//! h-vectors and Hilbert series.
//!
//! The h-vector of the principal component is computed four ways: from the
//! closed form ([`h_closed`]), from the corners of a shelling
//! ([`h_shelling`]), from per-leader corner counts given by path counting
//! ([`h_paths`]), and from two binomial diagonal sums ([`h_lemma_sums`]).

mod classical;
mod lemmas;
mod methods;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Poly;

pub use classical::{classical_h, classical_multiplicity, classical_series};
pub use lemmas::{
    component_count, cor410_value, corner_count_closed, diagonal_sum, lemma47_value, lemma48_value, lemma49_value,
};
pub use methods::{
    a_invariant, base_numerator, canonical_module_series, h_closed, h_closed_unchecked, h_lemma_sums, h_paths,
    h_shelling, is_gorenstein, jet_hilbert_series, jet_multiplicity, jet_multiplicity_sum,
};

/// `(h_0, h_1, ...)` with `h_0 = 1`, no negative entries and no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector {
    coeffs: Vec<BigInt>,
}

impl HVector {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.first().is_none_or(|h0| !h0.is_one()) {
            return Err(Error::InvalidParameters(format!(
                "h-vector must start with 1, got {coeffs:?}"
            )));
        }
        if let Some(k) = coeffs.iter().position(Signed::is_negative) {
            return Err(Error::InvalidParameters(format!(
                "h-vector entry h_{k} = {} is negative",
                coeffs[k]
            )));
        }
        Ok(HVector { coeffs })
    }

    pub fn from_poly(p: &Poly) -> Result<Self> {
        HVector::new(p.coeffs().to_vec())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `h_k`, zero past the end.
    pub fn get(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

/// `numerator(z) / (1 - z)^pole_order`, kept as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Poly,
    pole_order: u64,
}

impl HilbertSeries {
    pub fn new(numerator: Poly, pole_order: u64) -> Self {
        HilbertSeries { numerator, pole_order }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn pole_order(&self) -> u64 {
        self.pole_order
    }

    /// Equality as rational functions: `a (1-z)^e = b (1-z)^d`.
    pub fn eq_as_rational(&self, other: &HilbertSeries) -> bool {
        let lhs = &self.numerator * &Poly::one_minus_z_pow(other.pole_order);
        let rhs = &other.numerator * &Poly::one_minus_z_pow(self.pole_order);
        lhs == rhs
    }

    pub fn square(&self) -> HilbertSeries {
        HilbertSeries::new(&self.numerator * &self.numerator, 2 * self.pole_order)
    }

    /// `deg(numerator) - pole_order`; `None` for the zero series.
    pub fn a_invariant(&self) -> Option<i64> {
        Some(self.numerator.degree()? as i64 - self.pole_order as i64)
    }

    /// Cancels factors `1 - z` shared by numerator and denominator.
    pub fn reduce(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut d = self.pole_order;
        while d > 0 && !num.is_zero() && num.eval_one().is_zero() {
            num = divide_by_one_minus_z(&num);
            d -= 1;
        }
        HilbertSeries::new(num, d)
    }
}

// Exact quotient by 1 - z; the caller guarantees p(1) = 0.
fn divide_by_one_minus_z(p: &Poly) -> Poly {
    let mut acc = BigInt::zero();
    let q = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| {
            acc += c;
            acc.clone()
        })
        .collect();
    Poly::from_coeffs(q)
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1 - z)^{}", self.numerator, self.pole_order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hvector_validation() {
        let h = HVector::new([1, 4, 1, 0, 0].map(BigInt::from).to_vec()).unwrap();
        assert_eq!(h.to_strings(), ["1", "4", "1"]);
        assert!(h.is_palindromic());
        assert_eq!(h.sum(), BigInt::from(6));
        assert!(HVector::new(vec![BigInt::from(2)]).is_err());
        assert!(HVector::new(vec![]).is_err());
        assert!(HVector::new([1, -1].map(BigInt::from).to_vec()).is_err());
    }

    #[test]
    fn rational_equality_and_reduction() {
        let a = HilbertSeries::new(Poly::from_i64s(&[1, 1]), 2);
        // (1 + z)(1 - z) / (1 - z)^3
        let b = HilbertSeries::new(Poly::from_i64s(&[1, 0, -1]), 3);
        assert!(a.eq_as_rational(&b));
        assert_eq!(b.reduce(), a);
        assert_eq!(a.reduce(), a);
        assert!(!a.eq_as_rational(&HilbertSeries::new(Poly::from_i64s(&[1, 1]), 3)));
        assert_eq!(a.a_invariant(), Some(-1));
        assert_eq!(a.square(), HilbertSeries::new(Poly::from_i64s(&[1, 2, 1]), 4));
    }
}
