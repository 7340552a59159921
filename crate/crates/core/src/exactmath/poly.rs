use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `z` with arbitrary-precision integer coefficients.
///
/// Coefficient `i` multiplies `z^i`. Trailing zeros are always stripped, so
/// the zero polynomial has no coefficients and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c · z^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^e`; zero past the degree.
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Value at `z = 1`, i.e. the coefficient sum.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Mirror coefficients about `top_degree`: the result is
    /// `z^top_degree · p(1/z)`.
    pub fn reverse(&self, top_degree: usize) -> Result<Poly> {
        if let Some(degree) = self.degree() {
            if top_degree < degree {
                return Err(Error::ReverseDegree {
                    degree,
                    top: top_degree,
                });
            }
        }
        let coeffs = (0..=top_degree).map(|e| self.coeff(top_degree - e)).collect();
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Multiply by `z^e`.
    pub fn shift(&self, e: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `(1 - z)^d`.
    pub fn one_minus_z_pow(d: u64) -> Poly {
        let base = Poly::from_i64s(&[1, -1]);
        (0..d).fold(Poly::one(), |acc, _| &acc * &base)
    }

    /// Coefficients read the same in both directions (ignoring the stripped
    /// trailing zeros; leading zeros count).
    pub fn is_palindromic(&self) -> bool {
        let c = &self.coeffs;
        c.iter().eq(c.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|e| self.coeff(e) - rhs.coeff(e)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match e {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert_eq!(&p(&[1, 4, 1]) + &Poly::zero(), p(&[1, 4, 1]));
        assert_eq!(&p(&[0, 1]) - &p(&[0, 1]), Poly::zero());
    }

    #[test]
    fn mul_examples() {
        let base = p(&[1, 4, 1]);
        assert_eq!(&base * &base, p(&[1, 8, 18, 8, 1]));
        assert_eq!(&base * &Poly::one(), base);
        assert_eq!(&base * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[1, 6, 3]).reverse(2).unwrap(), p(&[3, 6, 1]));
        assert_eq!(p(&[1, 4, 1]).reverse(2).unwrap(), p(&[1, 4, 1]));
        assert_eq!(Poly::one().reverse(3).unwrap(), p(&[0, 0, 0, 1]));
        assert_eq!(
            p(&[1, 4, 1]).reverse(1),
            Err(Error::ReverseDegree { degree: 2, top: 1 })
        );
        assert_eq!(Poly::zero().reverse(0).unwrap(), Poly::zero());
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[0]).coeffs().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 8, 18, 8, 1]).to_string(), "1 + 8z + 18z^2 + 8z^3 + z^4");
        assert_eq!(p(&[0, -1, 2]).to_string(), "-z + 2z^2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn palindromes() {
        assert!(p(&[1, 8, 18, 8, 1]).is_palindromic());
        assert!(!p(&[1, 12, 42, 36, 9]).is_palindromic());
        assert!(!p(&[0, 0, 1]).is_palindromic());
    }

    proptest! {
        #[test]
        fn mul_degree_and_eval(a in prop::collection::vec(-50i64..50, 0..8),
                               b in prop::collection::vec(-50i64..50, 0..8),
                               z in -4i64..4) {
            let (pa, pb) = (p(&a), p(&b));
            let prod = &pa * &pb;
            if let (Some(da), Some(db)) = (pa.degree(), pb.degree()) {
                prop_assert_eq!(prod.degree(), Some(da + db));
            } else {
                prop_assert!(prod.is_zero());
            }
            let z = BigInt::from(z);
            prop_assert_eq!(prod.eval(&z), pa.eval(&z) * pb.eval(&z));
            prop_assert_eq!((&pa + &pb).eval(&z), pa.eval(&z) + pb.eval(&z));
        }

        #[test]
        fn reverse_is_involution(a in prop::collection::vec(-50i64..50, 1..8), extra in 0usize..4) {
            let pa = p(&a);
            let top = pa.degree().unwrap_or(0) + extra;
            let r = pa.reverse(top).unwrap();
            for e in 0..=top {
                prop_assert_eq!(r.coeff(e), pa.coeff(top - e));
            }
            if pa.coeff(0) != BigInt::zero() {
                prop_assert_eq!(r.reverse(top).unwrap(), pa);
            }
        }
    }
}
