use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Limits, Result};
use crate::exactmath::{binom, exact_det, Poly};
use crate::jetcomplex::{corner_sets, shelling_order, JetShape};

use super::lemmas::{cor410_value, corner_count_closed, lemma48_value};
use super::{HVector, HilbertSeries};

/// `Σ_e binom(m-1, e) binom(n-1, e) z^e`, the h-polynomial of the rank-one
/// `m × n` matrices.
pub fn base_numerator(m: i64, n: i64) -> Poly {
    Poly::from_coeffs((0..m.max(0)).map(|e| binom(m - 1, e) * binom(n - 1, e)).collect())
}

pub fn h_closed(shape: &JetShape) -> HVector {
    h_closed_unchecked(shape.m(), shape.n()).expect("h-polynomial of a valid shape")
}

/// The closed form for any `1 <= m <= n`, including the sizes `m <= 2`
/// which lie outside the range where it describes the principal component.
pub fn h_closed_unchecked(m: i64, n: i64) -> Result<HVector> {
    if m < 1 || n < m {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    HVector::from_poly(&base_numerator(m, n).pow(2))
}

/// Histogram of corner-set sizes over the canonical shelling.
pub fn h_shelling(shape: &JetShape, limits: &Limits) -> Result<HVector> {
    let order = shelling_order(shape, limits.max_facets)?;
    let mut h = vec![BigInt::zero(); shape.dimension() as usize + 1];
    for c in corner_sets(&order) {
        h[c.len()] += 1;
    }
    HVector::new(h)
}

/// `h_0 = 1`, `h_k = C_{m,n-1}^k + Σ C_{i,j}^{k-1}` over the other leaders,
/// with every `C` from path counting.
pub fn h_paths(shape: &JetShape) -> Result<HVector> {
    let (m, n) = (shape.m(), shape.n());
    let top = shape.dimension() as i64;
    let mut h = vec![BigInt::from(1)];
    for k in 1..=top {
        let mut hk = corner_count_closed(shape, m, n - 1, k)?;
        for i in 1..=m {
            for j in 1..=n {
                if (i, j) != (m, n - 1) && (i, j) != (m, n) {
                    hk += corner_count_closed(shape, i, j, k - 1)?;
                }
            }
        }
        h.push(hk);
    }
    HVector::new(h)
}

/// `h_0 = 1`, `h_k` = the two diagonal sums for the bottom row and for the
/// rows above it.
pub fn h_lemma_sums(shape: &JetShape) -> Result<HVector> {
    let top = shape.dimension() as i64;
    let h = std::iter::once(BigInt::from(1))
        .chain((1..=top).map(|k| cor410_value(shape, k) + lemma48_value(shape, k)))
        .collect();
    HVector::new(h)
}

pub fn jet_hilbert_series(shape: &JetShape) -> HilbertSeries {
    HilbertSeries::new(h_closed(shape).to_poly(), shape.dimension())
}

/// The double sum over leaders of a binomial times a `2 × 2` determinant.
pub fn jet_multiplicity_sum(shape: &JetShape) -> Result<BigInt> {
    let (m, n) = (shape.m(), shape.n());
    let mut total = BigInt::zero();
    for i in 1..=m {
        for j in 1..=n {
            if (i, j) == (m, n) {
                continue;
            }
            let det = exact_det(&[
                vec![binom(i + n - 2, i - 1), binom(m + j - 2, m - 1)],
                vec![binom(i + n - 3, i - 2), binom(m + j - 3, m - 2)],
            ])?;
            total += binom(m + n - i - j, m - i) * det;
        }
    }
    Ok(total)
}

/// `binom(m + n - 2, m - 1)^2`.
pub fn jet_multiplicity(shape: &JetShape) -> BigInt {
    shape.facet_count()
}

/// `deg h - dim`, checked against `-2n`.
pub fn a_invariant(shape: &JetShape) -> Result<i64> {
    let series = jet_hilbert_series(shape);
    let a = series
        .a_invariant()
        .ok_or_else(|| Error::Inconsistency("zero Hilbert numerator".into()))?;
    if a != -2 * shape.n() {
        return Err(Error::Inconsistency(format!(
            "a-invariant of {shape} came out as {a}, expected {}",
            -2 * shape.n()
        )));
    }
    Ok(a)
}

/// Numerator `(z^{m+n-1} · base(1/z))^2` over `(1-z)^{2(m+n-1)}`.
pub fn canonical_module_series(shape: &JetShape) -> HilbertSeries {
    let top = (shape.m() + shape.n() - 1) as usize;
    let reversed = base_numerator(shape.m(), shape.n())
        .reverse(top)
        .expect("base numerator has degree m - 1 < m + n - 1");
    HilbertSeries::new(reversed.pow(2), shape.dimension())
}

/// Palindromic h-vector, checked against `m = n`.
pub fn is_gorenstein(shape: &JetShape) -> Result<bool> {
    let palindromic = h_closed(shape).is_palindromic();
    if palindromic != (shape.m() == shape.n()) {
        return Err(Error::Inconsistency(format!(
            "palindromicity of h for {shape} is {palindromic}"
        )));
    }
    Ok(palindromic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::classical_series;

    fn shape(m: i64, n: i64) -> JetShape {
        JetShape::new(m, n).unwrap()
    }

    fn strs(h: &HVector) -> Vec<String> {
        h.to_strings()
    }

    #[test]
    fn closed_values() {
        assert_eq!(strs(&h_closed(&shape(3, 3))), ["1", "8", "18", "8", "1"]);
        assert_eq!(strs(&h_closed(&shape(3, 4))), ["1", "12", "42", "36", "9"]);
        let h = h_closed(&shape(4, 6));
        assert_eq!(h.degree(), 6);
        assert_eq!(h.coeffs()[6], binom(5, 3).pow(2));
        assert_eq!(strs(&h_closed_unchecked(2, 2).unwrap()), ["1", "2", "1"]);
        assert!(h_closed_unchecked(3, 2).is_err());
    }

    #[test]
    fn four_routes_agree() {
        for (m, n) in [(3, 3), (3, 4), (4, 4), (3, 5), (4, 5)] {
            let s = shape(m, n);
            let closed = h_closed(&s);
            assert_eq!(h_shelling(&s, &Limits::default()).unwrap(), closed, "{s}");
            assert_eq!(h_paths(&s).unwrap(), closed, "{s}");
            assert_eq!(h_lemma_sums(&s).unwrap(), closed, "{s}");
        }
    }

    #[test]
    fn shelling_guard() {
        let limits = Limits {
            max_facets: 35,
            ..Limits::default()
        };
        assert!(matches!(
            h_shelling(&shape(3, 3), &limits),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn multiplicity_routes() {
        for m in 3..=9 {
            for n in m..=9 {
                let s = shape(m, n);
                assert_eq!(jet_multiplicity_sum(&s).unwrap(), jet_multiplicity(&s));
                assert_eq!(h_closed(&s).sum(), jet_multiplicity(&s));
            }
        }
        assert_eq!(jet_multiplicity(&shape(4, 5)), BigInt::from(1225));
    }

    #[test]
    fn invariants() {
        assert_eq!(a_invariant(&shape(3, 3)).unwrap(), -6);
        assert_eq!(a_invariant(&shape(3, 5)).unwrap(), -10);
        assert_eq!(a_invariant(&shape(5, 5)).unwrap(), -10);
        assert!(is_gorenstein(&shape(3, 3)).unwrap());
        assert!(!is_gorenstein(&shape(3, 4)).unwrap());
        let series = jet_hilbert_series(&shape(3, 3));
        assert_eq!(series.pole_order(), 10);
        assert!(series.eq_as_rational(&classical_series(2, 3, 3).unwrap().square()));
    }

    #[test]
    fn canonical_numerator() {
        let s = shape(3, 3);
        let w = canonical_module_series(&s);
        assert_eq!(
            w.numerator().coeffs(),
            Poly::from_i64s(&[0, 0, 0, 0, 0, 0, 1, 8, 18, 8, 1]).coeffs()
        );
        for (m, n) in [(3, 4), (4, 7)] {
            let s = shape(m, n);
            let w = canonical_module_series(&s);
            let h = jet_hilbert_series(&s);
            assert_eq!(*w.numerator(), h.numerator().reverse(s.dimension() as usize).unwrap());
            assert_eq!(w.numerator().lowest_degree(), Some(2 * n as usize));
        }
    }
}
