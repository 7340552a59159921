//! Closed forms for corner counts and their binomial diagonal sums.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::binom;
use crate::jetcomplex::JetShape;
use crate::latticepath::{corpath, count_paths_with_turns, GridPoint};

/// `Σ_{t1 + t2 = k} f(t1, t2)` over `t1 ∈ t1_range`, `t2 ∈ t2_range`
/// (inclusive). The ranges must cover the support of `f`.
pub fn diagonal_sum<F>(k: i64, t1_range: (i64, i64), t2_range: (i64, i64), f: F) -> BigInt
where
    F: Fn(i64, i64) -> BigInt,
{
    let lo = t1_range.0.max(k - t2_range.1);
    let hi = t1_range.1.min(k - t2_range.0);
    (lo..=hi).map(|t1| f(t1, k - t1)).sum()
}

// Every summand below carries a factor binom(m-1, t) or binom(m-2, t - c)
// or binom(m, t + c) in each variable, so both variables live in [0, m].
fn support(shape: &JetShape, t1_lo: i64, t2_lo: i64) -> ((i64, i64), (i64, i64)) {
    ((t1_lo, shape.m()), (t2_lo, shape.m()))
}

fn b(s: i64, a: i64) -> BigInt {
    binom(s, a)
}

/// `C_{m,n-1}^k`.
pub fn lemma47_value(shape: &JetShape, k: i64) -> BigInt {
    let (m, n) = (shape.m(), shape.n());
    let (r1, r2) = support(shape, 0, 0);
    diagonal_sum(k, r1, r2, |t1, t2| {
        b(m - 2, t1) * b(n - 2, t1) * b(m - 1, t2) * b(n - 2, t2)
            - b(m - 1, t2 + 1) * b(n - 2, t2) * b(m - 2, t1 - 1) * b(n - 2, t1)
    })
}

/// `Σ_{i<m} Σ_j C_{i,j}^{k-1}`.
pub fn lemma48_value(shape: &JetShape, k: i64) -> BigInt {
    let (m, n) = (shape.m(), shape.n());
    let (r1, r2) = support(shape, 0, 1);
    diagonal_sum(k, r1, r2, |t1, t2| {
        b(m, t2) * b(n, t1 + 1) * b(m - 1, t1) * b(n - 2, t2 - 1)
            - b(m - 1, t1) * b(n, t2) * b(m - 1, t2 - 1) * b(n - 2, t1)
    })
}

/// `Σ_{j<n-1} C_{m,j}^{k-1}`.
pub fn lemma49_value(shape: &JetShape, k: i64) -> BigInt {
    let (m, n) = (shape.m(), shape.n());
    let (r1, r2) = support(shape, 0, 0);
    diagonal_sum(k, r1, r2, |t1, t2| {
        b(m - 1, t1) * b(n - 2, t1) * b(m - 1, t2 - 1) * b(n - 2, t2)
            - b(m, t2 + 1) * b(n - 2, t2) * b(m - 2, t1 - 2) * b(n - 2, t1)
    })
}

/// `C_{m,n-1}^k + Σ_{j<n-1} C_{m,j}^{k-1}`, the two previous sums added
/// termwise.
pub fn cor410_value(shape: &JetShape, k: i64) -> BigInt {
    let (m, n) = (shape.m(), shape.n());
    let (r1, r2) = support(shape, 0, 0);
    diagonal_sum(k, r1, r2, |t1, t2| {
        b(m - 1, t1) * b(n - 2, t1) * b(m - 1, t2) * b(n - 2, t2)
            - b(m - 1, t2 + 1) * b(n - 2, t2) * b(m - 1, t1 - 1) * b(n - 2, t1)
    })
}

/// `C_{i,j}^s` by path counting alone.
pub fn corner_count_closed(shape: &JetShape, i: i64, j: i64, s: i64) -> Result<BigInt> {
    let (m, n) = (shape.m(), shape.n());
    if !(1..=m).contains(&i) || !(1..=n).contains(&j) || (i, j) == (m, n) {
        return Err(Error::InvalidParameters(format!(
            "({i},{j}) is not a leader position in {shape}"
        )));
    }
    if s < 0 {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    if i != m {
        for s1 in 0..=s {
            let fx = count_paths_with_turns(GridPoint::new(i, j), GridPoint::new(m, n), s1);
            if !fx.is_zero() {
                total += fx * corpath(i, n, m, j, s - s1)?;
            }
        }
    } else if j == 1 {
        total = b(n - 2, s) * b(m - 1, s);
    } else if j == n - 1 {
        for p in 1..=m - 2 {
            total += corpath(p, n - 1, m, n - 1, s - 1)?;
        }
        total += corpath(m - 1, n - 1, m, n - 1, s)?;
    } else {
        for p in 1..=m - 1 {
            for q in j + 1..=n - 1 {
                total += corpath(p, q, m, j, s - 1)?;
            }
        }
        for p in 1..=m - 2 {
            total += corpath(p, j, m, j, s - 1)?;
        }
        total += corpath(m - 1, j, m, j, s)?;
    }
    Ok(total)
}

/// Number of irreducible components of the jet scheme of order `k - 1`
/// over the rank `< r` determinantal variety: `k + 1 - ⌈k/r⌉`.
pub fn component_count(r: i64, k: i64) -> Result<i64> {
    if r < 1 || k < 1 {
        return Err(Error::InvalidParameters(format!(
            "component count needs r >= 1 and k >= 1, got r = {r}, k = {k}"
        )));
    }
    Ok(k + 1 - (k + r - 1) / r)
}
