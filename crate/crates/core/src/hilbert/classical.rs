//! The determinantal variety of `m × n` matrices of rank `< r`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{binom, exact_det};

use super::{HVector, HilbertSeries};

fn check(r: i64, m: i64, n: i64) -> Result<()> {
    if r < 1 || r > m || m > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= r <= m <= n, got r = {r}, m = {m}, n = {n}"
        )));
    }
    Ok(())
}

/// `h_k = Σ det(binom(m-i, k_i) binom(n-j, k_i + i - j))` over weak
/// compositions `k_1 + ... + k_{r-1} = k`.
pub fn classical_h(r: i64, m: i64, n: i64) -> Result<HVector> {
    check(r, m, n)?;
    let size = (r - 1) as usize;
    // k_i ranges over [0, m - i]; larger values zero the whole row.
    let top: i64 = (1..r).map(|i| m - i).sum();
    let mut h = vec![BigInt::zero(); top as usize + 1];
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(size);
    let mut ks: Vec<i64> = Vec::with_capacity(size);
    accumulate(m, n, size, &mut rows, &mut ks, &mut h)?;
    HVector::new(h)
}

fn accumulate(
    m: i64,
    n: i64,
    size: usize,
    rows: &mut Vec<Vec<BigInt>>,
    ks: &mut Vec<i64>,
    h: &mut [BigInt],
) -> Result<()> {
    if rows.len() == size {
        let k: i64 = ks.iter().sum();
        h[k as usize] += exact_det(rows)?;
        return Ok(());
    }
    let i = rows.len() as i64 + 1;
    for ki in 0..=m - i {
        let row: Vec<BigInt> = (1..=size as i64)
            .map(|j| binom(m - i, ki) * binom(n - j, ki + i - j))
            .collect();
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        rows.push(row);
        ks.push(ki);
        accumulate(m, n, size, rows, ks, h)?;
        ks.pop();
        rows.pop();
    }
    Ok(())
}

/// `det(binom(m + n - i - j, m - i))` over `1 <= i, j <= r - 1`.
pub fn classical_multiplicity(r: i64, m: i64, n: i64) -> Result<BigInt> {
    check(r, m, n)?;
    let matrix: Vec<Vec<BigInt>> = (1..r)
        .map(|i| (1..r).map(|j| binom(m + n - i - j, m - i)).collect())
        .collect();
    exact_det(&matrix)
}

/// Pole order `(r - 1)(m + n - r + 1)`, the dimension.
pub fn classical_series(r: i64, m: i64, n: i64) -> Result<HilbertSeries> {
    let h = classical_h(r, m, n)?;
    Ok(HilbertSeries::new(h.to_poly(), ((r - 1) * (m + n - r + 1)) as u64))
}
