//! Gessel–Viennot counting of nonintersecting path tuples, plain and
//! refined by the total number of turns.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{count_paths, GridPoint, LatticePath};
use crate::error::{Error, Result};
use crate::exactmath::{binom, exact_det};

/// A tuple of paths `(L_1, …, L_d)` with `L_r` running from `A_r` to `E_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTuple {
    pub paths: Vec<LatticePath>,
}

impl PathTuple {
    pub fn new(paths: Vec<LatticePath>) -> Self {
        PathTuple { paths }
    }

    /// No two member paths share a point.
    pub fn is_nonintersecting(&self) -> bool {
        self.paths
            .iter()
            .enumerate()
            .all(|(i, p)| self.paths[..i].iter().all(|q| !p.intersects(q)))
    }

    pub fn turn_count(&self) -> usize {
        self.paths.iter().map(LatticePath::turn_count).sum()
    }
}

fn check_lengths(starts: &[GridPoint], ends: &[GridPoint]) -> Result<()> {
    if starts.is_empty() || starts.len() != ends.len() {
        return Err(Error::InvalidParameters(format!(
            "need equally many (at least one) start and end points, got {} and {}",
            starts.len(),
            ends.len()
        )));
    }
    Ok(())
}

fn monotone(values: impl Iterator<Item = i64>, ok: impl Fn(i64, i64) -> bool) -> bool {
    let v: Vec<i64> = values.collect();
    v.windows(2).all(|w| ok(w[0], w[1]))
}

/// Orderings under which the plain determinant counts nonintersecting
/// tuples: start rows and end rows weakly increase, start columns and end
/// columns weakly decrease.
pub fn check_count_hypotheses(starts: &[GridPoint], ends: &[GridPoint]) -> Result<()> {
    check_lengths(starts, ends)?;
    let ok = monotone(starts.iter().map(|p| p.row), |x, y| x <= y)
        && monotone(ends.iter().map(|p| p.row), |x, y| x <= y)
        && monotone(starts.iter().map(|p| p.col), |x, y| x >= y)
        && monotone(ends.iter().map(|p| p.col), |x, y| x >= y);
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "starts {starts:?} / ends {ends:?}: need start and end rows nondecreasing, start and end columns nonincreasing"
        )))
    }
}

/// Orderings for the turn-refined determinant: start rows weakly increase,
/// end rows strictly increase, start columns strictly decrease, end
/// columns weakly decrease.
pub fn check_turn_hypotheses(starts: &[GridPoint], ends: &[GridPoint]) -> Result<()> {
    check_lengths(starts, ends)?;
    let ok = monotone(starts.iter().map(|p| p.row), |x, y| x <= y)
        && monotone(ends.iter().map(|p| p.row), |x, y| x < y)
        && monotone(starts.iter().map(|p| p.col), |x, y| x > y)
        && monotone(ends.iter().map(|p| p.col), |x, y| x >= y);
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "starts {starts:?} / ends {ends:?}: need start rows nondecreasing, end rows increasing, start columns decreasing, end columns nonincreasing"
        )))
    }
}

/// Number of nonintersecting tuples from `starts` to `ends`, as
/// `det(|P(A_i → E_j)|)`.
pub fn count_nonintersecting(starts: &[GridPoint], ends: &[GridPoint]) -> Result<BigInt> {
    check_count_hypotheses(starts, ends)?;
    count_nonintersecting_unchecked(starts, ends)
}

/// The determinant without the ordering check. Outside the hypotheses the
/// value need not count anything.
pub fn count_nonintersecting_unchecked(starts: &[GridPoint], ends: &[GridPoint]) -> Result<BigInt> {
    check_lengths(starts, ends)?;
    let matrix: Vec<Vec<BigInt>> = starts
        .iter()
        .map(|&a| ends.iter().map(|&e| count_paths(a, e)).collect())
        .collect();
    exact_det(&matrix)
}

/// Number of nonintersecting tuples with exactly `k` turns in total:
/// the sum over compositions `k_1 + … + k_d = k` of
/// `det(binom(e_j - a_i + i - j, k_i + i - j) · binom(e'_j - a'_i - i + j, k_i))`.
pub fn count_nonintersecting_with_turns(starts: &[GridPoint], ends: &[GridPoint], k: i64) -> Result<BigInt> {
    check_turn_hypotheses(starts, ends)?;
    count_nonintersecting_with_turns_unchecked(starts, ends, k)
}

// Binomials count choices of turn rows/columns along a path segment; a
// negative segment length means the segment does not exist. Generalized
// binomials with negative upper argument would contribute spurious terms
// whenever some A_i cannot reach some E_j.
fn segment_binom(len: i64, k: i64) -> BigInt {
    if len < 0 {
        BigInt::zero()
    } else {
        binom(len, k)
    }
}

pub fn count_nonintersecting_with_turns_unchecked(starts: &[GridPoint], ends: &[GridPoint], k: i64) -> Result<BigInt> {
    check_lengths(starts, ends)?;
    if k < 0 {
        return Ok(BigInt::zero());
    }
    let mut rows = Vec::with_capacity(starts.len());
    let mut total = BigInt::zero();
    compositions(starts, ends, k, &mut rows, &mut total)?;
    Ok(total)
}

fn turn_row(starts: &[GridPoint], ends: &[GridPoint], i: usize, ki: i64) -> Vec<BigInt> {
    let a = starts[i];
    let shift = |j: usize| i as i64 - j as i64;
    ends.iter()
        .enumerate()
        .map(|(j, e)| {
            segment_binom(e.row - a.row + shift(j), ki + shift(j)) * segment_binom(e.col - a.col - shift(j), ki)
        })
        .collect()
}

fn compositions(
    starts: &[GridPoint],
    ends: &[GridPoint],
    remaining: i64,
    rows: &mut Vec<Vec<BigInt>>,
    total: &mut BigInt,
) -> Result<()> {
    let i = rows.len();
    let d = starts.len();
    if i + 1 == d {
        let row = turn_row(starts, ends, i, remaining);
        if row.iter().all(Zero::is_zero) {
            return Ok(());
        }
        rows.push(row);
        *total += exact_det(rows)?;
        rows.pop();
        return Ok(());
    }
    for ki in 0..=remaining {
        let row = turn_row(starts, ends, i, ki);
        // A zero row kills the determinant.
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        rows.push(row);
        compositions(starts, ends, remaining - ki, rows, total)?;
        rows.pop();
    }
    Ok(())
}

/// Nonintersecting pairs `(1,2) → (a,b)`, `(1,1) → (c,d)` with exactly `s`
/// turns, by the two-term diagonal binomial sum. Requires `a < c` and
/// `b >= d`.
pub fn corpath(a: i64, b: i64, c: i64, d: i64, s: i64) -> Result<BigInt> {
    if a >= c || b < d {
        return Err(Error::Precondition(format!(
            "corpath({a},{b},{c},{d}): need a < c and b >= d"
        )));
    }
    if a < 1 || b < 2 || d < 1 {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    // Both products need s1 >= 0 and s2 >= 0 (the second even s1 >= 1).
    for s1 in 0..=s {
        let s2 = s - s1;
        total += binom(a - 1, s1) * binom(b - 2, s1) * binom(c - 1, s2) * binom(d - 1, s2);
        total -= binom(a, s2 + 1) * binom(b - 2, s2) * binom(c - 2, s1 - 1) * binom(d - 1, s1);
    }
    Ok(total)
}
