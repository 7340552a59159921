//! Brute-force checkers. Nothing here calls into the formula code paths:
//! vertex encodings, path enumeration and turn counting are redone from the
//! definitions.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_guard, Error, Guard, Result};
use crate::exactmath::Poly;
use crate::hilbert::HVector;
use crate::jetcomplex::Facet;
use crate::latticepath::GridPoint;

// Bitmask over x_{r,c} (bits 0..mn) and y_{r,c} (bits mn..2mn), with
// dimensions read off the largest coordinates present.
struct Encoder {
    rows: i64,
    cols: i64,
}

impl Encoder {
    fn for_facets(facets: &[Facet]) -> Self {
        let mut rows = 1;
        let mut cols = 1;
        for f in facets {
            for p in f
                .fx()
                .points()
                .iter()
                .chain(f.fy_upper().points())
                .chain(f.fy_lower().points())
            {
                rows = rows.max(p.row);
                cols = cols.max(p.col);
            }
        }
        Encoder { rows, cols }
    }

    fn bits(&self) -> usize {
        (2 * self.rows * self.cols) as usize
    }

    fn bit(&self, family: i64, p: &GridPoint) -> usize {
        (family * self.rows * self.cols + (p.row - 1) * self.cols + (p.col - 1)) as usize
    }

    fn words(&self, f: &Facet) -> Vec<u64> {
        let mut w = vec![0u64; self.bits().div_ceil(64)];
        let mut set = |b: usize| w[b / 64] |= 1 << (b % 64);
        for p in f.fx().points() {
            set(self.bit(0, p));
        }
        for p in f.fy_upper().points().iter().chain(f.fy_lower().points()) {
            set(self.bit(1, p));
        }
        w
    }
}

fn popcount(w: &[u64]) -> u32 {
    w.iter().map(|x| x.count_ones()).sum()
}

// (a \ b) as words.
fn minus(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & !y).collect()
}

/// Whether `order` is a shelling: for all `j < i` there are `v ∈ F_i \ F_j`
/// and `k < i` with `F_i \ F_k = {v}`. Lists of facets with differing
/// vertex counts are rejected.
pub fn verify_shelling(order: &[Facet]) -> bool {
    let enc = Encoder::for_facets(order);
    let sets: Vec<Vec<u64>> = order.iter().map(|f| enc.words(f)).collect();
    if sets.windows(2).any(|w| popcount(&w[0]) != popcount(&w[1])) {
        return false;
    }
    for i in 0..sets.len() {
        // Union of the single vertices v with F_i \ F_k = {v}, k < i.
        let mut corners = vec![0u64; sets[i].len()];
        for k in 0..i {
            let d = minus(&sets[i], &sets[k]);
            if popcount(&d) == 1 {
                for (c, x) in corners.iter_mut().zip(&d) {
                    *c |= x;
                }
            }
        }
        for j in 0..i {
            let d = minus(&sets[i], &sets[j]);
            if d.iter().zip(&corners).all(|(x, c)| x & c == 0) {
                return false;
            }
        }
    }
    true
}

/// `(f_{-1}, f_0, ..., f_{d-1})` of the complex generated by `facets`, by
/// inserting every subset of every facet into a set. The workload
/// `Σ 2^{|F|}` is checked against `max_faces` first.
pub fn f_vector(facets: &[Facet], max_faces: u64) -> Result<Vec<BigInt>> {
    let enc = Encoder::for_facets(facets);
    let verts: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            let w = enc.words(f);
            (0..enc.bits()).filter(|&b| w[b / 64] >> (b % 64) & 1 == 1).collect()
        })
        .collect();
    let workload: BigInt = verts.iter().map(|v| BigInt::one() << v.len()).sum();
    check_guard(Guard::Faces, &workload, max_faces)?;
    if enc.bits() > 128 {
        return Err(Error::InvalidParameters(format!(
            "face encoding holds 128 vertices, complex has {}",
            enc.bits()
        )));
    }
    let dim = verts.iter().map(Vec::len).max().unwrap_or(0);
    let mut seen: HashSet<u128> = HashSet::new();
    for v in &verts {
        for mask in 0u64..(1u64 << v.len()) {
            let mut key = 0u128;
            for (t, &b) in v.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    key |= 1u128 << b;
                }
            }
            seen.insert(key);
        }
    }
    let mut f = vec![BigInt::zero(); dim + 1];
    for key in seen {
        f[key.count_ones() as usize] += 1;
    }
    Ok(f)
}

/// `Σ_k h_k z^k = Σ_i f_{i-1} z^i (1-z)^{d-i}`; `f` holds `f_{-1}..f_{d-1}`.
pub fn h_from_f(f: &[BigInt], d: usize) -> Result<HVector> {
    if f.len() != d + 1 {
        return Err(Error::LengthMismatch {
            len: f.len(),
            expected: d + 1,
        });
    }
    let mut h = Poly::zero();
    for (i, fi) in f.iter().enumerate() {
        let term = Poly::monomial(fi.clone(), i) * Poly::one_minus_z_pow((d - i) as u64);
        h = &h + &term;
    }
    HVector::from_poly(&h).map_err(|e| Error::Inconsistency(format!("f-vector does not transform to an h-vector: {e}")))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Right,
    Down,
}

fn walks(from: GridPoint, to: GridPoint) -> Vec<Vec<Dir>> {
    fn go(r: i64, c: i64, to: GridPoint, cur: &mut Vec<Dir>, out: &mut Vec<Vec<Dir>>) {
        if (r, c) == (to.row, to.col) {
            out.push(cur.clone());
            return;
        }
        if c < to.col {
            cur.push(Dir::Right);
            go(r, c + 1, to, cur, out);
            cur.pop();
        }
        if r < to.row {
            cur.push(Dir::Down);
            go(r + 1, c, to, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if from.row <= to.row && from.col <= to.col {
        go(from.row, from.col, to, &mut Vec::new(), &mut out);
    }
    out
}

// Pascal table count of monotone walks, used for the guard.
fn walk_count(from: GridPoint, to: GridPoint) -> BigInt {
    if from.row > to.row || from.col > to.col {
        return BigInt::zero();
    }
    let (h, w) = ((to.row - from.row) as usize, (to.col - from.col) as usize);
    let mut row = vec![BigInt::one(); w + 1];
    for _ in 0..h {
        for c in 1..=w {
            let left = row[c - 1].clone();
            row[c] += left;
        }
    }
    row[w].clone()
}

fn points_of(from: GridPoint, dirs: &[Dir]) -> Vec<GridPoint> {
    let mut p = from;
    let mut out = vec![p];
    for d in dirs {
        p = match d {
            Dir::Right => GridPoint {
                row: p.row,
                col: p.col + 1,
            },
            Dir::Down => GridPoint {
                row: p.row + 1,
                col: p.col,
            },
        };
        out.push(p);
    }
    out
}

fn turns_of(dirs: &[Dir]) -> usize {
    dirs.windows(2)
        .filter(|w| w[0] == Dir::Right && w[1] == Dir::Down)
        .count()
}

/// Tuples of pairwise disjoint paths `starts[i] → ends[i]`, optionally only
/// those with `k` turns in total, by exhaustive enumeration. The size of the
/// Cartesian product is checked against `max_tuples` first.
pub fn brute_nonintersecting(
    starts: &[GridPoint],
    ends: &[GridPoint],
    k: Option<usize>,
    max_tuples: u64,
) -> Result<BigInt> {
    if starts.len() != ends.len() {
        return Err(Error::LengthMismatch {
            len: ends.len(),
            expected: starts.len(),
        });
    }
    let product: BigInt = starts.iter().zip(ends).map(|(&a, &e)| walk_count(a, e)).product();
    check_guard(Guard::Paths, &product, max_tuples)?;
    let candidates: Vec<Vec<(HashSet<GridPoint>, usize)>> = starts
        .iter()
        .zip(ends)
        .map(|(&a, &e)| {
            walks(a, e)
                .into_iter()
                .map(|d| (points_of(a, &d).into_iter().collect(), turns_of(&d)))
                .collect()
        })
        .collect();
    let mut chosen: Vec<&HashSet<GridPoint>> = Vec::new();
    let mut count = BigInt::zero();
    extend(&candidates, &mut chosen, 0, k, &mut count);
    Ok(count)
}

fn extend<'a>(
    candidates: &'a [Vec<(HashSet<GridPoint>, usize)>],
    chosen: &mut Vec<&'a HashSet<GridPoint>>,
    turns: usize,
    k: Option<usize>,
    count: &mut BigInt,
) {
    let i = chosen.len();
    if i == candidates.len() {
        if k.is_none_or(|k| k == turns) {
            *count += 1;
        }
        return;
    }
    for (pts, t) in &candidates[i] {
        if k.is_some_and(|k| turns + t > k) || chosen.iter().any(|c| !c.is_disjoint(pts)) {
            continue;
        }
        chosen.push(pts);
        extend(candidates, chosen, turns + t, k, count);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jetcomplex::{enumerate_facets, shelling_order, shelling_order_with, JetShape, TieBreak};

    fn gp(r: i64, c: i64) -> GridPoint {
        GridPoint::new(r, c)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn shelling_checks() {
        let shape = JetShape::new(3, 3).unwrap();
        let order = shelling_order(&shape, 1000).unwrap();
        assert!(verify_shelling(&order));
        assert!(verify_shelling(&order[..1]));
        assert!(verify_shelling(&[]));
        assert!(verify_shelling(
            &shelling_order_with(&shape, TieBreak::Reversed, 1000).unwrap()
        ));
        let reversed: Vec<Facet> = order.iter().rev().cloned().collect();
        assert!(!verify_shelling(&reversed));
    }

    #[test]
    fn f_vector_of_one_facet() {
        let facets = enumerate_facets(&JetShape::new(3, 3).unwrap(), 1000).unwrap();
        let f = f_vector(&facets[..1], 1 << 20).unwrap();
        let q = facets[0].vertex_count() as i64;
        let expected: Vec<BigInt> = (0..=q).map(|i| crate::binom(q, i)).collect();
        assert_eq!(f, expected);
        let h = h_from_f(&f, q as usize).unwrap();
        assert_eq!(h.to_strings(), ["1"]);
    }

    #[test]
    fn f_vector_transform_three_by_three() {
        let facets = enumerate_facets(&JetShape::new(3, 3).unwrap(), 1000).unwrap();
        let f = f_vector(&facets, 1 << 20).unwrap();
        assert_eq!(f[0], BigInt::one());
        assert_eq!(h_from_f(&f, 10).unwrap().to_strings(), ["1", "8", "18", "8", "1"]);
        assert!(matches!(
            f_vector(&facets, 1000),
            Err(Error::GuardExceeded {
                guard: Guard::Faces,
                ..
            })
        ));
    }

    #[test]
    fn h_from_f_edges() {
        assert_eq!(h_from_f(&big(&[1]), 0).unwrap().to_strings(), ["1"]);
        // Two triangles sharing an edge: f = (1, 4, 5, 2), h = (1, 1).
        assert_eq!(h_from_f(&big(&[1, 4, 5, 2]), 3).unwrap().to_strings(), ["1", "1"]);
        assert!(matches!(h_from_f(&big(&[1, 2]), 2), Err(Error::LengthMismatch { .. })));
        // Two disjoint edges: h = (1, 2, -1), not an h-vector.
        assert!(h_from_f(&big(&[1, 4, 2]), 2).is_err());
    }

    #[test]
    fn nonintersecting_examples() {
        let starts = [gp(1, 2), gp(1, 1)];
        let ends = [gp(2, 3), gp(3, 2)];
        assert_eq!(
            brute_nonintersecting(&starts, &ends, None, 1000).unwrap(),
            BigInt::from(3)
        );
        for k in 0..=2 {
            assert_eq!(
                brute_nonintersecting(&starts, &ends, Some(k), 1000).unwrap(),
                BigInt::one()
            );
        }
        assert_eq!(
            brute_nonintersecting(&starts, &ends, Some(3), 1000).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            brute_nonintersecting(&[gp(1, 1)], &[gp(3, 4)], None, 1000).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(
            brute_nonintersecting(&[gp(2, 2)], &[gp(1, 4)], None, 1000).unwrap(),
            BigInt::zero()
        );
        assert!(brute_nonintersecting(&[gp(1, 1)], &[gp(6, 6)], None, 100).is_err());
        assert!(brute_nonintersecting(&[gp(1, 1)], &[], None, 100).is_err());
    }

    #[test]
    fn walk_counts() {
        assert_eq!(walk_count(gp(1, 1), gp(3, 4)), BigInt::from(10));
        assert_eq!(walks(gp(1, 1), gp(3, 4)).len(), 10);
        assert_eq!(turns_of(&[Dir::Right, Dir::Down, Dir::Right, Dir::Down]), 2);
    }
}
