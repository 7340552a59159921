//! Lattice paths with unit East/South steps.
//!
//! Points are `(row, col)`. An East step adds `(0, 1)`, a South step adds
//! `(1, 0)`. A *turn* is an interior point entered by an East step and left
//! by a South step. The same convention serves both for plain lattice paths
//! and for the lattice path monomials making up facets of the jet complex.

mod nonintersecting;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{check_guard, Error, Guard, Result};
use crate::exactmath::binom;

pub use nonintersecting::{
    check_count_hypotheses, check_turn_hypotheses, corpath, count_nonintersecting, count_nonintersecting_unchecked,
    count_nonintersecting_with_turns, count_nonintersecting_with_turns_unchecked, PathTuple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub row: i64,
    pub col: i64,
}

impl GridPoint {
    pub const fn new(row: i64, col: i64) -> Self {
        GridPoint { row, col }
    }

    pub fn step(self, step: Step) -> GridPoint {
        match step {
            Step::East => GridPoint::new(self.row, self.col + 1),
            Step::South => GridPoint::new(self.row + 1, self.col),
        }
    }

    /// `other` lies weakly south-east of `self`.
    pub fn reaches(self, other: GridPoint) -> bool {
        other.row >= self.row && other.col >= self.col
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((row, col): (i64, i64)) -> Self {
        GridPoint::new(row, col)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Unit step; `East < South` fixes the lexicographic order of paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    South,
}

impl Step {
    pub fn between(from: GridPoint, to: GridPoint) -> Option<Step> {
        match (to.row - from.row, to.col - from.col) {
            (0, 1) => Some(Step::East),
            (1, 0) => Some(Step::South),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::East => 'E',
            Step::South => 'S',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    points: Vec<GridPoint>,
}

impl LatticePath {
    /// Validates that consecutive points differ by a unit step.
    pub fn new(points: Vec<GridPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidParameters(
                "a lattice path needs at least one point".into(),
            ));
        }
        if let Some(w) = points.windows(2).find(|w| Step::between(w[0], w[1]).is_none()) {
            return Err(Error::InvalidParameters(format!(
                "{} -> {} is not a unit East/South step",
                w[0], w[1]
            )));
        }
        Ok(LatticePath { points })
    }

    pub fn from_steps(start: GridPoint, steps: &[Step]) -> Self {
        let mut points = Vec::with_capacity(steps.len() + 1);
        points.push(start);
        let mut cur = start;
        for &s in steps {
            cur = cur.step(s);
            points.push(cur);
        }
        LatticePath { points }
    }

    /// Rebuilds the unique path from `start` to `end` whose turn set is
    /// exactly `turns`.
    pub fn from_turns(start: GridPoint, end: GridPoint, turns: &BTreeSet<GridPoint>) -> Result<Self> {
        let mut steps = Vec::new();
        let mut cur = start;
        for &t in turns.iter().chain(std::iter::once(&end)) {
            if t.row < cur.row || t.col < cur.col {
                return Err(Error::InvalidParameters(format!(
                    "no path from {start} to {end} turns at {turns:?}"
                )));
            }
            steps.extend(std::iter::repeat_n(Step::South, (t.row - cur.row) as usize));
            steps.extend(std::iter::repeat_n(Step::East, (t.col - cur.col) as usize));
            cur = t;
        }
        let path = LatticePath::from_steps(start, &steps);
        if path.turns() != *turns {
            return Err(Error::InvalidParameters(format!(
                "no path from {start} to {end} turns at {turns:?}"
            )));
        }
        Ok(path)
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn start(&self) -> GridPoint {
        self.points[0]
    }

    pub fn end(&self) -> GridPoint {
        self.points[self.points.len() - 1]
    }

    /// Number of points (steps + 1).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.points
            .windows(2)
            .map(|w| Step::between(w[0], w[1]).expect("validated path"))
    }

    pub fn step_string(&self) -> String {
        self.steps().map(Step::as_char).collect()
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        // Points are sorted lexicographically along the path.
        self.points.binary_search(&p).is_ok()
    }

    pub fn intersects(&self, other: &LatticePath) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.points.len() && j < other.points.len() {
            match self.points[i].cmp(&other.points[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Interior points entered by an East step and left by a South step.
    pub fn turns(&self) -> BTreeSet<GridPoint> {
        self.turn_points().collect()
    }

    pub fn turn_count(&self) -> usize {
        self.turn_points().count()
    }

    fn turn_points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.points.windows(3).filter_map(|w| {
            let entered_east = w[1].col - w[0].col == 1;
            let left_south = w[2].row - w[1].row == 1;
            (entered_east && left_south).then_some(w[1])
        })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start(), self.step_string())
    }
}

/// `|P(A → E)| = binom((e-a) + (e'-a'), e-a)`, zero when `E` is unreachable.
pub fn count_paths(start: GridPoint, end: GridPoint) -> BigInt {
    if !start.reaches(end) {
        return BigInt::zero();
    }
    let down = end.row - start.row;
    let right = end.col - start.col;
    binom(down + right, down)
}

/// Paths from `start` to `end` with exactly `k` turns:
/// `binom(e-a, k) · binom(e'-a', k)`.
pub fn count_paths_with_turns(start: GridPoint, end: GridPoint, k: i64) -> BigInt {
    if k < 0 || !start.reaches(end) {
        return BigInt::zero();
    }
    binom(end.row - start.row, k) * binom(end.col - start.col, k)
}

/// Streams every path from `start` to `end` to `sink` in lexicographic step
/// order (East before South). Refuses with a guard error, before emitting
/// anything, when the path count exceeds `limit`. Returns the number emitted.
pub fn for_each_path<F>(start: GridPoint, end: GridPoint, limit: u64, mut sink: F) -> Result<u64>
where
    F: FnMut(&LatticePath),
{
    let total = count_paths(start, end);
    check_guard(Guard::Paths, &total, limit)?;
    if total.is_zero() {
        return Ok(0);
    }
    let mut points = vec![start];
    let mut emitted = 0u64;
    walk(end, &mut points, &mut |pts| {
        emitted += 1;
        sink(&LatticePath { points: pts.to_vec() });
    });
    debug_assert_eq!(Some(emitted), total.to_u64());
    Ok(emitted)
}

fn walk(end: GridPoint, points: &mut Vec<GridPoint>, emit: &mut dyn FnMut(&[GridPoint])) {
    let cur = *points.last().expect("non-empty");
    if cur == end {
        emit(points);
        return;
    }
    for step in [Step::East, Step::South] {
        let next = cur.step(step);
        if next.reaches(end) {
            points.push(next);
            walk(end, points, emit);
            points.pop();
        }
    }
}

/// All paths from `start` to `end`, see [`for_each_path`].
pub fn enumerate_paths(start: GridPoint, end: GridPoint, limit: u64) -> Result<Vec<LatticePath>> {
    let mut out = Vec::new();
    for_each_path(start, end, limit, |p| out.push(p.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Limits;
    use proptest::prelude::*;

    fn gp(r: i64, c: i64) -> GridPoint {
        GridPoint::new(r, c)
    }

    fn figure_path() -> LatticePath {
        use Step::*;
        LatticePath::from_steps(gp(1, 1), &[East, South, East, East, South, South, East])
    }

    #[test]
    fn turn_examples() {
        let p = LatticePath::new(vec![gp(1, 1), gp(1, 2), gp(1, 3), gp(2, 3)]).unwrap();
        assert_eq!(p.turns(), BTreeSet::from([gp(1, 3)]));

        let down = LatticePath::from_steps(gp(1, 1), &[Step::South; 4]);
        assert!(down.turns().is_empty());

        let fig = figure_path();
        assert_eq!(fig.end(), gp(4, 5));
        assert_eq!(fig.turns(), BTreeSet::from([gp(1, 2), gp(2, 4)]));
    }

    #[test]
    fn rejects_non_unit_steps() {
        assert!(LatticePath::new(vec![gp(1, 1), gp(2, 2)]).is_err());
        assert!(LatticePath::new(vec![gp(1, 1), gp(1, 0)]).is_err());
        assert!(LatticePath::new(vec![]).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_paths(gp(1, 1), gp(4, 5)), BigInt::from(35));
        assert_eq!(count_paths(gp(3, 3), gp(3, 3)), BigInt::from(1));
        assert_eq!(count_paths(gp(2, 2), gp(1, 5)), BigInt::zero());
        // binom(-2, 1) would be -2; unreachable must still be 0.
        assert_eq!(count_paths(gp(1, 4), gp(2, 1)), BigInt::zero());

        assert_eq!(count_paths_with_turns(gp(1, 1), gp(4, 5), 2), BigInt::from(18));
        assert_eq!(count_paths_with_turns(gp(1, 1), gp(2, 3), 1), BigInt::from(2));
        assert_eq!(count_paths_with_turns(gp(1, 1), gp(4, 5), -1), BigInt::zero());
        assert_eq!(count_paths_with_turns(gp(4, 5), gp(1, 1), 3), BigInt::zero());
    }

    #[test]
    fn turn_count_brute_force_small() {
        // (1,1) -> (2,3): EES, ESE, SEE with turn counts 1, 1, 0
        let paths = enumerate_paths(gp(1, 1), gp(2, 3), 100).unwrap();
        let strings: Vec<String> = paths.iter().map(LatticePath::step_string).collect();
        assert_eq!(strings, ["EES", "ESE", "SEE"]);
        let with_one = paths.iter().filter(|p| p.turn_count() == 1).count();
        assert_eq!(with_one, 2);
    }

    #[test]
    fn enumerate_examples() {
        let single = enumerate_paths(gp(1, 1), gp(1, 1), 10).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].len(), 1);

        assert_eq!(enumerate_paths(gp(1, 1), gp(2, 2), 10).unwrap().len(), 2);

        let all = enumerate_paths(gp(1, 1), gp(4, 5), Limits::DEFAULT_MAX_PATHS).unwrap();
        assert_eq!(all.len(), 35);
        let distinct: BTreeSet<String> = all.iter().map(LatticePath::step_string).collect();
        assert_eq!(distinct.len(), 35);
        let sorted: Vec<String> = distinct.into_iter().collect();
        let emitted: Vec<String> = all.iter().map(LatticePath::step_string).collect();
        assert_eq!(emitted, sorted, "E < S lexicographic order");

        assert!(enumerate_paths(gp(2, 2), gp(1, 1), 10).unwrap().is_empty());
    }

    #[test]
    fn enumerate_guard() {
        let err = enumerate_paths(gp(1, 1), gp(4, 5), 34).unwrap_err();
        assert_eq!(
            err,
            Error::GuardExceeded {
                guard: Guard::Paths,
                requested: BigInt::from(35),
                limit: 34
            }
        );
    }

    #[test]
    fn intersects() {
        let a = LatticePath::from_steps(gp(1, 2), &[Step::South, Step::East]);
        let b = LatticePath::from_steps(gp(1, 1), &[Step::South, Step::South, Step::East]);
        assert!(!a.intersects(&b));
        let c = LatticePath::from_steps(gp(1, 1), &[Step::South, Step::East, Step::South]);
        assert!(a.intersects(&c));
        assert!(c.contains(gp(2, 2)));
        assert!(!c.contains(gp(1, 2)));
    }

    proptest! {
        #[test]
        fn counts_agree_with_enumeration(r0 in 1i64..4, c0 in 1i64..4, dr in 0i64..5, dc in 0i64..5) {
            let (a, e) = (gp(r0, c0), gp(r0 + dr, c0 + dc));
            let paths = enumerate_paths(a, e, Limits::DEFAULT_MAX_PATHS).unwrap();
            prop_assert_eq!(BigInt::from(paths.len()), count_paths(a, e));
            let max_k = dr.min(dc) + 1;
            let by_turns: BigInt = (0..=max_k).map(|k| count_paths_with_turns(a, e, k)).sum();
            prop_assert_eq!(by_turns, count_paths(a, e));
            for k in 0..=max_k {
                let brute = paths.iter().filter(|p| p.turn_count() as i64 == k).count();
                prop_assert_eq!(BigInt::from(brute), count_paths_with_turns(a, e, k));
            }
        }

        #[test]
        fn path_recoverable_from_turns(steps in prop::collection::vec(any::<bool>(), 0..12)) {
            let steps: Vec<Step> = steps.into_iter().map(|s| if s { Step::East } else { Step::South }).collect();
            let path = LatticePath::from_steps(gp(2, 3), &steps);
            let rebuilt = LatticePath::from_turns(path.start(), path.end(), &path.turns()).unwrap();
            prop_assert_eq!(rebuilt, path);
        }
    }
}
