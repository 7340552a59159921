use crate::error::{check_guard, Guard, Result};
use crate::latticepath::{for_each_path, GridPoint, LatticePath, Step};

use super::{Facet, JetShape};

/// Every facet exactly once: leaders in row-major order, then `fx`, then
/// the disjoint `(fy_upper, fy_lower)` pairs.
///
/// The facet count `binom(m+n-2, m-1)^2` is checked against `max_facets`
/// before any work is done.
pub fn enumerate_facets(shape: &JetShape, max_facets: u64) -> Result<Vec<Facet>> {
    check_guard(Guard::Facets, &shape.facet_count(), max_facets)?;
    let (m, n) = (shape.m(), shape.n());
    let mut facets = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            if (i, j) == (m, n) {
                continue;
            }
            let y_pairs = disjoint_y_pairs(GridPoint::new(i, n), GridPoint::new(m, j))?;
            // Per-pair path counts are bounded by the facet count checked above.
            for_each_path(GridPoint::new(i, j), GridPoint::new(m, n), u64::MAX, |fx| {
                for (up, low) in &y_pairs {
                    facets.push(Facet::from_parts(fx.clone(), up.clone(), low.clone()));
                }
            })?;
        }
    }
    Ok(facets)
}

// fy_upper: (1,1) -> upper_end, fy_lower: (2,1) -> lower_end, no common point.
// The lower path is grown step by step and abandoned as soon as it touches
// the upper one.
fn disjoint_y_pairs(upper_end: GridPoint, lower_end: GridPoint) -> Result<Vec<(LatticePath, LatticePath)>> {
    let lower_start = GridPoint::new(2, 1);
    let mut pairs = Vec::new();
    for_each_path(GridPoint::new(1, 1), upper_end, u64::MAX, |upper| {
        let mut steps = Vec::new();
        grow_lower(upper, lower_start, lower_end, lower_start, &mut steps, &mut |low| {
            pairs.push((upper.clone(), low));
        });
    })?;
    Ok(pairs)
}

fn grow_lower(
    upper: &LatticePath,
    start: GridPoint,
    end: GridPoint,
    cur: GridPoint,
    steps: &mut Vec<Step>,
    emit: &mut dyn FnMut(LatticePath),
) {
    if upper.contains(cur) {
        return;
    }
    if cur == end {
        emit(LatticePath::from_steps(start, steps));
        return;
    }
    for step in [Step::East, Step::South] {
        let next = cur.step(step);
        if next.reaches(end) {
            steps.push(step);
            grow_lower(upper, start, end, next, steps, emit);
            steps.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use num_bigint::BigInt;
    use std::collections::HashSet;

    #[test]
    fn facet_counts() {
        for (m, n, expected) in [(3, 3, 36usize), (3, 4, 100), (4, 4, 400), (3, 5, 225)] {
            let shape = JetShape::new(m, n).unwrap();
            let facets = enumerate_facets(&shape, 1_000_000).unwrap();
            assert_eq!(facets.len(), expected);
            assert_eq!(BigInt::from(expected), shape.facet_count());
            let distinct: HashSet<&Facet> = facets.iter().collect();
            assert_eq!(distinct.len(), expected);
        }
    }

    #[test]
    fn every_facet_is_valid_and_pure() {
        let shape = JetShape::new(3, 4).unwrap();
        for f in enumerate_facets(&shape, 1_000_000).unwrap() {
            assert_eq!(f.vertex_count() as u64, shape.dimension());
            assert_eq!(f.vertices().len() as u64, shape.dimension());
            assert!(f.leader() != crate::Vertex::x(3, 4));
            let rebuilt = Facet::new(&shape, f.fx().clone(), f.fy_upper().clone(), f.fy_lower().clone());
            assert_eq!(rebuilt.as_ref(), Ok(&f));
        }
    }

    #[test]
    fn guard_refuses_before_work() {
        let shape = JetShape::new(3, 3).unwrap();
        let err = enumerate_facets(&shape, 35).unwrap_err();
        assert!(matches!(
            err,
            Error::GuardExceeded {
                guard: Guard::Facets,
                limit: 35,
                ..
            }
        ));
    }
}
