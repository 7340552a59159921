//! The partial order on facets and its linear extensions.

use std::cmp::{Ordering, Reverse};

use crate::error::Result;
use crate::latticepath::{LatticePath, Step};

use super::{enumerate_facets, Facet, JetShape, Vertex};

/// Positions on or below a path, stored as a column-height profile: entry
/// `a - 1` is the largest column `b` such that `(a, b)` lies in the spread.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spread {
    heights: Vec<i64>,
}

impl Spread {
    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn cardinality(&self) -> i64 {
        self.heights.iter().sum()
    }

    pub fn is_subset(&self, other: &Spread) -> bool {
        self.heights.iter().zip(&other.heights).all(|(a, b)| a <= b)
    }

    pub fn is_proper_subset(&self, other: &Spread) -> bool {
        self.is_subset(other) && self != other
    }
}

/// Spread of `path` inside a grid with `rows` rows: all `(a, b)` with
/// `i_s <= a <= rows` and `1 <= b <= j_s` for some path point `(i_s, j_s)`.
pub fn spread(path: &LatticePath, rows: i64) -> Spread {
    let mut heights = vec![0i64; rows.max(0) as usize];
    for p in path.points() {
        if p.row >= 1 && p.row <= rows {
            let h = &mut heights[(p.row - 1) as usize];
            *h = (*h).max(p.col);
        }
    }
    for a in 1..heights.len() {
        heights[a] = heights[a].max(heights[a - 1]);
    }
    Spread { heights }
}

/// `x_{a,b} ≺ x_{c,d}` iff `a > c`, or `a = c` and `b > d`.
fn leader_precedes(p: Vertex, q: Vertex) -> bool {
    p.row > q.row || (p.row == q.row && p.col > q.col)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacetOrdering {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Compares facets under the four-clause order: leader under `≺`, then
/// proper inclusion of the `fx` spreads (same leader), then of the
/// `fy_upper` spreads (same `fx`), then of the `fy_lower` spreads (same
/// `fx` and `fy_upper`).
pub fn compare_facets(p: &Facet, q: &Facet) -> FacetOrdering {
    if p == q {
        return FacetOrdering::Equal;
    }
    match (strictly_below(p, q), strictly_below(q, p)) {
        (true, false) => FacetOrdering::Less,
        (false, true) => FacetOrdering::Greater,
        _ => FacetOrdering::Incomparable,
    }
}

fn strictly_below(p: &Facet, q: &Facet) -> bool {
    let rows = p.shape().m();
    let (lp, lq) = (p.leader(), q.leader());
    if leader_precedes(lp, lq) {
        return true;
    }
    if lp == lq && spread(p.fx(), rows).is_proper_subset(&spread(q.fx(), rows)) {
        return true;
    }
    if p.fx() != q.fx() {
        return false;
    }
    if spread(p.fy_upper(), rows).is_proper_subset(&spread(q.fy_upper(), rows)) {
        return true;
    }
    p.fy_upper() == q.fy_upper() && spread(p.fy_lower(), rows).is_proper_subset(&spread(q.fy_lower(), rows))
}

/// How ties between incomparable facets are broken in a linear extension.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Step strings compared with East before South.
    #[default]
    Canonical,
    /// Step string comparisons reversed.
    Reversed,
}

type StepKey = Vec<Step>;

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum Oriented {
    Forward(StepKey),
    Backward(Reverse<StepKey>),
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct SortKey {
    leader_rank: (Reverse<i64>, Reverse<i64>),
    fx_size: i64,
    fx_steps: Oriented,
    upper_size: i64,
    upper_steps: Oriented,
    lower_size: i64,
    lower_steps: Oriented,
}

fn sort_key(f: &Facet, tie: TieBreak) -> SortKey {
    let rows = f.shape().m();
    let orient = |p: &LatticePath| {
        let steps: StepKey = p.steps().collect();
        match tie {
            TieBreak::Canonical => Oriented::Forward(steps),
            TieBreak::Reversed => Oriented::Backward(Reverse(steps)),
        }
    };
    let lead = f.leader();
    SortKey {
        leader_rank: (Reverse(lead.row), Reverse(lead.col)),
        fx_size: spread(f.fx(), rows).cardinality(),
        fx_steps: orient(f.fx()),
        upper_size: spread(f.fy_upper(), rows).cardinality(),
        upper_steps: orient(f.fy_upper()),
        lower_size: spread(f.fy_lower(), rows).cardinality(),
        lower_steps: orient(f.fy_lower()),
    }
}

/// Sorts facets into a linear extension of the facet order. Proper spread
/// inclusion strictly increases spread cardinality, so each clause of the
/// order is respected by the key.
pub fn sort_into_shelling(facets: Vec<Facet>, tie: TieBreak) -> Vec<Facet> {
    let mut keyed: Vec<(SortKey, Facet)> = facets.into_iter().map(|f| (sort_key(&f, tie), f)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then(Ordering::Equal));
    keyed.into_iter().map(|(_, f)| f).collect()
}

/// The canonical shelling order.
pub fn shelling_order(shape: &JetShape, max_facets: u64) -> Result<Vec<Facet>> {
    shelling_order_with(shape, TieBreak::Canonical, max_facets)
}

pub fn shelling_order_with(shape: &JetShape, tie: TieBreak, max_facets: u64) -> Result<Vec<Facet>> {
    Ok(sort_into_shelling(enumerate_facets(shape, max_facets)?, tie))
}
