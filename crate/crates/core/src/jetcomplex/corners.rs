//! Corner sets of a shelling: `c(F_t) = {v : F_t \ F_s = {v} for some s < t}`.
//! Their sizes are the h-vector of the complex.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Limits, Result};

use super::{shelling_order, Facet, JetShape, Vertex, VertexSet};

/// Corners of `order[t]`, by comparing with every earlier facet.
pub fn corners_bruteforce(t: usize, order: &[Facet]) -> BTreeSet<Vertex> {
    let shape = order[t].shape();
    let current = order[t].vertex_set(&shape);
    let mut out = BTreeSet::new();
    for earlier in &order[..t] {
        let diff = current.difference_upto(&earlier.vertex_set(&shape), 2);
        if let [v] = diff[..] {
            out.insert(shape.vertex_at(v));
        }
    }
    out
}

/// Corners of every facet in `order`, in one pass.
///
/// `F_t \ F_s = {v}` for equal-size facets means `F_t - v` is a ridge of
/// `F_s`, so it suffices to remember which ridges have already appeared.
pub fn corner_sets(order: &[Facet]) -> Vec<BTreeSet<Vertex>> {
    let Some(first) = order.first() else {
        return Vec::new();
    };
    let shape = first.shape();
    let mut seen: HashMap<VertexSet, ()> = HashMap::new();
    let mut out = Vec::with_capacity(order.len());
    for facet in order {
        let set = facet.vertex_set(&shape);
        let members: Vec<usize> = set.iter().collect();
        let ridges: Vec<VertexSet> = members.iter().map(|&v| set.without(v)).collect();
        let corners = members
            .iter()
            .zip(&ridges)
            .filter(|(_, r)| seen.contains_key(*r))
            .map(|(&v, _)| shape.vertex_at(v))
            .collect();
        for r in ridges {
            seen.entry(r).or_insert(());
        }
        out.push(corners);
    }
    out
}

/// Corners in the canonical shelling read off the facet alone: the leader
/// (unless it is `x_{m,n-1}`) together with the turns of the three paths,
/// except `y_{1,2}` and, for leaders `x_{m,j}`, the turn `y_{m-1,j+1}` of
/// `fy_upper`.
pub fn corners_fast(facet: &Facet) -> BTreeSet<Vertex> {
    let shape = facet.shape();
    let (m, n) = (shape.m(), shape.n());
    let lead = facet.leader();
    let mut out = BTreeSet::new();
    if (lead.row, lead.col) != (m, n - 1) {
        out.insert(lead);
    }
    out.extend(facet.fx().turns().into_iter().map(|p| Vertex::x(p.row, p.col)));
    out.extend(facet.fy_lower().turns().into_iter().map(|p| Vertex::y(p.row, p.col)));
    for p in facet.fy_upper().turns() {
        let skip =
            (p.row, p.col) == (1, 2) || (lead.row == m && lead.col < n && (p.row, p.col) == (m - 1, lead.col + 1));
        if !skip {
            out.insert(Vertex::y(p.row, p.col));
        }
    }
    out
}

/// `C_{i,j}^k`: facets with leader `x_{i,j}` having `k` corners besides the
/// leader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerTable {
    shape: JetShape,
    entries: BTreeMap<(i64, i64), Vec<BigInt>>,
}

impl CornerTable {
    pub fn shape(&self) -> JetShape {
        self.shape
    }

    pub fn get(&self, i: i64, j: i64, k: i64) -> BigInt {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.entries.get(&(i, j))?.get(k).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    /// Row of the table for leader `x_{i,j}`, indexed by `k`.
    pub fn row(&self, i: i64, j: i64) -> &[BigInt] {
        self.entries.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn leaders(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.keys().copied()
    }

    /// Number of facets with leader `x_{i,j}`.
    pub fn leader_total(&self, i: i64, j: i64) -> BigInt {
        self.row(i, j).iter().sum()
    }
}

/// The corner table of the canonical shelling, with corners taken from the
/// definition.
pub fn corner_table(shape: &JetShape, limits: &Limits) -> Result<CornerTable> {
    let order = shelling_order(shape, limits.max_facets)?;
    let corners = corner_sets(&order);
    Ok(corner_table_from(shape, &order, &corners))
}

pub fn corner_table_from(shape: &JetShape, order: &[Facet], corners: &[BTreeSet<Vertex>]) -> CornerTable {
    let mut entries: BTreeMap<(i64, i64), Vec<BigInt>> = BTreeMap::new();
    for (facet, c) in order.iter().zip(corners) {
        let lead = facet.leader();
        let k = c.iter().filter(|&&v| v != lead).count();
        let row = entries.entry((lead.row, lead.col)).or_default();
        if row.len() <= k {
            row.resize(k + 1, BigInt::zero());
        }
        row[k] += 1;
    }
    CornerTable { shape: *shape, entries }
}
