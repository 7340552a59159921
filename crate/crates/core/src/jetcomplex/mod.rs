//! The simplicial complex whose Stanley–Reisner ring degenerates the
//! coordinate ring of the principal component.
//!
//! Vertices are the variables `x_{i,j}` and `y_{i,j}` of an `m × n` grid.
//! A facet is a triple of lattice path monomials: `fx` from `x_{i,j}` to
//! `x_{m,n}`, and a disjoint pair `fy_upper` from `y_{1,1}` to `y_{i,n}`,
//! `fy_lower` from `y_{2,1}` to `y_{m,j}`, for some `(i,j) ≠ (m,n)`.

mod corners;
mod enumerate;
mod order;
mod vertex_set;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::binom;
use crate::latticepath::{GridPoint, LatticePath};

pub use corners::{corner_sets, corner_table, corner_table_from, corners_bruteforce, corners_fast, CornerTable};
pub use enumerate::enumerate_facets;
pub use order::{
    compare_facets, shelling_order, shelling_order_with, sort_into_shelling, spread, FacetOrdering, Spread, TieBreak,
};
pub(crate) use vertex_set::VertexSet;

/// Grid dimensions `m × n` with `2 < m <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JetShape {
    m: i64,
    n: i64,
}

impl JetShape {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m <= 2 || n < m {
            return Err(Error::InvalidParameters(format!(
                "m = {m}, n = {n}: the principal component is treated for 2 < m <= n"
            )));
        }
        Ok(JetShape { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Krull dimension `2(m + n - 1)`, also the vertex count of every facet.
    pub fn dimension(&self) -> u64 {
        (2 * (self.m + self.n - 1)) as u64
    }

    /// `binom(m + n - 2, m - 1)^2`.
    pub fn facet_count(&self) -> BigInt {
        let b = binom(self.m + self.n - 2, self.m - 1);
        &b * &b
    }

    pub fn vertex_count(&self) -> usize {
        (2 * self.m * self.n) as usize
    }

    pub(crate) fn vertex_index(&self, v: Vertex) -> usize {
        let within = ((v.row - 1) * self.n + (v.col - 1)) as usize;
        match v.family {
            Family::X => within,
            Family::Y => (self.m * self.n) as usize + within,
        }
    }

    pub(crate) fn vertex_at(&self, index: usize) -> Vertex {
        let mn = (self.m * self.n) as usize;
        let (family, within) = if index < mn {
            (Family::X, index)
        } else {
            (Family::Y, index - mn)
        };
        let within = within as i64;
        Vertex::new(family, within / self.n + 1, within % self.n + 1)
    }
}

impl fmt::Display for JetShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub family: Family,
    pub row: i64,
    pub col: i64,
}

impl Vertex {
    pub const fn new(family: Family, row: i64, col: i64) -> Self {
        Vertex { family, row, col }
    }

    pub const fn x(row: i64, col: i64) -> Self {
        Vertex::new(Family::X, row, col)
    }

    pub const fn y(row: i64, col: i64) -> Self {
        Vertex::new(Family::Y, row, col)
    }

    pub fn point(&self) -> GridPoint {
        GridPoint::new(self.row, self.col)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::X => 'x',
            Family::Y => 'y',
        };
        write!(f, "{name}_{{{},{}}}", self.row, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    fx: LatticePath,
    fy_upper: LatticePath,
    fy_lower: LatticePath,
}

impl Facet {
    /// Checks the endpoint shape and the disjointness of the two Y paths.
    pub fn new(shape: &JetShape, fx: LatticePath, fy_upper: LatticePath, fy_lower: LatticePath) -> Result<Self> {
        let (m, n) = (shape.m, shape.n);
        let lead = fx.start();
        let bad = |why: &str| {
            Err(Error::InvalidParameters(format!(
                "not a facet of the {shape} complex: {why}"
            )))
        };
        if !(1..=m).contains(&lead.row) || !(1..=n).contains(&lead.col) || lead == GridPoint::new(m, n) {
            return bad("leader out of range");
        }
        if fx.end() != GridPoint::new(m, n) {
            return bad("fx must end at (m,n)");
        }
        if fy_upper.start() != GridPoint::new(1, 1) || fy_upper.end() != GridPoint::new(lead.row, n) {
            return bad("fy_upper must run from (1,1) to (i,n)");
        }
        if fy_lower.start() != GridPoint::new(2, 1) || fy_lower.end() != GridPoint::new(m, lead.col) {
            return bad("fy_lower must run from (2,1) to (m,j)");
        }
        if fy_upper.intersects(&fy_lower) {
            return bad("fy_upper and fy_lower intersect");
        }
        Ok(Facet::from_parts(fx, fy_upper, fy_lower))
    }

    pub(crate) fn from_parts(fx: LatticePath, fy_upper: LatticePath, fy_lower: LatticePath) -> Self {
        Facet { fx, fy_upper, fy_lower }
    }

    pub fn fx(&self) -> &LatticePath {
        &self.fx
    }

    pub fn fy_upper(&self) -> &LatticePath {
        &self.fy_upper
    }

    pub fn fy_lower(&self) -> &LatticePath {
        &self.fy_lower
    }

    /// The grid this facet lives in, read off the end of `fx`.
    pub fn shape(&self) -> JetShape {
        let end = self.fx.end();
        JetShape { m: end.row, n: end.col }
    }

    /// Initial vertex of `fx`; lexicographically least X vertex.
    pub fn leader(&self) -> Vertex {
        let p = self.fx.start();
        Vertex::x(p.row, p.col)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let xs = self.fx.points().iter().map(|p| Vertex::x(p.row, p.col));
        let ys = self
            .fy_upper
            .points()
            .iter()
            .chain(self.fy_lower.points())
            .map(|p| Vertex::y(p.row, p.col));
        let mut all: Vec<Vertex> = xs.chain(ys).collect();
        all.sort_unstable();
        all
    }

    pub fn vertex_count(&self) -> usize {
        self.fx.len() + self.fy_upper.len() + self.fy_lower.len()
    }

    /// Turns of `fx`, `fy_upper` and `fy_lower`, as vertices.
    pub fn es_turns(&self) -> BTreeSet<Vertex> {
        let xs = self.fx.turns().into_iter().map(|p| Vertex::x(p.row, p.col));
        let ys = self
            .fy_upper
            .turns()
            .into_iter()
            .chain(self.fy_lower.turns())
            .map(|p| Vertex::y(p.row, p.col));
        xs.chain(ys).collect()
    }

    pub(crate) fn vertex_set(&self, shape: &JetShape) -> VertexSet {
        let mut set = VertexSet::empty(shape.vertex_count());
        for p in self.fx.points() {
            set.insert(shape.vertex_index(Vertex::x(p.row, p.col)));
        }
        for p in self.fy_upper.points().iter().chain(self.fy_lower.points()) {
            set.insert(shape.vertex_index(Vertex::y(p.row, p.col)));
        }
        set
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[x {} | yU {} | yL {}]", self.fx, self.fy_upper, self.fy_lower)
    }
}
