//! Exact Hilbert series of the principal component of first-order jets over
//! the 2×2 determinantal variety.
//!
//! For integers `2 < m <= n` the principal component `Z0` of the jet scheme
//! over the variety of rank-one `m × n` matrices has a Stanley–Reisner
//! degeneration whose facets are triples of lattice paths. This crate
//! computes the h-vector of `Z0` by four independent routes and checks that
//! they agree exactly:
//!
//! * [`hilbert::h_closed`]: the square of the classical numerator;
//! * [`hilbert::h_shelling`]: corner histogram of an explicit shelling;
//! * [`hilbert::h_paths`]: corner counts from closed-form path counting;
//! * [`hilbert::h_lemma_sums`]: two binomial diagonal sums.
//!
//! On top of that it derives the multiplicity, a-invariant, canonical module
//! series and Gorenstein status, and ships brute-force oracles
//! ([`oracle`]) that share no code with the formulas they check.
//!
//! ```
//! use jeth::{hilbert, JetShape};
//!
//! let shape = JetShape::new(3, 3).unwrap();
//! let h = hilbert::h_closed(&shape);
//! assert_eq!(h.to_strings(), ["1", "8", "18", "8", "1"]);
//! assert_eq!(hilbert::a_invariant(&shape).unwrap(), -6);
//! ```

pub mod cli;
mod error;
pub mod exactmath;
pub mod hilbert;
pub mod jetcomplex;
pub mod latticepath;
pub mod oracle;

pub use error::{Error, Guard, Limits, Result};
pub use exactmath::{binom, exact_det, Poly};
pub use jetcomplex::{Facet, JetShape, Vertex};
pub use latticepath::{GridPoint, LatticePath};

pub use num_bigint::BigInt;
