//! Exact integer substrate: generalized binomials, dense polynomials in one
//! variable and fraction-free determinants.

mod binomial;
mod det;
mod poly;

pub use binomial::{binom, binom_uncached, clear_binom_cache, set_binom_cache_enabled};
pub use det::exact_det;
pub use poly::Poly;
