// The h-vector by all four routes, and the Hilbert series as the square
// of the rank-one series.

use jeth::hilbert;
use jeth::{JetShape, Limits};

pub fn run() -> jeth::Result<()> {
    for (m, n) in [(3, 3), (3, 4), (4, 5)] {
        let shape = JetShape::new(m, n)?;
        let closed = hilbert::h_closed(&shape);
        let shelling = hilbert::h_shelling(&shape, &Limits::default())?;
        let paths = hilbert::h_paths(&shape)?;
        let lemmas = hilbert::h_lemma_sums(&shape)?;
        let agree = [&shelling, &paths, &lemmas].iter().all(|h| **h == closed);
        println!("{shape}: h = {closed}  (all routes agree: {agree})");

        let series = hilbert::jet_hilbert_series(&shape);
        let rank_one = hilbert::classical_series(2, m, n)?;
        println!("  H(z) = {series}");
        println!(
            "  equals square of {rank_one}: {}",
            series.eq_as_rational(&rank_one.square())
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> jeth::Result<()> {
    run()
}
