// Multiplicity, a-invariant, Gorenstein status and canonical module over a
// grid of sizes, then one full verification report as JSON.

use jeth::cli::{verify, Level};
use jeth::{hilbert, JetShape, Limits};

pub fn run() -> jeth::Result<()> {
    println!(
        "{:>2} {:>2} {:>14} {:>4} {:>10} {:>6}",
        "m", "n", "multiplicity", "a", "Gorenstein", "deg w"
    );
    for m in 3..=6 {
        for n in m..=7 {
            let shape = JetShape::new(m, n)?;
            let lowest = hilbert::canonical_module_series(&shape)
                .numerator()
                .lowest_degree()
                .unwrap_or(0);
            println!(
                "{m:>2} {n:>2} {:>14} {:>4} {:>10} {lowest:>6}",
                hilbert::jet_multiplicity(&shape).to_string(),
                hilbert::a_invariant(&shape)?,
                hilbert::is_gorenstein(&shape)?,
            );
        }
    }
    let report = verify(&JetShape::new(3, 4)?, Level::Fast, &Limits::default(), 1)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> jeth::Result<()> {
    run()
}
