// Matrices of rank < r: h-vectors, multiplicities, and jet scheme
// component counts.

use jeth::hilbert::{classical_h, classical_multiplicity, classical_series, component_count};

pub fn run() -> jeth::Result<()> {
    let (m, n) = (4, 5);
    for r in 1..=m {
        let h = classical_h(r, m, n)?;
        let e = classical_multiplicity(r, m, n)?;
        let d = classical_series(r, m, n)?.pole_order();
        println!("r = {r}: dim {d:>2}, e = {e:>3}, h = {h}");
    }
    for r in 1..=3 {
        let counts: Vec<String> = (1..=6)
            .map(|k| component_count(r, k).map(|c| c.to_string()))
            .collect::<Result<_, _>>()?;
        println!("components for r = {r}, k = 1..6: {}", counts.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> jeth::Result<()> {
    run()
}
