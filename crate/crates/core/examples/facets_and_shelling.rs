// Facets of the 3 x 3 complex, the canonical shelling, and the corners of
// each facet.

use jeth::jetcomplex::{corner_sets, corner_table, corners_fast, shelling_order};
use jeth::{JetShape, Limits};

pub fn run() -> jeth::Result<()> {
    let shape = JetShape::new(3, 3)?;
    let order = shelling_order(&shape, Limits::DEFAULT_MAX_FACETS)?;
    let corners = corner_sets(&order);
    println!("{} facets of dimension {}", order.len(), shape.dimension() - 1);
    for (t, (f, c)) in order.iter().zip(&corners).enumerate().take(8) {
        let names: Vec<String> = c.iter().map(ToString::to_string).collect();
        println!("{t:>2} leader {}  corners {{{}}}", f.leader(), names.join(", "));
        assert_eq!(corners_fast(f), *c);
    }
    println!("...");

    let table = corner_table(&shape, &Limits::default())?;
    for (i, j) in table.leaders() {
        let row: Vec<String> = table.row(i, j).iter().map(ToString::to_string).collect();
        println!("C_{{{i},{j}}}^k = {}", row.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> jeth::Result<()> {
    run()
}
