// The brute-force checkers: shelling validity, f-vector, h from f.

use jeth::jetcomplex::{enumerate_facets, shelling_order};
use jeth::{hilbert, oracle, Facet, JetShape, Limits};

pub fn run() -> jeth::Result<()> {
    let shape = JetShape::new(3, 4)?;
    let facets = enumerate_facets(&shape, Limits::DEFAULT_MAX_FACETS)?;
    let f = oracle::f_vector(&facets, Limits::DEFAULT_MAX_FACES)?;
    let strs: Vec<String> = f.iter().map(ToString::to_string).collect();
    println!("f-vector of {shape}: ({})", strs.join(","));
    let h = oracle::h_from_f(&f, shape.dimension() as usize)?;
    println!("h from f: {h}, closed form: {}", hilbert::h_closed(&shape));

    let order = shelling_order(&shape, Limits::DEFAULT_MAX_FACETS)?;
    println!("canonical order is a shelling: {}", oracle::verify_shelling(&order));
    let reversed: Vec<Facet> = order.iter().rev().cloned().collect();
    println!("reversed order is a shelling: {}", oracle::verify_shelling(&reversed));
    Ok(())
}

#[allow(dead_code)]
fn main() -> jeth::Result<()> {
    run()
}
