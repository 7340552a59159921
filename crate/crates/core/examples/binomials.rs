// Binomial coefficients with arbitrary integer upper argument, and exact
// polynomial arithmetic.

use jeth::{binom, Poly};

pub fn run() -> jeth::Result<()> {
    println!("binom(5, 2)   = {}", binom(5, 2));
    println!("binom(-3, 2)  = {}", binom(-3, 2));
    println!("binom(4, -1)  = {}", binom(4, -1));
    println!("binom(60, 30) = {}", binom(60, 30));

    // Symmetry fails for negative s outside s < a < 0.
    for (s, a) in [(6, 2), (-4, 1), (-4, -2)] {
        println!(
            "binom({s},{a}) = {}, binom({s},{}) = {}",
            binom(s, a),
            s - a,
            binom(s, s - a)
        );
    }

    let p = Poly::from_i64s(&[1, 4, 1]);
    let sq = &p * &p;
    println!("({p})^2 = {sq}");
    println!("reversed to degree 5: {}", p.reverse(5)?);
    println!("palindromic: {}", sq.is_palindromic());
    Ok(())
}

#[allow(dead_code)]
fn main() -> jeth::Result<()> {
    run()
}
