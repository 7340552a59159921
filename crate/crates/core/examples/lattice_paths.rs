// Lattice paths, their turns, and nonintersecting path counts by
// determinant.

use std::collections::BTreeSet;

use jeth::latticepath::{
    count_nonintersecting, count_nonintersecting_with_turns, count_paths, count_paths_with_turns, enumerate_paths,
};
use jeth::{oracle, GridPoint, LatticePath, Limits};

pub fn run() -> jeth::Result<()> {
    let (a, e) = (GridPoint::new(1, 1), GridPoint::new(3, 4));
    let turns: BTreeSet<GridPoint> = [GridPoint::new(1, 2), GridPoint::new(2, 4)].into();
    let path = LatticePath::from_turns(a, e, &turns)?;
    let named: Vec<String> = path.turns().iter().map(ToString::to_string).collect();
    println!("path {path} has turns {}", named.join(" "));

    let all = enumerate_paths(a, e, Limits::DEFAULT_MAX_PATHS)?;
    println!("{} paths from {a} to {e} (formula {})", all.len(), count_paths(a, e));
    for k in 0..=2 {
        let listed = all.iter().filter(|p| p.turn_count() == k).count();
        println!(
            "  {k} turns: {listed} (formula {})",
            count_paths_with_turns(a, e, k as i64)
        );
    }

    let starts = [GridPoint::new(1, 2), GridPoint::new(1, 1)];
    let ends = [GridPoint::new(2, 3), GridPoint::new(3, 2)];
    let det = count_nonintersecting(&starts, &ends)?;
    let brute = oracle::brute_nonintersecting(&starts, &ends, None, Limits::DEFAULT_MAX_PATHS)?;
    println!("nonintersecting pairs: determinant {det}, enumeration {brute}");
    for k in 0..=3 {
        let det = count_nonintersecting_with_turns(&starts, &ends, k)?;
        println!("  with {k} turns: {det}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> jeth::Result<()> {
    run()
}
