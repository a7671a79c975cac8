// Exact domination and independent domination numbers by branch and bound,
// including what happens when the node budget runs out.

use ktree_domination::generators::{gen_caterpillar, gen_random_ktree};
use ktree_domination::{exact_gamma, exact_gamma_i};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = gen_random_ktree(2, 24, 11)?;
    let g = tree.graph();
    let gi = exact_gamma_i(g, 1_000_000);
    let gd = exact_gamma(g, 1_000_000);
    println!(
        "gamma = {} ({} nodes), gamma_i = {} ({} nodes), witness {}",
        gd.size, gd.nodes_explored, gi.size, gi.nodes_explored, gi.witness
    );
    assert!(gd.size <= gi.size);

    let big = gen_caterpillar(60)?;
    let r = exact_gamma_i(&big, 10);
    println!(
        "caterpillar m=60 with 10 nodes: best {} so far, limit hit: {}",
        r.size, r.limit_hit
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
