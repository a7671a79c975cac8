// The families on which the bound is attained: k-paths with a pendant
// vertex on every block, and caterpillars for k = 1.

use ktree_domination::generators::{gen_caterpillar, gen_tight};
use ktree_domination::oracle::{
    disjoint_neighborhood_lower_bound, exact_gamma_i, DEFAULT_NODE_LIMIT,
};
use ktree_domination::{construct_independent_dominating_set, KTree, VertexSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(" k  t   n  bound  constructed  packing  exact");
    for k in 1..=4 {
        for t in 2..=5 {
            if k * t < k + 2 {
                continue;
            }
            let tree = gen_tight(k, t)?;
            let g = tree.graph();
            let cert = construct_independent_dominating_set(&tree)?;
            // the pendant vertices have pairwise disjoint closed neighborhoods
            let pendants: VertexSet = (k * t..k * t + t).collect();
            let packing = disjoint_neighborhood_lower_bound(g, &pendants)?;
            let exact = exact_gamma_i(g, DEFAULT_NODE_LIMIT).size;
            println!(
                "{k:>2} {t:>2} {:>3} {:>6} {:>12} {packing:>8} {exact:>6}",
                g.vertex_count(),
                cert.bound.to_string(),
                cert.chosen_set.len()
            );
            assert_eq!(exact, t);
        }
    }

    let cat = gen_caterpillar(6)?;
    let tree = KTree::from_graph(cat, 1)?;
    let cert = construct_independent_dominating_set(&tree)?;
    println!(
        "caterpillar m=6: bound {} chosen {}",
        cert.bound, cert.chosen_set
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
