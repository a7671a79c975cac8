// Color a k-tree with k+2 colors so that every vertex of degree > k sees
// all of them, then check the result.

use ktree_domination::generators::gen_random_ktree;
use ktree_domination::{rainbow_coloring, verify_rainbow};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = gen_random_ktree(3, 14, 2024)?;
    let coloring = rainbow_coloring(&tree)?;
    println!("colors: {:?}", coloring.colors());

    let report = verify_rainbow(tree.graph(), 3, &coloring);
    assert!(report.is_valid());
    for (v, missing) in &report.k_vertex_missing {
        println!("degree-3 vertex {v} misses color {missing:?}");
    }

    // break it: give a neighbor of vertex 0 vertex 0's color
    let mut broken = coloring.clone();
    let u = tree.graph().neighbors(0).next().unwrap();
    broken.set_color(u, coloring.color(0));
    let report = verify_rainbow(tree.graph(), 3, &broken);
    println!(
        "after recoloring {u}: {} improper edges",
        report.properness.len()
    );
    assert!(!report.is_valid());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
