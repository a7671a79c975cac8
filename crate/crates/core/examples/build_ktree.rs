// Grow a 2-tree by hand, the way the definition does it: start from a
// triangle and keep attaching new vertices to existing edges.

use ktree_domination::{KTree, VertexSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut tree = KTree::new(2)?;
    let a = tree.attach(&VertexSet::from([1, 2]))?;
    let b = tree.attach(&VertexSet::from([0, 1]))?;
    tree.attach(&VertexSet::from([a, 1]))?;
    tree.attach(&VertexSet::from([b, 0]))?;

    // three vertices are not a clique, and neither is {0, a}
    assert!(tree.attach(&VertexSet::from([0, 1, 2])).is_err());
    assert!(tree.attach(&VertexSet::from([0, a])).is_err());

    let g = tree.graph();
    println!("2-tree with n={} m={}", g.vertex_count(), g.edge_count());
    for step in tree.build_order() {
        println!("  vertex {} attached to {}", step.vertex, step.clique);
    }
    println!("degree-2 vertices: {}", g.k_vertex_set(2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
