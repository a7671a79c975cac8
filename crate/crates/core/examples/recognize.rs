// Recognize graphs as k-trees by peeling simplicial degree-k vertices.

use ktree_domination::generators::gen_random_ktree;
use ktree_domination::recognize;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = gen_random_ktree(2, 10, 7)?;
    let g = tree.graph().clone();

    let order = recognize(&g, 2)?;
    println!(
        "peeling order {:?}, residual base {}",
        order.order(),
        order.residual_base
    );
    assert_eq!(order.rebuild(g.vertex_count())?, g);

    // same graph, wrong k
    if let Err(e) = recognize(&g, 3) {
        println!("as a 3-tree: {e}");
    }

    let mut extra = g.clone();
    let (u, v) = extra
        .vertices()
        .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v))
        .expect("a 2-tree on 10 vertices is not complete");
    extra.add_edge(u, v)?;
    let err = recognize(&extra, 2).unwrap_err();
    println!("with edge {u}-{v} added: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
