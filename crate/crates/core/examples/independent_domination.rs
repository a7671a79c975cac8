// Build the k+2 candidate independent dominating sets from the coloring,
// pick the smallest and check it against the bound (n + |V_k|) / (k+2).

use ktree_domination::generators::gen_random_ktree;
use ktree_domination::{construct_independent_dominating_set, verify_certificate};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = gen_random_ktree(2, 30, 5)?;
    let cert = construct_independent_dominating_set(&tree)?;

    println!(
        "n={} |V_2|={} bound={} (floor {})",
        cert.n,
        cert.vk,
        cert.bound,
        cert.bound.floor()
    );
    println!("class |Z| |S| |D|");
    for class in &cert.classes {
        println!(
            "{:>5} {:>3} {:>3} {:>3}",
            class.color,
            class.z.len(),
            class.s.len(),
            class.size()
        );
    }
    println!("sum |D_i| = {} = n + |V_k|", cert.identity_total());
    println!("chosen class {}: {}", cert.chosen, cert.chosen_set);

    let report = verify_certificate(tree.graph(), &cert);
    assert!(report.is_valid(), "{:?}", report.violations);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
