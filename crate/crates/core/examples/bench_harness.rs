// Seeded batch comparison of bound, construction and exact optimum.

use ktree_domination::bench::{run_bench, write_csv, BenchConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = BenchConfig {
        k: 3,
        n: 18,
        trials: 8,
        seed: 1,
        exact_max: 20,
        ..BenchConfig::default()
    };
    let rows = run_bench(&config)?;
    write_csv(&rows, std::io::stdout().lock())?;

    let gap: usize = rows
        .iter()
        .filter_map(|r| r.exact_size.map(|e| r.constructed_size - e))
        .sum();
    println!("total gap between construction and optimum: {gap}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
