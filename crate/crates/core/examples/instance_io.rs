// Write and read the plain-text instance format.

use ktree_domination::generators::gen_tight;
use ktree_domination::instance::{parse, serialize};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = gen_tight(2, 3)?;
    let text = serialize(tree.graph(), tree.k());
    print!("{text}");

    let inst = parse(&text)?;
    assert_eq!(&inst.graph, tree.graph());
    assert_eq!(serialize(&inst.graph, inst.k), text);

    let truncated = text.trim_end_matches('\n');
    println!(
        "without the final newline: {}",
        parse(truncated).unwrap_err()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
