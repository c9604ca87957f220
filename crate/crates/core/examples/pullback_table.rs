// Within-block quadrics pulled back along j', and surjectivity onto H^0(O(5)).

use std::error::Error;

use pencil_index::construct::{fixtures, paired_quadric_descend, quadratic_pullback_table};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table = quadratic_pullback_table(&fixtures::jprime_corrected())?;
    for (monomial, image) in table.rendered() {
        println!("{monomial:>8} -> {image}");
    }
    println!("rank {} of {}", table.rank, table.matrix.cols());
    assert!(table.is_surjective());

    let family = paired_quadric_descend(&fixtures::j_corrected())?;
    println!(
        "quadric family from j: {} within-block coefficients, e.g.",
        family.len()
    );
    for (a, b, p) in family.entries().take(3) {
        println!("  {}*{}: {p}", family.labels()[a], family.labels()[b]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
