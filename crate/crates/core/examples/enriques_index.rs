// Minimal multi-section degree and index of the Enriques pencil.

use std::error::Error;

use pencil_index::strata::{enriques_k3_model, enriques_pencil_model, index_and_degree_report};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k3 = enriques_k3_model()?;
    println!("K3 divisors: {:?}", k3.divisors());

    let model = enriques_pencil_model()?;
    let report = index_and_degree_report(&model)?;
    println!("divisors after the involution: {:?}", report.divisors);
    for r in &report.realized {
        println!("realized degree {}: {}", r.degree, r.provenance);
    }
    println!("minimal degree: {:?}", report.exact_min());
    println!("index: {:?}", report.exact_index());
    assert_eq!(report.exact_min(), Some(3));
    assert_eq!(report.exact_index(), Some(1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
