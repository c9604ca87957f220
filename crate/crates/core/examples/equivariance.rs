// mu_6-equivariance of j and j', and the diagnostic on the misprinted j.

use std::error::Error;

use pencil_index::construct::{check_weighted_equivariance, fixtures, involution_conjugate, WeightedTorusAction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let action = WeightedTorusAction::standard_mu6();
    let j = fixtures::j_corrected();
    let c = check_weighted_equivariance(&j, &action)?;
    println!("j = {:?}, offset {c}", j.to_strings());

    let jp = fixtures::jprime_corrected();
    let c = check_weighted_equivariance(&jp, &action.dual())?;
    println!(
        "j' = {:?}, offset {c} for weights {:?}",
        jp.to_strings(),
        action.dual().target_weights()
    );

    println!("j composed with S1 -> -S1: {:?}", involution_conjugate(&j).to_strings());

    match check_weighted_equivariance(&fixtures::j_printed(), &action) {
        Ok(_) => println!("printed j unexpectedly passed"),
        Err(e) => println!("printed j: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
