// Recovers j' pointwise as intersections of hyperplanes dual to j, over Q(zeta_6).

use std::error::Error;

use pencil_index::construct::{
    default_samples, derive_jprime_and_compare, dual_point_on_fiber, fiber_of_composite, fixtures,
    normalized_map_degree,
};
use pencil_index::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let j = fixtures::j_corrected();
    let fiber = fiber_of_composite(&Rational::from(2));
    // Point 0 together with the four points outside its g-fibre {0, 3}.
    let chosen: Vec<_> = [0, 1, 2, 4, 5].iter().map(|&k| fiber[k].clone()).collect();
    let dual = dual_point_on_fiber(&j, &chosen)?;
    println!(
        "dual point at t = 2, k = 0: {}",
        dual.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    );

    let cmp = derive_jprime_and_compare(&j, &fixtures::jprime_corrected(), &default_samples())?;
    println!(
        "corrected j': {}/{} point checks match",
        cmp.matched(),
        cmp.checks.len()
    );
    assert!(cmp.all_match());

    let printed = derive_jprime_and_compare(&j, &fixtures::jprime_printed_dedup(), &default_samples())?;
    println!(
        "printed j' (repeat removed): {}/{} match, all match at the g-partner: {}",
        printed.matched(),
        printed.checks.len(),
        printed.all_match_at_partner()
    );
    println!("deg j' = {}", normalized_map_degree(&fixtures::jprime_corrected())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
