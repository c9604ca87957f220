// Norms along monomial covers and the splitting of f_* O(m).

use std::error::Error;

use pencil_index::construct::{monomial_norm, pushforward_splitting_type, MonomialCover, C_VARS};
use pencil_index::SparseMultiPoly;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = SparseMultiPoly::parse("T0 + T1", &C_VARS)?;
    for d in 1..=4 {
        println!("Nm_{d}(T0 + T1) = {}", monomial_norm(&p, d)?);
    }
    let q = SparseMultiPoly::parse("T0^2 - 3*T0*T1 + 1/2*T1^2", &C_VARS)?;
    let cover = MonomialCover::new(3);
    println!("Nm_3({q}) = {}", cover.norm(&q)?);

    println!(
        "f_* O(5) along the cubic cover: twists {:?}",
        pushforward_splitting_type(3, 5)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
