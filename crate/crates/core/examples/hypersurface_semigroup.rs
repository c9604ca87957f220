// Hypersurface pencils: orbit sizes C(d, i) and the semigroup S_{d,n}.

use std::error::Error;

use pencil_index::semigroup::{sdn_generators, semigroup_min_and_gcd};
use pencil_index::strata::{hypersurface_pencil_model, index_and_degree_report};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (d, n) in [(5, 2), (4, 2), (7, 3)] {
        let model = hypersurface_pencil_model(d, n)?;
        let report = index_and_degree_report(&model)?;
        let s = sdn_generators(d as u64, n as u64)?;
        let (min, gcd) = semigroup_min_and_gcd(&s);
        println!(
            "d={d} n={n}: divisors {:?}, min {min}, gcd {gcd}, index divisible by {}",
            report.divisors, report.index.lower_divisor
        );
        assert_eq!(report.exact_min(), Some(d as u64));
    }

    let s = sdn_generators(5, 2)?;
    let members: Vec<u64> = s.members_up_to(30);
    println!("S_(5,2) up to 30: {members:?}");
    assert!(!s.contains(7));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
