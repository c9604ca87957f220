// Choosing (a, b) for a witness family and certifying the inequalities.

use std::error::Error;

use pencil_index::witness::{choose_ab_and_certify, span_and_basepoint};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (ap, bp, e) in [(1, 1, 2), (1, 1, 4), (2, 3, 100)] {
        let r = choose_ab_and_certify(ap, bp, e)?;
        println!(
            "a'={ap} b'={bp} e={e}: (a, b) = ({}, {}), n = {}, d = {}, no section: {:?}",
            r.a, r.b, r.n, r.d, r.no_section_ok
        );
    }
    let (bound, ok) = span_and_basepoint(2, 2)?;
    println!("(2, 2): linear system of dimension <= {bound}, basepoint forced: {ok}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
