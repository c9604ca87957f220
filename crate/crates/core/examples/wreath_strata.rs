// The wreath product W(3,2) acting on the strata of the cube.

use std::error::Error;

use pencil_index::perm::{
    cube_strata_action, orbit_decomposition, standard_group, StandardGroup, DEFAULT_ENUMERATION_CAP,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = standard_group(StandardGroup::Wreath32);
    let order = w.order(DEFAULT_ENUMERATION_CAP)?;
    println!("|W(3,2)| = {order}");
    assert_eq!(order, 48);

    for (wildcards, what) in [(0, "vertices"), (1, "edges"), (2, "faces")] {
        let action = cube_strata_action(wildcards)?;
        let orbits = orbit_decomposition(&action);
        println!(
            "{what}: {} points, transitive = {}, e.g. {}",
            action.len(),
            orbits.is_transitive(),
            action.points()[0]
        );
        assert!(orbits.is_transitive());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
