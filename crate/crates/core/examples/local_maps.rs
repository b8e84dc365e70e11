// Seeded sampling tests for local derivations and local inner
// automorphisms. A failure is a genuine counterexample; a pass covers only
// the probed elements.
//
// ```bash
// cargo run --example local_maps
// ```

use std::error::Error;

use csalg::algebra::matrix_algebra;
use csalg::linalg::rat;
use csalg::maps::{
    derivation_space, local_derivation_test, local_inner_automorphism_test, LinearMap, LocalDerivationOutcome,
    SimilarityOutcome,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m2 = matrix_algebra(2)?;
    for (k, d) in derivation_space(&m2).basis_maps().iter().enumerate() {
        println!("basis derivation {k}: {:?}", local_derivation_test(&m2, d, 7, 20)?);
    }
    if let LocalDerivationOutcome::Counterexample { x } = local_derivation_test(&m2, &LinearMap::identity(4), 7, 20)? {
        println!("identity is not a local derivation: fails at x = {x}");
    }

    for (name, t) in [
        ("transpose", LinearMap::transpose(2)),
        ("2·id", LinearMap::scalar(4, &rat(2))),
    ] {
        println!("{name}:");
        for (x, outcome) in local_inner_automorphism_test(&m2, &t, 7, 2, 16)? {
            match outcome {
                SimilarityOutcome::Witness { u } => println!("  x = {x}: u = {u}"),
                other => println!("  x = {x}: {other:?}"),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
