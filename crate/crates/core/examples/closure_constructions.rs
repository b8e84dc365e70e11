// Direct and tensor products, unitization and change of basis. Each
// construction preserves commutator-simplicity on the examples below.
//
// ```bash
// cargo run --example closure_constructions
// ```

use std::error::Error;

use csalg::algebra::{
    adjoin_unit, direct_product, group_algebra, matrix_algebra, tensor_product, zero_product_algebra, FiniteGroup,
};
use csalg::random::{random_invertible, rng_from_seed};
use csalg::structure::{commutator_subspace, is_commutator_simple, radical};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m2 = matrix_algebra(2)?;
    let qc2 = group_algebra(&FiniteGroup::cyclic(2)?)?;

    let sum = direct_product(&m2, &qc2)?;
    let tensor = tensor_product(&m2, &qc2)?;
    for (name, a) in [("M2 x Q[C2]", &sum), ("M2 ⊗ Q[C2]", &tensor)] {
        println!(
            "{name}: dim {}, dim [A,A] = {}, commutator-simple = {}",
            a.dim(),
            commutator_subspace(a).dim(),
            is_commutator_simple(a).holds()
        );
    }

    let mut rng = rng_from_seed(5);
    let p = random_invertible(&mut rng, tensor.dim());
    let moved = tensor.change_basis(&p)?;
    assert_eq!(
        is_commutator_simple(&moved).holds(),
        is_commutator_simple(&tensor).holds()
    );
    assert_eq!(commutator_subspace(&moved).dim(), commutator_subspace(&tensor).dim());
    println!("after a random change of basis the answers agree");

    let z = zero_product_algebra(2)?;
    let z1 = adjoin_unit(&z)?;
    println!(
        "unitization of the 2-dim zero-product algebra: dim {}, unital = {}, dim rad = {}",
        z1.dim(),
        z1.is_unital(),
        radical(&z1).dim()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
