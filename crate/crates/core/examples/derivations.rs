// Derivation-type map spaces and the check that the maps with
// `D(x)x, D(x)x² ∈ [A,A]` are exactly the derivations.
//
// ```bash
// cargo run --example derivations
// ```

use std::error::Error;

use csalg::algebra::{direct_product, group_algebra, matrix_algebra, tensor_product, upper_triangular, FiniteGroup};
use csalg::maps::{
    derivation_space, inner_derivation_space, jordan_derivation_space, theorem31_hypothesis_space, verify_theorem31,
    Verdict,
};
use csalg::FinAlgebra;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let qc2 = group_algebra(&FiniteGroup::cyclic(2)?)?;
    let corpus: Vec<(&str, FinAlgebra)> = vec![
        ("M2", matrix_algebra(2)?),
        ("Q[S3]", group_algebra(&FiniteGroup::symmetric(3)?)?),
        ("M2 x Q[C2]", direct_product(&matrix_algebra(2)?, &qc2)?),
        ("M2 ⊗ Q[C2]", tensor_product(&matrix_algebra(2)?, &qc2)?),
        ("T2", upper_triangular(2)?),
    ];
    println!(
        "{:<12} {:>4} {:>5} {:>6} {:>4}  verdict",
        "algebra", "Der", "Inn", "JDer", "H"
    );
    for (name, a) in &corpus {
        let report = verify_theorem31(a);
        println!(
            "{name:<12} {:>4} {:>5} {:>6} {:>4}  {}",
            derivation_space(a).dim(),
            inner_derivation_space(a).dim(),
            jordan_derivation_space(a).dim(),
            theorem31_hypothesis_space(a).dim(),
            report.verdict.label()
        );
        assert!(!matches!(report.verdict, Verdict::Refutation(_)));
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
