// Transpose is a Jordan automorphism of `M_n` that is not an automorphism;
// doubling fails the hypotheses.
//
// ```bash
// cargo run --example jordan_maps
// ```

use std::error::Error;

use csalg::algebra::matrix_algebra;
use csalg::linalg::rat;
use csalg::maps::{
    cubic_condition_check, jordan_homomorphism_check, multiplicativity_check, verify_theorem41, LinearMap,
    Multiplicativity, Verdict,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 2..=3 {
        let m = matrix_algebra(n)?;
        let t = LinearMap::transpose(n);
        let report = verify_theorem41(&m, &t)?;
        assert_eq!(report.verdict, Verdict::Verified);
        println!("M{n}, transpose: {}", report.verdict.label());
        println!("  cubic condition: {}", cubic_condition_check(&m, &t)?.holds());
        println!("  Jordan homomorphism: {}", jordan_homomorphism_check(&m, &t)?.holds());
        let homo = multiplicativity_check(&m, &t, Multiplicativity::Homomorphism)?;
        if let Some(w) = homo.witness() {
            println!("  homomorphism fails at x = {}, y = {}", w[0], w[1]);
        }
        println!(
            "  antihomomorphism: {}",
            multiplicativity_check(&m, &t, Multiplicativity::Antihomomorphism)?.holds()
        );
    }

    let m2 = matrix_algebra(2)?;
    let doubling = LinearMap::scalar(4, &rat(2));
    let report = verify_theorem41(&m2, &doubling)?;
    println!("M2, 2·id: {}", report.verdict.label());
    for c in &report.checks {
        println!("  {:<18} {:<5} {}", c.name, c.holds, c.detail);
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
