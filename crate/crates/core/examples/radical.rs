// The radical via the trace criterion, its nilpotency chain and the
// semiprime quotient.
//
// ```bash
// cargo run --example radical
// ```

use std::error::Error;

use csalg::algebra::{direct_product, matrix_algebra, upper_triangular};
use csalg::linalg::format_vector;
use csalg::structure::{is_semiprime, power_chain, radical};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t3 = upper_triangular(3)?;
    let rad = radical(&t3);
    println!("rad T3: dim {} (strictly upper triangular part)", rad.dim());
    for v in rad.basis() {
        println!("  {}", format_vector(v));
    }
    let dims: Vec<usize> = power_chain(&t3, &rad).iter().map(|s| s.dim()).collect();
    println!("powers of rad: {dims:?}");
    assert_eq!(dims.last(), Some(&0));

    let q = t3.quotient(&rad)?;
    assert!(is_semiprime(&q));
    println!("T3 / rad: dim {}, semiprime", q.dim());

    let mixed = direct_product(&matrix_algebra(2)?, &upper_triangular(2)?)?;
    println!(
        "M2 x T2: dim rad = {}, semiprime = {}",
        radical(&mixed).dim(),
        is_semiprime(&mixed)
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
