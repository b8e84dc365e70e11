// Matrix and triangular algebras: the commutator subspace and
// commutator-simplicity.
//
// ```bash
// cargo run --example matrix_algebras
// ```

use std::error::Error;

use csalg::algebra::{matrix_algebra, upper_triangular};
use csalg::linalg::format_vector;
use csalg::structure::{commutator_subspace, is_commutator_simple, CommutatorSimplicity};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 2..=3 {
        let m = matrix_algebra(n)?;
        let comm = commutator_subspace(&m);
        // [M_n, M_n] is the trace-zero hyperplane
        assert_eq!(comm.dim(), n * n - 1);
        assert!(is_commutator_simple(&m).holds());
        println!("M{n}: dim {}, dim [A,A] = {}, commutator-simple", m.dim(), comm.dim());
    }

    for n in 2..=3 {
        let t = upper_triangular(n)?;
        let comm = commutator_subspace(&t);
        match is_commutator_simple(&t) {
            CommutatorSimplicity::Simple => return Err(format!("T{n} reported commutator-simple").into()),
            CommutatorSimplicity::NotSimple(w) => {
                assert!(w.recheck(&t));
                println!(
                    "T{n}: dim [A,A] = {}, ideal inside it of dim {}",
                    comm.dim(),
                    w.ideal.dim()
                );
                for v in w.ideal.basis() {
                    println!("  {}", format_vector(v));
                }
                println!("  certificate: {}", w.certificate.join(", "));
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
