// Group algebras from Cayley tables: centre, conjugacy classes and trace
// functionals.
//
// ```bash
// cargo run --example group_algebras
// ```

use std::error::Error;

use csalg::algebra::{center, group_algebra, FiniteGroup};
use csalg::document::parse_cayley;
use csalg::linalg::{format_vector, rat, unit_vector};
use csalg::structure::{
    commutator_subspace, has_nondegenerate_trace, is_commutator_simple, is_nondegenerate_trace, trace_functional_space,
    TraceFunctional, TraceSearch,
};

const S3_TABLE: &str = include_str!("../fixtures/s3.tbl");

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s3 = parse_cayley(S3_TABLE)?;
    assert_eq!(s3, FiniteGroup::symmetric(3)?);
    let qs3 = group_algebra(&s3)?;

    let classes = s3.conjugacy_classes();
    println!("S3 has {} conjugacy classes: {classes:?}", classes.len());
    let z = center(&qs3);
    for class in &classes {
        let mut sum = vec![rat(0); qs3.dim()];
        for &g in class {
            sum[g] = rat(1);
        }
        assert!(z.contains_vector(&sum));
    }
    println!("centre of Q[S3]: dim {} (spanned by class sums)", z.dim());

    let traces = trace_functional_space(&qs3);
    let comm = commutator_subspace(&qs3);
    println!(
        "trace functionals: {}, dim [A,A] = {}, sum = {}",
        traces.len(),
        comm.dim(),
        traces.len() + comm.dim()
    );

    // coefficient of the identity element
    let tau = TraceFunctional::from_covector(&qs3, &unit_vector(qs3.dim(), s3.identity()))?;
    assert!(is_nondegenerate_trace(&qs3, &tau));
    println!("coefficient-of-identity trace is nondegenerate");

    for (name, g) in [
        ("C2", FiniteGroup::cyclic(2)?),
        ("S3", s3.clone()),
        ("D4", FiniteGroup::dihedral(4)?),
    ] {
        let a = group_algebra(&g)?;
        let simple = is_commutator_simple(&a).holds();
        match has_nondegenerate_trace(&a, 0, 16)? {
            TraceSearch::Found { functional, trial } => println!(
                "Q[{name}]: commutator-simple = {simple}, trace found at trial {trial}: {}",
                format_vector(functional.coeffs())
            ),
            other => println!("Q[{name}]: commutator-simple = {simple}, {other:?}"),
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
