// Algebra documents and deterministic reports, driven through the same
// pipeline as the `csalg` binary.
//
// ```bash
// cargo run --example documents_and_reports
// ```

use std::error::Error;

use csalg::algebra::matrix_algebra;
use csalg::document::AlgebraDocument;
use csalg::pipeline::{run_with_document, Options};
use csalg::report::{Format, Report};

const M2_DOC: &str = include_str!("../fixtures/m2.alg");

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let doc = AlgebraDocument::parse(M2_DOC)?;
    assert_eq!(doc.algebra, matrix_algebra(2)?);
    assert_eq!(doc.to_text(), M2_DOC);
    println!("{} parsed, fingerprint {}", doc.name, doc.fingerprint());

    let report = run_with_document("analyze", &doc, &Options::new())?;
    print!("{}", report.emit(Format::Text));

    let structured = report.emit(Format::Structured);
    assert_eq!(Report::from_structured(&structured)?, report);
    assert_eq!(
        run_with_document("analyze", &doc, &Options::new())?.emit(Format::Structured),
        structured
    );
    println!("structured form: {} bytes, round-trips", structured.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
