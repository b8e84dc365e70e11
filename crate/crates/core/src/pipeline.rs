//! Batch commands behind the `csalg` binary.
//!
//! Every command takes a flat key-value option map and returns a
//! [`Report`]. Inputs are file paths; nothing is read from the clock or the
//! OS entropy pool, so identical files and options give identical reports.
//!
//! | command        | options                                                          |
//! |----------------|------------------------------------------------------------------|
//! | `gen`          | `family` (`matrix`, `triangular`, `zero`, `group`, `direct`, `tensor`, `adjoin-unit`), `n`, `cayley` or `group`, `left`, `right`, `input`, `name` |
//! | `analyze`      | `input`, `seed` (default 0), `trials`                            |
//! | `derivations`  | `input`                                                          |
//! | `verify-thm31` | `input`                                                          |
//! | `verify-thm41` | `input`, `map`                                                   |
//! | `local-test`   | `input`, `map`, `kind` (`derivation`, `inner-auto`), `seed`, `samples`, `trials` |
//! | `trace`        | `input`, `seed` (default 0), `trials`                            |
//!
//! `map` is `identity`, `transpose`, `scalar:<r>` or a map file path. Every
//! command honours `max-dim`, falling back to `CSALG_MAX_DIM` and then 24.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use crate::algebra::{
    adjoin_unit, direct_product, group_algebra, matrix_algebra, tensor_product, upper_triangular, zero_product_algebra,
    AlgebraError, FinAlgebra, FiniteGroup,
};
use crate::document::{parse_cayley, parse_map, AlgebraDocument, DocumentError};
use crate::linalg::{parse_rational, Rational, Subspace};
use crate::maps::{
    derivation_space, inner_derivation_space, jordan_derivation_space, local_derivation_test,
    local_inner_automorphism_test, theorem31_hypothesis_space, verify_theorem31, verify_theorem41, CheckRole,
    LinearMap, LocalDerivationOutcome, MapError, SimilarityOutcome, Verdict, VerificationReport, Violation,
};
use crate::report::{Report, Section, Status};
use crate::structure::{
    commutator_subspace, has_nondegenerate_trace, is_commutator_simple, power_chain, products_span, radical,
    trace_functional_space, CommutatorSimplicity, StructureError, TraceSearch,
};

pub type Options = BTreeMap<String, String>;

pub const COMMANDS: [&str; 7] = [
    "gen",
    "analyze",
    "derivations",
    "verify-thm31",
    "verify-thm41",
    "local-test",
    "trace",
];
pub const MAX_DIM_ENV: &str = "CSALG_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 24;
/// Exit status for usage, input and parse errors.
pub const USAGE_EXIT: i32 = 2;

const DEFAULT_TRACE_TRIALS: usize = 32;
const DEFAULT_SIMILARITY_TRIALS: usize = 16;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{source}")]
    Document { path: String, source: DocumentError },
    #[error("dimension {dim} exceeds the cap {cap} (raise it with --max-dim or {MAX_DIM_ENV})")]
    DimensionCap { dim: usize, cap: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        USAGE_EXIT
    }
}

fn usage(msg: impl Into<String>) -> PipelineError {
    PipelineError::Usage(msg.into())
}

fn required<'a>(options: &'a Options, key: &str) -> Result<&'a str, PipelineError> {
    options
        .get(key)
        .map(String::as_str)
        .ok_or_else(|| usage(format!("missing --{key}")))
}

fn number<T: std::str::FromStr>(options: &Options, key: &str) -> Result<Option<T>, PipelineError> {
    options
        .get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| usage(format!("--{key} expects a non-negative integer, got `{v}`")))
        })
        .transpose()
}

fn read(path: &str) -> Result<String, PipelineError> {
    std::fs::read_to_string(path).map_err(|e| PipelineError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn with_path<T>(path: &str, r: Result<T, DocumentError>) -> Result<T, PipelineError> {
    r.map_err(|source| PipelineError::Document {
        path: path.to_string(),
        source,
    })
}

pub fn load_document(path: &str) -> Result<AlgebraDocument, PipelineError> {
    with_path(path, AlgebraDocument::parse(&read(path)?))
}

/// `max-dim` option, else `CSALG_MAX_DIM`, else 24.
pub fn dimension_cap(options: &Options) -> Result<usize, PipelineError> {
    if let Some(cap) = number(options, "max-dim")? {
        return Ok(cap);
    }
    match std::env::var(MAX_DIM_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| usage(format!("{MAX_DIM_ENV} expects an integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn enforce_cap(dim: usize, cap: usize) -> Result<(), PipelineError> {
    if dim > cap {
        return Err(PipelineError::DimensionCap { dim, cap });
    }
    Ok(())
}

/// Runs one command end to end, reading the files named in `options`.
pub fn run_pipeline(command: &str, options: &Options) -> Result<Report, PipelineError> {
    if !COMMANDS.contains(&command) {
        return Err(usage(format!(
            "unknown command `{command}`; expected one of {}",
            COMMANDS.join(", ")
        )));
    }
    if command == "gen" {
        return generate(options);
    }
    let path = required(options, "input")?;
    let doc = load_document(path)?;
    run_with_document(command, &doc, options)
}

/// Runs an analysis command on an already parsed document. `input` is not
/// consulted; `map` may still name a file.
pub fn run_with_document(command: &str, doc: &AlgebraDocument, options: &Options) -> Result<Report, PipelineError> {
    enforce_cap(doc.algebra.dim(), dimension_cap(options)?)?;
    let mut report = Report::new(command);
    report.algebra = Some(doc.name.clone());
    report.fingerprint = Some(doc.fingerprint());
    let a = &doc.algebra;
    match command {
        "analyze" => analyze(a, options, &mut report)?,
        "derivations" => derivations(a, &mut report),
        "verify-thm31" => verification(&verify_theorem31(a), &mut report),
        "verify-thm41" => {
            let t = resolve_map(a, required(options, "map")?)?;
            verification(&verify_theorem41(a, &t)?, &mut report);
        }
        "local-test" => local_test(a, options, &mut report)?,
        "trace" => trace(a, options, &mut report)?,
        "gen" => return Err(usage("`gen` takes no input document")),
        other => return Err(usage(format!("unknown command `{other}`"))),
    }
    Ok(report)
}

/// `identity`, `transpose` (on a matrix algebra `M_n` in its standard
/// basis), `scalar:<r>`, or a path to a map file.
pub fn resolve_map(a: &FinAlgebra, spec: &str) -> Result<LinearMap, PipelineError> {
    let n = a.dim();
    match spec {
        "identity" => Ok(LinearMap::identity(n)),
        "transpose" => {
            let side = (1..=n).find(|s| s * s >= n).filter(|s| s * s == n);
            let side = side.ok_or_else(|| usage(format!("transpose needs a square dimension, got {n}")))?;
            Ok(LinearMap::transpose(side))
        }
        s if s.starts_with("scalar:") => {
            let r = parse_rational(&s["scalar:".len()..]).map_err(|e| usage(e.to_string()))?;
            Ok(LinearMap::scalar(n, &r))
        }
        path => {
            let t = with_path(path, parse_map(&read(path)?))?;
            if t.dim() != n {
                return Err(MapError::DimensionMismatch {
                    expected: n,
                    found: t.dim(),
                }
                .into());
            }
            Ok(t)
        }
    }
}

fn generate(options: &Options) -> Result<Report, PipelineError> {
    let cap = dimension_cap(options)?;
    let family = required(options, "family")?;
    let size = |key: &str| -> Result<usize, PipelineError> {
        number(options, key)?.ok_or_else(|| usage(format!("`gen {family}` needs --{key}")))
    };
    let (name, algebra) = match family {
        "matrix" => {
            let n = size("n")?;
            enforce_cap(n * n, cap)?;
            (format!("M{n}"), matrix_algebra(n)?)
        }
        "triangular" => {
            let n = size("n")?;
            enforce_cap(n * (n + 1) / 2, cap)?;
            (format!("T{n}"), upper_triangular(n)?)
        }
        "zero" => {
            let n = size("n")?;
            enforce_cap(n, cap)?;
            (format!("Z{n}"), zero_product_algebra(n)?)
        }
        "group" => {
            let (label, g) = group_input(options, &size)?;
            enforce_cap(g.order(), cap)?;
            (format!("Q[{label}]"), group_algebra(&g)?)
        }
        "direct" | "tensor" => {
            let left = load_document(required(options, "left")?)?;
            let right = load_document(required(options, "right")?)?;
            let (da, db) = (left.algebra.dim(), right.algebra.dim());
            if family == "direct" {
                enforce_cap(da + db, cap)?;
                (
                    format!("{}x{}", left.name, right.name),
                    direct_product(&left.algebra, &right.algebra)?,
                )
            } else {
                enforce_cap(da * db, cap)?;
                (
                    format!("{}⊗{}", left.name, right.name),
                    tensor_product(&left.algebra, &right.algebra)?,
                )
            }
        }
        "adjoin-unit" => {
            let doc = load_document(required(options, "input")?)?;
            enforce_cap(doc.algebra.dim() + 1, cap)?;
            (format!("{}+1", doc.name), adjoin_unit(&doc.algebra)?)
        }
        other => return Err(usage(format!("unknown family `{other}`"))),
    };
    let doc = AlgebraDocument::new(options.get("name").cloned().unwrap_or(name), algebra);
    let text = doc.to_text();
    let mut report = Report::new("gen");
    report.algebra = Some(doc.name.clone());
    report.fingerprint = Some(doc.fingerprint());
    report.push(
        Section::new("document")
            .with("family", family)
            .with("dim", doc.algebra.dim())
            .with("unital", doc.algebra.is_unital()),
    );
    report.artifact = Some(text);
    Ok(report)
}

/// A Cayley-table file (`cayley`) or a built-in family (`group` = cyclic,
/// dihedral or symmetric, with `n`).
fn group_input(
    options: &Options,
    size: &dyn Fn(&str) -> Result<usize, PipelineError>,
) -> Result<(String, FiniteGroup), PipelineError> {
    if let Some(path) = options.get("cayley") {
        let g = with_path(path, parse_cayley(&read(path)?))?;
        let stem = Path::new(path)
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("G")
            .to_uppercase();
        return Ok((stem, g));
    }
    let kind = options
        .get("group")
        .ok_or_else(|| usage("`gen group` needs --cayley or --group"))?;
    let n = size("n")?;
    let built = match kind.as_str() {
        "cyclic" => FiniteGroup::cyclic(n).map(|g| (format!("C{n}"), g)),
        "dihedral" => FiniteGroup::dihedral(n).map(|g| (format!("D{n}"), g)),
        "symmetric" => FiniteGroup::symmetric(n).map(|g| (format!("S{n}"), g)),
        other => return Err(usage(format!("unknown group family `{other}`"))),
    };
    built.map_err(|e| usage(e.to_string()))
}

fn basis(s: &Subspace) -> Vec<Vec<Rational>> {
    s.basis().to_vec()
}

fn analyze(a: &FinAlgebra, options: &Options, report: &mut Report) -> Result<(), PipelineError> {
    report.push(
        Section::new("algebra")
            .with("dim", a.dim())
            .with("unital", a.is_unital())
            .with("commutative", a.is_commutative()),
    );
    let comm = commutator_subspace(a);
    report.push(
        Section::new("commutator")
            .with("dim", comm.dim())
            .with("basis", basis(&comm)),
    );

    let mut simplicity = Section::new("commutator-simplicity");
    match is_commutator_simple(a) {
        CommutatorSimplicity::Simple => simplicity.set("commutator-simple", true),
        CommutatorSimplicity::NotSimple(w) => {
            simplicity.set("commutator-simple", false);
            simplicity.set("ideal-dim", w.ideal.dim());
            simplicity.set("ideal-basis", basis(&w.ideal));
            simplicity.set("certificate", w.certificate.join("; "));
            simplicity.set("rechecked", w.recheck(a));
            report.escalate(Status::PropertyFalse);
        }
    }
    report.push(simplicity);

    let rad = radical(a);
    let chain = power_chain(a, &rad);
    let dims: Vec<String> = chain.iter().map(|s| s.dim().to_string()).collect();
    let mut radical_section = Section::new("radical")
        .with("dim", rad.dim())
        .with("basis", basis(&rad))
        .with("semiprime", rad.is_zero())
        .with("power-dims", dims.join(" "));
    if chain.last().is_some_and(Subspace::is_zero) {
        radical_section.set("nilpotency-index", chain.len() - 1);
    }
    if !rad.is_zero() {
        report.escalate(Status::PropertyFalse);
    }
    report.push(radical_section);
    trace_search(a, options, report)
}

fn trace_search(a: &FinAlgebra, options: &Options, report: &mut Report) -> Result<(), PipelineError> {
    let seed = number(options, "seed")?.unwrap_or(0);
    let trials = number(options, "trials")?.unwrap_or(DEFAULT_TRACE_TRIALS);
    report.seeds.insert("trace".into(), seed);
    let mut section = Section::new("trace")
        .with("space-dim", trace_functional_space(a).len())
        .with("trials", trials);
    match has_nondegenerate_trace(a, seed, trials)? {
        TraceSearch::Found { functional, trial } => {
            section.set("result", "found");
            section.set("functional", functional.coeffs().to_vec());
            section.set("trial", trial);
        }
        TraceSearch::DefiniteNegative { common_radical } => {
            section.set("result", "definite-negative");
            section.set("common-radical", basis(&common_radical));
            report.escalate(Status::PropertyFalse);
        }
        TraceSearch::Inconclusive { .. } => {
            section.set("result", "inconclusive");
            report.escalate(Status::Inconclusive);
        }
    }
    report.push(section);
    Ok(())
}

fn trace(a: &FinAlgebra, options: &Options, report: &mut Report) -> Result<(), PipelineError> {
    let space = trace_functional_space(a).len();
    let comm = commutator_subspace(a).dim();
    let products = products_span(a).dim();
    report.push(
        Section::new("dimensions")
            .with("trace-space", space)
            .with("commutator", comm)
            .with("products", products)
            .with("rank-nullity", space + comm == products),
    );
    trace_search(a, options, report)
}

fn derivations(a: &FinAlgebra, report: &mut Report) {
    let der = derivation_space(a);
    let inner = inner_derivation_space(a);
    let jordan = jordan_derivation_space(a);
    let hyp = theorem31_hypothesis_space(a);
    report.push(
        Section::new("map-spaces")
            .with("derivations", der.dim())
            .with("inner-derivations", inner.dim())
            .with("jordan-derivations", jordan.dim())
            .with("hypothesis", hyp.dim())
            .with("outer", der.dim() - inner.dim()),
    );
    report.push(
        Section::new("inclusions")
            .with("inner-in-derivations", der.contains(&inner))
            .with("derivations-in-jordan", jordan.contains(&der))
            .with("inner-in-hypothesis", hyp.contains(&inner))
            .with("jordan-equals-derivations", jordan == der),
    );
}

fn violation_label(v: Violation) -> &'static str {
    match v {
        Violation::Leibniz => "leibniz",
        Violation::Jordan => "jordan",
        Violation::Hypothesis => "hypothesis",
    }
}

fn verification(r: &VerificationReport, report: &mut Report) {
    for (role, name) in [
        (CheckRole::Hypothesis, "hypotheses"),
        (CheckRole::Observation, "observations"),
        (CheckRole::Conclusion, "conclusion"),
    ] {
        let mut section = Section::new(name);
        for c in r.checks.iter().filter(|c| c.role == role) {
            section.set(&c.name, c.holds);
            if !c.detail.is_empty() {
                section.set(&format!("{}.detail", c.name), c.detail.as_str());
            }
        }
        if !section.entries.is_empty() {
            report.push(section);
        }
    }
    let mut spaces = Section::new("spaces");
    for (name, dim) in &r.spaces {
        spaces.set(name, *dim);
    }
    report.push(spaces);
    report.push(
        Section::new("verdict")
            .with("statement", r.statement.as_str())
            .with("verdict", r.verdict.label()),
    );
    match &r.verdict {
        Verdict::Verified => {}
        Verdict::HypothesesNotMet => report.escalate(Status::HypothesesNotMet),
        Verdict::Refutation(w) => {
            let mut section = Section::new("witness")
                .with("violation", violation_label(w.violation))
                .with("note", w.note.as_str());
            for (label, e) in &w.elements {
                section.set(label, e.coeffs().to_vec());
            }
            if let Some(m) = &w.map {
                section.set("map", m.matrix().row_vectors());
            }
            report.push(section);
            report.escalate(Status::Refutation);
        }
    }
}

fn local_test(a: &FinAlgebra, options: &Options, report: &mut Report) -> Result<(), PipelineError> {
    let t = resolve_map(a, required(options, "map")?)?;
    let seed: u64 = number(options, "seed")?.ok_or_else(|| usage("local-test needs an explicit --seed"))?;
    let samples: usize = number(options, "samples")?.ok_or_else(|| usage("local-test needs --samples"))?;
    report.seeds.insert("sampling".into(), seed);
    match required(options, "kind")? {
        "derivation" => {
            let mut section = Section::new("local-derivation").with("samples", samples);
            match local_derivation_test(a, &t, seed, samples)? {
                LocalDerivationOutcome::Pass { checked } => {
                    section.set("result", "pass");
                    section.set("checked", checked);
                }
                LocalDerivationOutcome::Counterexample { x } => {
                    section.set("result", "counterexample");
                    section.set("x", x.into_coeffs());
                    report.escalate(Status::PropertyFalse);
                }
            }
            report.push(section);
        }
        "inner-auto" => {
            if !a.is_unital() {
                report.push(Section::new("local-inner-automorphism").with("unital", false));
                report.escalate(Status::HypothesesNotMet);
                return Ok(());
            }
            let trials = number(options, "trials")?.unwrap_or(DEFAULT_SIMILARITY_TRIALS);
            let outcomes = local_inner_automorphism_test(a, &t, seed, samples, trials)?;
            let mut section = Section::new("local-inner-automorphism")
                .with("samples", samples)
                .with("trials", trials);
            let (mut witnesses, mut infeasible, mut inconclusive) = (0usize, 0usize, 0usize);
            for (k, (x, outcome)) in outcomes.iter().enumerate() {
                let key = format!("probe-{k:03}");
                section.set(&format!("{key}.x"), x.coeffs().to_vec());
                match outcome {
                    SimilarityOutcome::Witness { u } => {
                        witnesses += 1;
                        section.set(&format!("{key}.outcome"), "witness");
                        section.set(&format!("{key}.u"), u.coeffs().to_vec());
                    }
                    SimilarityOutcome::Infeasible => {
                        infeasible += 1;
                        section.set(&format!("{key}.outcome"), "infeasible");
                    }
                    SimilarityOutcome::Inconclusive => {
                        inconclusive += 1;
                        section.set(&format!("{key}.outcome"), "inconclusive");
                    }
                }
            }
            section.set("witnesses", witnesses);
            section.set("infeasible", infeasible);
            section.set("inconclusive", inconclusive);
            if infeasible > 0 {
                report.escalate(Status::PropertyFalse);
            } else if inconclusive > 0 {
                report.escalate(Status::Inconclusive);
            }
            report.push(section);
        }
        other => {
            return Err(usage(format!(
                "unknown --kind `{other}`; expected derivation or inner-auto"
            )))
        }
    }
    Ok(())
}
