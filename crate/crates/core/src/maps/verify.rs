//! End-to-end verifiers that check hypotheses, compare exact map spaces and
//! produce a [`VerificationReport`].

use super::checks::jordan_defect;
use super::spaces::orderings;
use super::{
    check_map, cubic_condition_check, derivation_space, jordan_homomorphism_check, multiplicativity_check,
    theorem31_hypothesis_space, CheckOutcome, LinearMap, MapError, MapSpace, Multiplicativity,
};
use crate::algebra::{Element, FinAlgebra};
use crate::structure::{commutator_subspace, is_commutator_simple, radical};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckRole {
    Hypothesis,
    Conclusion,
    Observation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub role: CheckRole,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, role: CheckRole, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            role,
            holds,
            detail: detail.into(),
        }
    }
}

/// Which identity a refutation witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `D(xy) ≠ D(x)y + xD(y)` at the pair `(x, y)`.
    Leibniz,
    /// `T(xy + yx) ≠ T(x)T(y) + T(y)T(x)` at the pair `(x, y)`.
    Jordan,
    /// A polarized `D(x)x ∈ [A,A]` (pair) or `D(x)x² ∈ [A,A]` (triple)
    /// condition fails.
    Hypothesis,
}

/// Concrete data behind a refutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub violation: Violation,
    pub elements: Vec<(String, Element)>,
    pub map: Option<LinearMap>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    HypothesesNotMet,
    Refutation(Witness),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::HypothesesNotMet => "hypotheses-not-met",
            Verdict::Refutation(_) => "REFUTATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub statement: String,
    pub checks: Vec<Check>,
    pub spaces: Vec<(String, usize)>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn space(&self, name: &str) -> Option<usize> {
        self.spaces.iter().find(|(n, _)| n == name).map(|(_, d)| *d)
    }

    fn hypotheses_hold(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.role == CheckRole::Hypothesis)
            .all(|c| c.holds)
    }
}

/// `D(xy) − D(x)y − xD(y)`.
pub fn leibniz_defect(a: &FinAlgebra, d: &LinearMap, x: &Element, y: &Element) -> Element {
    &(&d.apply(&a.mul(x, y)) - &a.mul(&d.apply(x), y)) - &a.mul(x, &d.apply(y))
}

fn first_basis_pair(a: &FinAlgebra, mut bad: impl FnMut(&Element, &Element) -> bool) -> Option<(Element, Element)> {
    let n = a.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (a.basis_element(i), a.basis_element(j)))
        .find(|(x, y)| bad(x, y))
}

/// A basis map of `left` outside `right`, if any.
fn map_outside(left: &MapSpace, right: &MapSpace) -> Option<LinearMap> {
    left.basis_maps().into_iter().find(|m| !right.contains_map(m))
}

/// `D(x)y + D(y)x`, the polarized form of `D(x)x`.
fn degree2_defect(a: &FinAlgebra, d: &LinearMap, x: &Element, y: &Element) -> Element {
    &a.mul(&d.apply(x), y) + &a.mul(&d.apply(y), x)
}

/// `Σ_σ D(x_σ1)(x_σ2 x_σ3)`, the polarized form of `D(x)x²`.
fn degree3_defect(a: &FinAlgebra, d: &LinearMap, xs: [&Element; 3]) -> Element {
    orderings(0, 1, 2).iter().fold(a.zero(), |acc, &[p, q, r]| {
        &acc + &a.mul(&d.apply(xs[p]), &a.mul(xs[q], xs[r]))
    })
}

fn named(elements: Vec<Element>) -> Vec<(String, Element)> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).zip(elements).collect()
}

/// Builds a witness for `H ≠ Der`: either a hypothesis-space map that
/// breaks the Leibniz rule at a basis pair, or a derivation violating a
/// polarized hypothesis.
fn theorem31_witness(a: &FinAlgebra, hyp: &MapSpace, der: &MapSpace) -> Witness {
    if let Some(d) = map_outside(hyp, der) {
        let (x, y) = first_basis_pair(a, |x, y| !leibniz_defect(a, &d, x, y).is_zero())
            .expect("a non-derivation breaks the Leibniz rule on some basis pair");
        return Witness {
            violation: Violation::Leibniz,
            elements: named(vec![x, y]),
            map: Some(d),
            note: "map satisfies D(x)x, D(x)x² ∈ [A,A] but D(xy) ≠ D(x)y + xD(y)".into(),
        };
    }
    let d = map_outside(der, hyp).expect("spaces differ");
    let comm = commutator_subspace(a);
    let elements = match first_basis_pair(a, |x, y| !comm.contains_vector(degree2_defect(a, &d, x, y).coeffs())) {
        Some((x, y)) => vec![x, y],
        None => {
            let n = a.dim();
            let (i, j, k) = (0..n)
                .flat_map(|i| (i..n).flat_map(move |j| (j..n).map(move |k| (i, j, k))))
                .find(|&(i, j, k)| {
                    let xs = [a.basis_element(i), a.basis_element(j), a.basis_element(k)];
                    !comm.contains_vector(degree3_defect(a, &d, [&xs[0], &xs[1], &xs[2]]).coeffs())
                })
                .expect("a map outside the hypothesis space fails some polarized condition");
            vec![a.basis_element(i), a.basis_element(j), a.basis_element(k)]
        }
    };
    Witness {
        violation: Violation::Hypothesis,
        elements: named(elements),
        map: Some(d),
        note: "derivation violating a polarized D(x)x or D(x)x² condition".into(),
    }
}

/// Checks that on a commutator-simple semiprime algebra the maps with
/// `D(x)x, D(x)x² ∈ [A,A]` are exactly the derivations.
pub fn verify_theorem31(a: &FinAlgebra) -> VerificationReport {
    let rad = radical(a);
    let simple = is_commutator_simple(a);
    let hyp = theorem31_hypothesis_space(a);
    let der = derivation_space(a);
    let mut report = VerificationReport {
        statement: "D(x)x, D(x)x² ∈ [A,A] for all x implies D is a derivation".into(),
        checks: vec![
            Check::new(
                "semiprime",
                CheckRole::Hypothesis,
                rad.is_zero(),
                format!("dim rad = {}", rad.dim()),
            ),
            Check::new(
                "commutator-simple",
                CheckRole::Hypothesis,
                simple.holds(),
                match simple.witness() {
                    None => "no nonzero ideal inside [A,A]".to_string(),
                    Some(w) => format!("ideal of dim {} inside [A,A]", w.ideal.dim()),
                },
            ),
        ],
        spaces: vec![("hypothesis".into(), hyp.dim()), ("derivations".into(), der.dim())],
        verdict: Verdict::HypothesesNotMet,
    };
    if !report.hypotheses_hold() {
        return report;
    }
    let equal = hyp == der;
    report.checks.push(Check::new(
        "hypothesis-space = derivation-space",
        CheckRole::Conclusion,
        equal,
        format!("{} vs {}", hyp.dim(), der.dim()),
    ));
    report.verdict = if equal {
        Verdict::Verified
    } else {
        Verdict::Refutation(theorem31_witness(a, &hyp, &der))
    };
    report
}

fn outcome_detail(o: &CheckOutcome) -> String {
    match o {
        CheckOutcome::Holds => "holds".into(),
        CheckOutcome::Violated { witness } => {
            let parts: Vec<String> = witness.iter().map(ToString::to_string).collect();
            format!("fails at {}", parts.join(", "))
        }
    }
}

/// Checks that a surjective unit-preserving `T` with `T(x)³ − x³ ∈ [A,A]` on a
/// commutator-simple unital algebra is a Jordan homomorphism. Whether `T` is
/// a homomorphism or an antihomomorphism is recorded alongside.
pub fn verify_theorem41(a: &FinAlgebra, t: &LinearMap) -> Result<VerificationReport, MapError> {
    check_map(a, t)?;
    let simple = is_commutator_simple(a);
    let unit_fixed = a.unit().map(|u| t.apply(u) == *u);
    let cubic = cubic_condition_check(a, t)?;
    let rank = t.rank();
    let mut report = VerificationReport {
        statement: "T surjective, T(1) = 1, T(x)³ − x³ ∈ [A,A] for all x implies T(x²) = T(x)²".into(),
        checks: vec![
            Check::new("unital", CheckRole::Hypothesis, a.is_unital(), ""),
            Check::new("commutator-simple", CheckRole::Hypothesis, simple.holds(), ""),
            Check::new(
                "surjective",
                CheckRole::Hypothesis,
                rank == a.dim(),
                format!("rank {} of {}", rank, a.dim()),
            ),
            Check::new(
                "unit-preserving",
                CheckRole::Hypothesis,
                unit_fixed == Some(true),
                match unit_fixed {
                    None => "no unit",
                    Some(true) => "T(1) = 1",
                    Some(false) => "T(1) ≠ 1",
                },
            ),
            Check::new(
                "cubic-condition",
                CheckRole::Hypothesis,
                cubic.holds(),
                outcome_detail(&cubic),
            ),
        ],
        spaces: vec![("commutator".into(), commutator_subspace(a).dim())],
        verdict: Verdict::HypothesesNotMet,
    };
    let homo = multiplicativity_check(a, t, Multiplicativity::Homomorphism)?;
    let anti = multiplicativity_check(a, t, Multiplicativity::Antihomomorphism)?;
    report.checks.push(Check::new(
        "homomorphism",
        CheckRole::Observation,
        homo.holds(),
        outcome_detail(&homo),
    ));
    report.checks.push(Check::new(
        "antihomomorphism",
        CheckRole::Observation,
        anti.holds(),
        outcome_detail(&anti),
    ));
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let jordan = jordan_homomorphism_check(a, t)?;
    report.checks.push(Check::new(
        "jordan-homomorphism",
        CheckRole::Conclusion,
        jordan.holds(),
        outcome_detail(&jordan),
    ));
    report.verdict = match jordan {
        CheckOutcome::Holds => Verdict::Verified,
        CheckOutcome::Violated { witness } => Verdict::Refutation(Witness {
            violation: Violation::Jordan,
            elements: named(witness),
            map: Some(t.clone()),
            note: "T(xy + yx) ≠ T(x)T(y) + T(y)T(x) although every hypothesis holds".into(),
        }),
    };
    Ok(report)
}

/// Re-evaluates a refutation witness from scratch; true when it really
/// exhibits the violation it claims.
pub fn witness_rechecks(a: &FinAlgebra, w: &Witness) -> bool {
    let Some(map) = &w.map else { return false };
    let xs: Vec<&Element> = w.elements.iter().map(|(_, e)| e).collect();
    match (w.violation, xs.as_slice()) {
        (Violation::Leibniz, [x, y]) => !leibniz_defect(a, map, x, y).is_zero(),
        (Violation::Jordan, [x, y]) => !jordan_defect(a, map, x, y).is_zero(),
        (Violation::Hypothesis, [x, y]) => {
            !commutator_subspace(a).contains_vector(degree2_defect(a, map, x, y).coeffs())
        }
        (Violation::Hypothesis, [x, y, z]) => {
            !commutator_subspace(a).contains_vector(degree3_defect(a, map, [x, y, z]).coeffs())
        }
        _ => false,
    }
}
