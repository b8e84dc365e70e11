//! Structural invariants: the commutator subspace, largest ideals inside a
//! subspace, commutator-simplicity, the radical, and trace functionals.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{adjoin_unit, Element, FinAlgebra};
use crate::linalg::{dot, Mat, Rational, Subspace};
use crate::random::{rng_from_seed, small_integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("subspace lives in dimension {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("trial count must be at least 1")]
    ZeroTrials,
    #[error("functional is not tracial: τ(b{i}b{j}) ≠ τ(b{j}b{i})")]
    NotTracial { i: usize, j: usize },
}

/// `[A,A]`, spanned by the basis commutators `b_i b_j − b_j b_i`, `i < j`.
pub fn commutator_subspace(a: &FinAlgebra) -> Subspace {
    let n = a.dim();
    let mut s = Subspace::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let c: Vec<Rational> = a
                .basis_product(i, j)
                .iter()
                .zip(a.basis_product(j, i))
                .map(|(x, y)| x - y)
                .collect();
            s.insert(c);
        }
    }
    s
}

/// `A²`, the span of all products.
pub fn products_span(a: &FinAlgebra) -> Subspace {
    let n = a.dim();
    Subspace::span(
        n,
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| a.basis_product(i, j).to_vec()),
    )
}

/// Span of all products `vw` with `v ∈ V`, `w ∈ W`.
pub fn subspace_product(a: &FinAlgebra, v: &Subspace, w: &Subspace) -> Subspace {
    let mut out = Subspace::zero(a.dim());
    for x in v.basis() {
        let x = Element::new(x.clone());
        for y in w.basis() {
            out.insert(a.mul(&x, &Element::new(y.clone())).into_coeffs());
        }
    }
    out
}

/// The largest two-sided ideal contained in `v`.
///
/// Decreasing fixed point `V₀ = v`,
/// `V_{t+1} = {x ∈ V_t : b_i x ∈ V_t and x b_i ∈ V_t for all i}`; the
/// dimension drops at every step until it stabilizes, so at most `dim v`
/// rounds run.
pub fn largest_ideal_within(a: &FinAlgebra, v: &Subspace) -> Result<Subspace, StructureError> {
    let n = a.dim();
    if v.ambient_dim() != n {
        return Err(StructureError::DimensionMismatch {
            expected: n,
            found: v.ambient_dim(),
        });
    }
    let basis: Vec<Element> = (0..n).map(|i| a.basis_element(i)).collect();
    let mut current = v.clone();
    loop {
        if current.is_zero() {
            return Ok(current);
        }
        let ann = current.annihilator();
        if ann.is_zero() {
            // current is the whole space, which is an ideal
            return Ok(current);
        }
        let vs: Vec<Element> = current.basis().iter().map(|x| Element::new(x.clone())).collect();
        let r = vs.len();
        let mut constraints = Subspace::zero(r);
        for b in &basis {
            let images: Vec<Vec<Rational>> = vs
                .iter()
                .flat_map(|x| [a.mul(b, x).into_coeffs(), a.mul(x, b).into_coeffs()])
                .collect();
            for w in ann.basis() {
                for side in 0..2 {
                    let row: Vec<Rational> = (0..r).map(|s| dot(w, &images[2 * s + side])).collect();
                    constraints.insert(row);
                }
            }
        }
        let coeffs = constraints.annihilator();
        let next = Subspace::span(n, coeffs.basis().iter().map(|c| current.combine(c)));
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

/// A nonzero ideal found inside `[A,A]`, with the checks it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealWitness {
    pub ideal: Subspace,
    pub certificate: Vec<String>,
}

impl IdealWitness {
    /// Re-runs the closure and containment checks from scratch.
    pub fn recheck(&self, a: &FinAlgebra) -> bool {
        !self.ideal.is_zero()
            && a.is_ideal(&self.ideal)
            && commutator_subspace(a).contains(&self.ideal).unwrap_or(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutatorSimplicity {
    Simple,
    NotSimple(IdealWitness),
}

impl CommutatorSimplicity {
    pub fn holds(&self) -> bool {
        matches!(self, CommutatorSimplicity::Simple)
    }

    pub fn witness(&self) -> Option<&IdealWitness> {
        match self {
            CommutatorSimplicity::Simple => None,
            CommutatorSimplicity::NotSimple(w) => Some(w),
        }
    }
}

/// Whether `[A,A]` contains no nonzero ideal; otherwise returns the largest
/// such ideal as witness.
pub fn is_commutator_simple(a: &FinAlgebra) -> CommutatorSimplicity {
    let comm = commutator_subspace(a);
    let ideal = largest_ideal_within(a, &comm).expect("same ambient dimension");
    if ideal.is_zero() {
        return CommutatorSimplicity::Simple;
    }
    let mut certificate = Vec::new();
    if a.is_ideal(&ideal) {
        certificate.push("A·I ⊆ I".to_string());
        certificate.push("I·A ⊆ I".to_string());
    }
    if comm.contains(&ideal).unwrap_or(false) {
        certificate.push("I ⊆ [A,A]".to_string());
    }
    CommutatorSimplicity::NotSimple(IdealWitness { ideal, certificate })
}

/// Trace of the left regular operator of each basis element:
/// `tr(L_{b_k}) = Σ_j c[k][j][j]`.
fn left_traces(a: &FinAlgebra) -> Vec<Rational> {
    let n = a.dim();
    (0..n)
        .map(|k| (0..n).fold(Rational::zero(), |acc, j| acc + a.constant(k, j, j)))
        .collect()
}

/// The radical, via the characteristic-zero trace criterion
/// `rad A = {x : tr(L_{x b_i}) = 0 for all i}` in a unital algebra. A
/// non-unital algebra is first embedded in its unitization and the result
/// intersected with the embedded copy.
pub fn radical(a: &FinAlgebra) -> Subspace {
    let n = a.dim();
    if !a.is_unital() {
        let a1 = adjoin_unit(a).expect("unitization of a valid algebra");
        let rad1 = radical(&a1);
        let embedded = Subspace::span(n + 1, (1..=n).map(|i| crate::linalg::unit_vector(n + 1, i)));
        let inside = rad1.intersect(&embedded).expect("same ambient dimension");
        return Subspace::span(n, inside.basis().iter().map(|v| v[1..].to_vec()));
    }
    let t = left_traces(a);
    // row i: x ↦ tr(L_{x b_i}) = Σ_r x_r Σ_k c[r][i][k] t_k
    let rows = (0..n).map(|i| (0..n).map(|r| dot(a.basis_product(r, i), &t)).collect());
    Subspace::span(n, rows).annihilator()
}

pub fn is_semiprime(a: &FinAlgebra) -> bool {
    radical(a).is_zero()
}

/// Powers `S, S², S³, …` of a subspace, stopping once the chain repeats or
/// reaches zero (at most `dim + 1` terms). Used to certify nilpotency.
pub fn power_chain(a: &FinAlgebra, s: &Subspace) -> Vec<Subspace> {
    let mut chain = vec![s.clone()];
    loop {
        let last = chain.last().expect("nonempty");
        if last.is_zero() {
            return chain;
        }
        let next = subspace_product(a, s, last);
        if &next == last || chain.len() > a.dim() {
            return chain;
        }
        chain.push(next);
    }
}

/// A linear functional on `A²` satisfying `τ(xy) = τ(yx)`.
///
/// Stored as a covector on the full coordinate space, supported on the
/// pivot columns of `A²`'s echelon basis; this representative is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFunctional {
    coeffs: Vec<Rational>,
    domain: Subspace,
}

impl TraceFunctional {
    /// Restricts `covector` to `A²` and checks the trace identity on all
    /// basis pairs.
    pub fn from_covector(a: &FinAlgebra, covector: &[Rational]) -> Result<Self, StructureError> {
        if covector.len() != a.dim() {
            return Err(StructureError::DimensionMismatch {
                expected: a.dim(),
                found: covector.len(),
            });
        }
        let domain = products_span(a);
        let mut coeffs = vec![Rational::zero(); a.dim()];
        for (row, &p) in domain.basis().iter().zip(domain.pivots()) {
            coeffs[p] = dot(row, covector);
        }
        let t = TraceFunctional { coeffs, domain };
        let n = a.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                if t.apply(a.basis_product(i, j)) != t.apply(a.basis_product(j, i)) {
                    return Err(StructureError::NotTracial { i, j });
                }
            }
        }
        Ok(t)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    /// `τ(v)` for `v ∈ A²`. Outside `A²` the value is that of the canonical
    /// covector and carries no meaning.
    pub fn apply(&self, v: &[Rational]) -> Rational {
        dot(&self.coeffs, v)
    }

    fn combination(parts: &[TraceFunctional], weights: &[Rational]) -> TraceFunctional {
        let n = parts[0].coeffs.len();
        let mut coeffs = vec![Rational::zero(); n];
        for (t, w) in parts.iter().zip(weights) {
            for (c, x) in coeffs.iter_mut().zip(&t.coeffs) {
                *c += w * x;
            }
        }
        TraceFunctional {
            coeffs,
            domain: parts[0].domain.clone(),
        }
    }
}

/// Basis of all trace functionals on `A²`.
pub fn trace_functional_space(a: &FinAlgebra) -> Vec<TraceFunctional> {
    let n = a.dim();
    let domain = products_span(a);
    let pivots = domain.pivots().to_vec();
    // unknowns: the values of τ on the echelon basis of A²; τ(v) = Σ v[p_r] y_r
    let mut constraints = Subspace::zero(pivots.len());
    for i in 0..n {
        for j in (i + 1)..n {
            let row = pivots
                .iter()
                .map(|&p| &a.basis_product(i, j)[p] - &a.basis_product(j, i)[p])
                .collect();
            constraints.insert(row);
        }
    }
    constraints
        .annihilator()
        .basis()
        .iter()
        .map(|y| {
            let mut coeffs = vec![Rational::zero(); n];
            for (&p, v) in pivots.iter().zip(y) {
                coeffs[p] = v.clone();
            }
            TraceFunctional {
                coeffs,
                domain: domain.clone(),
            }
        })
        .collect()
}

/// Gram matrix `G_ij = τ(b_i b_j)`.
pub fn gram_matrix(a: &FinAlgebra, t: &TraceFunctional) -> Mat {
    Mat::from_fn(a.dim(), a.dim(), |i, j| t.apply(a.basis_product(i, j)))
}

/// `{x : τ(xA) = 0}`, the left radical of the form `(x, y) ↦ τ(xy)`.
pub fn trace_left_radical(a: &FinAlgebra, t: &TraceFunctional) -> Subspace {
    gram_matrix(a, t).transpose().kernel()
}

pub fn is_nondegenerate_trace(a: &FinAlgebra, t: &TraceFunctional) -> bool {
    trace_left_radical(a, t).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceSearch {
    /// A nondegenerate trace, found at the given (zero-based) trial.
    Found { functional: TraceFunctional, trial: usize },
    /// Every trace functional kills `common_radical · A`; no nondegenerate
    /// trace exists.
    DefiniteNegative { common_radical: Subspace },
    /// No witness among the sampled combinations. Says nothing either way.
    Inconclusive { trials: usize },
}

/// Seeded search for a nondegenerate trace among random integer
/// combinations of the trace-space basis.
pub fn has_nondegenerate_trace(a: &FinAlgebra, seed: u64, trials: usize) -> Result<TraceSearch, StructureError> {
    if trials == 0 {
        return Err(StructureError::ZeroTrials);
    }
    let n = a.dim();
    let space = trace_functional_space(a);
    let mut common = Subspace::full(n);
    for t in &space {
        common = common
            .intersect(&trace_left_radical(a, t))
            .expect("same ambient dimension");
    }
    if !common.is_zero() {
        return Ok(TraceSearch::DefiniteNegative { common_radical: common });
    }
    let mut rng = rng_from_seed(seed);
    for trial in 0..trials {
        let weights: Vec<Rational> = (0..space.len()).map(|_| small_integer(&mut rng, 3)).collect();
        if weights.iter().all(Zero::is_zero) {
            continue;
        }
        let candidate = TraceFunctional::combination(&space, &weights);
        if is_nondegenerate_trace(a, &candidate) {
            return Ok(TraceSearch::Found {
                functional: candidate,
                trial,
            });
        }
    }
    Ok(TraceSearch::Inconclusive { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        direct_product, group_algebra, matrix_algebra, upper_triangular, zero_product_algebra, FiniteGroup,
    };
    use crate::linalg::{rat, unit_vector};

    fn m(n: usize) -> FinAlgebra {
        matrix_algebra(n).unwrap()
    }

    fn qs3() -> FinAlgebra {
        group_algebra(&FiniteGroup::symmetric(3).unwrap()).unwrap()
    }

    #[test]
    fn commutator_examples() {
        let c2 = group_algebra(&FiniteGroup::cyclic(2).unwrap()).unwrap();
        assert!(commutator_subspace(&c2).is_zero());
        // oracle: trace-zero matrices e12, e21, e11 − e22
        let tz = Subspace::span(
            4,
            [
                unit_vector(4, 1),
                unit_vector(4, 2),
                vec![rat(1), rat(0), rat(0), rat(-1)],
            ],
        );
        assert_eq!(commutator_subspace(&m(2)), tz);
        assert_eq!(commutator_subspace(&qs3()).dim(), 6 - 3);
    }

    #[test]
    fn largest_ideal_examples() {
        let m2 = m(2);
        assert!(largest_ideal_within(&m2, &Subspace::full(4)).unwrap().is_full());
        assert!(largest_ideal_within(&m2, &commutator_subspace(&m2)).unwrap().is_zero());
        let t2 = upper_triangular(2).unwrap();
        let e12 = Subspace::span(3, [unit_vector(3, 1)]);
        assert_eq!(commutator_subspace(&t2), e12);
        assert_eq!(largest_ideal_within(&t2, &e12).unwrap(), e12);
        assert!(largest_ideal_within(&t2, &Subspace::zero(2)).is_err());
    }

    #[test]
    fn commutator_simplicity_examples() {
        assert!(is_commutator_simple(&m(2)).holds());
        assert!(is_commutator_simple(&m(3)).holds());
        assert!(is_commutator_simple(&qs3()).holds());
        let t2 = upper_triangular(2).unwrap();
        let verdict = is_commutator_simple(&t2);
        let w = verdict.witness().expect("T2 is not commutator-simple");
        assert_eq!(w.ideal, Subspace::span(3, [unit_vector(3, 1)]));
        assert_eq!(w.certificate.len(), 3);
        assert!(w.recheck(&t2));
    }

    #[test]
    fn radical_examples() {
        assert!(radical(&m(2)).is_zero());
        assert!(radical(&m(3)).is_zero());
        let t2 = upper_triangular(2).unwrap();
        assert_eq!(radical(&t2), Subspace::span(3, [unit_vector(3, 1)]));
        let p = direct_product(&m(2), &t2).unwrap();
        assert_eq!(radical(&p), Subspace::span(7, [unit_vector(7, 5)]));
        assert!(is_semiprime(&qs3()));
        assert!(is_semiprime(
            &group_algebra(&FiniteGroup::dihedral(4).unwrap()).unwrap()
        ));
        assert!(!is_semiprime(&t2));
        // all of a zero-product algebra is nilpotent
        assert!(radical(&zero_product_algebra(2).unwrap()).is_full());
    }

    #[test]
    fn trace_space_examples() {
        assert_eq!(trace_functional_space(&m(2)).len(), 1);
        assert_eq!(trace_functional_space(&qs3()).len(), 3);
        let t2 = upper_triangular(2).unwrap();
        let space = trace_functional_space(&t2);
        assert_eq!(space.len(), 2);
        for t in &space {
            assert!(t.coeffs()[1].is_zero());
            assert!(!is_nondegenerate_trace(&t2, t));
            assert!(trace_left_radical(&t2, t).contains_vector(&unit_vector(3, 1)));
        }
    }

    #[test]
    fn nondegenerate_traces() {
        let m2 = m(2);
        let trace = TraceFunctional::from_covector(&m2, &[rat(1), rat(0), rat(0), rat(1)]).unwrap();
        assert!(is_nondegenerate_trace(&m2, &trace));

        let a = qs3();
        let mut id = vec![rat(0); 6];
        id[0] = rat(1);
        let tau = TraceFunctional::from_covector(&a, &id).unwrap();
        assert!(is_nondegenerate_trace(&a, &tau));

        assert_eq!(
            TraceFunctional::from_covector(&m2, &[rat(0), rat(1), rat(0), rat(0)]),
            Err(StructureError::NotTracial { i: 0, j: 1 })
        );
    }

    #[test]
    fn nondegenerate_search() {
        assert!(matches!(
            has_nondegenerate_trace(&m(3), 1, 4).unwrap(),
            TraceSearch::Found { .. }
        ));
        assert!(matches!(
            has_nondegenerate_trace(&qs3(), 1, 16).unwrap(),
            TraceSearch::Found { .. }
        ));
        match has_nondegenerate_trace(&upper_triangular(2).unwrap(), 1, 4).unwrap() {
            TraceSearch::DefiniteNegative { common_radical } => {
                assert!(common_radical.contains_vector(&unit_vector(3, 1)))
            }
            other => panic!("expected definite negative, got {other:?}"),
        }
        assert_eq!(has_nondegenerate_trace(&m(2), 1, 0), Err(StructureError::ZeroTrials));
    }

    #[test]
    fn radical_power_chain_reaches_zero() {
        let t3 = upper_triangular(3).unwrap();
        let rad = radical(&t3);
        assert_eq!(rad.dim(), 3);
        let chain = power_chain(&t3, &rad);
        assert!(chain.last().unwrap().is_zero());
        assert!(chain.len() <= t3.dim() + 1);
    }
}
