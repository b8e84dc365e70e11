//! Pointwise ("local") tests. A local condition quantifies an existential
//! per element, which is not linear, so these tests sample: a failure is a
//! genuine counterexample, a pass only covers the sampled elements.

use super::{check_element, check_map, derivation_space, LinearMap, MapError};
use crate::algebra::{Element, FinAlgebra, Side};
use crate::linalg::{solve_affine, LinalgError, Mat};
use crate::random::{random_element, random_in_subspace, rng_from_seed, SeededRng};

/// Some `m` with `[x, m] = d(x)`, or `Infeasible`.
pub fn pointwise_inner_witness(a: &FinAlgebra, d: &LinearMap, x: &Element) -> Result<Element, MapError> {
    check_map(a, d)?;
    check_element(a, x)?;
    // m ↦ xm − mx
    let op = a
        .mult_operator(x, Side::Left)
        .expect("checked")
        .sub(&a.mult_operator(x, Side::Right).expect("checked"));
    let sol = solve_affine(&op, d.apply(x).coeffs())?;
    Ok(Element::new(sol.particular))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalDerivationOutcome {
    /// Every probed element had a derivation witness. Covers only the
    /// `checked` probes.
    Pass {
        checked: usize,
    },
    Counterexample {
        x: Element,
    },
}

/// Probes `d(x) ∈ {E(x) : E ∈ Der(A)}` at the unit (if any), at every basis
/// element, then at `samples` seeded random elements.
pub fn local_derivation_test(
    a: &FinAlgebra,
    d: &LinearMap,
    seed: u64,
    samples: usize,
) -> Result<LocalDerivationOutcome, MapError> {
    check_map(a, d)?;
    if samples == 0 {
        return Err(MapError::ZeroSamples);
    }
    let der = derivation_space(a).basis_maps();
    let mut rng = rng_from_seed(seed);
    let fixed: Vec<Element> = a
        .unit()
        .cloned()
        .into_iter()
        .chain((0..a.dim()).map(|i| a.basis_element(i)))
        .collect();
    let random = (0..samples).map(|_| random_element(&mut rng, a.dim()));
    let mut checked = 0;
    for x in fixed.into_iter().chain(random) {
        let columns: Vec<_> = der.iter().map(|e| e.apply(&x).into_coeffs()).collect();
        let m = Mat::from_columns(a.dim(), &columns)?;
        match solve_affine(&m, d.apply(&x).coeffs()) {
            Ok(_) => checked += 1,
            Err(LinalgError::Infeasible) => return Ok(LocalDerivationOutcome::Counterexample { x }),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(LocalDerivationOutcome::Pass { checked })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimilarityOutcome {
    /// Invertible `u` with `u x u⁻¹ = t(x)`.
    Witness { u: Element },
    /// Only `u = 0` satisfies `u x = t(x) u`.
    Infeasible,
    /// Intertwiners exist but none of the sampled ones was invertible.
    Inconclusive,
}

/// Looks for an invertible `u` with `u x = t(x) u` by sampling the
/// intertwiner space.
pub fn local_inner_automorphism_at(
    a: &FinAlgebra,
    t: &LinearMap,
    x: &Element,
    rng: &mut SeededRng,
    trials: usize,
) -> Result<SimilarityOutcome, MapError> {
    check_map(a, t)?;
    check_element(a, x)?;
    if !a.is_unital() {
        return Err(MapError::NotUnital);
    }
    let tx = t.apply(x);
    // u ↦ ux − t(x)u
    let op = a
        .mult_operator(x, Side::Right)
        .expect("checked")
        .sub(&a.mult_operator(&tx, Side::Left).expect("checked"));
    let intertwiners = op.kernel();
    if intertwiners.is_zero() {
        return Ok(SimilarityOutcome::Infeasible);
    }
    // unit-weight combinations first, then wider random ones
    for trial in 0..trials {
        let u = Element::new(random_in_subspace(rng, &intertwiners, 1 + trial as i64));
        if u.is_zero() {
            continue;
        }
        if a.mult_operator(&u, Side::Left).expect("checked").rank() == a.dim() {
            return Ok(SimilarityOutcome::Witness { u });
        }
    }
    Ok(SimilarityOutcome::Inconclusive)
}

/// Runs [`local_inner_automorphism_at`] at the unit, at every basis element
/// and at `samples` seeded random elements.
pub fn local_inner_automorphism_test(
    a: &FinAlgebra,
    t: &LinearMap,
    seed: u64,
    samples: usize,
    trials: usize,
) -> Result<Vec<(Element, SimilarityOutcome)>, MapError> {
    check_map(a, t)?;
    if !a.is_unital() {
        return Err(MapError::NotUnital);
    }
    if samples == 0 {
        return Err(MapError::ZeroSamples);
    }
    let mut rng = rng_from_seed(seed);
    let fixed: Vec<Element> = a
        .unit()
        .cloned()
        .into_iter()
        .chain((0..a.dim()).map(|i| a.basis_element(i)))
        .collect();
    let random: Vec<Element> = (0..samples).map(|_| random_element(&mut rng, a.dim())).collect();
    fixed
        .into_iter()
        .chain(random)
        .map(|x| {
            let outcome = local_inner_automorphism_at(a, t, &x, &mut rng, trials)?;
            Ok((x, outcome))
        })
        .collect()
}
