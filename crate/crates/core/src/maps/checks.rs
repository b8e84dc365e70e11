//! Exact identity checks for a fixed map `T`, each returning a re-checkable
//! witness on failure.

use super::spaces::orderings;
use super::{check_map, LinearMap, MapError};
use crate::algebra::{Element, FinAlgebra};
use crate::structure::commutator_subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    /// Elements at which the (polarized) identity fails.
    Violated {
        witness: Vec<Element>,
    },
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds)
    }

    pub fn witness(&self) -> Option<&[Element]> {
        match self {
            CheckOutcome::Holds => None,
            CheckOutcome::Violated { witness } => Some(witness),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicativity {
    Homomorphism,
    Antihomomorphism,
}

/// Probe elements: the unit first when there is one, then the basis.
fn probes(a: &FinAlgebra) -> Vec<Element> {
    a.unit()
        .cloned()
        .into_iter()
        .chain((0..a.dim()).map(|i| a.basis_element(i)))
        .collect()
}

/// `T(xy + yx) − T(x)T(y) − T(y)T(x)`, the polarized Jordan defect.
pub fn jordan_defect(a: &FinAlgebra, t: &LinearMap, x: &Element, y: &Element) -> Element {
    let sym = &a.mul(x, y) + &a.mul(y, x);
    let (tx, ty) = (t.apply(x), t.apply(y));
    &(&t.apply(&sym) - &a.mul(&tx, &ty)) - &a.mul(&ty, &tx)
}

/// `T(x²) = T(x)²` for all `x`, checked in the polarized form
/// `T(xy + yx) = T(x)T(y) + T(y)T(x)` at `(1, 1)` (if unital) and at all
/// basis pairs `i ≤ j`.
pub fn jordan_homomorphism_check(a: &FinAlgebra, t: &LinearMap) -> Result<CheckOutcome, MapError> {
    check_map(a, t)?;
    let ps = probes(a);
    for (s, x) in ps.iter().enumerate() {
        for y in &ps[s..] {
            if !jordan_defect(a, t, x, y).is_zero() {
                return Ok(CheckOutcome::Violated {
                    witness: vec![x.clone(), y.clone()],
                });
            }
        }
    }
    Ok(CheckOutcome::Holds)
}

/// `T(xy) − T(x)T(y)` (homomorphism) or `T(xy) − T(y)T(x)` (antihomomorphism).
pub fn multiplicativity_defect(
    a: &FinAlgebra,
    t: &LinearMap,
    mode: Multiplicativity,
    x: &Element,
    y: &Element,
) -> Element {
    let (tx, ty) = (t.apply(x), t.apply(y));
    let rhs = match mode {
        Multiplicativity::Homomorphism => a.mul(&tx, &ty),
        Multiplicativity::Antihomomorphism => a.mul(&ty, &tx),
    };
    &t.apply(&a.mul(x, y)) - &rhs
}

/// Checks `T(b_i b_j) = T(b_i)T(b_j)` (or `T(b_j)T(b_i)`) for every ordered pair.
pub fn multiplicativity_check(a: &FinAlgebra, t: &LinearMap, mode: Multiplicativity) -> Result<CheckOutcome, MapError> {
    check_map(a, t)?;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.basis_element(i), a.basis_element(j));
            if !multiplicativity_defect(a, t, mode, &x, &y).is_zero() {
                return Ok(CheckOutcome::Violated { witness: vec![x, y] });
            }
        }
    }
    Ok(CheckOutcome::Holds)
}

/// `Σ_σ [T(x_σ1)T(x_σ2)T(x_σ3) − x_σ1 x_σ2 x_σ3]` over the six orderings,
/// the full polarization of `T(x)³ − x³`.
pub fn cubic_defect(a: &FinAlgebra, t: &LinearMap, xs: [&Element; 3]) -> Element {
    let ts = [t.apply(xs[0]), t.apply(xs[1]), t.apply(xs[2])];
    let mut acc = a.zero();
    for [p, q, r] in orderings(0, 1, 2) {
        let tt = a.mul(&a.mul(&ts[p], &ts[q]), &ts[r]);
        let xx = a.mul(&a.mul(xs[p], xs[q]), xs[r]);
        acc = &(&acc + &tt) - &xx;
    }
    acc
}

/// `T(x)³ − x³ ∈ [A,A]` for all `x`, checked on the unit triple (if unital)
/// and every basis triple `i ≤ j ≤ k` in polarized form.
pub fn cubic_condition_check(a: &FinAlgebra, t: &LinearMap) -> Result<CheckOutcome, MapError> {
    check_map(a, t)?;
    let comm = commutator_subspace(a);
    let ps = probes(a);
    for i in 0..ps.len() {
        for j in i..ps.len() {
            for k in j..ps.len() {
                let d = cubic_defect(a, t, [&ps[i], &ps[j], &ps[k]]);
                if !comm.contains_vector(d.coeffs()) {
                    return Ok(CheckOutcome::Violated {
                        witness: vec![ps[i].clone(), ps[j].clone(), ps[k].clone()],
                    });
                }
            }
        }
    }
    Ok(CheckOutcome::Holds)
}
