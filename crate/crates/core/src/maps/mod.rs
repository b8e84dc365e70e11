//! Linear self-maps of an algebra: derivation-type map spaces, Jordan and
//! multiplicativity checks, sampling-based local tests and the theorem
//! verifiers built on top of them.
//!
//! A map is a `dim × dim` matrix acting on coefficient columns, so column
//! `q` holds the image of `b_q`. Map spaces live in `Q^{dim²}` with the
//! matrix flattened row-major (entry `(p, q)` at index `p·dim + q`).

mod checks;
mod local;
mod spaces;
mod verify;

pub use checks::{
    cubic_condition_check, cubic_defect, jordan_defect, jordan_homomorphism_check, multiplicativity_check,
    multiplicativity_defect, CheckOutcome, Multiplicativity,
};
pub use local::{
    local_derivation_test, local_inner_automorphism_at, local_inner_automorphism_test, pointwise_inner_witness,
    LocalDerivationOutcome, SimilarityOutcome,
};
pub use spaces::{derivation_space, inner_derivation_space, jordan_derivation_space, theorem31_hypothesis_space};
pub use verify::{
    leibniz_defect, verify_theorem31, verify_theorem41, witness_rechecks, Check, CheckRole, Verdict,
    VerificationReport, Violation, Witness,
};

use thiserror::Error;

use crate::algebra::{Element, FinAlgebra, Side};
use crate::linalg::{rat, LinalgError, Mat, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map acts on dimension {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("map matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("sample count must be at least 1")]
    ZeroSamples,
    #[error("the algebra has no unit")]
    NotUnital,
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A linear self-map of a `dim`-dimensional algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    matrix: Mat,
}

impl LinearMap {
    pub fn new(matrix: Mat) -> Result<Self, MapError> {
        if matrix.rows() != matrix.cols() {
            return Err(MapError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap {
            matrix: Mat::identity(dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap {
            matrix: Mat::zeros(dim, dim),
        }
    }

    pub fn scalar(dim: usize, s: &Rational) -> Self {
        LinearMap {
            matrix: Mat::identity(dim).scale(s),
        }
    }

    /// From `dim²` entries in row-major order.
    pub fn from_flat(dim: usize, entries: &[Rational]) -> Result<Self, MapError> {
        if entries.len() != dim * dim {
            return Err(MapError::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(LinearMap {
            matrix: Mat::from_fn(dim, dim, |p, q| entries[p * dim + q].clone()),
        })
    }

    /// Transpose on `M_n` in the matrix-unit basis: `e_pq ↦ e_qp`.
    pub fn transpose(n: usize) -> Self {
        let dim = n * n;
        let swap = |i: usize| (i % n) * n + i / n;
        LinearMap {
            matrix: Mat::from_fn(dim, dim, |r, c| if r == swap(c) { rat(1) } else { rat(0) }),
        }
    }

    /// `x ↦ [x, m] = xm − mx`.
    pub fn inner_derivation(a: &FinAlgebra, m: &Element) -> Result<Self, MapError> {
        check_element(a, m)?;
        let r = a.mult_operator(m, Side::Right).expect("checked");
        let l = a.mult_operator(m, Side::Left).expect("checked");
        Ok(LinearMap { matrix: r.sub(&l) })
    }

    /// `x ↦ u x u⁻¹`; `None` if `u` is not invertible.
    pub fn conjugation(a: &FinAlgebra, u: &Element) -> Result<Option<Self>, MapError> {
        check_element(a, u)?;
        let Some(u_inv) = a.inverse(u) else { return Ok(None) };
        let l = a.mult_operator(u, Side::Left).expect("checked");
        let r = a.mult_operator(&u_inv, Side::Right).expect("checked");
        Ok(Some(LinearMap { matrix: &l * &r }))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.matrix.entries().to_vec()
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::new(self.matrix.mul_vec(x.coeffs()))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.dim()
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap {
            matrix: &self.matrix * &inner.matrix,
        }
    }

    /// `self ∘ other − other ∘ self`.
    pub fn bracket(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            matrix: (&self.matrix * &other.matrix).sub(&(&other.matrix * &self.matrix)),
        }
    }
}

/// A subspace of `End(A)`, flattened row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapSpace {
    dim: usize,
    space: Subspace,
}

impl MapSpace {
    pub fn new(dim: usize, space: Subspace) -> Result<Self, MapError> {
        if space.ambient_dim() != dim * dim {
            return Err(MapError::DimensionMismatch {
                expected: dim * dim,
                found: space.ambient_dim(),
            });
        }
        Ok(MapSpace { dim, space })
    }

    pub fn algebra_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the space of maps.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_maps(&self) -> Vec<LinearMap> {
        self.space
            .basis()
            .iter()
            .map(|v| LinearMap::from_flat(self.dim, v).expect("flattened length"))
            .collect()
    }

    pub fn contains_map(&self, d: &LinearMap) -> bool {
        d.dim() == self.dim && self.space.contains_vector(&d.flatten())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MapSpace) -> bool {
        self.dim == other.dim && self.space.contains(&other.space).unwrap_or(false)
    }

    pub fn combine(&self, coeffs: &[Rational]) -> LinearMap {
        LinearMap::from_flat(self.dim, &self.space.combine(coeffs)).expect("flattened length")
    }
}

fn check_element(a: &FinAlgebra, x: &Element) -> Result<(), MapError> {
    if x.dim() != a.dim() {
        return Err(MapError::DimensionMismatch {
            expected: a.dim(),
            found: x.dim(),
        });
    }
    Ok(())
}

fn check_map(a: &FinAlgebra, t: &LinearMap) -> Result<(), MapError> {
    if t.dim() != a.dim() {
        return Err(MapError::DimensionMismatch {
            expected: a.dim(),
            found: t.dim(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_algebra;

    #[test]
    fn transpose_swaps_matrix_units() {
        let m2 = matrix_algebra(2).unwrap();
        let t = LinearMap::transpose(2);
        assert_eq!(t.apply(&m2.basis_element(1)), m2.basis_element(2));
        assert_eq!(t.apply(&m2.basis_element(3)), m2.basis_element(3));
        assert_eq!(t.compose(&t), LinearMap::identity(4));
    }

    #[test]
    fn inner_derivation_matches_bracket() {
        let m2 = matrix_algebra(2).unwrap();
        let m = Element::new(vec![rat(1), rat(2), rat(-1), rat(3)]);
        let d = LinearMap::inner_derivation(&m2, &m).unwrap();
        let x = Element::new(vec![rat(0), rat(5), rat(1), rat(-2)]);
        assert_eq!(d.apply(&x), m2.commutator(&x, &m));
    }

    #[test]
    fn flat_layout_is_row_major() {
        let d = LinearMap::from_flat(2, &[rat(1), rat(2), rat(3), rat(4)]).unwrap();
        assert_eq!(d.matrix()[(0, 1)], rat(2));
        assert_eq!(d.flatten(), vec![rat(1), rat(2), rat(3), rat(4)]);
        assert!(LinearMap::from_flat(2, &[rat(1)]).is_err());
        assert!(LinearMap::new(Mat::zeros(2, 3)).is_err());
    }
}
