//! Finite-dimensional associative algebras given by structure constants.

mod families;
mod group;

pub use families::{
    adjoin_unit, center, direct_product, group_algebra, matrix_algebra, tensor_product, upper_triangular,
    zero_product_algebra,
};
pub use group::{FiniteGroup, GroupError};

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{format_vector, LinalgError, Mat, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("structure tensor has {found} entries, expected {expected}")]
    TensorSize { expected: usize, found: usize },
    #[error("not associative at basis triple ({i}, {j}, {k}): (b{i}b{j})b{k} = {left}, b{i}(b{j}b{k}) = {right}")]
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
        left: Element,
        right: Element,
    },
    #[error("declared unit fails on basis element {basis}")]
    BadUnit { basis: usize },
    #[error("label list has {found} names for dimension {expected}")]
    LabelCount { expected: usize, found: usize },
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Coefficient vector over an algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element(Vec<Rational>);

impl Element {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Element(coeffs)
    }

    pub fn zero(dim: usize) -> Self {
        Element(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Element(crate::linalg::unit_vector(dim, i))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element(self.0.iter().map(|x| x * s).collect())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.0))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

/// Which multiplication operator: `y ↦ xy` or `y ↦ yx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite-dimensional associative algebra over the rationals.
///
/// `b_i · b_j = Σ_k c[i][j][k] b_k`, with the tensor stored densely. The
/// constructor rejects non-associative tensors and bogus units, so every
/// value of this type is a genuine associative algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinAlgebra {
    dim: usize,
    consts: Vec<Rational>,
    unit: Option<Element>,
    labels: Option<Vec<String>>,
}

impl FinAlgebra {
    pub fn new(
        dim: usize,
        consts: Vec<Rational>,
        unit: Option<Element>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if consts.len() != dim * dim * dim {
            return Err(AlgebraError::TensorSize {
                expected: dim * dim * dim,
                found: consts.len(),
            });
        }
        if let Some(u) = &unit {
            if u.dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    found: u.dim(),
                });
            }
        }
        if let Some(l) = &labels {
            if l.len() != dim {
                return Err(AlgebraError::LabelCount {
                    expected: dim,
                    found: l.len(),
                });
            }
        }
        let a = FinAlgebra {
            dim,
            consts,
            unit,
            labels,
        };
        a.check_associative()?;
        a.check_unit()?;
        Ok(a)
    }

    /// Builds the tensor from a closure giving `b_i b_j` as a coefficient vector.
    pub fn from_products(
        dim: usize,
        mut product: impl FnMut(usize, usize) -> Vec<Rational>,
        unit: Option<Element>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        let mut consts = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(AlgebraError::DimensionMismatch {
                        expected: dim,
                        found: p.len(),
                    });
                }
                consts.extend(p);
            }
        }
        FinAlgebra::new(dim, consts, unit, labels)
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let bij = Element(self.basis_product(i, j).to_vec());
                for k in 0..n {
                    let left = self.mul_right_basis(&bij, k);
                    let bjk = Element(self.basis_product(j, k).to_vec());
                    let right = self.mul_left_basis(i, &bjk);
                    if left != right {
                        return Err(AlgebraError::NotAssociative { i, j, k, left, right });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        let Some(u) = &self.unit else { return Ok(()) };
        for i in 0..self.dim {
            let b = Element::basis(self.dim, i);
            if self.mul(u, &b) != b || self.mul(&b, u) != b {
                return Err(AlgebraError::BadUnit { basis: i });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Rational] {
        &self.consts
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }

    /// Coefficients of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.consts[start..start + self.dim]
    }

    pub fn unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{i}"),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim {
            return Err(AlgebraError::LabelCount {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim)
    }

    fn check_element(&self, x: &Element) -> Result<(), AlgebraError> {
        if x.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    /// Bilinear product. Panics on dimension mismatch; see [`Self::multiply`]
    /// for the checked form.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        assert!(x.dim() == self.dim && y.dim() == self.dim, "element dimension mismatch");
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        Element(out)
    }

    fn mul_right_basis(&self, x: &Element, k: usize) -> Element {
        self.mul(x, &Element::basis(self.dim, k))
    }

    fn mul_left_basis(&self, i: usize, x: &Element) -> Element {
        self.mul(&Element::basis(self.dim, i), x)
    }

    /// `[x, y] = xy − yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) - &self.mul(y, x)
    }

    pub fn power(&self, x: &Element, n: u32) -> Element {
        assert!(n >= 1, "powers start at 1 in a possibly non-unital algebra");
        let mut acc = x.clone();
        for _ in 1..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of `y ↦ xy` (left) or `y ↦ yx` (right) acting on coefficient
    /// columns, so that `L_{xy} = L_x L_y` and `R_{xy} = R_y R_x`.
    pub fn mult_operator(&self, x: &Element, side: Side) -> Result<Mat, AlgebraError> {
        self.check_element(x)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| {
                let b = Element::basis(self.dim, j);
                match side {
                    Side::Left => self.mul(x, &b).0,
                    Side::Right => self.mul(&b, x).0,
                }
            })
            .collect();
        Ok(Mat::from_columns(self.dim, &cols)?)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Two-sided inverse, if `x` is invertible in a unital algebra.
    pub fn inverse(&self, x: &Element) -> Option<Element> {
        let unit = self.unit.as_ref()?;
        let l = self.mult_operator(x, Side::Left).ok()?;
        let sol = crate::linalg::solve_affine(&l, unit.coeffs()).ok()?;
        if !sol.kernel.is_zero() {
            return None;
        }
        let y = Element(sol.particular);
        (self.mul(&y, x) == *unit).then_some(y)
    }

    /// Whether `ideal` is closed under multiplication by the algebra on both sides.
    pub fn is_ideal(&self, ideal: &Subspace) -> bool {
        ideal.ambient_dim() == self.dim
            && ideal.basis().iter().all(|v| {
                let x = Element(v.clone());
                (0..self.dim).all(|i| {
                    let b = Element::basis(self.dim, i);
                    ideal.contains_vector(&self.mul(&b, &x).0) && ideal.contains_vector(&self.mul(&x, &b).0)
                })
            })
    }

    /// The same algebra in the basis `b'_i = Σ_k p[k][i] b_k` (the columns of
    /// `p`). Labels are dropped.
    pub fn change_basis(&self, p: &Mat) -> Result<FinAlgebra, AlgebraError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: p.rows(),
            });
        }
        let p_inv = p.inverse()?;
        let new_basis: Vec<Element> = (0..self.dim).map(|i| Element(p.column(i))).collect();
        let unit = self.unit.as_ref().map(|u| Element(p_inv.mul_vec(u.coeffs())));
        FinAlgebra::from_products(
            self.dim,
            |i, j| p_inv.mul_vec(self.mul(&new_basis[i], &new_basis[j]).coeffs()),
            unit,
            None,
        )
    }

    /// Quotient `A / I`. The quotient basis is the images of the standard
    /// basis vectors at the non-pivot columns of `I`'s echelon basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<FinAlgebra, AlgebraError> {
        if ideal.ambient_dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotAnIdeal);
        }
        let free: Vec<usize> = (0..self.dim).filter(|c| !ideal.pivots().contains(c)).collect();
        if free.is_empty() {
            return Err(AlgebraError::ZeroDimension);
        }
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let unit = self.unit.as_ref().map(|u| Element(project(u.coeffs())));
        let labels = self
            .labels
            .as_ref()
            .map(|l| free.iter().map(|&c| l[c].clone()).collect());
        FinAlgebra::from_products(
            free.len(),
            |i, j| project(self.basis_product(free[i], free[j])),
            unit,
            labels,
        )
    }

    /// Span of the given elements' coefficient vectors.
    pub fn span_of<'a>(&self, elements: impl IntoIterator<Item = &'a Element>) -> Subspace {
        Subspace::span(self.dim, elements.into_iter().map(|e| e.0.clone()))
    }
}
