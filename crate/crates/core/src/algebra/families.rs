//! Constructors for the standard families and closure operations.

use num_traits::Zero;

use super::{AlgebraError, Element, FinAlgebra, FiniteGroup, Side};
use crate::linalg::{unit_vector, Mat, Rational, Subspace};

fn matrix_unit_label(p: usize, q: usize, n: usize) -> String {
    if n <= 9 {
        format!("e{}{}", p + 1, q + 1)
    } else {
        format!("e{}_{}", p + 1, q + 1)
    }
}

/// `M_n(Q)` on the matrix units `e_pq`, ordered row-major (index `p·n + q`).
pub fn matrix_algebra(n: usize) -> Result<FinAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    let dim = n * n;
    let unit = (0..n).fold(Element::zero(dim), |acc, p| &acc + &Element::basis(dim, p * n + p));
    let labels = (0..dim).map(|i| matrix_unit_label(i / n, i % n, n)).collect();
    FinAlgebra::from_products(
        dim,
        |i, j| {
            let (p, q) = (i / n, i % n);
            let (r, s) = (j / n, j % n);
            if q == r {
                unit_vector(dim, p * n + s)
            } else {
                vec![Rational::zero(); dim]
            }
        },
        Some(unit),
        Some(labels),
    )
}

/// Group algebra `Q[G]`, basis indexed by the group elements.
pub fn group_algebra(g: &FiniteGroup) -> Result<FinAlgebra, AlgebraError> {
    let dim = g.order();
    let labels = (0..dim).map(|i| format!("g{i}")).collect();
    FinAlgebra::from_products(
        dim,
        |i, j| unit_vector(dim, g.mul(i, j)),
        Some(Element::basis(dim, g.identity())),
        Some(labels),
    )
}

/// Upper-triangular `n × n` matrices on the units `e_pq`, `p ≤ q`, listed
/// row by row.
pub fn upper_triangular(n: usize) -> Result<FinAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    let units: Vec<(usize, usize)> = (0..n).flat_map(|p| (p..n).map(move |q| (p, q))).collect();
    let dim = units.len();
    let index = |p: usize, q: usize| units.iter().position(|&u| u == (p, q)).expect("upper unit");
    let unit = (0..n).fold(Element::zero(dim), |acc, p| &acc + &Element::basis(dim, index(p, p)));
    let labels = units.iter().map(|&(p, q)| matrix_unit_label(p, q, n)).collect();
    FinAlgebra::from_products(
        dim,
        |i, j| {
            let (p, q) = units[i];
            let (r, s) = units[j];
            if q == r {
                unit_vector(dim, index(p, s))
            } else {
                vec![Rational::zero(); dim]
            }
        },
        Some(unit),
        Some(labels),
    )
}

/// `dim`-dimensional algebra in which every product is zero.
pub fn zero_product_algebra(dim: usize) -> Result<FinAlgebra, AlgebraError> {
    FinAlgebra::new(dim, vec![Rational::zero(); dim * dim * dim], None, None)
}

/// `A × B` with componentwise product; the basis of `A` comes first.
pub fn direct_product(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => {
            let mut c = ua.coeffs().to_vec();
            c.extend_from_slice(ub.coeffs());
            Some(Element::new(c))
        }
        _ => None,
    };
    let labels = (0..da)
        .map(|i| format!("({},0)", a.label(i)))
        .chain((0..db).map(|j| format!("(0,{})", b.label(j))))
        .collect();
    FinAlgebra::from_products(
        dim,
        |i, j| {
            let mut out = vec![Rational::zero(); dim];
            if i < da && j < da {
                out[..da].clone_from_slice(a.basis_product(i, j));
            } else if i >= da && j >= da {
                out[da..].clone_from_slice(b.basis_product(i - da, j - da));
            }
            out
        },
        unit,
        Some(labels),
    )
}

/// `A ⊗ B`; basis `a_i ⊗ b_j` at index `i·dim(B) + j`.
pub fn tensor_product(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let kron = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        x.iter().flat_map(|xi| y.iter().map(move |yj| xi * yj)).collect()
    };
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => Some(Element::new(kron(ua.coeffs(), ub.coeffs()))),
        _ => None,
    };
    let labels = (0..dim)
        .map(|t| format!("{}⊗{}", a.label(t / db), b.label(t % db)))
        .collect();
    FinAlgebra::from_products(
        dim,
        |s, t| {
            let (i, j) = (s / db, s % db);
            let (k, l) = (t / db, t % db);
            kron(a.basis_product(i, k), b.basis_product(j, l))
        },
        unit,
        Some(labels),
    )
}

/// Unitization `A₁ = Q·1 + A`. The new unit sits at index 0 and the old
/// basis is shifted by one; this is done even when `A` already has a unit.
pub fn adjoin_unit(a: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
    let d = a.dim();
    let dim = d + 1;
    let labels = std::iter::once("1".to_string())
        .chain((0..d).map(|i| a.label(i)))
        .collect();
    FinAlgebra::from_products(
        dim,
        |i, j| match (i, j) {
            (0, j) => unit_vector(dim, j),
            (i, 0) => unit_vector(dim, i),
            (i, j) => {
                let mut out = vec![Rational::zero()];
                out.extend_from_slice(a.basis_product(i - 1, j - 1));
                out
            }
        },
        Some(Element::basis(dim, 0)),
        Some(labels),
    )
}

/// `Z(A) = {x : x b_i = b_i x for every basis element}`.
pub fn center(a: &FinAlgebra) -> Subspace {
    let d = a.dim();
    let mut rows = Vec::with_capacity(d * d);
    for i in 0..d {
        let b = a.basis_element(i);
        let l = a.mult_operator(&b, Side::Left).expect("basis element");
        let r = a.mult_operator(&b, Side::Right).expect("basis element");
        rows.extend(l.sub(&r).row_vectors());
    }
    Mat::from_rows(d, rows).expect("rows have length dim").kernel()
}
