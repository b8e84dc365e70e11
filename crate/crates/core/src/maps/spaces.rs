//! Exact map spaces cut out by linear identities in the unknown map `D`.
//!
//! Each identity is assembled as a [`LinExpr`]: a `dim × dim²` coefficient
//! block giving the coordinates of an algebra-valued expression as linear
//! forms in the entries of `D`. "For all x" conditions are polarized over
//! basis tuples, which is exact over an infinite field.

use num_traits::{One, Zero};

use super::MapSpace;
use crate::algebra::{Element, FinAlgebra};
use crate::linalg::{Rational, Subspace};
use crate::structure::commutator_subspace;

/// Algebra-valued linear expression in the entries of an unknown map.
struct LinExpr {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl LinExpr {
    fn new(n: usize) -> Self {
        LinExpr {
            n,
            rows: vec![vec![Rational::zero(); n * n]; n],
        }
    }

    /// `+= s·D(z)`; `D(z)_k = Σ_q D[k][q] z_q`.
    fn add_map_of(&mut self, z: &[Rational], s: &Rational) {
        let n = self.n;
        for (q, zq) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let c = s * zq;
            for k in 0..n {
                self.rows[k][k * n + q] += &c;
            }
        }
    }

    /// `+= s·D(b_q)·y`; `D(b_q) = Σ_p D[p][q] b_p`.
    fn add_map_times(&mut self, a: &FinAlgebra, q: usize, y: &Element, s: &Rational) {
        let n = self.n;
        for p in 0..n {
            let bp_y = a.mul(&a.basis_element(p), y);
            for (k, v) in bp_y.coeffs().iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                self.rows[k][p * n + q] += s * v;
            }
        }
    }

    /// `+= s·y·D(b_q)`.
    fn add_times_map(&mut self, a: &FinAlgebra, y: &Element, q: usize, s: &Rational) {
        let n = self.n;
        for p in 0..n {
            let y_bp = a.mul(y, &a.basis_element(p));
            for (k, v) in y_bp.coeffs().iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                self.rows[k][p * n + q] += s * v;
            }
        }
    }

    /// Constrain the whole expression to vanish.
    fn vanish_into(self, out: &mut Subspace) {
        for row in self.rows {
            out.insert(row);
        }
    }

    /// Constrain the expression to lie in the subspace whose annihilator is
    /// `ann`: every covector of `ann` must kill it.
    fn vanish_modulo_into(&self, ann: &Subspace, out: &mut Subspace) {
        for w in ann.basis() {
            let mut row = vec![Rational::zero(); self.n * self.n];
            for (wk, r) in w.iter().zip(&self.rows).filter(|(wk, _)| !wk.is_zero()) {
                for (o, x) in row.iter_mut().zip(r) {
                    if !x.is_zero() {
                        *o += wk * x;
                    }
                }
            }
            out.insert(row);
        }
    }
}

fn solution_space(n: usize, constraints: Subspace) -> MapSpace {
    MapSpace::new(n, constraints.annihilator()).expect("ambient is dim²")
}

/// `Der(A)`: `D(b_i b_j) = D(b_i) b_j + b_i D(b_j)` for all basis pairs.
pub fn derivation_space(a: &FinAlgebra) -> MapSpace {
    let n = a.dim();
    let one = Rational::one();
    let minus = -Rational::one();
    let mut constraints = Subspace::zero(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = LinExpr::new(n);
            e.add_map_of(a.basis_product(i, j), &one);
            e.add_map_times(a, i, &a.basis_element(j), &minus);
            e.add_times_map(a, &a.basis_element(i), j, &minus);
            e.vanish_into(&mut constraints);
        }
    }
    solution_space(n, constraints)
}

/// Span of `ad_{b_k}: x ↦ [x, b_k]`.
pub fn inner_derivation_space(a: &FinAlgebra) -> MapSpace {
    let n = a.dim();
    let maps = (0..n).map(|k| {
        super::LinearMap::inner_derivation(a, &a.basis_element(k))
            .expect("basis element")
            .flatten()
    });
    MapSpace::new(n, Subspace::span(n * n, maps)).expect("ambient is dim²")
}

/// Jordan derivations, polarized:
/// `D(b_i b_j + b_j b_i) = D(b_i)b_j + b_i D(b_j) + D(b_j)b_i + b_j D(b_i)`, `i ≤ j`.
pub fn jordan_derivation_space(a: &FinAlgebra) -> MapSpace {
    let n = a.dim();
    let one = Rational::one();
    let minus = -Rational::one();
    let mut constraints = Subspace::zero(n * n);
    for i in 0..n {
        for j in i..n {
            let (bi, bj) = (a.basis_element(i), a.basis_element(j));
            let mut e = LinExpr::new(n);
            e.add_map_of(a.basis_product(i, j), &one);
            e.add_map_of(a.basis_product(j, i), &one);
            e.add_map_times(a, i, &bj, &minus);
            e.add_times_map(a, &bi, j, &minus);
            e.add_map_times(a, j, &bi, &minus);
            e.add_times_map(a, &bj, i, &minus);
            e.vanish_into(&mut constraints);
        }
    }
    solution_space(n, constraints)
}

/// All six orderings of a triple, repeats included.
pub(crate) fn orderings(i: usize, j: usize, k: usize) -> [[usize; 3]; 6] {
    [[i, j, k], [i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]]
}

/// Maps with `D(x)x ∈ [A,A]` and `D(x)x² ∈ [A,A]` for every `x`.
///
/// Degree 2 polarizes to `D(b_i)b_j + D(b_j)b_i ∈ [A,A]` (`i ≤ j`); degree 3
/// to `Σ_σ D(b_σ1)(b_σ2 b_σ3) ∈ [A,A]` over the orderings of `i ≤ j ≤ k`.
/// Membership is imposed through the annihilator of `[A,A]`.
pub fn theorem31_hypothesis_space(a: &FinAlgebra) -> MapSpace {
    let n = a.dim();
    let ann = commutator_subspace(a).annihilator();
    let one = Rational::one();
    let mut constraints = Subspace::zero(n * n);
    if ann.is_zero() {
        return solution_space(n, constraints);
    }
    for i in 0..n {
        for j in i..n {
            let mut e = LinExpr::new(n);
            e.add_map_times(a, i, &a.basis_element(j), &one);
            e.add_map_times(a, j, &a.basis_element(i), &one);
            e.vanish_modulo_into(&ann, &mut constraints);
        }
    }
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let mut e = LinExpr::new(n);
                for [p, q, r] in orderings(i, j, k) {
                    let y = Element::new(a.basis_product(q, r).to_vec());
                    e.add_map_times(a, p, &y, &one);
                }
                e.vanish_modulo_into(&ann, &mut constraints);
            }
        }
    }
    solution_space(n, constraints)
}
