//! Independent oracles for the integration tests: a separate Gaussian
//! elimination, dense matrix arithmetic and direct structure-constant
//! products, none of which go through the library's linear algebra.

#![allow(dead_code)]

use csalg::{FinAlgebra, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Row space kept in (not necessarily reduced) echelon form.
#[derive(Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn of(rows: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut e = Echelon::default();
        for r in rows {
            e.add(r);
        }
        e
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let f = &v[*p] / &r[*p];
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    /// True if `v` was independent of the rows so far.
    pub fn add(&mut self, v: Vec<Rational>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    Echelon::of(rows.iter().cloned()).rank()
}

pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for r in (c + 1)..n {
            let f = &a[r][c] / &a[c][c];
            let pivot_row = a[c].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * y;
            }
        }
    }
    d
}

/// Inverse by Gauss-Jordan on `[m | I]`.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { q(1) } else { q(0) }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let row_c = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&row_c) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let (n, m, k) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| {
            (0..k)
                .map(|j| (0..m).fold(q(0), |acc, t| acc + &a[i][t] * &b[t][j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(q(0), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Coefficients of an `n × n` matrix in row-major order, as a matrix.
pub fn reshape(v: &[Rational], n: usize) -> Vec<Vec<Rational>> {
    v.chunks(n).map(<[Rational]>::to_vec).collect()
}

pub fn flatten(m: &[Vec<Rational>]) -> Vec<Rational> {
    m.iter().flatten().cloned().collect()
}

/// `xy` straight from the structure constants.
pub fn product(a: &FinAlgebra, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = a.dim();
    let c = a.constants();
    let mut out = vec![q(0); n];
    for i in (0..n).filter(|&i| !x[i].is_zero()) {
        for j in (0..n).filter(|&j| !y[j].is_zero()) {
            let s = &x[i] * &y[j];
            for k in 0..n {
                let cijk = &c[(i * n + j) * n + k];
                if !cijk.is_zero() {
                    out[k] += &s * cijk;
                }
            }
        }
    }
    out
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect()
}

pub fn sub(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Spanning set of `[A,A]` from basis commutators.
pub fn commutators(a: &FinAlgebra) -> Echelon {
    let n = a.dim();
    let mut e = Echelon::default();
    for i in 0..n {
        for j in 0..n {
            e.add(sub(
                &product(a, &unit(n, i), &unit(n, j)),
                &product(a, &unit(n, j), &unit(n, i)),
            ));
        }
    }
    e
}

/// Whether the span of `basis` is closed under multiplication by every
/// basis element on both sides.
pub fn is_ideal(a: &FinAlgebra, basis: &[Vec<Rational>]) -> bool {
    let n = a.dim();
    let span = Echelon::of(basis.iter().cloned());
    basis.iter().all(|v| {
        (0..n).all(|i| span.contains(&product(a, &unit(n, i), v)) && span.contains(&product(a, v, &unit(n, i))))
    })
}

/// Conjugacy classes of a group given by its Cayley table, by brute force.
pub fn class_count(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    let e = (0..n).find(|&g| (0..n).all(|h| table[g][h] == h)).expect("identity");
    let inv = |g: usize| (0..n).find(|&h| table[g][h] == e).expect("inverse");
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        for g in 0..n {
            seen[table[table[g][x]][inv(g)]] = true;
        }
    }
    classes
}
