//! Exact rational linear algebra.
//!
//! Everything here works over [`Rational`] (arbitrary precision, always
//! normalized), so there is no tolerance anywhere: a subspace either contains
//! a vector or it does not. Subspaces are stored in reduced row echelon form,
//! which makes the representation canonical and lets `==` mean equality of
//! subspaces.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. The denominator is positive and coprime to the
/// numerator after every operation.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system is infeasible")]
    Infeasible,
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or just `p` when `q = 1`. The sign lives on the numerator.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p`, `p/q` or `-p/q` with decimal digits. The denominator may
/// not carry a sign and may not be zero.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let invalid = || RationalParseError::Invalid(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(invalid());
    }
    let numer: BigInt = num.parse().map_err(|_| invalid())?;
    let denom: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            d.parse().map_err(|_| invalid())?
        }
    };
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from its rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Mat { rows: n, cols, data })
    }

    /// Builds a matrix whose `c`-th column is `columns[c]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(LinalgError::DimensionMismatch {
                expected: rows,
                found: bad.len(),
            });
        }
        Ok(Mat::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Mat {
            rows,
            cols,
            data: entries.iter().map(|&e| rat(e)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Null space `{x : self·x = 0}`.
    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.cols, self.row_vectors()).annihilator()
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, (0..self.cols).map(|c| self.column(c)))
    }

    pub fn inverse(&self) -> Result<Mat, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let reduced = rref(&aug);
        if reduced.pivots.iter().take_while(|&&p| p < n).count() < n {
            return Err(LinalgError::Singular);
        }
        Ok(Mat::from_fn(n, n, |r, c| reduced.matrix[(r, n + c)].clone()))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

/// Matrix product. Panics when the inner dimensions disagree.
impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", format_vector(self.row(r)))?;
        }
        write!(f, "]")
    }
}

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form by Gauss-Jordan elimination.
pub fn rref(m: &Mat) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            a[(r, j)] *= &inv;
        }
        let pivot_row: Vec<Rational> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    a[(i, j)] -= &f * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    Rref {
        matrix: a,
        pivots,
        rank,
    }
}

/// Solution set `particular + kernel` of `m·x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub kernel: Subspace,
}

pub fn solve_affine(m: &Mat, b: &[Rational]) -> Result<AffineSolution, LinalgError> {
    if b.len() != m.rows {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows,
            found: b.len(),
        });
    }
    let n = m.cols;
    let aug = Mat::from_fn(
        m.rows,
        n + 1,
        |r, c| if c < n { m[(r, c)].clone() } else { b[r].clone() },
    );
    let reduced = rref(&aug);
    if reduced.pivots.last() == Some(&n) {
        return Err(LinalgError::Infeasible);
    }
    let mut particular = vec![Rational::zero(); n];
    for (r, &p) in reduced.pivots.iter().enumerate() {
        particular[p] = reduced.matrix[(r, n)].clone();
    }
    Ok(AffineSolution {
        particular,
        kernel: m.kernel(),
    })
}

/// A subspace of `Q^n`, stored as the nonzero rows of its reduced row
/// echelon basis. Two equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn try_span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        Ok(Subspace::span(ambient, vectors))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Adds `v` to the span, keeping the basis fully reduced. Returns whether
    /// the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must equal ambient dimension");
        self.reduce_in_place(&mut v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].recip();
        for x in v[lead..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.basis.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let f = row[lead].clone();
            for c in lead..self.ambient {
                if !v[c].is_zero() {
                    row[c] -= &f * &v[c];
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.basis.insert(at, v);
        true
    }

    fn reduce_in_place(&self, v: &mut [Rational]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for c in p..self.ambient {
                if !row[c].is_zero() {
                    v[c] -= &f * &row[c];
                }
            }
        }
    }

    /// Canonical representative of `v` modulo the subspace: the result is
    /// zero at every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length must equal ambient dimension");
        let mut out = v.to_vec();
        self.reduce_in_place(&mut out);
        out
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        assert_eq!(coeffs.len(), self.dim(), "one coefficient per basis vector");
        let mut out = vec![Rational::zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Orthogonal complement for the standard pairing: all covectors that
    /// vanish on the subspace. Over the rationals, `ann(ann(V)) = V`.
    pub fn annihilator(&self) -> Subspace {
        let free = (0..self.ambient).filter(|c| self.pivots.binary_search(c).is_err());
        let vectors = free.map(|f| {
            let mut x = vec![Rational::zero(); self.ambient];
            x[f] = Rational::one();
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                x[p] = -row[f].clone();
            }
            x
        });
        Subspace::span(self.ambient, vectors)
    }

    pub fn basis_matrix(&self) -> Mat {
        Mat::from_rows(self.ambient, self.basis.clone()).expect("basis rows have ambient length")
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        Ok(s)
    }

    /// `V ∩ W` as the common kernel of the stacked annihilator constraints.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// column vectors.
    pub fn map(&self, m: &Mat) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map domain must match ambient dimension");
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}", self.dim(), self.ambient)?;
        for v in &self.basis {
            write!(f, ", {}", format_vector(v))?;
        }
        write!(f, ")")
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let id = Mat::identity(3);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = Mat::zeros(2, 3);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);

        let m = Mat::from_i64(2, 2, &[1, 2, 2, 4]);
        let r = rref(&m);
        assert_eq!(r.matrix, Mat::from_i64(2, 2, &[1, 2, 0, 0]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn solve_affine_examples() {
        let b = vec![rat(3), ratio(-1, 2)];
        let s = solve_affine(&Mat::identity(2), &b).unwrap();
        assert_eq!(s.particular, b);
        assert!(s.kernel.is_zero());

        assert_eq!(
            solve_affine(&Mat::from_i64(1, 2, &[0, 0]), &[rat(1)]),
            Err(LinalgError::Infeasible)
        );

        let s = solve_affine(&Mat::from_i64(1, 2, &[1, 1]), &[rat(2)]).unwrap();
        assert_eq!(s.particular, ints(&[2, 0]));
        assert_eq!(s.kernel, Subspace::span(2, [ints(&[1, -1])]));
    }

    #[test]
    fn solve_affine_rejects_bad_rhs() {
        assert!(matches!(
            solve_affine(&Mat::identity(2), &[rat(1)]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lattice_examples() {
        let x = Subspace::span(2, [ints(&[1, 0])]);
        let y = Subspace::span(2, [ints(&[0, 1])]);
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(2));
        assert!(x.equals(&x).unwrap());
        assert!(x.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5");
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("4/2").unwrap(), rat(2));
        assert_eq!(
            parse_rational("1/0"),
            Err(RationalParseError::ZeroDenominator("1/0".into()))
        );
        for bad in ["", "/", "1/", "1/-2", "a", "1.5", "--1"] {
            assert!(
                matches!(parse_rational(bad), Err(RationalParseError::Invalid(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_i64(2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
        assert_eq!(Mat::from_i64(2, 2, &[1, 2, 2, 4]).inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn annihilator_is_involutive() {
        let v = Subspace::span(4, [ints(&[1, 2, 0, -1]), ints(&[0, 1, 1, 3])]);
        let ann = v.annihilator();
        assert_eq!(ann.dim(), 2);
        for w in ann.basis() {
            for b in v.basis() {
                assert!(dot(w, b).is_zero());
            }
        }
        assert_eq!(ann.annihilator(), v);
    }
}
