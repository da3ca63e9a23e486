//! Exact integer linear algebra: normal forms, kernels, saturation and
//! integer span membership.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point anywhere in this module. Lattices are kept in Hermite
//! normal form so equal lattices have identical representations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected vectors of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

// ---------------------------------------------------------------------------
// integer vectors

pub fn vec_from_i64(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn vec_zero(n: usize) -> Vec<BigInt> {
    vec![BigInt::zero(); n]
}

pub fn vec_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &BigInt, a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// ---------------------------------------------------------------------------
// matrices

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Rows from i64 literals, mostly for tests and builders.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| vec_from_i64(r)).collect())
    }

    pub fn from_columns(cols: Vec<Vec<BigInt>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        let mut m = Self::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut m = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j) + a * other.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Matrix applied to a column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows).map(|i| vec_dot(self.row(i), v)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn neg(&self) -> Self {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, q: &BigInt, j: usize) {
        for c in 0..self.cols {
            let v = self.get(i, c) - q * self.get(j, c);
            self.set(i, c, v);
        }
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, q: &BigInt, j: usize) {
        for r in 0..self.rows {
            let v = self.get(r, i) - q * self.get(r, j);
            self.set(r, i, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        hermite_normal_form(self).rows()
    }
}

// ---------------------------------------------------------------------------
// normal forms

/// Row-style Hermite normal form with zero rows dropped: pivots positive,
/// entries above a pivot reduced into [0, pivot). Canonical for row span.
pub fn hermite_normal_form(m: &IntegerMatrix) -> IntegerMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // euclidean reduction of the column below pivot_row
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rows {
                if !a.get(i, col).is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) if a.get(i, col).abs() < a.get(b, col).abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(pivot_row, b);
            if a.get(pivot_row, col).is_negative() {
                a.negate_row(pivot_row);
            }
            let mut reduced = true;
            for i in pivot_row + 1..rows {
                if !a.get(i, col).is_zero() {
                    let q = a.get(i, col).div_floor(a.get(pivot_row, col));
                    a.row_sub(i, &q, pivot_row);
                    if !a.get(i, col).is_zero() {
                        reduced = false;
                    }
                }
            }
            if reduced {
                break;
            }
        }
        if !a.get(pivot_row, col).is_zero() {
            // reduce entries above the pivot
            for i in 0..pivot_row {
                let q = a.get(i, col).div_floor(a.get(pivot_row, col));
                if !q.is_zero() {
                    a.row_sub(i, &q, pivot_row);
                }
            }
            pivot_row += 1;
        }
    }
    IntegerMatrix::from_rows((0..pivot_row).map(|r| a.row(r).to_vec()).collect())
}

/// Smith normal form: returns (left, diag, right) with left·m·right = diag,
/// left and right unimodular, and diag nonnegative with d1 | d2 | ...
pub fn smith_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let mut d = m.clone();
    let mut left = IntegerMatrix::identity(m.rows());
    let mut right = IntegerMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());

    for t in 0..n {
        'pivot: loop {
            // locate a minimal nonzero entry in the trailing submatrix
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows() {
                for j in t..d.cols() {
                    if !d.get(i, j).is_zero() {
                        best = match best {
                            None => Some((i, j)),
                            Some((bi, bj)) if d.get(i, j).abs() < d.get(bi, bj).abs() => {
                                Some((i, j))
                            }
                            keep => keep,
                        };
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap_rows(t, pi);
            left.swap_rows(t, pi);
            d.swap_cols(t, pj);
            right.swap_cols(t, pj);
            if d.get(t, t).is_negative() {
                d.negate_row(t);
                left.negate_row(t);
            }
            // clear column t
            for i in t + 1..d.rows() {
                if !d.get(i, t).is_zero() {
                    let q = d.get(i, t).div_floor(d.get(t, t));
                    d.row_sub(i, &q, t);
                    left.row_sub(i, &q, t);
                    if !d.get(i, t).is_zero() {
                        continue 'pivot;
                    }
                }
            }
            // clear row t
            for j in t + 1..d.cols() {
                if !d.get(t, j).is_zero() {
                    let q = d.get(t, j).div_floor(d.get(t, t));
                    d.col_sub(j, &q, t);
                    right.col_sub(j, &q, t);
                    if !d.get(t, j).is_zero() {
                        continue 'pivot;
                    }
                }
            }
            // pivot must divide the remaining submatrix for the divisor chain
            for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !d.get(i, j).mod_floor(d.get(t, t)).is_zero() {
                        let one = BigInt::one();
                        let minus_one = -&one;
                        d.row_sub(t, &minus_one, i);
                        left.row_sub(t, &minus_one, i);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    (left, d, right)
}

/// Diagonal entries of the Smith form that exceed 1, i.e. the nontrivial
/// elementary divisors of the cokernel.
pub fn nontrivial_divisors(m: &IntegerMatrix) -> Vec<BigInt> {
    let (_, d, _) = smith_normal_form(m);
    let n = d.rows().min(d.cols());
    (0..n)
        .map(|i| d.get(i, i).clone())
        .filter(|x| !x.is_zero() && !x.is_one())
        .collect()
}

// ---------------------------------------------------------------------------
// lattices

/// A sublattice of the standard lattice Z^ambient_rank, stored by an HNF
/// basis matrix whose rows are independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient_rank: usize,
    basis: IntegerMatrix,
}

impl Lattice {
    /// Span of the given generator rows; reduced to canonical HNF basis.
    pub fn from_generators(ambient_rank: usize, generators: Vec<Vec<BigInt>>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), ambient_rank, "generator of wrong length");
        }
        let basis = if generators.is_empty() {
            IntegerMatrix::zero(0, ambient_rank)
        } else {
            hermite_normal_form(&IntegerMatrix::from_rows(generators))
        };
        Lattice {
            ambient_rank,
            basis,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vecs()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient_rank);
        solve_in_span(&self.basis.row_vecs(), v)
            .map(|s| s.is_some())
            .unwrap_or(false)
    }
}

/// Saturated integer kernel {v : m·v = 0} of the column action of m.
pub fn kernel_basis(m: &IntegerMatrix) -> Lattice {
    let (_, d, right) = smith_normal_form(m);
    let n = m.rows().min(m.cols());
    let rank = (0..n).filter(|&i| !d.get(i, i).is_zero()).count();
    let gens: Vec<Vec<BigInt>> = (rank..m.cols()).map(|j| right.column(j)).collect();
    Lattice::from_generators(m.cols(), gens)
}

/// (Rational span of l) ∩ Z^n: the saturation of l in its ambient lattice.
pub fn saturate(l: &Lattice) -> Lattice {
    // orthogonal complement twice: v is in the saturation iff it kills
    // everything that kills l
    let complement = kernel_basis(l.basis());
    kernel_basis(complement.basis())
}

/// Integer coefficients expressing target in the Z-span of the given
/// vectors, if any exist.
pub fn solve_in_span(
    vectors: &[Vec<BigInt>],
    target: &[BigInt],
) -> Result<Option<Vec<BigInt>>, LatticeError> {
    let n = target.len();
    for v in vectors {
        if v.len() != n {
            return Err(LatticeError::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
    }
    if vectors.is_empty() {
        return Ok(if vec_is_zero(target) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let k = vectors.len();
    let mat = IntegerMatrix::from_columns(vectors.to_vec());
    let (left, d, right) = smith_normal_form(&mat);
    let lt = left.mul_vec(target);
    let mut y = vec_zero(k);
    for i in 0..n {
        if i < n.min(k) && !d.get(i, i).is_zero() {
            let (q, r) = lt[i].div_rem(d.get(i, i));
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !lt[i].is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(right.mul_vec(&y)))
}

// ---------------------------------------------------------------------------
// rational vectors

/// Rational vector stored as integer numerators over one positive
/// denominator, normalized so the joint gcd is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVec {
    num: Vec<BigInt>,
    den: BigInt,
}

impl RationalVec {
    pub fn new(num: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut v = RationalVec { num, den };
        v.normalize();
        v
    }

    pub fn from_int(v: Vec<BigInt>) -> Self {
        RationalVec {
            num: v,
            den: BigInt::one(),
        }
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.num = vec_neg(&self.num);
        }
        let mut g = self.den.clone();
        for x in &self.num {
            g = g.gcd(x);
        }
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.iter().map(|x| x / &g).collect();
            self.den /= &g;
        }
        if vec_is_zero(&self.num) {
            self.den = BigInt::one();
        }
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn num(&self) -> &[BigInt] {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.num)
    }

    pub fn neg(&self) -> Self {
        RationalVec {
            num: vec_neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        RationalVec::new(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        RationalVec::new(vec_scale(c, &self.num), self.den.clone())
    }

    /// Exactly 2x this vector.
    pub fn double(&self) -> Self {
        self.scale_int(&BigInt::from(2))
    }

    /// Pairing against an integer covector, as an exact rational.
    pub fn pair_int(&self, covec: &[BigInt]) -> BigRational {
        BigRational::new(vec_dot(&self.num, covec), self.den.clone())
    }

    /// The underlying integer vector when the denominator is 1.
    pub fn as_int(&self) -> Option<Vec<BigInt>> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|x| BigRational::new(x.clone(), self.den.clone()))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// rational elimination helpers

/// Unique rational solution of (columns)·x = target when the columns are
/// linearly independent; None when the system is inconsistent.
///
/// Panics if the columns are dependent: callers pass bases.
pub fn rational_solve_columns(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let k = columns.len();
    let n = target.len();
    for c in columns {
        assert_eq!(c.len(), n);
    }
    if k == 0 {
        return if target.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // augmented matrix [columns | target], gaussian elimination
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            panic!("dependent columns passed to rational_solve_columns");
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=k {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    // consistency: remaining rows must be zero
    for row in a.iter().skip(r) {
        if !row[k].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = a[row][k].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix given by rows. Panics when singular.
pub fn rational_inverse(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = rows.len();
    for r in rows {
        assert_eq!(r.len(), n);
    }
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            for j in 0..n {
                row.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .expect("singular matrix in rational_inverse");
        a.swap(c, p);
        let inv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let v = &a[i][j] - &f * &a[c][j];
                    a[i][j] = v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

pub fn int_to_rational_rows(m: &IntegerMatrix) -> Vec<Vec<BigRational>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(rows)
    }

    #[test]
    fn snf_of_diag_2_3_is_1_6() {
        let (l, d, r) = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(d, m(&[&[1, 0], &[0, 6]]));
        // verify by multiplying the returned unimodular factors
        assert_eq!(l.mul(&m(&[&[2, 0], &[0, 3]])).mul(&r), d);
        assert_eq!(l.det().abs(), BigInt::one());
        assert_eq!(r.det().abs(), BigInt::one());
    }

    #[test]
    fn snf_identity_and_zero() {
        let (_, d, _) = smith_normal_form(&IntegerMatrix::identity(3));
        assert_eq!(d, IntegerMatrix::identity(3));
        let (_, d, _) = smith_normal_form(&IntegerMatrix::zero(2, 2));
        assert_eq!(d, IntegerMatrix::zero(2, 2));
    }

    #[test]
    fn kernel_of_row_1_1() {
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.rank(), 1);
        let b = k.basis_rows();
        assert!(b[0] == vec_from_i64(&[1, -1]) || b[0] == vec_from_i64(&[-1, 1]));
    }

    #[test]
    fn kernel_of_invertible_is_trivial() {
        let k = kernel_basis(&m(&[&[1, 1], &[0, 1]]));
        assert_eq!(k.rank(), 0);
    }

    #[test]
    fn kernel_of_row_2_4_is_saturated() {
        let k = kernel_basis(&m(&[&[2, 4]]));
        assert_eq!(k.rank(), 1);
        assert!(k.contains(&vec_from_i64(&[2, -1])));
        // brute force over small vectors: every kernel vector is a multiple
        // of (2, -1)
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let in_kernel = 2 * a + 4 * b == 0;
                assert_eq!(k.contains(&vec_from_i64(&[a, b])), in_kernel);
            }
        }
    }

    #[test]
    fn solve_in_span_examples() {
        let sol = solve_in_span(&[vec_from_i64(&[1, 1])], &vec_from_i64(&[2, 2])).unwrap();
        assert_eq!(sol, Some(vec_from_i64(&[2])));

        let sol = solve_in_span(&[vec_from_i64(&[2, 0])], &vec_from_i64(&[1, 0])).unwrap();
        assert_eq!(sol, None);

        let sol = solve_in_span(
            &[vec_from_i64(&[1, 0, -1]), vec_from_i64(&[0, 1, -1])],
            &vec_from_i64(&[1, 1, -2]),
        )
        .unwrap();
        assert_eq!(sol, Some(vec_from_i64(&[1, 1])));
    }

    #[test]
    fn solve_in_span_dimension_mismatch() {
        let err = solve_in_span(&[vec_from_i64(&[1, 0, 0])], &vec_from_i64(&[1, 0]));
        assert!(err.is_err());
    }

    #[test]
    fn saturate_examples() {
        let l = Lattice::from_generators(2, vec![vec_from_i64(&[2, 0])]);
        let s = saturate(&l);
        assert_eq!(s, Lattice::from_generators(2, vec![vec_from_i64(&[1, 0])]));
        assert_eq!(saturate(&s), s);

        let l = Lattice::from_generators(2, vec![vec_from_i64(&[2, 2])]);
        assert_eq!(
            saturate(&l),
            Lattice::from_generators(2, vec![vec_from_i64(&[1, 1])])
        );
    }

    #[test]
    fn hnf_is_canonical_for_equal_lattices() {
        let a = Lattice::from_generators(3, vec![vec_from_i64(&[1, 2, 3]), vec_from_i64(&[4, 5, 6])]);
        let b = Lattice::from_generators(
            3,
            vec![
                vec_from_i64(&[5, 7, 9]),
                vec_from_i64(&[4, 5, 6]),
                vec_from_i64(&[9, 12, 15]),
            ],
        );
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn snf_reconstructs_input(rows in 1usize..4, cols in 1usize..4,
                                  entries in proptest::collection::vec(-6i64..=6, 16)) {
            let mut mat = IntegerMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    mat.set(i, j, BigInt::from(entries[i * cols + j]));
                }
            }
            let (l, d, r) = smith_normal_form(&mat);
            prop_assert_eq!(l.mul(&mat).mul(&r), d.clone());
            prop_assert_eq!(l.det().abs(), BigInt::one());
            prop_assert_eq!(r.det().abs(), BigInt::one());
            // divisor chain
            let n = rows.min(cols);
            for i in 0..n {
                prop_assert!(!d.get(i, i).is_negative());
                if i + 1 < n && !d.get(i, i).is_zero() {
                    prop_assert!(d.get(i + 1, i + 1).mod_floor(d.get(i, i)).is_zero()
                                 || d.get(i + 1, i + 1).is_zero());
                }
            }
            // off-diagonal zero
            for i in 0..rows {
                for j in 0..cols {
                    if i != j {
                        prop_assert!(d.get(i, j).is_zero());
                    }
                }
            }
        }

        #[test]
        fn kernel_is_saturated(rows in 1usize..4, cols in 1usize..4,
                               entries in proptest::collection::vec(-6i64..=6, 16)) {
            let mut mat = IntegerMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    mat.set(i, j, BigInt::from(entries[i * cols + j]));
                }
            }
            let k = kernel_basis(&mat);
            prop_assert_eq!(saturate(&k), k.clone());
            for row in k.basis_rows() {
                prop_assert!(vec_is_zero(&mat.mul_vec(&row)));
            }
        }

        #[test]
        fn solve_agrees_with_exhaustive_search(
            k in 1usize..4, n in 1usize..4,
            entries in proptest::collection::vec(-3i64..=3, 16),
            t in proptest::collection::vec(-6i64..=6, 4)) {
            let vectors: Vec<Vec<BigInt>> = (0..k)
                .map(|i| (0..n).map(|j| BigInt::from(entries[i * n + j])).collect())
                .collect();
            let target: Vec<BigInt> = (0..n).map(|j| BigInt::from(t[j])).collect();
            let got = solve_in_span(&vectors, &target).unwrap();
            // brute force over the coefficient box [-5, 5]^k
            let mut found = false;
            let mut coeffs = vec![-5i64; k];
            'outer: loop {
                let mut acc = vec_zero(n);
                for (c, v) in coeffs.iter().zip(&vectors) {
                    acc = vec_add(&acc, &vec_scale(&BigInt::from(*c), v));
                }
                if acc == target {
                    found = true;
                    break;
                }
                let mut i = 0;
                loop {
                    if i == k { break 'outer; }
                    coeffs[i] += 1;
                    if coeffs[i] <= 5 { break; }
                    coeffs[i] = -5;
                    i += 1;
                }
            }
            if found {
                // a solution exists, so the solver must return one, and it
                // must be exact
                let sol = got.expect("solver missed an existing solution");
                let mut acc = vec_zero(n);
                for (c, v) in sol.iter().zip(&vectors) {
                    acc = vec_add(&acc, &vec_scale(c, v));
                }
                prop_assert_eq!(acc, target);
            } else if let Some(sol) = got {
                // solver found something outside the box: still must be exact
                let mut acc = vec_zero(n);
                for (c, v) in sol.iter().zip(&vectors) {
                    acc = vec_add(&acc, &vec_scale(c, v));
                }
                prop_assert_eq!(acc, target);
                // and at least one coefficient must exceed the box, otherwise
                // the brute force would have found it
                prop_assert!(sol.iter().any(|c| c.abs() > BigInt::from(5)));
            }
        }
    }

    #[test]
    fn rational_vec_normalization() {
        let v = RationalVec::new(vec_from_i64(&[2, -4]), BigInt::from(-2));
        assert_eq!(v.num(), &vec_from_i64(&[-1, 2])[..]);
        assert_eq!(*v.den(), BigInt::one());
        let w = RationalVec::new(vec_from_i64(&[1, 3]), BigInt::from(2));
        assert_eq!(*w.den(), BigInt::from(2));
    }
}
