//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dense matrix with rational entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, q(x));
            }
        }
        m
    }

    /// Builds a matrix from its columns; `rows` is needed when there are no columns.
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, x) in row.iter().enumerate() {
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

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Columns `range` of the matrix.
    pub fn column_block(&self, start: usize, len: usize) -> Matrix {
        let mut m = Matrix::zeros(self.rows, len);
        for i in 0..self.rows {
            for j in 0..len {
                m.set(i, j, self.get(i, start + j).clone());
            }
        }
        m
    }

    pub fn row_block(&self, start: usize, len: usize) -> Matrix {
        let mut m = Matrix::zeros(len, self.cols);
        for i in 0..len {
            for j in 0..self.cols {
                m.set(i, j, self.get(start + i, j).clone());
            }
        }
        m
    }

    /// Horizontal concatenation; all blocks need `rows` rows.
    pub fn hstack(rows: usize, blocks: &[Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    m.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        m
    }

    pub fn vstack(cols: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            for i in 0..b.rows {
                for j in 0..cols {
                    m.set(off + i, j, b.get(i, j).clone());
                }
            }
            off += b.rows;
        }
        m
    }

    fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref(&mut rows, self.cols).len()
    }

    /// Basis of the null space `{v : Mv = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut rows = self.to_rows();
        let pivots = rref(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Reduced row echelon form, in place. Zero rows are dropped; returns the pivot
/// column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Q>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `Q^n` kept as a fully reduced echelon basis, grown one vector
/// at a time.
#[derive(Clone, Debug)]
pub struct RowSpace {
    dim: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        RowSpace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the subspace; afterwards `v` vanishes on pivot columns.
    pub fn reduce(&self, v: &mut [Q]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    /// Coordinates that are not pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Matrix of the projection `Q^n -> Q^n / self` in the basis given by
    /// [`RowSpace::free_columns`].
    pub fn quotient_map(&self) -> Matrix {
        let free = self.free_columns();
        let mut m = Matrix::zeros(free.len(), self.dim);
        for c in 0..self.dim {
            let mut e = vec![Q::zero(); self.dim];
            e[c] = Q::one();
            self.reduce(&mut e);
            for (k, &f) in free.iter().enumerate() {
                if !e[f].is_zero() {
                    m.set(k, c, e[f].clone());
                }
            }
        }
        m
    }
}

/// Solves `A x = b`. Returns a particular solution and a kernel basis, or
/// `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Q]) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let mut rows: Vec<Vec<Q>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][n].clone();
    }
    Some((x, a.kernel()))
}

/// Converts a rational known to be an integer.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

pub fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}
