use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// Row-major dense matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Fe;
    fn index(&self, (r, c): (usize, usize)) -> &Fe {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fe {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Fe>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Fe>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| self[(r, c)] == if r == c { self.field.one() } else { self.field.zero() })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += *a * *b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| *a + *b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| *a - *b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Fe) -> Matrix {
        let data = self.data.iter().map(|a| *a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Fe {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| acc + self[(i, i)])
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m[(r, j)] = self[(r, c)];
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_rows(self.field, rows.iter().map(|&r| self.row(r).to_vec()).collect())
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)];
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)];
            }
        }
        m
    }

    /// Reduced row echelon form with first-nonzero pivoting; returns the
    /// pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row-reduces in place, choosing pivots only among the first `limit` columns.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..limit {
            if pr == self.rows {
                break;
            }
            let Some(r) = (pr..self.rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            if r != pr {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = self[(pr, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                self[(pr, j)] *= inv;
            }
            for r2 in 0..self.rows {
                if r2 == pr {
                    continue;
                }
                let f = self[(r2, c)];
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let x = self[(pr, j)];
                    if !x.is_zero() {
                        self[(r2, j)] -= f * x;
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hcat(&Matrix::identity(self.field, n));
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.select_columns(&(n..2 * n).collect::<Vec<_>>()))
    }
}

/// Exact solution of `a x = b`; free variables are set to zero.
pub fn solve(a: &Matrix, b: &[Fe]) -> Result<Vec<Fe>> {
    if a.rows != b.len() {
        return Err(Error::DimensionMismatch(format!("{} rows vs rhs of {}", a.rows, b.len())));
    }
    let rhs = Matrix::from_columns(a.field, a.rows, &[b.to_vec()]);
    let mut aug = a.hcat(&rhs);
    let pivots = aug.rref_in_place(a.cols);
    for r in pivots.len()..a.rows {
        if !aug[(r, a.cols)].is_zero() {
            return Err(Error::NoSolution);
        }
    }
    let mut x = vec![a.field.zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[(r, a.cols)];
    }
    Ok(x)
}

/// Basis of the right null space, one vector per free column.
pub fn kernel(a: &Matrix) -> Vec<Vec<Fe>> {
    let (r, pivots) = a.rref();
    let f = a.field;
    let mut is_pivot = vec![false; a.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..a.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); a.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, free)];
            }
            v
        })
        .collect()
}

pub fn rank(a: &Matrix) -> usize {
    a.rank()
}

/// Coordinates with respect to a fixed linearly independent family of row
/// vectors: finds `c` with `Σ c_i rows_i = target`, or reports that the
/// target lies outside their span.
#[derive(Clone, Debug)]
pub struct RowSpaceSolver {
    rows: Matrix,
    pivot_cols: Vec<usize>,
    inverse: Matrix,
}

impl RowSpaceSolver {
    /// Fails when the rows are linearly dependent.
    pub fn new(rows: Matrix) -> Result<RowSpaceSolver> {
        let (_, pivots) = rows.rref();
        if pivots.len() != rows.rows() {
            return Err(Error::ConstraintViolation(format!(
                "{} vectors span only a {}-dimensional space",
                rows.rows(),
                pivots.len()
            )));
        }
        let square = rows.select_columns(&pivots);
        let inverse = square.inverse().ok_or_else(|| Error::Inconsistent("pivot block singular".into()))?;
        Ok(RowSpaceSolver { rows, pivot_cols: pivots, inverse })
    }

    pub fn len(&self) -> usize {
        self.rows.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.rows() == 0
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    pub fn coords(&self, target: &[Fe]) -> Result<Vec<Fe>> {
        let f = self.rows.field();
        let n = self.len();
        let mut c = vec![f.zero(); n];
        for (j, &pc) in self.pivot_cols.iter().enumerate() {
            let t = target[pc];
            if t.is_zero() {
                continue;
            }
            for (i, ci) in c.iter_mut().enumerate() {
                let x = self.inverse[(j, i)];
                if !x.is_zero() {
                    *ci += t * x;
                }
            }
        }
        for (col, &t) in target.iter().enumerate() {
            let mut acc = f.zero();
            for (i, &ci) in c.iter().enumerate() {
                if !ci.is_zero() {
                    acc += ci * self.rows[(i, col)];
                }
            }
            if acc != t {
                return Err(Error::NoSolution);
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let f = gf(7);
        let b: Vec<Fe> = [3, 0, 5].iter().map(|&x| f.from_int(x)).collect();
        assert_eq!(solve(&Matrix::identity(f, 3), &b).unwrap(), b);
    }

    #[test]
    fn inconsistent_system() {
        let f = gf(7);
        let a = Matrix::from_ints(f, &[&[1, 1], &[0, 0]]);
        assert_eq!(solve(&a, &[f.zero(), f.one()]), Err(Error::NoSolution));
    }

    #[test]
    fn kernel_extremes() {
        let f = gf(5);
        assert_eq!(kernel(&Matrix::zeros(f, 4, 4)).len(), 4);
        assert!(kernel(&Matrix::identity(f, 4)).is_empty());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf(7);
        let a = Matrix::from_ints(f, &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let sing = Matrix::from_ints(f, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn row_space_coordinates() {
        let f = gf(7);
        let rows = Matrix::from_ints(f, &[&[1, 0, 2], &[0, 1, 3]]);
        let s = RowSpaceSolver::new(rows).unwrap();
        let t: Vec<Fe> = [2, 3, 4 + 9].iter().map(|&x| f.from_int(x)).collect();
        assert_eq!(s.coords(&t).unwrap(), vec![f.from_int(2), f.from_int(3)]);
        assert_eq!(s.coords(&[f.one(), f.one(), f.one()]), Err(Error::NoSolution));
        let dep = Matrix::from_ints(f, &[&[1, 2], &[2, 4]]);
        assert!(RowSpaceSolver::new(dep).is_err());
    }
}
