//! Dense matrices over a [`Field`].
//!
//! Matrices act on column vectors: a `rows × cols` matrix is a linear map
//! from a `cols`-dimensional space to a `rows`-dimensional one. Vectors are
//! plain `Vec<Scalar>`.

use std::fmt;
use std::ops::Mul;

use crate::error::{same_field, Error, Result};
use crate::exactlin::{Field, Scalar, Subspace};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from row-major data; every entry must live in `field`.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for s in &data {
            same_field(field, s.field())?;
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::shape(format!("row of length {} where {cols} expected", r.len())));
            }
            data.extend(r.iter().cloned());
        }
        Matrix::from_vec(field, rows.len(), cols, data)
    }

    /// Convenience constructor from small integers (row-major).
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&e| field.from_i64(e)).collect(),
        }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let cols = columns.len();
        Matrix::from_fn(field, rows, cols, |i, j| columns[j][i].clone())
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Row-major entries; for a square matrix this is its coordinate vector in `End(V)`.
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        same_field(self.field, rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    if !b.is_zero() {
                        o.add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    o.add_product(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch in add");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch in sub");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self += s * rhs`.
    pub fn add_scaled(&mut self, s: &Scalar, rhs: &Matrix) {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch in add_scaled");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                a.add_product(s, b);
            }
        }
    }

    /// Kronecker product; row index `(i, k) ↦ i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "column mismatch in vstack");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { field, rows, cols, data }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn rref(&self) -> Rref {
        let mut data = self.data.clone();
        let pivots = rref_in_place(self.rows, self.cols, &mut data);
        let rank = pivots.len();
        Rref {
            matrix: Matrix { field: self.field, rows: self.rows, cols: self.cols, data },
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The null space `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                let e = matrix.get(r, free);
                if !e.is_zero() {
                    v[p] = -e;
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// Column space, as a subspace of the codomain.
    pub fn image(&self) -> Subspace {
        self.transpose().row_space()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, self.row_vectors().map(|r| r.to_vec()))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::shape("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut data = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            data.extend(self.row(i).iter().cloned());
            for j in 0..n {
                data.push(if i == j { self.field.one() } else { self.field.zero() });
            }
        }
        let pivots = rref_in_place(n, 2 * n, &mut data);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| data[i * 2 * n + n + j].clone()))
    }

    /// One solution of `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::shape(format!(
                "right-hand side of length {} for {} equations",
                b.len(),
                self.rows
            )));
        }
        for s in b {
            same_field(self.field, s.field())?;
        }
        let w = self.cols + 1;
        let mut data = Vec::with_capacity(self.rows * w);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.push(b[i].clone());
        }
        let pivots = rref_in_place(self.rows, w, &mut data);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = data[r * w + self.cols].clone();
        }
        Ok(Some(x))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix[{}] {}x{}", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Gauss-Jordan elimination on row-major data. Returns the pivot columns.
pub(crate) fn rref_in_place(rows: usize, cols: usize, data: &mut [Scalar]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = data[r * cols + c].inv().expect("pivot is nonzero");
        let mut support: Vec<(usize, Scalar)> = Vec::new();
        for j in c..cols {
            let e = &mut data[r * cols + j];
            if !e.is_zero() {
                *e *= &inv;
                support.push((j, e.clone()));
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            let row = &mut data[i * cols..(i + 1) * cols];
            for (j, v) in &support {
                row[*j].sub_product(&f, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive elimination that only decides rank, used as an independent oracle.
    fn oracle_rank(m: &Matrix) -> usize {
        let mut rows: Vec<Vec<Scalar>> = m.row_vectors().map(|r| r.to_vec()).collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            if let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) {
                rows.swap(rank, p);
                for i in rank + 1..rows.len() {
                    let f = &rows[i][c] / &rows[rank][c];
                    for j in 0..m.cols() {
                        let t = &f * &rows[rank][j];
                        rows[i][j] = &rows[i][j] - &t;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(Field::Rationals, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let q = Field::Rationals;
        let m = Matrix::from_i64(q, 2, 2, &[1, 2, 2, 4]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, Matrix::from_i64(q, 2, 2, &[1, 2, 0, 0]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_over_f2_agrees_with_oracle() {
        let f2 = Field::prime(2).unwrap();
        let m = Matrix::from_i64(f2, 2, 2, &[1, 1, 1, 2]);
        let r = m.rref();
        assert_eq!(r.rank, oracle_rank(&m));
        // [[1,1],[1,0]] over F_2 is invertible.
        assert_eq!(r.matrix, Matrix::identity(f2, 2));
    }

    #[test]
    fn kernel_examples() {
        let q = Field::Rationals;
        assert_eq!(Matrix::zeros(q, 3, 3).kernel(), Subspace::full(q, 3));
        assert_eq!(Matrix::identity(q, 3).kernel(), Subspace::zero(q, 3));
        let m = Matrix::from_i64(q, 1, 3, &[1, 1, 0]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for b in k.basis_vectors() {
            assert!(m.apply(b).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let q = Field::Rationals;
        let m = Matrix::from_i64(q, 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(Matrix::from_i64(q, 2, 2, &[1, 2, 2, 4]).inverse(), Err(Error::Singular));
        let b = vec![q.from_i64(3), q.from_i64(-4)];
        assert_eq!(Matrix::identity(q, 2).solve(&b).unwrap(), Some(b.clone()));
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.apply(&x), b);
        let inconsistent = Matrix::from_i64(q, 2, 1, &[1, 1]);
        assert_eq!(inconsistent.solve(&[q.from_i64(1), q.from_i64(2)]).unwrap(), None);
        assert!(m.solve(&[q.one()]).is_err());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Matrix::identity(Field::Rationals, 2);
        let b = Matrix::identity(Field::Prime(3), 2);
        assert!(matches!(a.try_mul(&b), Err(Error::FieldMismatch(..))));
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    fn fields() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Field::Rationals), Just(Field::prime(7).unwrap()), Just(Field::prime(2).unwrap())]
    }

    fn matrix() -> impl Strategy<Value = Matrix> {
        (fields(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |e| Matrix::from_i64(f, r, c, &e))
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_the_column_count(m in matrix()) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_vectors_are_killed(m in matrix()) {
            for v in m.kernel().basis_vectors() {
                prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn inverse_is_two_sided_when_it_exists(m in matrix()) {
            if let Ok(inv) = m.inverse() {
                prop_assert!((&m * &inv).is_identity());
                prop_assert!((&inv * &m).is_identity());
            } else {
                prop_assert!(!m.is_square() || m.rank() < m.rows());
            }
        }
    }
}
