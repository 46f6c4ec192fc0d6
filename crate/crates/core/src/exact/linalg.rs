//! Dense matrices over a [`Field`] and the handful of elimination routines the
//! rest of the crate needs: row reduction, rank, right kernels and solving.

use std::ops::{Index, IndexMut};

use super::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    /// A matrix with `cols` columns and no rows.
    pub fn empty(cols: usize) -> Self {
        Matrix { rows: 0, cols, data: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<E>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b))))
            .collect()
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (r, c): (usize, usize)) -> &E {
        &self.data[r * self.cols + c]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut E {
        &mut self.data[r * self.cols + c]
    }
}

/// Plain Gauss-Jordan elimination to reduced row echelon form. The pivot in
/// each column is the first nonzero entry at or below the current row.
pub fn gauss_jordan<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[(i, c)])) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = field.inv(&m[(r, c)]).expect("pivot is nonzero");
        for j in c..cols {
            m[(r, j)] = field.mul(&m[(r, j)], &inv);
        }
        for i in 0..rows {
            if i == r || field.is_zero(&m[(i, c)]) {
                continue;
            }
            let factor = m[(i, c)].clone();
            for j in c..cols {
                let t = field.mul(&factor, &m[(r, j)]);
                m[(i, j)] = field.sub(&m[(i, j)], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut w = m.clone();
    field.row_reduce(&mut w).len()
}

/// Basis of the right kernel `{v : M v = 0}`.
///
/// One vector per non-pivot column `f` of the reduced form, with a 1 in
/// position `f`, zeros in the other free positions and the negated reduced
/// entries in the pivot positions. The basis is ordered by `f`, which makes
/// it unique for a given matrix.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut w = m.clone();
    let pivots = field.row_reduce(&mut w);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![field.zero(); m.cols()];
            v[f] = field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(&w[(i, f)]);
            }
            v
        })
        .collect()
}

/// Some solution of `M x = b`, free variables set to zero; `None` when the
/// system is inconsistent.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(b.len(), m.rows());
    let cols = m.cols();
    let mut aug = Matrix::zeros(field, m.rows(), cols + 1);
    for i in 0..m.rows() {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let pivots = field.row_reduce(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[(i, cols)].clone();
    }
    Some(x)
}

/// Row-reduced basis of the span of `vectors` (zero rows dropped), with its
/// pivot columns.
pub fn span_basis<F: Field>(field: &F, len: usize, vectors: &[Vec<F::Elem>]) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut m = Matrix::empty(len);
    for v in vectors {
        m.push_row(v.clone());
    }
    let pivots = field.row_reduce(&mut m);
    m.data.truncate(pivots.len() * len);
    m.rows = pivots.len();
    (m, pivots)
}

/// Reduces `v` against a matrix already in reduced row echelon form with the
/// given pivots, leaving the canonical representative of `v` modulo the span.
pub fn reduce_against<F: Field>(field: &F, rref: &Matrix<F::Elem>, pivots: &[usize], v: &mut [F::Elem]) {
    for (i, &p) in pivots.iter().enumerate() {
        if field.is_zero(&v[p]) {
            continue;
        }
        let factor = v[p].clone();
        for (j, x) in v.iter_mut().enumerate() {
            let t = field.mul(&factor, &rref[(i, j)]);
            *x = field.sub(x, &t);
        }
    }
}
