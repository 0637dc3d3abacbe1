//! Dense matrices over GF(q): echelon forms, rank, kernels, maximal minors.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldDescriptor};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// JSON form of a matrix: entries as canonical element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub field: FieldDescriptor,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u32>>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|a| !field.contains(**a)) {
            return Err(Error::InvalidParams(format!(
                "entry {bad} is not an element of GF({})",
                field.q()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Matrix::new(field, nrows, cols, data)
    }

    pub fn from_json(field: Field, json: &MatrixJson) -> Result<Matrix> {
        let rows = json
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| Elem(x)).collect())
            .collect();
        let m = Matrix::from_rows(field, json.cols, rows)?;
        if m.rows != json.rows {
            return Err(Error::DimensionMismatch {
                expected: json.rows,
                got: m.rows,
            });
        }
        Ok(m)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            field: self.field.descriptor(),
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| self.row(i).iter().map(|a| a.0).collect())
                .collect(),
        }
    }

    /// One line per row, comma-separated element indices.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            out.push_str(&self.row(i).iter().map(|a| a.0.to_string()).join(","));
            out.push('\n');
        }
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| self.field.dot(self.row(i), v)).collect())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            data.extend(idx.iter().map(|&j| self.get(i, j)));
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn scale_col(&mut self, j: usize, c: Elem) {
        for i in 0..self.rows {
            let v = self.field.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: Elem) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = f.add(self.get(dst, j), f.mul(c, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if !factor.is_zero() {
                        m.add_row_multiple(i, r, f.neg(factor));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank and a basis (as rows) of the right kernel `{v : M v = 0}`.
    pub fn rank_and_kernel(&self) -> (usize, Matrix) {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Elem::ZERO; self.cols];
            v[fc] = Elem::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            basis.push(v);
        }
        let kernel = Matrix::from_rows(f.clone(), self.cols, basis).expect("consistent widths");
        (pivots.len(), kernel)
    }

    pub fn kernel(&self) -> Matrix {
        self.rank_and_kernel().1
    }

    /// Nonzero rows of the reduced row echelon form: a canonical row-space basis.
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let idx: Vec<usize> = (0..pivots.len()).collect();
        r.select_rows(&idx)
    }

    pub fn determinant(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot)?;
            for i in c + 1..m.rows {
                let factor = m.get(i, c);
                if !factor.is_zero() {
                    m.add_row_multiple(i, c, f.neg(f.mul(factor, inv)));
                }
            }
        }
        Ok(det)
    }

    /// All `rows x rows` minors, indexed by column subsets in lexicographic order.
    pub fn maximal_minors(&self) -> Result<Vec<Elem>> {
        if self.rows > self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: self.rows,
            });
        }
        (0..self.cols)
            .combinations(self.rows)
            .map(|cols| self.select_cols(&cols).determinant())
            .collect()
    }
}

pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.rref()
}

pub fn rank_and_kernel(m: &Matrix) -> (usize, Matrix) {
    m.rank_and_kernel()
}

pub fn maximal_minors(m: &Matrix) -> Result<Vec<Elem>> {
    m.maximal_minors()
}
