//! Dense Gaussian elimination over GF(q).

use crate::gf::{Fe, Field};

/// A dense row-major matrix over a finite field.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Fe>>) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Reduces to reduced row echelon form in place and returns the pivot
    /// columns. Zero rows end up at the bottom.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).expect("pivot nonzero");
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pivot_row = &pivot_row[c..];
            for other in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = other[c];
                if factor.is_zero() {
                    continue;
                }
                let nf = f.neg(factor);
                for (x, &p) in other[c..].iter_mut().zip(pivot_row) {
                    if !p.is_zero() {
                        *x = f.mul_add(*x, nf, p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right nullspace {v : M v = 0}, in reduced echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Fe>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Fe::ZERO; self.cols];
            v[free] = Fe::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(i, free));
            }
            basis.push(v);
        }
        rref_rows(f, self.cols, basis)
    }
}

/// Canonical basis of the span of `rows`: its reduced row echelon form,
/// without zero rows.
pub fn rref_rows(field: &Field, cols: usize, rows: Vec<Vec<Fe>>) -> Vec<Vec<Fe>> {
    if rows.is_empty() {
        return rows;
    }
    let mut m = Matrix::from_rows(field, cols, rows);
    let rank = m.rref().len();
    (0..rank).map(|i| m.row(i).to_vec()).collect()
}

/// An incrementally built echelon basis of a subspace of GFⁿ.
///
/// Each stored row has a 1 at its pivot and zeros at every other pivot.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field, dim: usize) -> EchelonBasis {
        EchelonBasis {
            field: field.clone(),
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Fe>>>(field: &Field, dim: usize, rows: I) -> EchelonBasis {
        let mut b = EchelonBasis::new(field, dim);
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Remainder of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            let nc = f.neg(c);
            for (x, &r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = f.mul_add(*x, nc, r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Adds `v` if it is independent of the stored rows; returns whether it was.
    pub fn insert(&mut self, v: Vec<Fe>) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c.is_zero() {
                continue;
            }
            let nc = f.neg(c);
            for (x, &y) in row.iter_mut().zip(&r) {
                *x = f.mul_add(*x, nc, y);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// The basis in reduced row echelon form, ordered by pivot.
    pub fn rows_sorted(&self) -> Vec<Vec<Fe>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }
}
