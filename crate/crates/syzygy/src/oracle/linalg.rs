//! Exact dense linear algebra over a field: reduced row echelon form
//! and everything that falls out of it.

#![allow(clippy::needless_range_loop)]

use crate::oracle::field::Field;

/// A dense matrix in row-major order. Vectors are rows; a linear map
/// sends a row vector `v` to `v * M`, so composition reads left to
/// right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[F]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut out = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<F> = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = out.at_mut(r, c);
                    *cell = cell.add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn apply_row(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut out = vec![F::zero(); self.cols];
        for (k, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for c in 0..self.cols {
                let b = self.at(k, c);
                if !b.is_zero() {
                    out[c] = out[c].add(&coeff.mul(b));
                }
            }
        }
        out
    }

    pub fn vstack(top: &Matrix<F>, bottom: &Matrix<F>) -> Matrix<F> {
        assert_eq!(top.cols, bottom.cols, "dimension mismatch");
        let mut data = top.data.clone();
        data.extend_from_slice(&bottom.data);
        Matrix {
            rows: top.rows + bottom.rows,
            cols: top.cols,
            data,
        }
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (lead..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pivot_row);
            let scale = self.at(lead, col).inv();
            for c in col..self.cols {
                let v = self.at(lead, c).mul(&scale);
                *self.at_mut(lead, c) = v;
            }
            for r in 0..self.rows {
                if r == lead || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c).sub(&factor.mul(self.at(lead, c)));
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the left kernel: rows `v` with `v * self = 0`.
    pub fn left_kernel(&self) -> Matrix<F> {
        let mut aug = Matrix::zero(self.rows, self.cols + self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols + r) = F::one();
        }
        let pivots = aug.rref();
        let kernel_rows: Vec<Vec<F>> = (0..self.rows)
            .filter(|&r| (0..self.cols).all(|c| aug.at(r, c).is_zero()))
            .map(|r| (0..self.rows).map(|c| aug.at(r, self.cols + c).clone()).collect())
            .collect();
        let _ = pivots;
        if kernel_rows.is_empty() {
            Matrix::zero(0, self.rows)
        } else {
            Matrix::from_rows(kernel_rows)
        }
    }

    /// Row space basis in echelon form, zero rows dropped.
    pub fn row_basis(&self) -> Matrix<F> {
        let mut m = self.clone();
        let pivots = m.rref();
        let rows: Vec<Vec<F>> = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        if rows.is_empty() {
            Matrix::zero(0, self.cols)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Solves `x * self = rhs` for each row of `rhs`; `None` when any
    /// row is outside the row space.
    pub fn solve_left(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.cols, rhs.cols, "dimension mismatch");
        let mut aug = Matrix::zero(self.rows, self.cols + self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols + r) = F::one();
        }
        aug.rref();
        let mut out = Matrix::zero(rhs.rows, self.rows);
        for i in 0..rhs.rows {
            let mut residue: Vec<F> = rhs.row(i).to_vec();
            let mut combo = vec![F::zero(); self.rows];
            for r in 0..aug.rows {
                let Some(lead) = (0..self.cols).find(|&c| !aug.at(r, c).is_zero()) else {
                    continue;
                };
                let coeff = residue[lead].clone();
                if coeff.is_zero() {
                    continue;
                }
                for c in 0..self.cols {
                    residue[c] = residue[c].sub(&coeff.mul(aug.at(r, c)));
                }
                for c in 0..self.rows {
                    combo[c] = combo[c].add(&coeff.mul(aug.at(r, self.cols + c)));
                }
            }
            if residue.iter().any(|v| !v.is_zero()) {
                return None;
            }
            for c in 0..self.rows {
                *out.at_mut(i, c) = combo[c].clone();
            }
        }
        Some(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::Rat;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_rref() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(Matrix::<Rat>::identity(3).rank(), 3);
    }

    #[test]
    fn left_kernel_annihilates() {
        let a = m(&[&[1, 2], &[2, 4], &[3, 5]]);
        let k = a.left_kernel();
        assert_eq!(k.rows, 1);
        let product = k.mul(&a);
        assert!(product.is_zero_matrix());
    }

    #[test]
    fn solve_left_recovers_combination() {
        let a = m(&[&[1, 0, 2], &[0, 1, 1]]);
        let rhs = m(&[&[3, 4, 10]]);
        let x = a.solve_left(&rhs).unwrap();
        assert_eq!(x.mul(&a), rhs);
        let outside = m(&[&[0, 0, 1]]);
        assert!(a.solve_left(&outside).is_none());
    }

    #[test]
    fn matrix_multiplication_row_convention() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.apply_row(&[Rat::from_i64(1), Rat::from_i64(0)]), vec![
            Rat::from_i64(1),
            Rat::from_i64(2)
        ]);
    }
}
