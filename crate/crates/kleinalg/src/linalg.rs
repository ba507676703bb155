//! Small dense matrices over the exact cyclotomic scalars, with the exact
//! Gauss-Jordan kernels the representation layer needs (inverse, nullspace).

use std::fmt;

use crate::scalars::Cyclotomic;
use crate::{Error, Result};

/// A dense `rows x cols` matrix over [`Cyclotomic`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            m.set(j, j, Cyclotomic::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(entries: Vec<Cyclotomic>) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (j, e) in entries.into_iter().enumerate() {
            m.set(j, j, e);
        }
        m
    }

    /// The 1x1 matrix of a scalar.
    pub fn scalar(c: Cyclotomic) -> Matrix {
        Matrix {
            rows: 1,
            cols: 1,
            data: vec![c],
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclotomic) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclotomic::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<Cyclotomic> {
        (0..self.rows.min(self.cols))
            .map(|j| self.get(j, j).clone())
            .collect()
    }

    pub fn trace(&self) -> Cyclotomic {
        self.diagonal_entries()
            .into_iter()
            .fold(Cyclotomic::zero(), |acc, d| acc + d)
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Cyclotomic::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&a.checked_mul(rhs.get(k, c))?)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch);
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = a.checked_add(b)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.checked_add(&-rhs)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|a| a.checked_mul(c).expect("scalar conductor"))
                .collect(),
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = work.get(col, col).clone();
            let pinv = p.inverse()?;
            work.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r != col && !work.get(r, col).is_zero() {
                    let factor = work.get(r, col).clone();
                    work.sub_scaled_row(r, col, &factor);
                    inv.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch);
        }
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            base = base.checked_mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn det(&self) -> Result<Cyclotomic> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut det = Cyclotomic::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !work.get(r, col).is_zero()) {
                Some(p) => p,
                None => return Ok(Cyclotomic::zero()),
            };
            if pivot != col {
                work.swap_rows(pivot, col);
                det = -det;
            }
            let p = work.get(col, col).clone();
            det = det.checked_mul(&p)?;
            let pinv = p.inverse()?;
            for r in col + 1..n {
                if !work.get(r, col).is_zero() {
                    let factor = work.get(r, col).checked_mul(&pinv)?;
                    work.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Cyclotomic) {
        for c in 0..self.cols {
            let v = self.get(r, c).checked_mul(factor).expect("conductors align");
            self.set(r, c, v);
        }
    }

    /// row_r -= factor * row_src
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Cyclotomic) {
        for c in 0..self.cols {
            let update = self.get(src, c).checked_mul(factor).expect("conductors align");
            let v = self.get(r, c).checked_sub(&update).expect("conductors align");
            self.set(r, c, v);
        }
    }
}

impl std::ops::Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("dimension mismatch")
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("dimension mismatch")
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("dimension mismatch")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Basis of the nullspace of the homogeneous system `rows * v = 0`, by exact
/// reduced row echelon form. Deterministic: free columns are taken in
/// ascending order.
pub fn nullspace(rows: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut mat: Vec<Vec<Cyclotomic>> = rows.to_vec();
    let nrows = mat.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(pivot_row, r);
        let pinv = mat[pivot_row][col].inverse().expect("nonzero pivot");
        for c in col..ncols {
            mat[pivot_row][c] = mat[pivot_row][c].checked_mul(&pinv).expect("conductors");
        }
        for r2 in 0..nrows {
            if r2 != pivot_row && !mat[r2][col].is_zero() {
                let factor = mat[r2][col].clone();
                for c in col..ncols {
                    let update = mat[pivot_row][c].checked_mul(&factor).expect("conductors");
                    mat[r2][c] = mat[r2][c].checked_sub(&update).expect("conductors");
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &free in &free_cols {
        let mut v = vec![Cyclotomic::zero(); ncols];
        v[free] = Cyclotomic::one();
        for (row_idx, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -mat[row_idx][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    #[test]
    fn inverse_of_2x2() {
        let m = Matrix::from_rows(vec![vec![c(2), c(1)], vec![c(1), c(1)]]);
        let inv = m.inverse().unwrap();
        assert!(m.checked_mul(&inv).unwrap().is_identity());
        assert!(inv.checked_mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]);
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
        assert_eq!(m.det().unwrap(), Cyclotomic::zero());
    }

    #[test]
    fn power_with_negative_exponent() {
        let m = Matrix::diagonal(vec![c(2), Cyclotomic::from_rational(rat(1, 2))]);
        let p = m.pow(-1).unwrap();
        assert_eq!(
            p,
            Matrix::diagonal(vec![Cyclotomic::from_rational(rat(1, 2)), c(2)])
        );
        assert!(m.pow(0).unwrap().is_identity());
    }

    #[test]
    fn nullspace_of_rank_one_system() {
        // x + 2y = 0 has a one-dimensional solution space
        let rows = vec![vec![c(1), c(2)]];
        let basis = nullspace(&rows);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let combo = v[0].clone() + v[1].checked_mul(&c(2)).unwrap();
        assert!(combo.is_zero());
    }

    #[test]
    fn nullspace_of_full_rank_system_is_empty() {
        let rows = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        assert!(nullspace(&rows).is_empty());
    }

    #[test]
    fn determinant_of_swap_is_minus_one() {
        let swap = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]);
        assert_eq!(swap.det().unwrap(), c(-1));
    }
}
