//! Dense matrices over an exact scalar field.
//!
//! Sizes stay small (determinants up to ~10, oracle operators up to the
//! dimension cap), so the representation is a flat dense vector. Matrix
//! products skip zero entries, which matters because monodromy entries are
//! sparse.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<K: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Mat<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out: Mat<K> = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![K::zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() || v[k].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[k]));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![K::zero(); self.cols];
        for k in 0..self.rows {
            if v[k].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let b = self.get(k, j);
                if b.is_zero() {
                    continue;
                }
                out[j] = out[j].add(&v[k].mul(b));
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&K) -> Result<T>) -> Result<Mat<T>> {
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            data.push(f(v)?);
        }
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    /// Exact determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> Result<K> {
        if self.rows != self.cols {
            return Err(Error::CardinalityMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(K::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = K::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let pivot = (k + 1..n).find(|&r| !m.get(r, k).is_zero());
                match pivot {
                    None => return Ok(K::zero()),
                    Some(r) => {
                        for j in 0..n {
                            let a = m.get(k, j).clone();
                            let b = m.get(r, j).clone();
                            m.set(k, j, b);
                            m.set(r, j, a);
                        }
                        negate = !negate;
                    }
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j).mul(&pivot).sub(&m.get(i, k).mul(m.get(k, j)));
                    // exact in Bareiss elimination
                    m.set(i, j, num.div(&prev)?);
                }
                m.set(i, k, K::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg() } else { d })
    }
}

impl<K: Scalar> fmt::Debug for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};

    #[test]
    fn determinant_values() {
        let m = Mat::from_fn(2, 2, |i, j| ri([[1, 2], [3, 4]][i][j]));
        assert_eq!(m.det().unwrap(), ri(-2));

        let m = Mat::from_fn(3, 3, |i, j| ri([[0, 1, 2], [1, 0, 3], [4, 5, 6]][i][j]));
        // pivot swap path
        assert_eq!(m.det().unwrap(), ri(16));

        let singular = Mat::from_fn(2, 2, |i, j| ri([[1, 2], [2, 4]][i][j]));
        assert_eq!(singular.det().unwrap(), ri(0));

        let empty: Mat<Rat> = Mat::zero(0, 0);
        assert_eq!(empty.det().unwrap(), ri(1));
    }

    #[test]
    fn rational_determinant() {
        let m = Mat::from_fn(2, 2, |i, j| [[rat(1, 2), rat(1, 3)], [rat(1, 5), rat(1, 7)]][i][j].clone());
        assert_eq!(m.det().unwrap(), rat(1, 14) - rat(1, 15));
    }

    #[test]
    fn mul_and_vectors() {
        let a = Mat::from_fn(2, 2, |i, j| ri([[1, 2], [3, 4]][i][j]));
        let b = Mat::from_fn(2, 2, |i, j| ri([[0, 1], [1, 0]][i][j]));
        let ab = a.mul(&b);
        assert_eq!(ab, Mat::from_fn(2, 2, |i, j| ri([[2, 1], [4, 3]][i][j])));
        assert_eq!(a.mul_vec(&[ri(1), ri(1)]), vec![ri(3), ri(7)]);
        assert_eq!(a.vec_mul(&[ri(1), ri(1)]), vec![ri(4), ri(6)]);
    }
}
