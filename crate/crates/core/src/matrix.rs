//! Dense row-major matrices over any ring object.
//!
//! Elements of free modules are row vectors and maps act by right
//! multiplication, so the composite "f then g" has matrix `F * G`.

use alloc::format;
use alloc::vec::Vec;

use crate::ring::{FactorRing, RingOps, Twist};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E> Matrix<E> {
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[E] {
        &self.data
    }
    pub fn into_data(self) -> Vec<E> {
        self.data
    }
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> crate::Result<Self> {
        if data.len() != rows * cols {
            return Err(crate::Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let data: Vec<E> = rows.into_iter().flat_map(|r| {
            assert_eq!(r.len(), cols, "ragged rows");
            r
        }).collect();
        Matrix { rows: n, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Matrix::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

/// Matrix arithmetic for every ring object. Shape mismatches panic; public
/// operations validate shapes before reaching here.
pub trait MatOps: RingOps {
    fn mat_zero(&self, rows: usize, cols: usize) -> Matrix<Self::El> {
        Matrix::from_fn(rows, cols, |_, _| self.zero())
    }

    fn mat_identity(&self, n: usize) -> Matrix<Self::El> {
        self.mat_scalar(n, &self.one())
    }

    fn mat_scalar(&self, n: usize, c: &Self::El) -> Matrix<Self::El> {
        Matrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { self.zero() })
    }

    fn mat_add(&self, a: &Matrix<Self::El>, b: &Matrix<Self::El>) -> Matrix<Self::El> {
        assert_eq!(a.shape(), b.shape(), "mat_add shape mismatch");
        Matrix::from_fn(a.rows(), a.cols(), |i, j| self.add(a.get(i, j), b.get(i, j)))
    }

    fn mat_sub(&self, a: &Matrix<Self::El>, b: &Matrix<Self::El>) -> Matrix<Self::El> {
        assert_eq!(a.shape(), b.shape(), "mat_sub shape mismatch");
        Matrix::from_fn(a.rows(), a.cols(), |i, j| self.sub(a.get(i, j), b.get(i, j)))
    }

    fn mat_neg(&self, a: &Matrix<Self::El>) -> Matrix<Self::El> {
        a.map(|x| self.neg(x))
    }

    fn mat_mul(&self, a: &Matrix<Self::El>, b: &Matrix<Self::El>) -> Matrix<Self::El> {
        assert_eq!(a.cols(), b.rows(), "mat_mul shape mismatch");
        let mut out = self.mat_zero(a.rows(), b.cols());
        for i in 0..a.rows() {
            for k in 0..a.cols() {
                let x = a.get(i, k);
                if self.is_zero(x) {
                    continue;
                }
                for j in 0..b.cols() {
                    let y = b.get(k, j);
                    if self.is_zero(y) {
                        continue;
                    }
                    let t = self.add(out.get(i, j), &self.mul(x, y));
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    /// `c * A`, entrywise left multiplication.
    fn mat_scale_left(&self, c: &Self::El, a: &Matrix<Self::El>) -> Matrix<Self::El> {
        a.map(|x| self.mul(c, x))
    }

    fn mat_is_zero(&self, a: &Matrix<Self::El>) -> bool {
        a.data().iter().all(|x| self.is_zero(x))
    }

    fn block_diag(&self, a: &Matrix<Self::El>, b: &Matrix<Self::El>) -> Matrix<Self::El> {
        Matrix::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |i, j| {
            match (i < a.rows(), j < a.cols()) {
                (true, true) => a.get(i, j).clone(),
                (false, false) => b.get(i - a.rows(), j - a.cols()).clone(),
                _ => self.zero(),
            }
        })
    }
}

impl<R: RingOps + ?Sized> MatOps for R {}

/// Entrywise twists and reductions for rings with a distinguished `omega`.
pub trait TwistOps: FactorRing {
    fn mat_sigma(&self, a: &Matrix<Self::El>) -> Matrix<Self::El> {
        a.map(|x| self.sigma(x))
    }

    fn mat_sigma_inv(&self, a: &Matrix<Self::El>) -> Matrix<Self::El> {
        a.map(|x| self.sigma_inv(x))
    }

    fn mat_twist(&self, t: Twist, a: &Matrix<Self::El>) -> Matrix<Self::El> {
        a.map(|x| self.twist(t, x))
    }

    /// Entrywise `sigma^k` for any integer `k`.
    fn mat_sigma_pow(&self, k: i64, a: &Matrix<Self::El>) -> Matrix<Self::El> {
        let mut m = a.clone();
        for _ in 0..k.unsigned_abs() {
            m = if k > 0 { self.mat_sigma(&m) } else { self.mat_sigma_inv(&m) };
        }
        m
    }

    fn mat_reduce(&self, a: &Matrix<Self::El>) -> Matrix<Self::El> {
        a.map(|x| self.reduce_mod_omega(x))
    }

    fn omega_identity(&self, n: usize) -> Matrix<Self::El> {
        self.mat_scalar(n, &self.omega())
    }
}

impl<R: FactorRing + ?Sized> TwistOps for R {}
