use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LinError, RingSpec};

/// Dense row-major matrix over a [`RingSpec`].
///
/// Over `Z/m` every stored entry is the canonical residue in `[0, m)`.
/// Shapes with zero rows or zero columns are valid and behave as the zero map
/// to or from the zero module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(ring: &RingSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_entries(
        ring: &RingSpec,
        rows: usize,
        cols: usize,
        entries: Vec<BigInt>,
    ) -> Result<Self, LinError> {
        if entries.len() != rows * cols {
            return Err(LinError::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        let entries = entries.into_iter().map(|x| ring.reduce(x)).collect();
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from small-integer rows. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Copy>(ring: &RingSpec, rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        let entries = rows.iter().flatten().map(|&x| x.into()).collect();
        Matrix::from_entries(ring, r, c, entries).expect("shape checked")
    }

    /// Same as [`Matrix::from_rows`] but with an explicit column count, so that
    /// `rows x 0` and `0 x cols` shapes can be written down.
    pub fn from_rows_with_cols<T: Into<BigInt> + Copy>(
        ring: &RingSpec,
        rows: &[Vec<T>],
        cols: usize,
    ) -> Self {
        assert!(rows.iter().all(|row| row.len() == cols), "ragged matrix rows");
        let entries = rows.iter().flatten().map(|&x| x.into()).collect();
        Matrix::from_entries(ring, rows.len(), cols, entries).expect("shape checked")
    }

    pub fn from_fn(
        ring: &RingSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigInt,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(ring.reduce(f(i, j)));
            }
        }
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn column_vector<T: Into<BigInt> + Copy>(ring: &RingSpec, v: &[T]) -> Self {
        Matrix::from_fn(ring, v.len(), 1, |i, _| v[i].into())
    }

    /// `1 x 1` matrix holding `x`.
    pub fn scalar(ring: &RingSpec, x: impl Into<BigInt>) -> Self {
        Matrix::from_entries(ring, 1, 1, vec![x.into()]).expect("1x1")
    }

    /// Diagonal `n x n` matrix.
    pub fn diagonal<T: Into<BigInt> + Copy>(ring: &RingSpec, diag: &[T]) -> Self {
        let n = diag.len();
        Matrix::from_fn(ring, n, n, |i, j| {
            if i == j {
                diag[i].into()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: impl Into<BigInt>) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries[i * self.cols + j] = self.ring.reduce(x.into());
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Forget the modulus: the same canonical entries viewed over Z.
    pub fn lift(&self) -> Matrix {
        Matrix {
            ring: RingSpec::Integers,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.clone(),
        }
    }

    /// Re-interpret the entries over another ring (reducing if needed).
    pub fn over(&self, ring: &RingSpec) -> Matrix {
        Matrix::from_entries(ring, self.rows, self.cols, self.entries.clone()).expect("same shape")
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, k: &BigInt) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) * k)
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix, LinError> {
        self.check_ring(rhs)?;
        if self.cols != rhs.rows {
            return Err(LinError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k * rhs.cols + j];
                    if !b.is_zero() {
                        out[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Matrix::from_entries(&self.ring, self.rows, rhs.cols, out)
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix, LinError> {
        self.check_ring(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(LinError::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix::from_entries(&self.ring, self.rows, self.cols, entries)
    }

    fn check_ring(&self, rhs: &Matrix) -> Result<(), LinError> {
        if self.ring != rhs.ring {
            return Err(LinError::RingMismatch(self.ring.clone(), rhs.ring.clone()));
        }
        Ok(())
    }

    /// `[a | b | ...]`; all parts must share the row count.
    pub fn hstack(ring: &RingSpec, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(ring, rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            assert_eq!(&p.ring, ring, "hstack ring mismatch");
            for i in 0..rows {
                for j in 0..p.cols {
                    out.entries[i * cols + off + j] = p.get(i, j).clone();
                }
            }
            off += p.cols;
        }
        out
    }

    /// Stack vertically; all parts must share the column count.
    pub fn vstack(ring: &RingSpec, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            assert_eq!(&p.ring, ring, "vstack ring mismatch");
            entries.extend(p.entries.iter().cloned());
        }
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn block_diag(ring: &RingSpec, parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            out.paste(r0, c0, p);
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    /// Overwrite the block starting at `(r0, c0)` with `p`.
    pub fn paste(&mut self, r0: usize, c0: usize, p: &Matrix) {
        assert!(r0 + p.rows <= self.rows && c0 + p.cols <= self.cols);
        for i in 0..p.rows {
            for j in 0..p.cols {
                self.entries[(r0 + i) * self.cols + c0 + j] = p.get(i, j).clone();
            }
        }
    }

    /// Kronecker product `self ⊗ rhs`; row index `i * rhs.rows + k`.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ring, rhs.ring, "kronecker ring mismatch");
        Matrix::from_fn(
            &self.ring,
            self.rows * rhs.rows,
            self.cols * rhs.cols,
            |r, c| {
                let (i, k) = (r / rhs.rows, r % rhs.rows);
                let (j, l) = (c / rhs.cols, c % rhs.cols);
                self.get(i, j) * rhs.get(k, l)
            },
        )
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn top_rows(&self, n: usize) -> Matrix {
        self.submatrix(0..n, 0..self.cols)
    }

    /// Drop columns that are entirely zero.
    pub fn without_zero_columns(&self) -> Matrix {
        let keep: Vec<usize> = (0..self.cols)
            .filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero()))
            .collect();
        self.select_columns(&keep)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}", self.ring, self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows().iter().map(|r| {
            r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        })).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{} empty]", self.rows, self.cols);
        }
        let strs: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let w = strs.iter().map(|s| s.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", strs[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on shape or ring mismatch; use [`Matrix::try_mul`] for a checked product.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| -self.get(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self + &(-rhs)
    }
}
