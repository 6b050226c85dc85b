//! Dense matrices over `ℚ` with exact rank and kernel computation.
//!
//! Rank goes through fraction-free (Bareiss) elimination on a
//! denominator-cleared integer copy, which keeps intermediate entries from
//! exploding. Kernel bases come from a rational Gauss–Jordan pass; the two
//! elimination routes cross-check each other in the test suite.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Row-major dense matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadCoefficientCount {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::BadCoefficientCount {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::BadCoefficientCount {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(i, j) += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Rank over `ℚ`, by Bareiss fraction-free elimination on an integer
    /// copy (each row scaled by the lcm of its denominators).
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                let mut lcm = BigInt::one();
                for v in row {
                    lcm = lcm.lcm(v.denom());
                }
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect();

        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                    // Exact by the Bareiss identity.
                    a[r][c] = num / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            for c in 0..self.cols {
                let hi = p * self.cols + c;
                let lo = row * self.cols + c;
                self.entries.swap(hi, lo);
            }
            let inv = self.at(row, col).clone().recip();
            for c in col..self.cols {
                let v = self.at(row, c).clone() * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c).clone() - &factor * self.at(row, c);
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Canonical kernel basis: one vector per free column, carrying a `1`
    /// at its own free column and `0` at every other free column. With this
    /// shape, the coordinates of a kernel vector can be read off at the
    /// free positions.
    pub fn kernel_basis(&self) -> KernelBasis {
        let mut r = self.clone();
        let pivots = r.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut vectors = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[fc] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(row, fc).clone();
            }
            vectors.push(v);
        }
        KernelBasis {
            dim: self.cols,
            free_cols: free,
            vectors,
        }
    }
}

/// Basis of the null space of a matrix, in the canonical free-column form
/// produced by [`RatMatrix::kernel_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    dim: usize,
    free_cols: Vec<usize>,
    vectors: Vec<Vec<Rat>>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    /// Expands coordinates in this basis to a full vector.
    pub fn expand(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (c, v) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(v) {
                *o += c * b;
            }
        }
        out
    }

    /// Coordinates of `full` if it lies in the span, else `None`.
    pub fn project(&self, full: &[Rat]) -> Option<Vec<Rat>> {
        let coords: Vec<Rat> = self.free_cols.iter().map(|&c| full[c].clone()).collect();
        if self.expand(&coords) == full {
            Some(coords)
        } else {
            None
        }
    }
}
