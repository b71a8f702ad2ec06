//! Dense square matrices over [`Scalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for k in 0..dim {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(Scalar::is_real)
    }

    /// Exactly one nonzero entry in every row and every column.
    pub fn is_monomial(&self) -> bool {
        let rows_ok = (0..self.dim)
            .all(|r| (0..self.dim).filter(|&c| !self.get(r, c).is_zero()).count() == 1);
        let cols_ok = (0..self.dim)
            .all(|c| (0..self.dim).filter(|&r| !self.get(r, c).is_zero()).count() == 1);
        rows_ok && cols_ok
    }

    /// Positions `(row, col)` where the two matrices differ.
    pub fn differences(&self, other: &Matrix) -> Vec<(usize, usize)> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Vec::new();
        for r in 0..self.dim {
            for c in 0..self.dim {
                if self.get(r, c) != other.get(r, c) {
                    out.push((r, c));
                }
            }
        }
        out
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[r * d + c] += &(a * b);
                }
            }
        }
        out
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows()
            .map(|row| row.iter().map(Scalar::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}
