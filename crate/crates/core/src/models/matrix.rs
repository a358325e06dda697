use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!("matrix of size {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_integers(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&v| int(v)).collect())
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> BigRational,
    ) -> Result<Self> {
        Self::new(
            rows,
            cols,
            (0..rows * cols).map(|x| f(x / cols, x % cols)).collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |r, c| if r == c { int(1) } else { int(0) })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: (0..self.rows * self.cols)
                .map(|x| self.get(x % self.rows, x / self.rows).clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Self::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| {
                acc + self.get(r, k) * other.get(k, c)
            })
        })
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(
                "cannot add matrices of different shapes".into(),
            ));
        }
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) + other.get(r, c)
        })
    }

    /// The matrix with the given blocks on the diagonal.
    pub fn block_diagonal(&self, other: &RationalMatrix) -> RationalMatrix {
        let (rows, cols) = (self.rows + other.rows, self.cols + other.cols);
        let entries = (0..rows * cols)
            .map(|x| {
                let (r, c) = (x / cols, x % cols);
                if r < self.rows && c < self.cols {
                    self.get(r, c).clone()
                } else if r >= self.rows && c >= self.cols {
                    other.get(r - self.rows, c - self.cols).clone()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Rows and columns taken in the given order; indices may repeat.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RationalMatrix {
        RationalMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries: rows
                .iter()
                .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
                .collect(),
        }
    }

    /// Determinant by exact elimination; the empty matrix has determinant 1.
    pub fn det(&self) -> Result<BigRational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != col {
                for c in 0..n {
                    a.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &pivot;
                for c in col..n {
                    let v = &factor * &a[col * n + c];
                    a[r * n + c] -= v;
                }
            }
        }
        Ok(det)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == rows {
                break;
            }
            let Some(p) = (row..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            for c in 0..cols {
                a.swap(p * cols + c, row * cols + c);
            }
            let pivot = a[row * cols + col].clone();
            for c in 0..cols {
                a[row * cols + c] /= &pivot;
            }
            for r in (0..rows).filter(|&r| r != row) {
                if a[r * cols + col].is_zero() {
                    continue;
                }
                let factor = a[r * cols + col].clone();
                for c in 0..cols {
                    let v = &factor * &a[row * cols + c];
                    a[r * cols + c] -= v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (
            RationalMatrix {
                rows,
                cols,
                entries: a,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : A x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = vec![BigRational::zero(); self.cols];
                x[free] = BigRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = -r.get(row, free).clone();
                }
                x
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (r + 1..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != self.get(c, r))
    }

    /// Checks squareness, symmetry and that every leading principal minor is
    /// positive.
    pub fn check_positive_definite(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "covariance matrix must be square, got {}x{}",
                self.rows, self.cols
            )));
        }
        if let Some((row, col)) = self.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        for order in 1..=self.rows {
            let idx: Vec<usize> = (0..order).collect();
            let minor = self.submatrix(&idx, &idx).det()?;
            if !minor.is_positive() {
                return Err(Error::NotPositiveDefinite {
                    order,
                    value: minor.to_string(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
