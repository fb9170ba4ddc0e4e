//! Exact linear algebra over a [`FieldSpec`].
//!
//! [`MatrixK`] is a plain dense matrix with Gauss–Jordan elimination. The
//! kernel computations behind the centralizer and dependence searches go
//! through [`ColumnReducer`] instead, which works on sparse columns and
//! returns the same canonical kernel basis.

mod sparse;

pub use sparse::ColumnReducer;

use std::fmt;

use crate::coeff::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Resource cap for matrix assembly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of stored entries: `rows * cols` for dense matrices,
    /// nonzero input entries for [`ColumnReducer`].
    pub max_entries: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ENTRIES: usize = 200_000;

    pub fn unlimited() -> Self {
        Limits {
            max_entries: usize::MAX,
        }
    }

    pub(crate) fn check(&self, entries: usize) -> Result<()> {
        if entries > self.max_entries {
            Err(Error::MatrixTooLarge {
                entries,
                limit: self.max_entries,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_entries: Self::DEFAULT_MAX_ENTRIES,
        }
    }
}

/// Dense row-major matrix over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixK {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixK {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Result<Self> {
        Self::zeros_with_limits(field, rows, cols, &Limits::default())
    }

    pub fn zeros_with_limits(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        limits: &Limits,
    ) -> Result<Self> {
        limits.check(rows.saturating_mul(cols))?;
        Ok(MatrixK {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        })
    }

    /// Builds a matrix from row vectors. All rows must have the same length
    /// and every entry must belong to `field`.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols)?;
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x)?;
            }
        }
        Ok(m)
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) -> Result<()> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                x.field().to_string(),
            ));
        }
        self.entries[i * self.cols + j] = x;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Reduced row echelon form and the (strictly increasing) pivot columns.
    pub fn rref(&self) -> (MatrixK, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.entries[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = m.get(i, j) - &(&factor * m.get(r, j));
                    m.entries[i * m.cols + j] = x;
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

    /// Canonical nullspace basis read off the RREF: one vector per free
    /// column, with that free variable set to 1 and the other free
    /// variables set to 0. Vectors are ordered by free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, free);
                }
                v
            })
            .collect()
    }

    /// One solution of `self * x = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug =
            MatrixK::zeros_with_limits(self.field, self.rows, self.cols + 1, &Limits::unlimited())?;
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone())?;
            }
            aug.set(i, self.cols, bi.clone())?;
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for MatrixK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
