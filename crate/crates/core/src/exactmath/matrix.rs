//! Sparse exact matrices in compressed-column form.

use super::sparse::{Accumulator, SparseVec};
use super::{CycScalar, MathError};

/// A `rows × cols` matrix stored column by column; column `j` is the image
/// of the `j`-th basis vector of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            columns: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            columns: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.max_index().is_none_or(|m| m < rows)));
        Matrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, MathError>
    where
        I: IntoIterator<Item = (usize, usize, CycScalar)>,
    {
        let mut accs: Vec<Accumulator> = (0..cols).map(|_| Accumulator::new()).collect();
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(MathError::Shape(format!(
                    "entry ({r},{c}) outside a {rows}x{cols} matrix"
                )));
            }
            accs[c].add_term(r, &v);
        }
        Ok(Matrix {
            rows,
            cols,
            columns: accs.into_iter().map(Accumulator::finish).collect(),
        })
    }

    pub fn from_dense_rows(rows: &[Vec<CycScalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let columns = (0..ncols)
            .map(|j| {
                SparseVec::from_sorted(
                    (0..nrows)
                        .filter(|&i| !rows[i][j].is_zero())
                        .map(|i| (i, rows[i][j].clone()))
                        .collect(),
                )
            })
            .collect();
        Matrix {
            rows: nrows,
            cols: ncols,
            columns,
        }
    }

    /// Permutation-with-scalars matrix: basis vector `j` maps to `scale[j] * e_{target[j]}`.
    pub fn monomial(rows: usize, targets: &[(usize, CycScalar)]) -> Self {
        Matrix {
            rows,
            cols: targets.len(),
            columns: targets
                .iter()
                .map(|(t, c)| {
                    if c.is_zero() {
                        SparseVec::new()
                    } else {
                        SparseVec::from_sorted(vec![(*t, c.clone())])
                    }
                })
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> CycScalar {
        self.columns[c]
            .get(r)
            .cloned()
            .unwrap_or_else(|| CycScalar::zero(1))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn density(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            return 0.0;
        }
        self.nnz() as f64 / (self.rows as f64 * self.cols as f64)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.columns.iter().enumerate().all(|(j, c)| {
                c.nnz() == 1 && c.entries()[0].0 == j && c.entries()[0].1.is_one()
            })
    }

    /// `self · v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, c) in v.iter() {
            acc.add_scaled(&self.columns[*j], c);
        }
        acc.finish()
    }

    /// Matrix product `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix, MathError> {
        if self.cols != other.rows {
            return Err(MathError::Shape(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    /// Panicking composition for shapes known to agree.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.compose(other).expect("matrix shapes agree")
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a in &self.columns {
            for b in &other.columns {
                columns.push(a.kron(b, other.rows));
            }
        }
        Matrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            columns,
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &CycScalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut rows_out: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                rows_out[*i].push((j, c.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            columns: rows_out.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    /// Rows as sparse vectors indexed by column.
    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        self.transpose().columns
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<CycScalar>> {
        let mut out = vec![vec![CycScalar::zero(1); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                out[*i][j] = c.clone();
            }
        }
        out
    }

    /// Restriction to a subset of columns, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: idx.len(),
            columns: idx.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// First position (in column-major order) where two equal-shape matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize, CycScalar, CycScalar)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        for (j, (a, b)) in self.columns.iter().zip(&other.columns).enumerate() {
            if a == b {
                continue;
            }
            let d = a.sub(b);
            let (i, _) = d.entries()[0].clone();
            let x = a.get(i).cloned().unwrap_or_else(|| CycScalar::zero(1));
            let y = b.get(i).cloned().unwrap_or_else(|| CycScalar::zero(1));
            return Some((i, j, x, y));
        }
        None
    }

    /// Largest cyclotomic order appearing among the entries.
    pub fn max_order(&self) -> u64 {
        self.columns
            .iter()
            .flat_map(|c| c.iter().map(|(_, x)| x.order()))
            .fold(1, num_integer::lcm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_dense_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| CycScalar::from_int(1, x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn compose_and_kron() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[1, 0]]));
        assert!(Matrix::identity(2).kron(&Matrix::identity(3)).is_identity());
        let k = a.kron(&b);
        assert_eq!(k.get(1, 2), CycScalar::from_int(1, 2));
        assert_eq!(k.get(3, 2), CycScalar::from_int(1, 1));
        assert_eq!(k.get(3, 3), CycScalar::zero(1));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.first_difference(&b).map(|d| (d.0, d.1)), Some((0, 0)));
    }
}
