//! Exact linear algebra over cyclotomic fields.
//!
//! Elimination is fraction-free: a row is updated as `p·row − a·pivot_row`
//! and then divided by its rational content, so entries stay integral in
//! `Z[ζ]` with small coefficients. Rows are kept sparse until the working
//! set is more than half full, after which a dense routine finishes the job.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sparse::SparseVec;
use super::{CycScalar, Matrix, MathError};

/// Reduced row echelon form: row `r` has a leading `1` in column `pivots[r]`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
    pub ncols: usize,
}

impl Rref {
    /// Basis of the null space, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let minus_one = CycScalar::from_int(1, -1);
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut entries = vec![(f, CycScalar::one(1))];
                for (r, row) in self.rows.iter().enumerate() {
                    if let Some(c) = row.get(f) {
                        entries.push((self.pivots[r], c * &minus_one));
                    }
                }
                SparseVec::from_entries(entries)
            })
            .collect()
    }
}

fn row_primitive(entries: &[&CycScalar]) -> Option<BigRational> {
    let mut lcm = BigInt::one();
    for c in entries {
        lcm = lcm.lcm(c.raw().1);
    }
    let mut g = BigInt::zero();
    for c in entries {
        let (num, den) = c.raw();
        let f = &lcm / den;
        for x in num {
            if !x.is_zero() {
                g = g.gcd(&(x * &f));
            }
        }
    }
    if g.is_zero() {
        return None;
    }
    let q = BigRational::new(lcm, g);
    if q.is_one() {
        None
    } else {
        Some(q)
    }
}

fn primitive_sparse(v: SparseVec) -> SparseVec {
    let refs: Vec<&CycScalar> = v.iter().map(|(_, c)| c).collect();
    match row_primitive(&refs) {
        Some(q) => SparseVec::from_sorted(
            v.iter().map(|(i, c)| (*i, c.scale_rational(&q))).collect(),
        ),
        None => v,
    }
}

fn primitive_dense(row: &mut [CycScalar]) {
    let refs: Vec<&CycScalar> = row.iter().filter(|c| !c.is_zero()).collect();
    if let Some(q) = row_primitive(&refs) {
        for c in row.iter_mut() {
            if !c.is_zero() {
                *c = c.scale_rational(&q);
            }
        }
    }
}

/// Row reduction of the given rows (each a sparse vector of length `ncols`).
pub fn rref_rows(rows: Vec<SparseVec>, ncols: usize) -> Rref {
    let mut pending: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_zero()).collect();
    let mut done: Vec<(usize, SparseVec)> = Vec::new();
    let total_rows = pending.len();
    for col in 0..ncols {
        if pending.is_empty() {
            break;
        }
        let nnz: usize = pending.iter().chain(done.iter().map(|(_, r)| r)).map(SparseVec::nnz).sum();
        if total_rows * ncols > 64 && 2 * nnz > total_rows * ncols {
            let mut all: Vec<SparseVec> = done.into_iter().map(|(_, r)| r).collect();
            all.extend(pending);
            return dense_rref(
                all.iter().map(|r| r.to_dense(ncols)).collect(),
                ncols,
            );
        }
        let best = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r.get(col).is_some())
            .min_by_key(|(_, r)| r.nnz())
            .map(|(i, _)| i);
        let Some(bi) = best else { continue };
        let prow = pending.swap_remove(bi);
        let p = prow.get(col).unwrap().clone();
        let eliminate = |r: &SparseVec| -> SparseVec {
            let a = r.get(col).unwrap();
            primitive_sparse(r.lin_comb(&p, &prow, &(-a)))
        };
        for r in pending.iter_mut() {
            if r.get(col).is_some() {
                *r = eliminate(r);
            }
        }
        for (_, r) in done.iter_mut() {
            if r.get(col).is_some() {
                *r = eliminate(r);
            }
        }
        pending.retain(|r| !r.is_zero());
        done.push((col, prow));
    }
    finish_rref(done, ncols)
}

fn finish_rref(mut done: Vec<(usize, SparseVec)>, ncols: usize) -> Rref {
    done.sort_by_key(|(c, _)| *c);
    let pivots: Vec<usize> = done.iter().map(|(c, _)| *c).collect();
    let rows: Vec<SparseVec> = done
        .into_iter()
        .map(|(c, r)| {
            let inv = r.get(c).unwrap().inv();
            r.scale(&inv)
        })
        .collect();
    Rref {
        rank: pivots.len(),
        pivots,
        rows,
        ncols,
    }
}

fn dense_rref(mut rows: Vec<Vec<CycScalar>>, ncols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r >= rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let p = rows[r][col].clone();
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let a = rows[i][col].clone();
            for j in 0..ncols {
                let upd = if rows[r][j].is_zero() {
                    if rows[i][j].is_zero() {
                        continue;
                    }
                    &rows[i][j] * &p
                } else {
                    &rows[i][j] * &p - &rows[r][j] * &a
                };
                rows[i][j] = upd;
            }
            primitive_dense(&mut rows[i]);
        }
        pivots.push(col);
        r += 1;
    }
    let done = pivots
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, SparseVec::from_dense(&rows[i])))
        .collect();
    finish_rref(done, ncols)
}

/// Rank and a kernel basis of a matrix.
pub fn rref_kernel(m: &Matrix) -> (usize, Vec<SparseVec>) {
    let rr = rref_rows(m.sparse_rows(), m.cols());
    let ker = rr.kernel_basis();
    (rr.rank, ker)
}

pub fn rank(m: &Matrix) -> usize {
    rref_rows(m.sparse_rows(), m.cols()).rank
}

pub fn kernel(m: &Matrix) -> Vec<SparseVec> {
    rref_kernel(m).1
}

/// Inverse of a square matrix.
pub fn inverse(m: &Matrix) -> Result<Matrix, MathError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(MathError::Shape(format!("{}x{} matrix is not square", n, m.cols())));
    }
    let aug: Vec<SparseVec> = m
        .sparse_rows()
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let mut e: Vec<(usize, CycScalar)> = r.into_entries();
            e.push((n + i, CycScalar::one(1)));
            SparseVec::from_sorted(e)
        })
        .collect();
    let rr = rref_rows(aug, 2 * n);
    if rr.rank < n || rr.pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return Err(MathError::NotInvertible);
    }
    let right: Vec<SparseVec> = rr.rows[..n]
        .iter()
        .map(|r| {
            SparseVec::from_sorted(
                r.iter()
                    .filter(|(j, _)| *j >= n)
                    .map(|(j, c)| (j - n, c.clone()))
                    .collect(),
            )
        })
        .collect();
    Ok(Matrix::from_columns(n, right).transpose())
}

/// Left inverse `L` with `L·m = I` for a matrix of full column rank.
pub fn left_inverse(m: &Matrix) -> Result<Matrix, MathError> {
    let k = m.cols();
    let n = m.rows();
    if k == 0 {
        return Ok(Matrix::zeros(0, n));
    }
    let rr = rref_rows(m.columns().to_vec(), n);
    if rr.rank < k {
        return Err(MathError::NotInvertible);
    }
    let sel = &rr.pivots;
    let sub = m.transpose().select_columns(sel).transpose();
    let inv = inverse(&sub)?;
    let columns: Vec<SparseVec> = {
        let mut cols = vec![SparseVec::new(); n];
        for (t, &row) in sel.iter().enumerate() {
            cols[row] = inv.column(t).clone();
        }
        cols
    };
    Ok(Matrix::from_columns(k, columns))
}

/// Expresses vectors in terms of a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    basis: Matrix,
    left: Matrix,
}

impl SpanSolver {
    pub fn new(basis: &[SparseVec], dim: usize) -> Result<Self, MathError> {
        let basis = Matrix::from_columns(dim, basis.to_vec());
        let left = left_inverse(&basis)?;
        Ok(SpanSolver { basis, left })
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.cols() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `target`, or `NotInSpan`.
    pub fn solve(&self, target: &SparseVec) -> Result<SparseVec, MathError> {
        let c = self.left.apply(target);
        if self.basis.apply(&c) == *target {
            Ok(c)
        } else {
            Err(MathError::NotInSpan)
        }
    }

    /// Re-expresses every column of `m` in the basis.
    pub fn solve_columns(&self, m: &Matrix) -> Result<Matrix, MathError> {
        let cols = m
            .columns()
            .iter()
            .map(|c| self.solve(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(self.len(), cols))
    }
}

/// Coordinates of `target` in the span of independent `basis` vectors of length `dim`.
pub fn solve_in_span(
    basis: &[SparseVec],
    target: &SparseVec,
    dim: usize,
) -> Result<Vec<CycScalar>, MathError> {
    let s = SpanSolver::new(basis, dim)?;
    Ok(s.solve(target)?.to_dense(basis.len()))
}

/// One solution of `a·x = b`, free variables set to zero.
pub fn solve_linear(a: &Matrix, b: &SparseVec) -> Result<SparseVec, MathError> {
    let n = a.cols();
    let mut rows = a.sparse_rows();
    for (i, c) in b.iter() {
        let mut e = rows[*i].clone().into_entries();
        e.push((n, c.clone()));
        rows[*i] = SparseVec::from_sorted(e);
    }
    let rr = rref_rows(rows, n + 1);
    if rr.pivots.last() == Some(&n) {
        return Err(MathError::NotInSpan);
    }
    Ok(SparseVec::from_entries(
        rr.rows
            .iter()
            .zip(&rr.pivots)
            .filter_map(|(r, &p)| r.get(n).map(|c| (p, c.clone()))),
    ))
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
    fn kernel_examples() {
        let (r, k) = rref_kernel(&Matrix::identity(3));
        assert_eq!((r, k.len()), (3, 0));
        let (r, k) = rref_kernel(&m(&[&[1, 1], &[1, 1]]));
        assert_eq!(r, 1);
        assert_eq!(k[0], SparseVec::from_entries([(0, CycScalar::from_int(1, -1)), (1, CycScalar::one(1))]));
        let q2 = Matrix::from_dense_rows(&[vec![CycScalar::one(2) + CycScalar::root_of_unity(2, 1)]]);
        let (r, k) = rref_kernel(&q2);
        assert_eq!((r, k.len()), (0, 1));
    }

    #[test]
    fn inverse_and_span() {
        let a = m(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = inverse(&a).unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_err());
        let e1 = SparseVec::unit(0);
        let e12 = SparseVec::from_entries([(0, CycScalar::one(1)), (1, CycScalar::one(1))]);
        assert_eq!(solve_in_span(std::slice::from_ref(&e1), &e1, 2).unwrap(), vec![CycScalar::one(1)]);
        assert_eq!(solve_in_span(&[e12], &e1, 2), Err(MathError::NotInSpan));
        let x = solve_linear(&a, &e1).unwrap();
        assert_eq!(a.apply(&x), e1);
    }

    #[test]
    fn dense_fallback_agrees() {
        let rows: Vec<Vec<CycScalar>> = (0..10)
            .map(|i| (0..10).map(|j| CycScalar::from_ints(5, &[((i * j) % 7) as i64, (i + j) as i64 % 3])).collect())
            .collect();
        let a = Matrix::from_dense_rows(&rows);
        let (r, ker) = rref_kernel(&a);
        assert_eq!(r + ker.len(), 10);
        for v in &ker {
            assert!(a.apply(v).is_zero());
        }
    }
}
