//! Nichols algebras of diagonal braidings: quantum symmetrizers, Hilbert
//! series, Cartan matrices, reflections, and realization as Hopf algebras
//! inside the quantum shuffle algebra.

mod materialize;

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::diagram::BaseCategory;
use crate::exactmath::linalg::rref_rows;
use crate::exactmath::{CycScalar, Matrix, Space, SparseVec};
use crate::{Error, Result};

pub use materialize::{materialize_nichols, nichols_dualization_datum, NicholsAlgebra};

/// A braided vector space with basis `x_1..x_n` and braiding
/// `c(x_i⊗x_j) = q_ij x_j⊗x_i`.
///
/// The braiding is realized in a lattice-graded category: generator `i`
/// has degree `degrees[i]` and the braiding is the bicharacter of
/// `lattice`. By default the lattice is `Z^n` with `lattice = q`; sub- and
/// dual spaces keep the ambient lattice so that their Nichols algebras live
/// in the same category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalBraiding {
    pub q: Vec<Vec<CycScalar>>,
    pub labels: Vec<String>,
    pub degrees: Vec<Vec<i32>>,
    pub lattice: Vec<Vec<CycScalar>>,
}

impl DiagonalBraiding {
    pub fn new(q: Vec<Vec<CycScalar>>) -> Result<Self> {
        let n = q.len();
        if q.iter().any(|r| r.len() != n) {
            return Err(Error::BadParams("braiding matrix must be square".into()));
        }
        if q.iter().flatten().any(|x| x.is_zero()) {
            return Err(Error::BadParams("braiding matrix entries must be nonzero".into()));
        }
        Ok(DiagonalBraiding {
            labels: (1..=n).map(|i| format!("x{i}")).collect(),
            degrees: (0..n).map(|i| (0..n).map(|k| i32::from(k == i)).collect()).collect(),
            lattice: q.clone(),
            q,
        })
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn base(&self) -> Arc<BaseCategory> {
        Arc::new(BaseCategory::graded(self.lattice.clone()))
    }

    /// `χ(α, β)` for the bicharacter with matrix `q` on `Z^rank`.
    pub fn chi(&self, a: &[i32], b: &[i32]) -> CycScalar {
        BaseCategory::graded(self.q.clone()).chi(a, b)
    }

    /// The space `M` with its lattice grading.
    pub fn space(&self, name: &str) -> Space {
        Space::graded(name, self.rank(), Some(Arc::new(self.degrees.clone())))
    }

    /// `c: M⊗M → M⊗M`.
    pub fn braiding_matrix(&self) -> Matrix {
        let n = self.rank();
        let targets: Vec<(usize, CycScalar)> = (0..n * n).map(|k| ((k % n) * n + k / n, self.q[k / n][k % n].clone())).collect();
        Matrix::monomial(n * n, &targets)
    }

    /// Lattice degree of a word.
    pub fn word_degree(&self, word: &[usize]) -> Vec<i32> {
        let len = self.degrees.first().map_or(0, Vec::len);
        let mut d = vec![0; len];
        for &l in word {
            for (t, x) in self.degrees[l].iter().enumerate() {
                d[t] += x;
            }
        }
        d
    }

    /// The one-dimensional subspace spanned by `x_i`.
    pub fn sub(&self, i: usize) -> Self {
        DiagonalBraiding {
            q: vec![vec![self.q[i][i].clone()]],
            labels: vec![self.labels[i].clone()],
            degrees: vec![self.degrees[i].clone()],
            lattice: self.lattice.clone(),
        }
    }

    /// The dual of the subspace spanned by `x_i`, in degree `-deg x_i`.
    pub fn dual(&self, i: usize) -> Self {
        DiagonalBraiding {
            q: vec![vec![self.q[i][i].clone()]],
            labels: vec![format!("{}*", self.labels[i])],
            degrees: vec![self.degrees[i].iter().map(|x| -x).collect()],
            lattice: self.lattice.clone(),
        }
    }

    /// Same diagonal entries and same products `q_jk q_kj`.
    pub fn twist_equivalent(&self, other: &Self) -> bool {
        let n = self.rank();
        n == other.rank()
            && (0..n).all(|j| {
                (0..n).all(|k| {
                    if j == k {
                        self.q[j][j] == other.q[j][j]
                    } else {
                        &self.q[j][k] * &self.q[k][j] == &other.q[j][k] * &other.q[k][j]
                    }
                })
            })
    }

    /// Relabels generators by `perm` (new generator `t` is old `perm[t]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let q = perm.iter().map(|&a| perm.iter().map(|&b| self.q[a][b].clone()).collect()).collect();
        let mut out = DiagonalBraiding::new(q).expect("permutation of a valid braiding");
        out.labels = perm.iter().map(|&a| self.labels[a].clone()).collect();
        out
    }
}

/// Splits a word index of `M^{⊗n}` (first letter most significant).
pub fn word_of(mut idx: usize, rank: usize, n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for t in (0..n).rev() {
        w[t] = idx % rank;
        idx /= rank;
    }
    w
}

pub fn index_of(word: &[usize], rank: usize) -> usize {
    word.iter().fold(0, |acc, &l| acc * rank + l)
}

/// `c` acting on positions `(i, i+1)` of `M^{⊗n}` (0-based).
fn braid_at(c: &Matrix, dim: usize, n: usize, i: usize) -> Matrix {
    let left = Matrix::identity(dim.pow(i as u32));
    let right = Matrix::identity(dim.pow((n - i - 2) as u32));
    left.kron(c).kron(&right)
}

/// `Q_n = (Q_{n−1}⊗id)∘(id + c_{n−1} + c_{n−1}c_{n−2} + … + c_{n−1}⋯c_1)`
/// for an arbitrary braiding `c` on a space of dimension `dim`.
pub fn quantum_symmetrizer(c: &Matrix, dim: usize, n: usize) -> Matrix {
    let mut q = Matrix::identity(1);
    for m in 1..=n {
        q = symmetrizer_step(&q, c, dim, m);
    }
    q
}

/// `Q_m` from `Q_{m−1}`.
fn symmetrizer_step(prev: &Matrix, c: &Matrix, dim: usize, m: usize) -> Matrix {
    let size = dim.pow(m as u32);
    if m == 1 {
        return Matrix::identity(dim);
    }
    if prev.is_zero() {
        return Matrix::zeros(size, size);
    }
    let mut chain = Matrix::identity(size);
    let mut sum = Matrix::identity(size);
    for i in (0..m - 1).rev() {
        chain = chain.mul(&braid_at(c, dim, m, i));
        sum = sum.add(&chain);
    }
    prev.kron(&Matrix::identity(dim)).mul(&sum)
}

/// Per-degree data of a truncated Nichols algebra.
#[derive(Clone, Debug)]
pub struct DegreeData {
    pub degree: usize,
    /// `rank Q_n`.
    pub dim: usize,
    pub kernel_dim: usize,
    /// Words `w` whose images `Q_n(w)` form the chosen basis.
    pub words: Vec<Vec<usize>>,
    /// The basis vectors `Q_n(w)` in `M^{⊗n}`.
    pub basis: Vec<SparseVec>,
}

#[derive(Clone, Debug)]
pub struct NicholsTruncation {
    pub source: DiagonalBraiding,
    pub cutoff: usize,
    pub degrees: Vec<DegreeData>,
    /// Dimensions by degree up to the top nonzero degree (or the cutoff).
    pub hilbert: Vec<usize>,
    /// The top degree was reached and two further degrees vanish.
    pub complete: bool,
}

impl NicholsTruncation {
    pub fn total_dim(&self) -> usize {
        self.hilbert.iter().sum()
    }

    pub fn series(&self) -> String {
        series_string(&self.hilbert)
    }
}

/// Degree data of `Q_n`, using that `Q_n` preserves letter multiplicities.
fn degree_data(q: &Matrix, rank: usize, n: usize) -> DegreeData {
    let size = q.cols();
    let mut blocks: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for idx in 0..size {
        let w = word_of(idx, rank, n);
        let mut counts = vec![0; rank];
        for l in w {
            counts[l] += 1;
        }
        blocks.entry(counts).or_default().push(idx);
    }
    let mut chosen = Vec::new();
    for cols in blocks.values() {
        let sub = q.select_columns(cols);
        if sub.is_zero() {
            continue;
        }
        let rr = rref_rows(sub.sparse_rows(), cols.len());
        chosen.extend(rr.pivots.iter().map(|&p| cols[p]));
    }
    chosen.sort_unstable();
    DegreeData {
        degree: n,
        dim: chosen.len(),
        kernel_dim: size - chosen.len(),
        words: chosen.iter().map(|&i| word_of(i, rank, n)).collect(),
        basis: chosen.iter().map(|&i| q.column(i).clone()).collect(),
    }
}

/// Ranks of `Q_n` for `n ≤ cutoff` (and up to two more degrees to confirm
/// that the top degree has been reached).
pub fn hilbert_series(b: &DiagonalBraiding, cutoff: usize) -> NicholsTruncation {
    let rank = b.rank();
    let c = b.braiding_matrix();
    let mut q = Matrix::identity(1);
    let mut degrees = Vec::new();
    let mut zeros = 0;
    let mut complete = false;
    for n in 0..=cutoff + 2 {
        if n > 0 {
            q = symmetrizer_step(&q, &c, rank, n);
        }
        let data = degree_data(&q, rank, n);
        let dim = data.dim;
        if dim == 0 {
            zeros += 1;
        } else {
            zeros = 0;
        }
        if n <= cutoff || dim > 0 {
            degrees.push(data);
        }
        if zeros == 2 {
            complete = true;
            break;
        }
        if n > cutoff && dim > 0 {
            break;
        }
    }
    let mut hilbert: Vec<usize> = degrees.iter().map(|d| d.dim).take(cutoff + 1).collect();
    while hilbert.len() > 1 && hilbert.last() == Some(&0) {
        hilbert.pop();
    }
    if complete {
        degrees.truncate(hilbert.len());
    }
    NicholsTruncation {
        source: b.clone(),
        cutoff,
        degrees,
        hilbert,
        complete: complete && rank > 0,
    }
}

/// `"1 + 2t + t^2"`.
pub fn series_string(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| {
            let var = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            match (c, k) {
                (c, 0) => c.to_string(),
                (1, _) => var,
                (c, _) => format!("{c}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Product of polynomials given by coefficient lists.
pub fn poly_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Symmetrizers `Q_0..Q_n`, extended on demand.
struct SymmetrizerCache {
    c: Matrix,
    dim: usize,
    qs: Vec<Matrix>,
}

impl SymmetrizerCache {
    fn new(b: &DiagonalBraiding) -> Self {
        SymmetrizerCache {
            c: b.braiding_matrix(),
            dim: b.rank(),
            qs: vec![Matrix::identity(1)],
        }
    }

    fn get(&mut self, n: usize) -> &Matrix {
        while self.qs.len() <= n {
            let m = self.qs.len();
            let next = symmetrizer_step(&self.qs[m - 1], &self.c, self.dim, m);
            self.qs.push(next);
        }
        &self.qs[n]
    }
}

/// `ad_{x_i}(y) = x_i y − χ(α_i, deg y) y x_i` in the tensor algebra, for
/// `y` homogeneous of length `len` and lattice degree `deg`.
fn braided_commutator(b: &DiagonalBraiding, i: usize, y: &SparseVec, len: usize, deg: &[i32]) -> SparseVec {
    let r = b.rank();
    let shift = r.pow(len as u32);
    let scalar = b.chi(&unit_degree(r, i), deg);
    let left = y.map_indices(|w| i * shift + w);
    let right = y.map_indices(|w| w * r + i);
    left.lin_comb(&CycScalar::one(1), &right, &(-scalar))
}

fn unit_degree(r: usize, i: usize) -> Vec<i32> {
    (0..r).map(|k| i32::from(k == i)).collect()
}

/// `a_ij = −max{m | ad_{x_i}^m(x_j) ≠ 0}` (nonvanishing in the Nichols
/// algebra, tested by applying `Q`), `a_ii = 2`.
pub fn cartan_matrix(b: &DiagonalBraiding, cutoff: usize) -> Result<Vec<Vec<i64>>> {
    let r = b.rank();
    let mut cache = SymmetrizerCache::new(b);
    let mut a = vec![vec![2i64; r]; r];
    for (i, j) in (0..r).cartesian_product(0..r).filter(|(i, j)| i != j) {
        let mut y = SparseVec::unit(j);
        let mut deg = unit_degree(r, j);
        let mut m = 0usize;
        loop {
            let next = braided_commutator(b, i, &y, m + 1, &deg);
            let len = m + 2;
            if len > cutoff {
                return Err(Error::CutoffReached(cutoff));
            }
            if cache.get(len).apply(&next).is_zero() {
                break;
            }
            y = next;
            deg[i] += 1;
            m += 1;
        }
        a[i][j] = -(m as i64);
    }
    Ok(a)
}

/// Reflection at `i`: new degrees `β_i = −α_i`, `β_j = α_j − a_ij α_i`,
/// braiding `q′_jk = χ(β_j, β_k)` with the bicharacter of `b`.
pub fn reflect(b: &DiagonalBraiding, i: usize, cutoff: usize) -> Result<DiagonalBraiding> {
    let r = b.rank();
    if i >= r {
        return Err(Error::BadParams(format!("no generator {i} in rank {r}")));
    }
    let a = cartan_matrix(b, cutoff)?;
    let beta: Vec<Vec<i32>> = (0..r)
        .map(|j| {
            (0..r)
                .map(|k| {
                    if j == i {
                        -i32::from(k == i)
                    } else {
                        i32::from(k == j) - (a[i][j] as i32) * i32::from(k == i)
                    }
                })
                .collect()
        })
        .collect();
    let q = (0..r).map(|j| (0..r).map(|k| b.chi(&beta[j], &beta[k])).collect()).collect();
    let mut out = DiagonalBraiding::new(q)?;
    out.labels = (0..r)
        .map(|j| if j == i { format!("{}*", b.labels[j]) } else { b.labels[j].clone() })
        .collect();
    Ok(out)
}

/// The two rank-2 braidings of the `sl(2|1)` example with `q = ζ_n`:
/// `M` with `q_11 = q_22 = −1`, `N` with `q_11 = −1, q_22 = q`, both with
/// `q_12 = q⁻¹`, `q_21 = 1`.
pub fn sl21_braidings(n: usize) -> Result<(DiagonalBraiding, DiagonalBraiding)> {
    if n < 3 {
        return Err(Error::BadParams(format!("q must not be ±1, so n ≥ 3 (got {n})")));
    }
    let ord = n as u64;
    let z = |k: i64| CycScalar::root_of_unity(ord, k);
    let minus = -CycScalar::one(ord);
    let one = CycScalar::one(ord);
    let m = DiagonalBraiding::new(vec![vec![minus.clone(), z(-1)], vec![one.clone(), minus.clone()]])?;
    let nn = DiagonalBraiding::new(vec![vec![minus, z(-1)], vec![one, z(1)]])?;
    Ok((m, nn))
}

/// Rank one with `q_11 = ζ_n^k`.
pub fn rank_one(n: usize, k: i64) -> Result<DiagonalBraiding> {
    DiagonalBraiding::new(vec![vec![CycScalar::root_of_unity(n as u64, k)]])
}
