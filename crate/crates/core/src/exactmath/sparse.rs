//! Sparse exact vectors.

use std::collections::BTreeMap;

use super::CycScalar;

/// Sorted list of `(index, value)` pairs with no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, CycScalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    /// Builds a vector from arbitrary entries; duplicates are summed and zeros dropped.
    pub fn from_entries<I: IntoIterator<Item = (usize, CycScalar)>>(it: I) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in it {
            acc.add_term(i, &c);
        }
        acc.finish()
    }

    /// Wraps entries already sorted by index and free of zeros.
    pub(crate) fn from_sorted(entries: Vec<(usize, CycScalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVec { entries }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, CycScalar::one(1))],
        }
    }

    pub fn from_dense(values: &[CycScalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(1); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, CycScalar)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, CycScalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, CycScalar)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&CycScalar> {
        self.entries
            .binary_search_by_key(&i, |(k, _)| *k)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn first_index(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return SparseVec::new();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// `a*self + b*other` by a sorted merge.
    pub fn lin_comb(&self, a: &CycScalar, other: &SparseVec, b: &CycScalar) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut p, mut q) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while p < x.len() || q < y.len() {
            let take_x = q >= y.len() || (p < x.len() && x[p].0 < y[q].0);
            let take_y = p >= x.len() || (q < y.len() && y[q].0 < x[p].0);
            if take_x {
                out.push((x[p].0, &x[p].1 * a));
                p += 1;
            } else if take_y {
                out.push((y[q].0, &y[q].1 * b));
                q += 1;
            } else {
                let v = &x[p].1 * a + &y[q].1 * b;
                if !v.is_zero() {
                    out.push((x[p].0, v));
                }
                p += 1;
                q += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        let one = CycScalar::one(1);
        self.lin_comb(&one, other, &one)
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.lin_comb(&CycScalar::one(1), other, &CycScalar::from_int(1, -1))
    }

    /// Tensor product of coordinate vectors with global row-major index order.
    pub fn kron(&self, other: &SparseVec, other_dim: usize) -> Self {
        let mut out = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                out.push((i * other_dim + j, a * b));
            }
        }
        SparseVec { entries: out }
    }

    /// Remaps indices through `f` (which need not preserve order).
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        SparseVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn dot_dense(&self, dense: &[CycScalar]) -> CycScalar {
        let mut acc = CycScalar::zero(1);
        for (i, c) in &self.entries {
            if !dense[*i].is_zero() {
                acc += &(c * &dense[*i]);
            }
        }
        acc
    }
}

/// Accumulates scaled sparse vectors; the result is canonical.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<usize, CycScalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator::default()
    }

    pub fn add_term(&mut self, i: usize, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(v) => *v += c,
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, v: &SparseVec, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            if c.is_one() {
                self.add_term(*i, x);
            } else {
                self.add_term(*i, &(x * c));
            }
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec {
            entries: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}
