//! Finite-dimensional Nichols algebras as Hopf algebras inside the quantum
//! shuffle algebra, and the rank-one dualization data.

use std::sync::Arc;

use crate::exactmath::linalg::SpanSolver;
use crate::exactmath::{CycScalar, Matrix, SparseVec};
use crate::hopf::{Ambient, HopfAlgebra, HopfParts};
use crate::partialdual::{make_datum, PartialDualizationDatum};
use crate::{Error, Result};

use super::{hilbert_series, index_of, word_of, DiagonalBraiding, NicholsTruncation};

/// A materialized Nichols algebra with the location of each degree in its
/// basis.
#[derive(Clone, Debug)]
pub struct NicholsAlgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub truncation: NicholsTruncation,
    /// Basis index of the first element of each degree.
    pub offsets: Vec<usize>,
}

impl NicholsAlgebra {
    /// Basis index of the `t`-th basis vector of degree `n`.
    pub fn index(&self, n: usize, t: usize) -> usize {
        self.offsets[n] + t
    }

    fn solver(&self, n: usize) -> Result<SpanSolver> {
        let d = &self.truncation.degrees[n];
        let rank = self.truncation.source.rank();
        Ok(SpanSolver::new(&d.basis, rank.pow(n as u32))?)
    }
}

/// Quantum shuffle product of two words: each shuffle contributes
/// `∏ q_{u_s v_t}` over pairs where `v_t` ends up before `u_s`.
fn shuffle_words(b: &DiagonalBraiding, u: &[usize], v: &[usize]) -> Vec<(Vec<usize>, CycScalar)> {
    let (a, c) = (u.len(), v.len());
    let n = a + c;
    let mut out = Vec::new();
    // positions of the letters of u, increasing
    let mut pos: Vec<usize> = (0..a).collect();
    loop {
        let mut word = Vec::with_capacity(n);
        let mut coeff = CycScalar::one(1);
        let (mut s, mut t) = (0, 0);
        for p in 0..n {
            if s < a && pos[s] == p {
                word.push(u[s]);
                s += 1;
            } else {
                word.push(v[t]);
                for &us in &u[s..] {
                    coeff = &coeff * &b.q[us][v[t]];
                }
                t += 1;
            }
        }
        out.push((word, coeff));
        // next combination
        let mut k = a;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if pos[k] < n - a + k {
                pos[k] += 1;
                for l in k + 1..a {
                    pos[l] = pos[l - 1] + 1;
                }
                break;
            }
        }
    }
}

fn shuffle(b: &DiagonalBraiding, x: &SparseVec, lx: usize, y: &SparseVec, ly: usize) -> SparseVec {
    let r = b.rank();
    let mut acc = crate::exactmath::sparse::Accumulator::new();
    for (i, cx) in x.iter() {
        let u = word_of(*i, r, lx);
        for (j, cy) in y.iter() {
            let v = word_of(*j, r, ly);
            let c = cx * cy;
            for (w, s) in shuffle_words(b, &u, &v) {
                acc.add_term(index_of(&w, r), &(&c * &s));
            }
        }
    }
    acc.finish()
}

/// The Nichols algebra as a Hopf algebra in the graded category of its
/// lattice: basis the chosen images of the quantum symmetrizers, product
/// the quantum shuffle product, coproduct deconcatenation; the antipode is
/// solved for and everything is verified.
pub fn materialize_nichols(t: &NicholsTruncation) -> Result<NicholsAlgebra> {
    if !t.complete {
        return Err(Error::NotComplete);
    }
    let b = &t.source;
    let r = b.rank();
    let mut offsets = Vec::new();
    let mut labels = Vec::new();
    let mut grading = Vec::new();
    let mut degree_of = Vec::new();
    for d in &t.degrees {
        offsets.push(labels.len());
        for w in &d.words {
            labels.push(if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&l| b.labels[l].as_str()).collect::<String>()
            });
            grading.push(b.word_degree(w));
            degree_of.push(d.degree);
        }
    }
    offsets.push(labels.len());
    let dim = labels.len();
    let top = t.degrees.len() - 1;
    let solvers: Vec<SpanSolver> = t
        .degrees
        .iter()
        .map(|d| SpanSolver::new(&d.basis, r.pow(d.degree as u32)))
        .collect::<std::result::Result<_, _>>()?;
    let vec_of = |i: usize| -> (&SparseVec, usize) {
        let n = degree_of[i];
        (&t.degrees[n].basis[i - offsets[n]], n)
    };

    let mut mu_cols = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        let (x, lx) = vec_of(i);
        for j in 0..dim {
            let (y, ly) = vec_of(j);
            if lx + ly > top {
                mu_cols.push(SparseVec::new());
                continue;
            }
            let prod = shuffle(b, x, lx, y, ly);
            let coords = solvers[lx + ly].solve(&prod).map_err(|_| {
                Error::ClosureViolation(format!("product of {} and {} leaves the image", labels[i], labels[j]))
            })?;
            mu_cols.push(coords.map_indices(|k| offsets[lx + ly] + k));
        }
    }
    let mu = Matrix::from_columns(dim, mu_cols);

    let mut delta_cols = Vec::with_capacity(dim);
    for i in 0..dim {
        let (x, n) = vec_of(i);
        let mut acc = crate::exactmath::sparse::Accumulator::new();
        for k in 0..=n {
            let right = r.pow((n - k) as u32);
            // rows: left words of length k; one column per right word
            let mut by_right: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); right];
            for (w, c) in x.iter() {
                by_right[w % right].push((w / right, c.clone()));
            }
            // coefficients over the degree-k basis, per right word
            let mut rows: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); t.degrees[k].dim];
            for (rw, entries) in by_right.into_iter().enumerate() {
                if entries.is_empty() {
                    continue;
                }
                let coords = solvers[k]
                    .solve(&SparseVec::from_entries(entries))
                    .map_err(|_| Error::ClosureViolation(format!("coproduct of {} leaves the image", labels[i])))?;
                for (p, c) in coords.iter() {
                    rows[*p].push((rw, c.clone()));
                }
            }
            for (p, entries) in rows.into_iter().enumerate() {
                if entries.is_empty() {
                    continue;
                }
                let coords = solvers[n - k]
                    .solve(&SparseVec::from_entries(entries))
                    .map_err(|_| Error::ClosureViolation(format!("coproduct of {} leaves the image", labels[i])))?;
                for (s, c) in coords.iter() {
                    acc.add_term((offsets[k] + p) * dim + offsets[n - k] + s, c);
                }
            }
        }
        delta_cols.push(acc.finish());
    }
    let delta = Matrix::from_columns(dim * dim, delta_cols);
    let eta = Matrix::from_columns(dim, vec![SparseVec::unit(0)]);
    let eps = Matrix::from_columns(
        1,
        (0..dim).map(|i| if i == 0 { SparseVec::unit(0) } else { SparseVec::new() }).collect(),
    );
    let name = format!("B({})", b.labels.join(","));
    let mut parts = HopfParts::new(&name, labels, mu, eta, delta, eps);
    parts.grading = Some(Arc::new(grading));
    parts.ambient = Ambient::Base(b.base());
    Ok(NicholsAlgebra {
        hopf: Arc::new(HopfAlgebra::new(parts)?),
        truncation: t.clone(),
        offsets,
    })
}

fn materialize_or_cutoff(b: &DiagonalBraiding, cutoff: usize) -> Result<NicholsAlgebra> {
    let t = hilbert_series(b, cutoff);
    if !t.complete {
        return Err(Error::CutoffReached(cutoff));
    }
    materialize_nichols(&t)
}

/// `(B(M) → B(M_i), B(M_i*), ω_i)`: the projection kills words containing
/// other generators, the section includes `B(M_i)`, and the pairing extends
/// `⟨x_i, x_i*⟩ = 1` multiplicatively.
pub fn nichols_dualization_datum(b: &DiagonalBraiding, i: usize, cutoff: usize) -> Result<PartialDualizationDatum> {
    if i >= b.rank() {
        return Err(Error::BadParams(format!("no generator {i} in rank {}", b.rank())));
    }
    let h = materialize_or_cutoff(b, cutoff)?;
    let a = materialize_or_cutoff(&b.sub(i), cutoff)?;
    let bs = materialize_or_cutoff(&b.dual(i), cutoff)?;
    let r = b.rank();
    let (dh, da) = (h.hopf.dim, a.hopf.dim);
    let top_a = a.truncation.degrees.len() - 1;

    // words i^n in M^{⊗n} correspond to the single word of M_i^{⊗n}
    let power_word = |n: usize| index_of(&vec![i; n], r);
    let mut pi_cols = vec![SparseVec::new(); dh];
    for (n, d) in h.truncation.degrees.iter().enumerate() {
        for (t, v) in d.basis.iter().enumerate() {
            let Some(c) = v.get(power_word(n)) else { continue };
            if n > top_a {
                return Err(Error::NotAProjection(format!("x{}^{n} survives in the larger algebra", i + 1)));
            }
            let coords = a.solver(n)?.solve(&SparseVec::from_entries([(0, c.clone())]))?;
            pi_cols[h.index(n, t)] = coords.map_indices(|k| a.index(n, k));
        }
    }
    let pi = Matrix::from_columns(da, pi_cols);
    let mut iota_cols = Vec::with_capacity(da);
    for (n, d) in a.truncation.degrees.iter().enumerate() {
        for v in &d.basis {
            let c = v.get(0).cloned().unwrap_or_else(|| CycScalar::zero(1));
            let coords = h.solver(n)?.solve(&SparseVec::from_entries([(power_word(n), c)]))?;
            iota_cols.push(coords.map_indices(|k| h.index(n, k)));
        }
    }
    let iota = Matrix::from_columns(dh, iota_cols);

    // ω(b_k, b*_k) = [b_{k−1}⊗b_1 : Δ(b_k)] · ω(b_{k−1}, b*_{k−1}) · ω(b_1, b*_1)
    let mut values = vec![CycScalar::one(1)];
    for k in 1..=top_a {
        if k == 1 {
            values.push(CycScalar::one(1));
            continue;
        }
        let coeff = a.hopf.delta.get(a.index(k - 1, 0) * da + a.index(1, 0), a.index(k, 0));
        let v = &(&coeff * &values[k - 1]) * &values[1];
        values.push(v);
    }
    if bs.hopf.dim != da {
        return Err(Error::DegeneratePairing("the dual generator has a different nilpotency order".into()));
    }
    let w = Matrix::from_triplets(da, da, values.into_iter().enumerate().map(|(k, v)| (k, k, v)))?;
    make_datum(h.hopf.clone(), a.hopf.clone(), bs.hopf.clone(), pi, iota, &w)
}
