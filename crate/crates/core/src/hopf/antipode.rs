//! The antipode as the convolution inverse of the identity.

use crate::exactmath::linalg::solve_linear;
use crate::exactmath::{inverse, Matrix, SparseVec};
use crate::{Error, Result};

use super::HopfAlgebra;

/// Solves `μ∘(S⊗id)∘Δ = η∘ε` for `S`, checks `μ∘(id⊗S)∘Δ = η∘ε`, and
/// inverts `S`. Only `mu`, `eta`, `delta`, `eps` of the input are read.
pub fn solve_antipode(h: &HopfAlgebra) -> Result<(Matrix, Matrix)> {
    let d = h.dim;
    // Unknown `j*d + l` is the coefficient of e_l in S(e_j); equation
    // `i*d + r` is the e_r-coefficient of μ(S⊗id)Δ(e_i).
    let mut triplets = Vec::new();
    for i in 0..d {
        for (jk, c) in h.delta.column(i).iter() {
            let (j, k) = (jk / d, jk % d);
            for l in 0..d {
                for (r, m) in h.mu.column(l * d + k).iter() {
                    triplets.push((i * d + r, j * d + l, c * m));
                }
            }
        }
    }
    let system = Matrix::from_triplets(d * d, d * d, triplets)?;
    let mut rhs = Vec::new();
    for i in 0..d {
        let e = h.eps.get(0, i);
        if e.is_zero() {
            continue;
        }
        for (r, u) in h.eta.column(0).iter() {
            rhs.push((i * d + r, &e * u));
        }
    }
    let rhs = SparseVec::from_entries(rhs);
    let x = solve_linear(&system, &rhs).map_err(|_| Error::NoAntipode)?;
    let mut triplets = Vec::new();
    for (u, c) in x.iter() {
        triplets.push((u % d, u / d, c.clone()));
    }
    let s = Matrix::from_triplets(d, d, triplets)?;
    // Right convolution identity μ(id⊗S)Δ = ηε.
    let unit = h.eta.column(0);
    for i in 0..d {
        let mut acc = crate::exactmath::sparse::Accumulator::new();
        for (jk, c) in h.delta.column(i).iter() {
            let (j, k) = (jk / d, jk % d);
            let sk = s.column(k);
            let prod = h.mu.apply(&SparseVec::unit(j).kron(sk, d));
            acc.add_scaled(&prod, c);
        }
        let expected = unit.scale(&h.eps.get(0, i));
        if acc.finish() != expected {
            return Err(Error::NoAntipode);
        }
    }
    let sinv = inverse(&s).map_err(|_| Error::NotInvertible)?;
    Ok((s, sinv))
}
