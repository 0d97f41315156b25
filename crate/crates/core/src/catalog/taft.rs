//! The Taft family on the PBW basis `x^n g^m` (index `n·N + m`):
//! `T̂` with `gx = ζxg`, `Δ(x) = g⊗x + x⊗1`, and `Ť` with `gx = qxg`,
//! `Δ(x) = g^c⊗x + x⊗1`, where `q = ζ_N` and `ζ = q^c`.

use std::sync::Arc;

use num_integer::Integer;

use crate::exactmath::{CycScalar, Matrix, SparseVec};
use crate::hopf::{HopfAlgebra, HopfParts};
use crate::{Error, Result};

/// Parameters `(N, d, c)`: `g^N = 1`, `x^d = 0`, `ζ = q^c` a primitive
/// `d`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TaftParams {
    pub n: usize,
    pub d: usize,
    pub c: usize,
}

impl TaftParams {
    pub fn new(n: usize, d: usize, c: usize) -> Result<Self> {
        if n == 0 || d < 2 {
            return Err(Error::BadParams(format!("need N ≥ 1 and d ≥ 2, got N = {n}, d = {d}")));
        }
        if !n.is_multiple_of(d) {
            return Err(Error::BadParams(format!("d = {d} does not divide N = {n}")));
        }
        if n / n.gcd(&(c % n)) != d {
            return Err(Error::BadParams(format!(
                "ζ = q^{c} is not a primitive {d}-th root of unity for q a primitive {n}-th root"
            )));
        }
        Ok(TaftParams { n, d, c })
    }

    pub fn dim(&self) -> usize {
        self.n * self.d
    }

    pub fn index(&self, xpow: usize, gpow: usize) -> usize {
        xpow * self.n + gpow % self.n
    }

    /// `q^k`.
    pub fn q_pow(&self, k: i64) -> CycScalar {
        CycScalar::root_of_unity(self.n as u64, k)
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim());
        for a in 0..self.d {
            for b in 0..self.n {
                let x = match a {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{a}"),
                };
                let g = match b {
                    0 => String::new(),
                    1 => "g".into(),
                    _ => format!("g^{b}"),
                };
                out.push(if a == 0 && b == 0 { "1".into() } else { format!("{x}{g}") });
            }
        }
        out
    }
}

/// Product on the PBW basis with `g x = t·x g`:
/// `(x^a g^b)(x^c g^e) = t^{bc} x^{a+c} g^{b+e}`.
fn pbw_product(p: &TaftParams, t_pow: i64) -> Matrix {
    let dim = p.dim();
    let cols = (0..dim * dim)
        .map(|k| {
            let (i, j) = (k / dim, k % dim);
            let (a, b) = (i / p.n, i % p.n);
            let (c, e) = (j / p.n, j % p.n);
            if a + c >= p.d {
                SparseVec::new()
            } else {
                SparseVec::from_entries([(p.index(a + c, b + e), p.q_pow(t_pow * (b * c) as i64))])
            }
        })
        .collect();
    Matrix::from_columns(dim, cols)
}

/// Comultiplication from `Δ(x) = g^s⊗x + x⊗1` and `Δ(g) = g⊗g`, extended
/// multiplicatively through the product in `H⊗H`.
fn pbw_coproduct(p: &TaftParams, mu: &Matrix, s: usize) -> Matrix {
    let dim = p.dim();
    let mul2 = |u: &SparseVec, v: &SparseVec| -> SparseVec {
        // (a⊗b)(c⊗e) = ac⊗be in the ordinary tensor product
        let mut acc = crate::exactmath::sparse::Accumulator::new();
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                let (a, b) = (i / dim, i % dim);
                let (c, e) = (j / dim, j % dim);
                let l = mu.column(a * dim + c);
                let r = mu.column(b * dim + e);
                let coeff = x.clone() * y;
                acc.add_scaled(&l.kron(r, dim), &coeff);
            }
        }
        acc.finish()
    };
    let one = CycScalar::one(1);
    let dx = SparseVec::from_entries([(p.index(0, s) * dim + p.index(1, 0), one.clone()), (p.index(1, 0) * dim, one.clone())]);
    let dg = SparseVec::from_entries([(p.index(0, 1) * dim + p.index(0, 1), one.clone())]);
    let unit = SparseVec::from_entries([(0, one)]);
    let mut cols = Vec::with_capacity(dim);
    for a in 0..p.d {
        for b in 0..p.n {
            let mut v = unit.clone();
            for _ in 0..a {
                v = mul2(&v, &dx);
            }
            for _ in 0..b {
                v = mul2(&v, &dg);
            }
            cols.push(v);
        }
    }
    Matrix::from_columns(dim * dim, cols)
}

fn build(p: &TaftParams, name: &str, t_pow: i64, s: usize) -> Result<Arc<HopfAlgebra>> {
    let dim = p.dim();
    let mu = pbw_product(p, t_pow);
    let delta = pbw_coproduct(p, &mu, s);
    let eta = Matrix::from_columns(dim, vec![SparseVec::unit(0)]);
    let eps = Matrix::from_columns(
        1,
        (0..dim)
            .map(|i| if i < p.n { SparseVec::unit(0) } else { SparseVec::new() })
            .collect(),
    );
    let parts = HopfParts::new(name, p.labels(), mu, eta, delta, eps);
    Ok(Arc::new(HopfAlgebra::new(parts)?))
}

/// `T̂`: `g^N = 1`, `x^d = 0`, `gx = ζxg`, `Δ(x) = g⊗x + x⊗1`.
pub fn hat_taft(n: usize, d: usize, c: usize) -> Result<Arc<HopfAlgebra>> {
    let p = TaftParams::new(n, d, c)?;
    build(&p, &format!("hat_taft({n},{d},{c})"), p.c as i64, 1)
}

/// `Ť`: `g^N = 1`, `x^d = 0`, `gx = qxg`, `Δ(x) = g^c⊗x + x⊗1`.
pub fn check_taft(n: usize, d: usize, c: usize) -> Result<Arc<HopfAlgebra>> {
    let p = TaftParams::new(n, d, c)?;
    build(&p, &format!("check_taft({n},{d},{c})"), 1, p.c % n)
}

/// The Taft algebra `T_ζ` of dimension `d²` with `ζ = ζ_d^c`.
pub fn taft(d: usize, c: usize) -> Result<Arc<HopfAlgebra>> {
    let p = TaftParams::new(d, d, c)?;
    build(&p, &format!("taft({d},{c})"), p.c as i64, 1)
}

/// `ℂ[ℤ_N]` with basis `g^m`.
pub fn cyclic_group_algebra(n: usize) -> Result<Arc<HopfAlgebra>> {
    super::groups::group_algebra(&super::groups::GroupPresentation::cyclic(n, "g"), &format!("C[Z{n}]"))
}

/// `ω(g^a, g^b) = q^{k·ab}` on `ℂ[ℤ_N] ⊗ ℂ[ℤ_N]`, `q = ζ_N`.
pub fn cyclic_pairing_values(n: usize, k: usize) -> Result<Matrix> {
    if (k % n).gcd(&n) != 1 && n > 1 {
        return Err(Error::BadParams(format!("q^{k} is not a primitive {n}-th root of unity")));
    }
    Ok(Matrix::from_columns(
        n,
        (0..n)
            .map(|b| SparseVec::from_entries((0..n).map(|a| (a, CycScalar::root_of_unity(n as u64, (k * a * b) as i64)))))
            .collect(),
    ))
}

/// `π: T̂ → ℂ[ℤ_N]`, `x^n g^m ↦ δ_{n,0} g^m`, and its section `g^m ↦ g^m`.
pub fn taft_projection(n: usize, d: usize) -> (Matrix, Matrix) {
    let dim = n * d;
    let pi = Matrix::from_columns(
        n,
        (0..dim)
            .map(|i| if i < n { SparseVec::unit(i) } else { SparseVec::new() })
            .collect(),
    );
    let iota = Matrix::from_columns(dim, (0..n).map(SparseVec::unit).collect());
    (pi, iota)
}
