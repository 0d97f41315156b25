//! Hopf pairings `ω: A⊗B → 1`, inverse copairings, the twisted pairings
//! `ω±: B⊗A → 1`, and the dualization of comodules into modules.

use std::sync::Arc;

use crate::diagram::Environment;
use crate::exactmath::{inverse, CycScalar, Matrix, Space, SparseVec};
use crate::report::Report;
use crate::{Error, Result};

use super::verify::script_report;
use super::{register_hopf, register_module, Ambient, HopfAlgebra};
use crate::yd::Side;

/// A pairing stored as the row `ω: A⊗B → 1` (length `dim A · dim B`),
/// with optional inverse copairing `ω′: 1 → B⊗A`.
#[derive(Clone, Debug)]
pub struct HopfPairing {
    pub a: Arc<HopfAlgebra>,
    pub b: Arc<HopfAlgebra>,
    pub omega: Arc<Matrix>,
    pub omega_inv: Option<Arc<Matrix>>,
}

impl HopfPairing {
    /// From the value matrix `W_{ij} = ω(a_i, b_j)`.
    pub fn from_values(a: Arc<HopfAlgebra>, b: Arc<HopfAlgebra>, w: &Matrix) -> Result<Self> {
        if w.rows() != a.dim || w.cols() != b.dim {
            return Err(Error::Shape(format!(
                "pairing matrix is {}x{}, expected {}x{}",
                w.rows(),
                w.cols(),
                a.dim,
                b.dim
            )));
        }
        let mut cols = vec![SparseVec::new(); a.dim * b.dim];
        for (j, col) in w.columns().iter().enumerate() {
            for (i, c) in col.iter() {
                cols[i * b.dim + j] = SparseVec::from_entries([(0, c.clone())]);
            }
        }
        Ok(HopfPairing {
            a,
            b,
            omega: Arc::new(Matrix::from_columns(1, cols)),
            omega_inv: None,
        })
    }

    /// `W_{ij} = ω(a_i, b_j)`.
    pub fn values(&self) -> Matrix {
        let (da, db) = (self.a.dim, self.b.dim);
        let triplets = (0..da * db).filter_map(|k| {
            let v = self.omega.get(0, k);
            (!v.is_zero()).then(|| (k / db, k % db, v))
        });
        Matrix::from_triplets(da, db, triplets).expect("indices in range")
    }

    pub fn value(&self, i: usize, j: usize) -> CycScalar {
        self.omega.get(0, i * self.b.dim + j)
    }

    /// Base environment with `A`, `B`, `omega` and (if present) `omegainv`.
    pub fn env(&self) -> Result<Environment> {
        if !matches!(self.a.ambient, Ambient::Base(_)) || !matches!(self.b.ambient, Ambient::Base(_)) {
            return Err(Error::Incompatible(
                "pairings are supported between algebras in the base category".into(),
            ));
        }
        let mut env = Environment::new(self.a.base());
        register_hopf(&mut env, "A", &self.a);
        register_hopf(&mut env, "B", &self.b);
        env.add_generator("omega", &["A", "B"], &[], self.omega.clone())?;
        if let Some(wi) = &self.omega_inv {
            env.add_generator("omegainv", &[], &["B", "A"], wi.clone())?;
        }
        Ok(env)
    }
}

fn s(x: &str) -> String {
    x.to_string()
}

/// The four pairing axioms and antipode compatibility; with a copairing
/// present, also both inverse identities and the four copairing axioms.
pub fn verify_pairing(p: &HopfPairing) -> Result<Report> {
    let env = p.env()?;
    let mut scripts = vec![
        (
            "product in first argument",
            s("omega . (mu[A] * id[B])"),
            s("omega . (id[A] * omega * id[B]) . (id[A] * id[A] * Delta[B])"),
        ),
        ("unit in first argument", s("omega . (eta[A] * id[B])"), s("eps[B]")),
        (
            "product in second argument",
            s("omega . (id[A] * mu[B])"),
            s("omega . (id[A] * omega * id[B]) . (Delta[A] * id[B] * id[B])"),
        ),
        ("unit in second argument", s("omega . (id[A] * eta[B])"), s("eps[A]")),
        ("antipode compatibility", s("omega . (S[A] * id[B])"), s("omega . (id[A] * S[B])")),
    ];
    if p.omega_inv.is_some() {
        scripts.extend([
            ("copairing inverse on A", s("(omega * id[A]) . (id[A] * omegainv)"), s("id[A]")),
            ("copairing inverse on B", s("(id[B] * omega) . (omegainv * id[B])"), s("id[B]")),
            (
                "copairing coproduct of B",
                s("(Delta[B] * id[A]) . omegainv"),
                s("(id[B] * id[B] * mu[A]) . (id[B] * omegainv * id[A]) . omegainv"),
            ),
            ("copairing counit of B", s("(eps[B] * id[A]) . omegainv"), s("eta[A]")),
            (
                "copairing coproduct of A",
                s("(id[B] * Delta[A]) . omegainv"),
                s("(mu[B] * id[A] * id[A]) . (id[B] * omegainv * id[A]) . omegainv"),
            ),
            ("copairing counit of A", s("(id[B] * eps[A]) . omegainv"), s("eta[B]")),
        ]);
    }
    script_report(&env, &scripts)
}

/// Attaches the inverse copairing `ω′(1) = Σ (W⁻¹)_{ji} b_j ⊗ a_i`.
pub fn invert_pairing(p: &HopfPairing) -> Result<HopfPairing> {
    let w = p.values();
    if w.rows() != w.cols() {
        return Err(Error::Degenerate);
    }
    let winv = inverse(&w).map_err(|_| Error::Degenerate)?;
    let da = p.a.dim;
    let mut entries = Vec::new();
    for (i, col) in winv.columns().iter().enumerate() {
        for (j, c) in col.iter() {
            entries.push((j * da + i, c.clone()));
        }
    }
    let wi = Matrix::from_columns(p.b.dim * da, vec![SparseVec::from_entries(entries)]);
    let out = HopfPairing {
        omega_inv: Some(Arc::new(wi)),
        ..p.clone()
    };
    let r = verify_pairing(&out)?;
    if !r.passed() {
        return Err(Error::Verification(r));
    }
    Ok(out)
}

/// `ω⁺ = ω∘c_{B,A}∘(S_B⊗S_A)` and `ω⁻ = ω∘c⁻¹_{A,B}∘(S_B⁻¹⊗S_A⁻¹)` as
/// pairings `B⊗A → 1`, with inverse copairings `(S⁻¹⊗S⁻¹)∘c⁻¹_{A,B}∘ω′`
/// and `(S⊗S)∘c_{B,A}∘ω′` when `ω′` is present. Both are verified.
pub fn pairing_variants(p: &HopfPairing) -> Result<(HopfPairing, HopfPairing)> {
    let env = p.env()?;
    let plus = env.eval("omega . braid[B,A] . (S[B] * S[A])")?;
    let minus = env.eval("omega . braidinv[A,B] . (Sinv[B] * Sinv[A])")?;
    let (plus_inv, minus_inv) = if p.omega_inv.is_some() {
        (
            Some(env.eval("(Sinv[A] * Sinv[B]) . braidinv[A,B] . omegainv")?.matrix),
            Some(env.eval("(S[A] * S[B]) . braid[B,A] . omegainv")?.matrix),
        )
    } else {
        (None, None)
    };
    let make = |omega: Arc<Matrix>, omega_inv| HopfPairing {
        a: p.b.clone(),
        b: p.a.clone(),
        omega,
        omega_inv,
    };
    let plus = make(plus.matrix, plus_inv);
    let minus = make(minus.matrix, minus_inv);
    for v in [&plus, &minus] {
        let r = verify_pairing(v)?;
        if !r.passed() {
            return Err(Error::Verification(r));
        }
    }
    Ok((plus, minus))
}

/// A comodule turned into a module by a pairing, with the round trip back.
#[derive(Clone, Debug)]
pub struct DualizedComodule {
    /// `ρ = (ω⊗id_X)∘(id_A⊗δ): A⊗X → X`.
    pub action: Matrix,
    /// `(id_B⊗ρ)∘(ω′⊗id_X)`, equal to the input coaction.
    pub recovered: Matrix,
    pub report: Report,
}

/// Dualizes a left `B`-comodule `(X, δ)` into a left module over `A`
/// (regarded in the reversed category as a module over `A^cop`), and checks
/// the module axioms and the round trip through `ω′`.
pub fn dualize_comodule(p: &HopfPairing, x: Space, delta: &Matrix) -> Result<DualizedComodule> {
    let mut env = p.env()?;
    if p.omega_inv.is_none() {
        return Err(Error::Degenerate);
    }
    let zero = Arc::new(Matrix::zeros(x.dim, p.b.dim * x.dim));
    register_module(&mut env, "X", "B", x.clone(), Side::Left, &zero, &Arc::new(delta.clone()))?;
    let action = env.eval("(omega * id[X]) . (id[A] * coact[X])")?;
    env.add_generator("act[X]", &["A", "X"], &["X"], action.matrix.clone())?;
    let recovered = env.eval("(id[B] * act[X]) . (omegainv * id[X])")?;
    let mut report = script_report(
        &env,
        &[
            ("comodule coassociative", s("(Delta[B] * id[X]) . coact[X]"), s("(id[B] * coact[X]) . coact[X]")),
            ("comodule counital", s("(eps[B] * id[X]) . coact[X]"), s("id[X]")),
            ("module associative", s("act[X] . (mu[A] * id[X])"), s("act[X] . (id[A] * act[X])")),
            ("module unital", s("act[X] . (eta[A] * id[X])"), s("id[X]")),
        ],
    )?;
    report.push(
        "round trip",
        *recovered.matrix == *delta,
        Some("recovered coaction differs".into()),
    );
    Ok(DualizedComodule {
        action: (*action.matrix).clone(),
        recovered: (*recovered.matrix).clone(),
        report,
    })
}
