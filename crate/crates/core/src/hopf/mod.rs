//! Hopf algebras given by structure constants, in the base category or in
//! a category of Yetter-Drinfeld modules over another Hopf algebra.

pub mod antipode;
pub mod morphism;
pub mod pairing;
pub mod variants;
pub mod verify;

use std::sync::Arc;

use crate::diagram::{BaseCategory, Environment};
use crate::exactmath::morphism::Grading;
use crate::exactmath::{inverse, Matrix, Space};
use crate::yd::braiding::YdBraiding;
use crate::yd::Side;
use crate::{Error, Result};

pub use antipode::solve_antipode;
pub use morphism::verify_hopf_morphism;
pub use pairing::{dualize_comodule, invert_pairing, pairing_variants, verify_pairing, HopfPairing};
pub use variants::op_cop_variants;
pub use verify::verify_hopf;

/// Where a Hopf algebra lives.
#[derive(Clone, Debug)]
pub enum Ambient {
    /// The base category of (graded) vector spaces.
    Base(Arc<BaseCategory>),
    /// Left Yetter-Drinfeld modules over `over`; `rho`/`delta` are the
    /// algebra's own action and coaction.
    YdOver {
        over: Arc<HopfAlgebra>,
        rho: Arc<Matrix>,
        delta: Arc<Matrix>,
    },
}

/// A finite-dimensional Hopf algebra by structure constants. Tensor
/// index order is row-major: `e_i ⊗ e_j` has index `i*dim + j`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub name: String,
    pub labels: Vec<String>,
    pub dim: usize,
    pub grading: Option<Grading>,
    pub mu: Arc<Matrix>,
    pub eta: Arc<Matrix>,
    pub delta: Arc<Matrix>,
    pub eps: Arc<Matrix>,
    pub s: Arc<Matrix>,
    pub sinv: Arc<Matrix>,
    pub ambient: Ambient,
    /// Lives in the category with the reversed braiding `c⁻¹_{Y,X}`.
    pub reversed: bool,
}

/// Input to the Hopf algebra constructors. A missing antipode is solved for.
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub name: String,
    pub labels: Vec<String>,
    pub grading: Option<Grading>,
    pub mu: Matrix,
    pub eta: Matrix,
    pub delta: Matrix,
    pub eps: Matrix,
    pub s: Option<Matrix>,
    pub ambient: Ambient,
}

impl HopfParts {
    pub fn new(name: &str, labels: Vec<String>, mu: Matrix, eta: Matrix, delta: Matrix, eps: Matrix) -> Self {
        HopfParts {
            name: name.to_string(),
            labels,
            grading: None,
            mu,
            eta,
            delta,
            eps,
            s: None,
            ambient: Ambient::Base(Arc::new(BaseCategory::vect())),
        }
    }
}

fn check_shape(what: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::Shape(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

impl HopfAlgebra {
    /// Builds and verifies; refuses data failing any axiom.
    pub fn new(parts: HopfParts) -> Result<Self> {
        let h = Self::new_unchecked(parts)?;
        let report = verify_hopf(&h)?;
        if !report.passed() {
            return Err(Error::Verification(report));
        }
        Ok(h)
    }

    /// Builds after shape checks only. A singular antipode is stored with a
    /// zero inverse so that verification reports it.
    pub fn new_unchecked(parts: HopfParts) -> Result<Self> {
        let d = parts.labels.len();
        check_shape("mu", &parts.mu, d, d * d)?;
        check_shape("eta", &parts.eta, d, 1)?;
        check_shape("Delta", &parts.delta, d * d, d)?;
        check_shape("eps", &parts.eps, 1, d)?;
        if let Some(g) = &parts.grading {
            if g.len() != d {
                return Err(Error::Shape("grading length differs from dimension".into()));
            }
        }
        if let Ambient::YdOver { over, rho, delta } = &parts.ambient {
            check_shape("rho", rho, d, over.dim * d)?;
            check_shape("delta", delta, over.dim * d, d)?;
        }
        let mu = Arc::new(parts.mu);
        let eta = Arc::new(parts.eta);
        let delta = Arc::new(parts.delta);
        let eps = Arc::new(parts.eps);
        let (s, sinv) = match parts.s {
            Some(s) => {
                check_shape("S", &s, d, d)?;
                let sinv = inverse(&s).unwrap_or_else(|_| Matrix::zeros(d, d));
                (s, sinv)
            }
            None => {
                let probe = HopfAlgebra {
                    name: parts.name.clone(),
                    labels: parts.labels.clone(),
                    dim: d,
                    grading: parts.grading.clone(),
                    mu: mu.clone(),
                    eta: eta.clone(),
                    delta: delta.clone(),
                    eps: eps.clone(),
                    s: Arc::new(Matrix::zeros(d, d)),
                    sinv: Arc::new(Matrix::zeros(d, d)),
                    ambient: parts.ambient.clone(),
                    reversed: false,
                };
                solve_antipode(&probe)?
            }
        };
        Ok(HopfAlgebra {
            name: parts.name,
            labels: parts.labels,
            dim: d,
            grading: parts.grading,
            mu,
            eta,
            delta,
            eps,
            s: Arc::new(s),
            sinv: Arc::new(sinv),
            ambient: parts.ambient,
            reversed: false,
        })
    }

    pub fn base(&self) -> Arc<BaseCategory> {
        match &self.ambient {
            Ambient::Base(b) => b.clone(),
            Ambient::YdOver { over, .. } => over.base(),
        }
    }

    pub fn space(&self, alias: &str) -> Space {
        Space::graded(alias, self.dim, self.grading.clone())
    }

    /// `(rho, delta)` when the algebra lives over another Hopf algebra.
    pub fn self_yd(&self) -> Option<(&Arc<HopfAlgebra>, &Arc<Matrix>, &Arc<Matrix>)> {
        match &self.ambient {
            Ambient::YdOver { over, rho, delta } => Some((over, rho, delta)),
            Ambient::Base(_) => None,
        }
    }

    /// Environment of the ambient category with this algebra bound under
    /// `alias` (generators `mu[alias]`, `Delta[alias]`, ...), default space
    /// `alias`, and the reversed flag applied.
    pub fn env(&self, alias: &str) -> Environment {
        let mut env = match &self.ambient {
            Ambient::Base(b) => Environment::new(b.clone()),
            Ambient::YdOver { over, rho, delta } => {
                let mut p = YdBraiding::new(over.clone());
                p.add_module(self.space(alias), Side::Left, rho.clone(), delta.clone());
                Environment::new(Arc::new(p))
            }
        };
        register_hopf(&mut env, alias, self);
        env.set_default_space(alias);
        env.set_reversed(self.reversed);
        env
    }

    /// The unit `1` as a coordinate vector.
    pub fn unit_vector(&self) -> crate::exactmath::SparseVec {
        self.eta.column(0).clone()
    }

    /// `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &crate::exactmath::SparseVec {
        self.mu.column(i * self.dim + j)
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, a: &crate::exactmath::SparseVec, b: &crate::exactmath::SparseVec) -> crate::exactmath::SparseVec {
        self.mu.apply(&a.kron(b, self.dim))
    }
}

/// Binds the structure maps of `h` under `alias` in `env`; when `h` lives
/// over another Hopf algebra its action and coaction are bound as
/// `act[alias]` and `coact[alias]`.
pub fn register_hopf(env: &mut Environment, alias: &str, h: &HopfAlgebra) {
    env.add_space(h.space(alias));
    let a = [alias];
    let aa = [alias, alias];
    let bind = |env: &mut Environment, key: &str, dom: &[&str], cod: &[&str], m: &Arc<Matrix>| {
        env.add_generator(&format!("{key}[{alias}]"), dom, cod, m.clone())
            .expect("structure map shapes were checked at construction");
    };
    bind(env, "mu", &aa, &a, &h.mu);
    bind(env, "eta", &[], &a, &h.eta);
    bind(env, "Delta", &a, &aa, &h.delta);
    bind(env, "eps", &a, &[], &h.eps);
    bind(env, "S", &a, &a, &h.s);
    bind(env, "Sinv", &a, &a, &h.sinv);
}

/// Binds a module's action and coaction; the acting algebra must already be
/// bound under `over_alias`.
pub fn register_module(
    env: &mut Environment,
    alias: &str,
    over_alias: &str,
    space: Space,
    side: Side,
    rho: &Arc<Matrix>,
    delta: &Arc<Matrix>,
) -> Result<()> {
    env.add_space(space.renamed(alias));
    let (act, coact, adom, ccod) = match side {
        Side::Left => ("act", "coact", [over_alias, alias], [over_alias, alias]),
        Side::Right => ("ract", "rcoact", [alias, over_alias], [alias, over_alias]),
    };
    env.add_generator(&format!("{act}[{alias}]"), &adom, &[alias], rho.clone())?;
    env.add_generator(&format!("{coact}[{alias}]"), &[alias], &ccod, delta.clone())?;
    Ok(())
}
