//! Radford biproducts `K ⋊ A`, coinvariants of split Hopf projections, and
//! the object-level correspondence between Yetter-Drinfeld modules over
//! `K ⋊ A` and modules over `K` inside the category over `A`.

mod nest;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::diagram::Environment;
use crate::exactmath::morphism::Grading;
use crate::exactmath::{inverse, kernel, left_inverse, Matrix, SparseVec};
use crate::hopf::{register_hopf, register_module, verify_hopf_morphism, Ambient, HopfAlgebra, HopfParts};
use crate::report::Report;
use crate::yd::{tensor_space, Side};
use crate::{Error, Result};

pub use nest::{yd_nest, yd_unnest, NestedModule};

/// `K ⋊ A` on the space `K⊗A` (index `k*dim A + a`) with its projection
/// `ε_K⊗id: K⋊A → A` and injection `η_K⊗id: A → K⋊A`.
#[derive(Clone, Debug)]
pub struct BiproductPresentation {
    pub k: Arc<HopfAlgebra>,
    pub a: Arc<HopfAlgebra>,
    pub result: Arc<HopfAlgebra>,
    pub pi: Matrix,
    pub injection: Matrix,
    pub report: Report,
}

fn base_env_with_k(k: &HopfAlgebra, a: &HopfAlgebra) -> Result<Environment> {
    let (_, rho, delta) = k
        .self_yd()
        .ok_or_else(|| Error::Incompatible(format!("{} does not live over another Hopf algebra", k.name)))?;
    let mut env = Environment::new(a.base());
    register_hopf(&mut env, "A", a);
    register_hopf(&mut env, "K", k);
    register_module(&mut env, "K", "A", k.space("K"), Side::Left, rho, delta)?;
    Ok(env)
}

fn tensor_labels(x: &[String], y: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(match (a.as_str(), b.as_str()) {
                ("1", "1") => "1".to_string(),
                (a, "1") => a.to_string(),
                ("1", b) => b.to_string(),
                (a, b) => format!("{a}{b}"),
            });
        }
    }
    out
}

/// The multiplication `(h⊗a)(k⊗b) = h(a₁.k) ⊗ a₂b`, comultiplication
/// `k⊗a ↦ k₁ ⊗ k₂₍₋₁₎a₁ ⊗ k₂₍₀₎ ⊗ a₂` and the antipode
/// `(1⊗S_A(k₍₋₁₎a))(S_K(k₍₀₎)⊗1)`; the result is verified.
pub fn biproduct(k: &Arc<HopfAlgebra>, name: &str) -> Result<BiproductPresentation> {
    let a = match &k.ambient {
        Ambient::YdOver { over, .. } => over.clone(),
        Ambient::Base(_) => {
            return Err(Error::Incompatible(format!("{} does not live over another Hopf algebra", k.name)))
        }
    };
    let env = base_env_with_k(k, &a)?;
    let mu = env.eval(
        "(mu[K] * mu[A]) . (id[K] * act[K] * id[A] * id[A]) . (id[K] * id[A] * braid[A,K] * id[A]) \
         . (id[K] * Delta[A] * id[K] * id[A])",
    )?;
    let delta = env.eval(
        "(id[K] * mu[A] * id[K] * id[A]) . (id[K] * id[A] * braid[K,A] * id[A]) \
         . (id[K] * coact[K] * Delta[A]) . (Delta[K] * id[A])",
    )?;
    let eta = k.eta.kron(&a.eta);
    let eps = k.eps.kron(&a.eps);
    let twisted = env.eval("(mu[A] * id[K]) . (id[A] * braid[K,A]) . (coact[K] * id[A])")?;
    let embed_a = k.eta.kron(&Matrix::identity(a.dim));
    let embed_k = Matrix::identity(k.dim).kron(&a.eta);
    let s = mu
        .matrix
        .mul(&embed_a.kron(&embed_k))
        .mul(&a.s.kron(&k.s))
        .mul(&twisted.matrix);

    let labels = tensor_labels(&k.labels, &a.labels);
    let mut parts = HopfParts::new(name, labels, (*mu.matrix).clone(), eta, (*delta.matrix).clone(), eps);
    parts.s = Some(s);
    parts.grading = tensor_space("KA", &k.space("K"), &a.space("A")).grading;
    parts.ambient = Ambient::Base(a.base());
    let result = Arc::new(HopfAlgebra::new(parts)?);

    let pi = k.eps.kron(&Matrix::identity(a.dim));
    let injection = embed_a;
    let mut report = Report::new();
    report.extend_prefixed("projection: ", verify_hopf_morphism(&pi, &result, &a)?);
    report.extend_prefixed("injection: ", verify_hopf_morphism(&injection, &a, &result)?);
    report.push_matrices("projection splits injection", &pi.mul(&injection), &Matrix::identity(a.dim));
    report.push_matrices("smash relation", &smash_lhs(&result, k, &a), &smash_rhs(&result, k, &a, &env)?);
    Ok(BiproductPresentation {
        k: k.clone(),
        a,
        result,
        pi,
        injection,
        report,
    })
}

/// `(1⊗a)(k⊗1)` as a map `A⊗K → K⋊A`.
fn smash_lhs(h: &HopfAlgebra, k: &HopfAlgebra, a: &HopfAlgebra) -> Matrix {
    let embed_a = k.eta.kron(&Matrix::identity(a.dim));
    let embed_k = Matrix::identity(k.dim).kron(&a.eta);
    h.mu.mul(&embed_a.kron(&embed_k))
}

/// `a₁.k ⊗ a₂` (with the braiding moving `a₂` past `k`).
fn smash_rhs(_h: &HopfAlgebra, _k: &HopfAlgebra, _a: &HopfAlgebra, env: &Environment) -> Result<Matrix> {
    let m = env.eval("(act[K] * id[A]) . (id[A] * braid[A,K]) . (Delta[A] * id[K])")?;
    Ok((*m.matrix).clone())
}

/// Coinvariants of a split projection `π: H → A` with section `ι`, as a
/// Hopf algebra in the category over `A`, with the reassembly isomorphism.
#[derive(Clone, Debug)]
pub struct CoinvariantDecomposition {
    pub h: Arc<HopfAlgebra>,
    pub a: Arc<HopfAlgebra>,
    pub pi: Matrix,
    pub iota: Matrix,
    pub k: Arc<HopfAlgebra>,
    /// `K → H`, columns are the chosen coinvariant basis.
    pub inclusion: Matrix,
    /// Left inverse of `inclusion`.
    pub coordinates: Matrix,
    pub biproduct: BiproductPresentation,
    /// `k⊗a ↦ k·ι(a)`, a Hopf isomorphism `K⋊A → H`.
    pub reassembly: Matrix,
    pub report: Report,
}

/// Checks that `π` and `ι` are Hopf morphisms with `π∘ι = id`.
pub fn check_projection(h: &HopfAlgebra, a: &HopfAlgebra, pi: &Matrix, iota: &Matrix) -> Result<Report> {
    if pi.rows() != a.dim || pi.cols() != h.dim {
        return Err(Error::NotAProjection(format!("π has shape {}x{}", pi.rows(), pi.cols())));
    }
    if iota.rows() != h.dim || iota.cols() != a.dim {
        return Err(Error::NotASection(format!("ι has shape {}x{}", iota.rows(), iota.cols())));
    }
    let rp = verify_hopf_morphism(pi, h, a)?;
    if !rp.passed() {
        return Err(Error::NotAProjection(rp.summary()));
    }
    let ri = verify_hopf_morphism(iota, a, h)?;
    if !ri.passed() {
        return Err(Error::NotASection(ri.summary()));
    }
    let mut r = Report::new();
    r.push_matrices("π∘ι = id", &pi.mul(iota), &Matrix::identity(a.dim));
    if !r.passed() {
        return Err(Error::NotASection(r.summary()));
    }
    let mut out = Report::new();
    out.extend_prefixed("π: ", rp);
    out.extend_prefixed("ι: ", ri);
    out.checks.extend(r.checks);
    Ok(out)
}

/// Kernel of `m`, computed separately on each block of equal degree so
/// that the basis is homogeneous.
fn graded_kernel(m: &Matrix, grading: &Option<Grading>) -> Vec<SparseVec> {
    let Some(g) = grading else {
        return kernel(m);
    };
    let mut blocks: BTreeMap<&[i32], Vec<usize>> = BTreeMap::new();
    for (i, deg) in g.iter().enumerate() {
        blocks.entry(deg.as_slice()).or_default().push(i);
    }
    let mut out = Vec::new();
    for idx in blocks.values() {
        let sub = m.select_columns(idx);
        for v in kernel(&sub) {
            out.push(v.map_indices(|t| idx[t]));
        }
    }
    out.sort_by_key(|v| v.first_index());
    out
}

/// `L^{⊗}∘m∘I^{⊗}`, refusing if the image leaves the subspace.
fn restrict(m: &Matrix, inc_in: &Matrix, left_out: &Matrix, inc_out: &Matrix, what: &str) -> Result<Matrix> {
    let image = m.mul(inc_in);
    let coords = left_out.mul(&image);
    if inc_out.mul(&coords) != image {
        return Err(Error::ClosureViolation(format!("{what} leaves the coinvariant subspace")));
    }
    Ok(coords)
}

pub fn coinvariants(h: &Arc<HopfAlgebra>, a: &Arc<HopfAlgebra>, pi: &Matrix, iota: &Matrix) -> Result<CoinvariantDecomposition> {
    if !matches!(h.ambient, Ambient::Base(_)) || !matches!(a.ambient, Ambient::Base(_)) {
        return Err(Error::Incompatible("coinvariants need Hopf algebras in the base category".into()));
    }
    let mut report = check_projection(h, a, pi, iota)?;
    let dh = h.dim;
    let ih = Matrix::identity(dh);
    let coinv_map = ih.kron(pi).mul(&h.delta).sub(&ih.kron(&a.eta));
    let basis = graded_kernel(&coinv_map, &h.grading);
    let dk = basis.len();
    let inclusion = Matrix::from_columns(dh, basis);
    let coordinates = left_inverse(&inclusion)?;

    let mut env = Environment::new(h.base());
    register_hopf(&mut env, "H", h);
    register_hopf(&mut env, "A", a);
    env.add_generator("pi", &["H"], &["A"], Arc::new(pi.clone()))?;
    env.add_generator("iota", &["A"], &["H"], Arc::new(iota.clone()))?;
    let adjoint = env.eval(
        "mu[H] . (mu[H] * id[H]) . (iota * id[H] * (iota . S[A])) . (id[A] * braid[A,H]) . (Delta[A] * id[H])",
    )?;
    let coaction = env.eval("(pi * id[H]) . Delta[H]")?;
    let delta_k = env.eval("(mu[H] * id[H]) . (id[H] * (iota . pi . S[H]) * id[H]) . (Delta[H] * id[H]) . Delta[H]")?;
    let s_k = env.eval("mu[H] . ((iota . pi) * S[H]) . Delta[H]")?;

    let ia = Matrix::identity(a.dim);
    let ii = inclusion.kron(&inclusion);
    let ll = coordinates.kron(&coordinates);
    let rho = restrict(&adjoint.matrix, &ia.kron(&inclusion), &coordinates, &inclusion, "adjoint action")?;
    let delta = restrict(&coaction.matrix, &inclusion, &ia.kron(&coordinates), &ia.kron(&inclusion), "coaction")?;
    let mu = restrict(&h.mu, &ii, &coordinates, &inclusion, "multiplication")?;
    let eta = restrict(&h.eta, &Matrix::identity(1), &coordinates, &inclusion, "unit")?;
    let dk_m = restrict(&delta_k.matrix, &inclusion, &ll, &ii, "comultiplication")?;
    let eps = h.eps.mul(&inclusion);
    let s = restrict(&s_k.matrix, &inclusion, &coordinates, &inclusion, "antipode")?;

    let labels: Vec<String> = inclusion
        .columns()
        .iter()
        .enumerate()
        .map(|(t, c)| match c.entries() {
            [(i, v)] if v.is_one() => h.labels[*i].clone(),
            _ => format!("k{t}"),
        })
        .collect();
    let grading = h.grading.as_ref().map(|g| {
        Arc::new(
            inclusion
                .columns()
                .iter()
                .map(|c| g[c.first_index().unwrap_or(0)].clone())
                .collect::<Vec<_>>(),
        )
    });
    let mut parts = HopfParts::new(&format!("{}^coin", h.name), labels, mu, eta, dk_m, eps);
    parts.s = Some(s);
    parts.grading = grading;
    parts.ambient = Ambient::YdOver {
        over: a.clone(),
        rho: Arc::new(rho),
        delta: Arc::new(delta),
    };
    let k = Arc::new(HopfAlgebra::new(parts)?);
    debug_assert_eq!(k.dim, dk);

    let bp = biproduct(&k, &format!("{}#{}", k.name, a.name))?;
    let reassembly = h.mu.mul(&inclusion.kron(iota));
    report.extend_prefixed("biproduct: ", bp.report.clone());
    let iso = verify_hopf_morphism(&reassembly, &bp.result, h)?;
    report.extend_prefixed("reassembly: ", iso);
    report.push("reassembly invertible", inverse(&reassembly).is_ok(), Some("singular".into()));
    Ok(CoinvariantDecomposition {
        h: h.clone(),
        a: a.clone(),
        pi: pi.clone(),
        iota: iota.clone(),
        k,
        inclusion,
        coordinates,
        biproduct: bp,
        reassembly,
        report,
    })
}
