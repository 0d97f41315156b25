//! Yetter-Drinfeld modules over `K ⋊ A` as `K`-modules inside the
//! category over `A`, and back.

use std::sync::Arc;

use super::BiproductPresentation;
use crate::diagram::Environment;
use crate::exactmath::Matrix;
use crate::hopf::{register_hopf, register_module};
use crate::report::Report;
use crate::yd::{verify_yd, verify_yd_morphism, verify_yd_structure, yd_tensor, Side, YdBraiding, YetterDrinfeldModule};
use crate::{Error, Result};

/// A module over `A` carrying a compatible `K`-action and `K`-coaction.
#[derive(Clone, Debug)]
pub struct NestedModule {
    /// The underlying module over `A`.
    pub inner: YetterDrinfeldModule,
    /// `K⊗M → M`.
    pub k_rho: Arc<Matrix>,
    /// `M → K⊗M`.
    pub k_delta: Arc<Matrix>,
    pub report: Report,
}

fn require_left(m: &YetterDrinfeldModule) -> Result<()> {
    if m.side != Side::Left {
        return Err(Error::Incompatible("nesting is implemented for left modules".into()));
    }
    Ok(())
}

/// The module over `K` viewed in the category over `A`, with the checks
/// that its structure maps are morphisms there and satisfy the axioms.
fn nested_report(bp: &BiproductPresentation, inner: &YetterDrinfeldModule, k_rho: &Arc<Matrix>, k_delta: &Arc<Matrix>) -> Result<Report> {
    let k = &bp.k;
    let (_, krho, kdelta) = k.self_yd().expect("biproduct factor lives over A");
    let k_module = YetterDrinfeldModule {
        over: bp.a.clone(),
        space: k.space("K"),
        rho: krho.clone(),
        delta: kdelta.clone(),
        side: Side::Left,
    };
    let mut report = Report::new();
    report.extend_prefixed("over A: ", verify_yd(inner)?);
    let km = yd_tensor(&k_module, inner)?;
    report.extend_prefixed("K-action: ", verify_yd_morphism(k_rho, &km, inner));
    report.extend_prefixed("K-coaction: ", verify_yd_morphism(k_delta, inner, &km));

    let mut provider = YdBraiding::new(bp.a.clone());
    provider.add(&k_module);
    provider.add(&inner.renamed("M"));
    let mut env = Environment::new(Arc::new(provider));
    register_hopf(&mut env, "K", k);
    register_module(&mut env, "M", "K", inner.space.clone(), Side::Left, k_rho, k_delta)?;
    report.extend_prefixed("over K: ", verify_yd_structure(&env, "K", "M", Side::Left)?);
    Ok(report)
}

/// Splits a module over `K ⋊ A` into its `A`-structure (restriction along
/// the injection, corestriction along the projection) and `K`-structure.
pub fn yd_nest(bp: &BiproductPresentation, m: &YetterDrinfeldModule) -> Result<NestedModule> {
    require_left(m)?;
    let (dk, da, d) = (bp.k.dim, bp.a.dim, m.dim());
    if m.over.dim != dk * da {
        return Err(Error::Incompatible(format!("{} is not a module over {}", m.space.name, bp.result.name)));
    }
    let id = Matrix::identity(d);
    let idk = Matrix::identity(dk);
    let a_rho = m.rho.mul(&bp.injection.kron(&id));
    let a_delta = bp.pi.kron(&id).mul(&m.delta);
    let k_rho = Arc::new(m.rho.mul(&idk.kron(&bp.a.eta).kron(&id)));
    let k_delta = Arc::new(idk.kron(&bp.a.eps).kron(&id).mul(&m.delta));
    let inner = YetterDrinfeldModule::new(bp.a.clone(), m.space.clone(), Side::Left, a_rho, a_delta)?;
    let report = nested_report(bp, &inner, &k_rho, &k_delta)?;
    Ok(NestedModule {
        inner,
        k_rho,
        k_delta,
        report,
    })
}

/// Reassembles a module over `K ⋊ A`: `(k⊗a).m = k.(a.m)` and
/// `δ = (id_K⊗δ_A)∘δ_K`. The result is verified.
pub fn yd_unnest(bp: &BiproductPresentation, n: &NestedModule) -> Result<(YetterDrinfeldModule, Report)> {
    require_left(&n.inner)?;
    let dk = bp.k.dim;
    let idk = Matrix::identity(dk);
    let rho = n.k_rho.mul(&idk.kron(&n.inner.rho));
    let delta = idk.kron(&n.inner.delta).mul(&n.k_delta);
    let m = YetterDrinfeldModule::new(bp.result.clone(), n.inner.space.clone(), Side::Left, rho, delta)?;
    let mut report = nested_report(bp, &n.inner, &n.k_rho, &n.k_delta)?;
    report.extend_prefixed("reassembled: ", verify_yd(&m)?);
    Ok((m, report))
}
