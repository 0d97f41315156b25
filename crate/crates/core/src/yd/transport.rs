//! Transport of a Hopf algebra structure along a braided monoidal functor
//! that does not change underlying spaces.

use std::sync::Arc;

use crate::exactmath::Matrix;
use crate::hopf::{Ambient, HopfAlgebra, HopfParts};
use crate::Result;

use super::YetterDrinfeldModule;

/// Given the image `F(K)` of the underlying module of `k` and the monoidal
/// structure `F₂(K,K)` with its inverse, builds `μ∘F₂`, `F₂⁻¹∘Δ`, the same
/// unit, counit and antipode, and verifies the result in the new ambient.
pub fn transport_hopf(
    k: &HopfAlgebra,
    name: &str,
    image: &YetterDrinfeldModule,
    f2: &Matrix,
    f2_inv: &Matrix,
) -> Result<HopfAlgebra> {
    let mut parts = HopfParts::new(
        name,
        k.labels.clone(),
        k.mu.mul(f2),
        (*k.eta).clone(),
        f2_inv.mul(&k.delta),
        (*k.eps).clone(),
    );
    parts.grading = k.grading.clone();
    parts.s = Some((*k.s).clone());
    parts.ambient = Ambient::YdOver {
        over: image.over.clone(),
        rho: image.rho.clone(),
        delta: image.delta.clone(),
    };
    HopfAlgebra::new(parts)
}

/// The module underlying a Hopf algebra in a Yetter-Drinfeld category.
pub fn underlying_module(k: &HopfAlgebra, alias: &str) -> Option<YetterDrinfeldModule> {
    k.self_yd().map(|(over, rho, delta)| YetterDrinfeldModule {
        over: Arc::clone(over),
        space: k.space(alias),
        rho: rho.clone(),
        delta: delta.clone(),
        side: super::Side::Left,
    })
}
