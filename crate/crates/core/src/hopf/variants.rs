//! Opposite and co-opposite Hopf algebras in the reversed-braiding category.

use crate::{Error, Result};

use super::{verify_hopf, HopfAlgebra};

/// `(A, μ∘c⁻¹, Δ)` and `(A, μ, c⁻¹∘Δ)`, both tagged as living in the
/// category with reversed braiding and with antipode `S⁻¹`.
pub fn op_cop_variants(h: &HopfAlgebra) -> Result<(HopfAlgebra, HopfAlgebra)> {
    let env = h.env("H");
    let mu_op = env.eval("mu . braidinv[H,H]")?;
    let delta_cop = env.eval("braidinv[H,H] . Delta")?;
    let flip = |mut v: HopfAlgebra, suffix: &str| {
        v.name = format!("{}^{suffix}", h.name);
        v.reversed = !h.reversed;
        std::mem::swap(&mut v.s, &mut v.sinv);
        v
    };
    let mut op = h.clone();
    op.mu = mu_op.matrix;
    let op = flip(op, "op");
    let mut cop = h.clone();
    cop.delta = delta_cop.matrix;
    let cop = flip(cop, "cop");
    for v in [&op, &cop] {
        let r = verify_hopf(v)?;
        if !r.passed() {
            return Err(Error::Verification(r));
        }
    }
    Ok((op, cop))
}
