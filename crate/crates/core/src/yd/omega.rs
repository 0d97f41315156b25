//! The braided equivalences `Ω, Ω′` from left Yetter-Drinfeld modules over
//! `A` to left Yetter-Drinfeld modules over `B`, induced by a
//! non-degenerate pairing `ω: A⊗B → 1` with copairing `ω′: 1 → B⊗A`.

use serde::{Deserialize, Serialize};

use crate::diagram::Environment;
use crate::exactmath::Matrix;
use crate::hopf::{pairing_variants, register_module, HopfAlgebra, HopfPairing};
use crate::report::Report;
use crate::{Error, Result};

use super::braiding::yd_braiding;
use super::theta::theta;
use super::transport::{transport_hopf, underlying_module};
use super::{module_env, verify_yd, verify_yd_morphism, yd_tensor, Side, YetterDrinfeldModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OmegaVariant {
    /// Dualization followed by the side switch `T`.
    Omega,
    /// Dualization followed by the side switch `T′`.
    OmegaPrime,
}

const RHO: &str = "(id[X] * omega) . (braidinv[X,A] * Sinv[B]) . (coact[X] * id[B]) \
                   . braidinv[X,B] . (Sinv[B] * id[X])";
const DELTA: &str = "(S[B] * id[X]) . braid[X,B] . braid[B,X] . (S[B] * act[X]) . (omegainv * id[X])";
const RHO_PRIME: &str = "(id[X] * omega) . (braidinv[X,A] * Sinv[B]) . (coact[X] * id[B]) \
                         . braid[B,X] . (S[B] * id[X])";
const DELTA_PRIME: &str = "(id[B] * act[X]) . (omegainv * id[X])";

fn pairing_env(p: &HopfPairing, x: &YetterDrinfeldModule) -> Result<Environment> {
    if p.omega_inv.is_none() {
        return Err(Error::Degenerate);
    }
    if x.side != Side::Left || x.over.name != p.a.name || x.over.dim != p.a.dim {
        return Err(Error::Incompatible(format!(
            "expected a left module over {}, got one over {}",
            p.a.name, x.over.name
        )));
    }
    let mut env = p.env()?;
    register_module(&mut env, "X", "A", x.space.clone(), Side::Left, &x.rho, &x.delta)?;
    Ok(env)
}

/// The image of `X`; underlying space unchanged.
pub fn omega_functor(p: &HopfPairing, x: &YetterDrinfeldModule, variant: OmegaVariant) -> Result<YetterDrinfeldModule> {
    let env = pairing_env(p, x)?;
    let (rho, delta) = match variant {
        OmegaVariant::Omega => (env.eval(RHO)?, env.eval(DELTA)?),
        OmegaVariant::OmegaPrime => (env.eval(RHO_PRIME)?, env.eval(DELTA_PRIME)?),
    };
    Ok(YetterDrinfeldModule {
        over: p.b.clone(),
        space: x.space.clone(),
        rho: rho.matrix,
        delta: delta.matrix,
        side: Side::Left,
    })
}

/// `Ω₂(X,Y) = c^YD_{Y,X}∘c⁻¹_{Y,X}` or `Ω′₂(X,Y) = (c^YD_{X,Y})⁻¹∘c_{X,Y}`,
/// together with the inverse.
pub fn omega_monoidal(
    x: &YetterDrinfeldModule,
    y: &YetterDrinfeldModule,
    variant: OmegaVariant,
) -> Result<(Matrix, Matrix)> {
    let (x, y) = (x.renamed("X"), y.renamed("Y"));
    let env = module_env(&x.over, &[("X", &x), ("Y", &y)])?;
    Ok(match variant {
        OmegaVariant::Omega => {
            let (c, ci) = yd_braiding(&y, &x)?;
            let b = env.eval("braid[Y,X]")?;
            let bi = env.eval("braidinv[Y,X]")?;
            (c.mul(&bi.matrix), b.matrix.mul(&ci))
        }
        OmegaVariant::OmegaPrime => {
            let (c, ci) = yd_braiding(&x, &y)?;
            let b = env.eval("braid[X,Y]")?;
            let bi = env.eval("braidinv[X,Y]")?;
            (ci.mul(&b.matrix), bi.matrix.mul(&c))
        }
    })
}

/// Image verification, the monoidal structure as an invertible module map,
/// and the braided-functor law `Ω(c_{X,Y})∘Ω₂(X,Y) = Ω₂(Y,X)∘c_{ΩX,ΩY}`.
pub fn omega_checks(
    p: &HopfPairing,
    x: &YetterDrinfeldModule,
    y: &YetterDrinfeldModule,
    variant: OmegaVariant,
) -> Result<Report> {
    let (x, y) = (x.renamed("X"), y.renamed("Y"));
    let (ox, oy) = (omega_functor(p, &x, variant)?, omega_functor(p, &y, variant)?);
    let mut r = Report::new();
    r.extend_prefixed("image is Yetter-Drinfeld: ", verify_yd(&ox)?);
    let (f2, f2i) = omega_monoidal(&x, &y, variant)?;
    r.push_matrices("structure inverse", &f2i.mul(&f2), &Matrix::identity(x.dim() * y.dim()));
    let source = yd_tensor(&ox, &oy)?;
    let target = omega_functor(p, &yd_tensor(&x, &y)?, variant)?;
    r.extend_prefixed("structure is a morphism: ", verify_yd_morphism(&f2, &source, &target));
    let (c_img, _) = yd_braiding(&ox, &oy)?;
    let (c, _) = yd_braiding(&x, &y)?;
    let (f2_yx, _) = omega_monoidal(&y, &x, variant)?;
    r.push_matrices("braided", &c.mul(&f2), &f2_yx.mul(&c_img));
    Ok(r)
}

/// The image of a Hopf algebra in the category over `A`.
pub fn omega_hopf(p: &HopfPairing, k: &HopfAlgebra, name: &str, variant: OmegaVariant) -> Result<HopfAlgebra> {
    let m = underlying_module(k, "K")
        .ok_or_else(|| Error::Incompatible(format!("{} does not live over another Hopf algebra", k.name)))?;
    let image = omega_functor(p, &m, variant)?;
    let (f2, f2i) = omega_monoidal(&m, &m, variant)?;
    transport_hopf(k, name, &image, &f2, &f2i)
}

/// `Ω^{ω⁻}(Ω^ω(X))` compared with the twisted structure
/// `(ρ∘(S⁻²⊗id)∘c⁻¹∘c⁻¹, c∘c∘(S²⊗id)∘δ)`, with `θ_X` as the isomorphism
/// back to `X`.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub module: YetterDrinfeldModule,
    pub expected: YetterDrinfeldModule,
    pub theta: Matrix,
    pub report: Report,
}

pub fn omega_roundtrip_iso(p: &HopfPairing, x: &YetterDrinfeldModule, y: &YetterDrinfeldModule) -> Result<RoundTrip> {
    let (x, y) = (x.renamed("X"), y.renamed("Y"));
    let (_, minus) = pairing_variants(p)?;
    let ox = omega_functor(p, &x, OmegaVariant::Omega)?;
    let oox = omega_functor(&minus, &ox, OmegaVariant::Omega)?;
    let env = module_env(&x.over, &[("X", &x)])?;
    let rho = env.eval("act[X] . (Sinv[A] * id[X]) . (Sinv[A] * id[X]) . braidinv[A,X] . braidinv[X,A]")?;
    let delta = env.eval("braid[X,A] . braid[A,X] . (S[A] * id[X]) . (S[A] * id[X]) . coact[X]")?;
    let expected = YetterDrinfeldModule {
        rho: rho.matrix,
        delta: delta.matrix,
        ..x.clone()
    };
    let module = YetterDrinfeldModule {
        over: x.over.clone(),
        ..oox
    };
    let mut report = Report::new();
    report.push_matrices("action matches twist", &module.rho, &expected.rho);
    report.push_matrices("coaction matches twist", &module.delta, &expected.delta);
    let (t, _) = theta(&x)?;
    report.extend_prefixed("θ is a morphism to X: ", verify_yd_morphism(&t, &module, &x));

    let oy = omega_functor(p, &y, OmegaVariant::Omega)?;
    let (inner, _) = omega_monoidal(&x, &y, OmegaVariant::Omega)?;
    let (outer, _) = omega_monoidal(&ox, &oy, OmegaVariant::Omega)?;
    let composite = inner.mul(&outer);
    let env = module_env(&x.over, &[("X", &x), ("Y", &y)])?;
    let (c_xy, _) = yd_braiding(&x, &y)?;
    let (c_yx, _) = yd_braiding(&y, &x)?;
    let bi_xy = env.eval("braidinv[X,Y]")?;
    let bi_yx = env.eval("braidinv[Y,X]")?;
    let expected2 = c_yx.mul(&c_xy).mul(&bi_xy.matrix).mul(&bi_yx.matrix);
    report.push_matrices("monoidal structure of the round trip", &composite, &expected2);
    Ok(RoundTrip {
        module,
        expected,
        theta: t,
        report,
    })
}
