//! Braided monoidal functors turning right Yetter-Drinfeld modules into
//! left ones.

use serde::{Deserialize, Serialize};

use crate::exactmath::{inverse, Matrix};
use crate::report::Report;
use crate::{Error, Result};

use super::braiding::yd_braiding;
use super::theta::theta;
use super::{module_env, verify_yd, verify_yd_morphism, yd_tensor, Side, YetterDrinfeldModule};

/// The two side-switch functors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SwitchVariant {
    /// Action `ρ^r∘c⁻¹∘(S⁻¹⊗id)`, coaction `(S⊗id)∘c∘δ^r`.
    T,
    /// Action `ρ^r∘c∘(S⊗id)`, coaction `(S⁻¹⊗id)∘c⁻¹∘δ^r`.
    TPrime,
}

fn require_right(x: &YetterDrinfeldModule) -> Result<()> {
    if x.side != Side::Right {
        return Err(Error::Incompatible("side switch expects a right module".into()));
    }
    Ok(())
}

/// The left module obtained from a right module.
pub fn side_switch(x: &YetterDrinfeldModule, variant: SwitchVariant) -> Result<YetterDrinfeldModule> {
    require_right(x)?;
    let env = module_env(&x.over, &[("X", x)])?;
    let (rho, delta) = match variant {
        SwitchVariant::T => (
            env.eval("ract[X] . braidinv[X,A] . (Sinv[A] * id[X])")?,
            env.eval("(S[A] * id[X]) . braid[X,A] . rcoact[X]")?,
        ),
        SwitchVariant::TPrime => (
            env.eval("ract[X] . braid[A,X] . (S[A] * id[X])")?,
            env.eval("(Sinv[A] * id[X]) . braidinv[A,X] . rcoact[X]")?,
        ),
    };
    Ok(YetterDrinfeldModule {
        over: x.over.clone(),
        space: x.space.clone(),
        rho: rho.matrix,
        delta: delta.matrix,
        side: Side::Left,
    })
}

/// The monoidal structure `F(X)⊗F(Y) → F(X⊗Y)` and its inverse.
pub fn switch_monoidal(
    x: &YetterDrinfeldModule,
    y: &YetterDrinfeldModule,
    variant: SwitchVariant,
) -> Result<(Matrix, Matrix)> {
    require_right(x)?;
    require_right(y)?;
    let (x, y) = (x.renamed("X"), y.renamed("Y"));
    let env = module_env(&x.over, &[("X", &x), ("Y", &y)])?;
    match variant {
        SwitchVariant::T => {
            let f = env.eval("(id[X] * ract[Y]) . (id[X] * braidinv[Y,A]) . (rcoact[X] * id[Y])")?;
            let g = env.eval(
                "(id[X] * ract[Y]) . (id[X] * braidinv[Y,A]) . (id[X] * Sinv[A] * id[Y]) . (rcoact[X] * id[Y])",
            )?;
            Ok(((*f.matrix).clone(), (*g.matrix).clone()))
        }
        SwitchVariant::TPrime => {
            let f = env.eval(
                "(ract[X] * id[Y]) . (id[X] * Sinv[A] * id[Y]) . (id[X] * braidinv[A,Y]) . (id[X] * rcoact[Y])",
            )?;
            let g = inverse(&f.matrix)?;
            Ok(((*f.matrix).clone(), g))
        }
    }
}

/// For right modules `X, Y, Z`: the images are left modules, the monoidal
/// structure is an invertible module map, coherent and braided; for `T` it
/// agrees with `c^YD_{Y,X}∘c⁻¹_{Y,X}`; and `θ` intertwines `T` with `T′`.
pub fn switch_checks(
    x: &YetterDrinfeldModule,
    y: &YetterDrinfeldModule,
    z: &YetterDrinfeldModule,
    variant: SwitchVariant,
) -> Result<Report> {
    let (x, y, z) = (x.renamed("X"), y.renamed("Y"), z.renamed("Z"));
    let mut r = Report::new();
    let f = |m: &YetterDrinfeldModule| side_switch(m, variant);
    let (fx, fy) = (f(&x)?, f(&y)?);
    r.extend_prefixed("image is Yetter-Drinfeld: ", verify_yd(&fx)?);

    let (t2, t2i) = switch_monoidal(&x, &y, variant)?;
    let id = Matrix::identity(x.dim() * y.dim());
    r.push_matrices("structure inverse", &t2i.mul(&t2), &id);
    let xy = yd_tensor(&x, &y)?;
    let source = yd_tensor(&fx, &fy)?;
    r.extend_prefixed("structure is a morphism: ", verify_yd_morphism(&t2, &source, &f(&xy)?));

    if variant == SwitchVariant::T {
        let env = module_env(&x.over, &[("X", &x), ("Y", &y)])?;
        let (c_yx, _) = yd_braiding(&y, &x)?;
        let b = env.eval("braidinv[Y,X]")?;
        r.push_matrices("structure through braidings", &t2, &c_yx.mul(&b.matrix));
    }

    let yz = yd_tensor(&y, &z)?;
    let (t_xy_z, _) = switch_monoidal(&xy.renamed("XY"), &z, variant)?;
    let (t_x_yz, _) = switch_monoidal(&x, &yz.renamed("YZ"), variant)?;
    let (t_yz, _) = switch_monoidal(&y, &z, variant)?;
    let iz = Matrix::identity(z.dim());
    let ix = Matrix::identity(x.dim());
    r.push_matrices(
        "coherence",
        &t_xy_z.mul(&t2.kron(&iz)),
        &t_x_yz.mul(&ix.kron(&t_yz)),
    );

    let (c_img, _) = yd_braiding(&fx, &fy)?;
    let (c_xy, _) = yd_braiding(&x, &y)?;
    let (t2_yx, _) = switch_monoidal(&y, &x, variant)?;
    r.push_matrices("braided", &t2_yx.mul(&c_img), &c_xy.mul(&t2));

    let (tx_t, _) = theta(&side_switch(&x, SwitchVariant::T)?)?;
    let tpx = side_switch(&x, SwitchVariant::TPrime)?;
    let tx = side_switch(&x, SwitchVariant::T)?;
    r.extend_prefixed("θ from T to T′: ", verify_yd_morphism(&tx_t, &tx, &tpx));
    Ok(r)
}
