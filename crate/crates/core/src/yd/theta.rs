//! The natural automorphism `θ_X = ρ∘(S⊗id)∘δ` of a left Yetter-Drinfeld module.

use std::sync::Arc;

use crate::exactmath::Matrix;
use crate::report::Report;
use crate::{Error, Result};

use super::braiding::yd_braiding;
use super::{module_env, yd_tensor, Side, YetterDrinfeldModule};

const THETA: &str = "act[X] . (S[A] * id[X]) . coact[X]";
const THETA_INV: &str =
    "act[X] . braidinv[A,X] . (id[X] * Sinv[A]) . (id[X] * Sinv[A]) . braidinv[X,A] . coact[X]";

/// `θ_X` and `θ_X⁻¹ = ρ∘c⁻¹∘(id⊗S⁻²)∘c⁻¹∘δ`.
pub fn theta(x: &YetterDrinfeldModule) -> Result<(Matrix, Matrix)> {
    if x.side != Side::Left {
        return Err(Error::Incompatible("θ is defined for left modules".into()));
    }
    let env = module_env(&x.over, &[("X", x)])?;
    let t = env.eval(THETA)?;
    let ti = env.eval(THETA_INV)?;
    Ok(((*t.matrix).clone(), (*ti.matrix).clone()))
}

/// Inverse identities for `θ`, its interaction with the action and the
/// coaction (`θ∘ρ = ρ∘c∘c∘(S²⊗θ)`, `δ∘θ = (S²⊗θ)∘c∘c∘δ`), and its
/// compatibility with the braiding on `X⊗Y`.
pub fn theta_checks(x: &YetterDrinfeldModule, y: &YetterDrinfeldModule) -> Result<Report> {
    let (x, y) = (x.renamed("X"), y.renamed("Y"));
    let (tx, txi) = theta(&x)?;
    let (ty, _) = theta(&y)?;
    let mut r = Report::new();
    let id = Matrix::identity(x.dim());
    r.push_matrices("inverse after θ", &txi.mul(&tx), &id);
    r.push_matrices("θ after inverse", &tx.mul(&txi), &id);

    let mut env = module_env(&x.over, &[("X", &x), ("Y", &y)])?;
    env.add_generator("theta[X]", &["X"], &["X"], Arc::new(tx.clone()))?;
    let eq = env.equal(
        "theta[X] . act[X]",
        "act[X] . braid[X,A] . braid[A,X] . (S[A] * theta[X]) . (S[A] * id[X])",
    )?;
    r.push_equality("θ and the action", &eq);
    let eq = env.equal(
        "coact[X] . theta[X]",
        "(S[A] * id[X]) . (S[A] * theta[X]) . braid[X,A] . braid[A,X] . coact[X]",
    )?;
    r.push_equality("θ and the coaction", &eq);

    let (t_yx, _) = theta(&yd_tensor(&y, &x)?)?;
    let (c_xy, _) = yd_braiding(&x, &y)?;
    let (c_yx, _) = yd_braiding(&y, &x)?;
    let lhs = c_yx.mul(&t_yx).mul(&c_xy);
    let b_xy = env.eval("braid[X,Y]")?;
    let b_yx = env.eval("braid[Y,X]")?;
    let rhs = b_yx.matrix.mul(&ty.kron(&tx)).mul(&b_xy.matrix);
    r.push_matrices("θ and the braiding", &lhs, &rhs);
    Ok(r)
}
