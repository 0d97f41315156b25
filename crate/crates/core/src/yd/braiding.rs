//! The braiding of a Yetter-Drinfeld category, as a braiding provider for
//! diagram evaluation and as explicit matrices.

use std::collections::HashMap;
use std::sync::Arc;

use crate::diagram::{BraidingProvider, DiagramError, Environment};
use crate::exactmath::{Matrix, Space};
use crate::hopf::{register_hopf, register_module, HopfAlgebra};
use crate::report::Report;
use crate::Result;

use super::{verify_yd_morphism, yd_tensor, Side, YetterDrinfeldModule};

const LEFT: &str = "(act[Y] * id[X]) . (id[_A] * braid[X,Y]) . (coact[X] * id[Y])";
const LEFT_INV: &str = "braidinv[X,Y] . (act[Y] * id[X]) . (braidinv[_A,Y] * id[X]) \
                        . (id[Y] * Sinv[_A] * id[X]) . (id[Y] * coact[X])";
const RIGHT: &str = "(id[Y] * ract[X]) . (braid[X,Y] * id[_A]) . (id[X] * rcoact[Y])";
const RIGHT_INV: &str = "braidinv[X,Y] . (id[Y] * ract[X]) . (id[Y] * braidinv[X,_A]) \
                         . (id[Y] * Sinv[_A] * id[X]) . (rcoact[Y] * id[X])";

#[derive(Clone, Debug)]
struct Entry {
    space: Space,
    side: Side,
    rho: Arc<Matrix>,
    delta: Arc<Matrix>,
}

/// Yetter-Drinfeld braiding for modules registered by space name.
pub struct YdBraiding {
    over: Arc<HopfAlgebra>,
    modules: HashMap<String, Entry>,
}

impl YdBraiding {
    pub fn new(over: Arc<HopfAlgebra>) -> Self {
        YdBraiding {
            over,
            modules: HashMap::new(),
        }
    }

    /// Registers the structure used whenever a space with this name is braided.
    pub fn add_module(&mut self, space: Space, side: Side, rho: Arc<Matrix>, delta: Arc<Matrix>) {
        self.modules.insert(
            space.name.to_string(),
            Entry {
                space,
                side,
                rho,
                delta,
            },
        );
    }

    pub fn add(&mut self, m: &YetterDrinfeldModule) {
        self.add_module(m.space.clone(), m.side, m.rho.clone(), m.delta.clone());
    }

    fn entry(&self, s: &Space) -> std::result::Result<&Entry, DiagramError> {
        self.modules
            .get(&*s.name)
            .ok_or_else(|| DiagramError::Braiding(format!("{} is not a registered Yetter-Drinfeld module", s.name)))
    }

    fn evaluate(&self, x: &Space, y: &Space, inverse: bool) -> std::result::Result<Matrix, DiagramError> {
        let (ex, ey) = (self.entry(x)?, self.entry(y)?);
        if ex.side != ey.side {
            return Err(DiagramError::Braiding("modules on different sides".into()));
        }
        let mut env = Environment::new(self.over.base());
        register_hopf(&mut env, "_A", &self.over);
        env.set_reversed(self.over.reversed);
        for (alias, e) in [("X", ex), ("Y", ey)] {
            register_module(&mut env, alias, "_A", e.space.clone(), e.side, &e.rho, &e.delta)
                .map_err(|e| DiagramError::Braiding(e.to_string()))?;
        }
        let script = match (ex.side, inverse) {
            (Side::Left, false) => LEFT,
            (Side::Left, true) => LEFT_INV,
            (Side::Right, false) => RIGHT,
            (Side::Right, true) => RIGHT_INV,
        };
        Ok((*env.eval(script)?.matrix).clone())
    }
}

impl BraidingProvider for YdBraiding {
    fn braid(&self, x: &Space, y: &Space) -> std::result::Result<Matrix, DiagramError> {
        self.evaluate(x, y, false)
    }

    fn braid_inv(&self, x: &Space, y: &Space) -> std::result::Result<Matrix, DiagramError> {
        self.evaluate(x, y, true)
    }
}

/// `c^YD_{X,Y}: X⊗Y → Y⊗X` and its inverse `Y⊗X → X⊗Y`, both evaluated
/// from their closed formulas.
pub fn yd_braiding(x: &YetterDrinfeldModule, y: &YetterDrinfeldModule) -> Result<(Matrix, Matrix)> {
    x.same_category(y)?;
    let mut p = YdBraiding::new(x.over.clone());
    let (x, y) = (x.renamed("X"), y.renamed("Y"));
    p.add(&x);
    p.add(&y);
    Ok((p.braid(&x.space, &y.space)?, p.braid_inv(&x.space, &y.space)?))
}

/// Invertibility, naturality with respect to the structure (the braiding is
/// a module and comodule map) and both hexagon identities on `X, Y, Z`.
pub fn yd_braiding_checks(
    x: &YetterDrinfeldModule,
    y: &YetterDrinfeldModule,
    z: &YetterDrinfeldModule,
) -> Result<Report> {
    let (x, y, z) = (x.renamed("X"), y.renamed("Y"), z.renamed("Z"));
    let mut r = Report::new();
    let (c, ci) = yd_braiding(&x, &y)?;
    let dxy = x.dim() * y.dim();
    r.push_matrices("inverse after braiding", &ci.mul(&c), &Matrix::identity(dxy));
    r.push_matrices("braiding after inverse", &c.mul(&ci), &Matrix::identity(dxy));
    let xy = yd_tensor(&x, &y)?.renamed("XY");
    let yx = yd_tensor(&y, &x)?.renamed("YX");
    r.extend_prefixed("braiding is a morphism: ", verify_yd_morphism(&c, &xy, &yx));

    let yz = yd_tensor(&y, &z)?.renamed("YZ");
    let mut p = YdBraiding::new(x.over.clone());
    for m in [&x, &y, &z, &xy, &yz] {
        p.add(m);
    }
    let mut env = Environment::new(Arc::new(p));
    for m in [&x, &y, &z, &xy, &yz] {
        env.add_space(m.space.clone());
    }
    let lhs = env.eval("braid[X,YZ]")?;
    let rhs = env.eval("(id[Y] * braid[X,Z]) . (braid[X,Y] * id[Z])")?;
    r.push_matrices("hexagon in the second argument", &lhs.matrix, &rhs.matrix);
    let lhs = env.eval("braid[XY,Z]")?;
    let rhs = env.eval("(braid[X,Z] * id[Y]) . (id[X] * braid[Y,Z])")?;
    r.push_matrices("hexagon in the first argument", &lhs.matrix, &rhs.matrix);
    Ok(r)
}
