//! Hopf algebra morphisms.

use crate::diagram::Environment;
use crate::exactmath::Matrix;
use crate::report::Report;
use crate::Result;

use super::verify::script_report;
use super::{register_hopf, HopfAlgebra};

/// Checks that `f: X → Y` is an algebra and coalgebra map (which forces
/// compatibility with the antipodes); both algebras must share a base.
pub fn verify_hopf_morphism(f: &Matrix, x: &HopfAlgebra, y: &HopfAlgebra) -> Result<Report> {
    let mut env = Environment::new(x.base());
    register_hopf(&mut env, "X", x);
    register_hopf(&mut env, "Y", y);
    env.add_generator("f", &["X"], &["Y"], std::sync::Arc::new(f.clone()))?;
    let s = |t: &str| t.to_string();
    let scripts = vec![
        ("multiplicative", s("f . mu[X]"), s("mu[Y] . (f * f)")),
        ("unital", s("f . eta[X]"), s("eta[Y]")),
        ("comultiplicative", s("Delta[Y] . f"), s("(f * f) . Delta[X]")),
        ("counital", s("eps[Y] . f"), s("eps[X]")),
        ("antipode", s("f . S[X]"), s("S[Y] . f")),
    ];
    script_report(&env, &scripts)
}
