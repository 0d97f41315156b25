//! Verification of the Hopf algebra axioms by evaluating diagram identities.

use std::sync::Arc;

use crate::diagram::{BaseCategory, Environment};
use crate::report::Report;
use crate::yd::{verify_yd_structure, Side};
use crate::Result;

use super::{register_hopf, register_module, HopfAlgebra};

/// Evaluates each `(name, lhs, rhs)` identity in `env`.
pub fn script_report(env: &Environment, scripts: &[(&str, String, String)]) -> Result<Report> {
    let mut r = Report::new();
    for (name, lhs, rhs) in scripts {
        let eq = env.equal(lhs, rhs)?;
        r.push_equality(*name, &eq);
    }
    Ok(r)
}

fn s(x: &str) -> String {
    x.to_string()
}

/// Checks associativity, unit, coassociativity, counit, bialgebra
/// compatibility with the ambient self-braiding, the antipode identities
/// and invertibility of the antipode. Over a Yetter-Drinfeld ambient it
/// also checks that the algebra is a Yetter-Drinfeld module and that its
/// structure maps are module and comodule maps.
pub fn verify_hopf(h: &HopfAlgebra) -> Result<Report> {
    let env = h.env("H");
    let scripts = vec![
        ("associativity", s("mu . (mu * id)"), s("mu . (id * mu)")),
        ("left unit", s("mu . (eta * id)"), s("id")),
        ("right unit", s("mu . (id * eta)"), s("id")),
        ("coassociativity", s("(Delta * id) . Delta"), s("(id * Delta) . Delta")),
        ("left counit", s("(eps * id) . Delta"), s("id")),
        ("right counit", s("(id * eps) . Delta"), s("id")),
        (
            "bialgebra compatibility",
            s("Delta . mu"),
            s("(mu * mu) . (id * braid[H,H] * id) . (Delta * Delta)"),
        ),
        ("counit multiplicative", s("eps . mu"), s("eps * eps")),
        ("unit comultiplicative", s("Delta . eta"), s("eta * eta")),
        ("left antipode", s("mu . (S * id) . Delta"), s("eta . eps")),
        ("right antipode", s("mu . (id * S) . Delta"), s("eta . eps")),
        ("antipode inverse left", s("S . Sinv"), s("id")),
        ("antipode inverse right", s("Sinv . S"), s("id")),
    ];
    let mut report = script_report(&env, &scripts)?;
    let ee = h.eps.mul(&h.eta);
    report.push(
        "counit of unit",
        ee.get(0, 0).is_one(),
        Some(format!("eps(1) = {}", ee.get(0, 0))),
    );
    if let Some((over, rho, delta)) = h.self_yd() {
        let mut env = Environment::new(h.base());
        register_hopf(&mut env, "A", over);
        register_hopf(&mut env, "H", h);
        register_module(&mut env, "H", "A", h.space("H"), Side::Left, rho, delta)?;
        report.extend_prefixed("self Yetter-Drinfeld: ", verify_yd_structure(&env, "A", "H", Side::Left)?);
        report.extend_prefixed("structure maps: ", structure_maps_are_yd(&env)?);
    }
    Ok(report)
}

/// Module and comodule compatibility of `mu`, `eta`, `Delta`, `eps`, `S`
/// of `H` over `A`, with the tensor-product structures on `H⊗H`.
fn structure_maps_are_yd(env: &Environment) -> Result<Report> {
    let scripts = vec![
        (
            "mu linear",
            s("act[H] . (id[A] * mu[H])"),
            s("mu[H] . (act[H] * act[H]) . (id[A] * braid[A,H] * id[H]) . (Delta[A] * id[H] * id[H])"),
        ),
        (
            "mu colinear",
            s("coact[H] . mu[H]"),
            s("(mu[A] * mu[H]) . (id[A] * braid[H,A] * id[H]) . (coact[H] * coact[H])"),
        ),
        ("eta linear", s("act[H] . (id[A] * eta[H])"), s("eta[H] . eps[A]")),
        ("eta colinear", s("coact[H] . eta[H]"), s("eta[A] * eta[H]")),
        (
            "Delta linear",
            s("Delta[H] . act[H]"),
            s("(act[H] * act[H]) . (id[A] * braid[A,H] * id[H]) . (Delta[A] * Delta[H])"),
        ),
        (
            "Delta colinear",
            s("(id[A] * Delta[H]) . coact[H]"),
            s("(mu[A] * id[H] * id[H]) . (id[A] * braid[H,A] * id[H]) . (coact[H] * coact[H]) . Delta[H]"),
        ),
        ("eps linear", s("eps[H] . act[H]"), s("eps[A] * eps[H]")),
        ("eps colinear", s("(id[A] * eps[H]) . coact[H]"), s("eta[A] . eps[H]")),
        ("S linear", s("S[H] . act[H]"), s("act[H] . (id[A] * S[H])")),
        ("S colinear", s("coact[H] . S[H]"), s("(id[A] * S[H]) . coact[H]")),
    ];
    script_report(env, &scripts)
}

/// Plain vector spaces as a shared base category.
pub fn vect() -> Arc<BaseCategory> {
    Arc::new(BaseCategory::vect())
}
