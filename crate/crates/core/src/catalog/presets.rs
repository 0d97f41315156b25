//! Named presets for the worked examples, built and verified on demand.

use std::sync::Arc;

use crate::exactmath::{inverse, Matrix, SparseVec};
use crate::hopf::{verify_hopf_morphism, HopfAlgebra, HopfPairing};
use crate::nichols::{nichols_dualization_datum, rank_one, sl21_braidings, DiagonalBraiding};
use crate::partialdual::{make_datum, PartialDualResult, PartialDualizationDatum};
use crate::radford::check_projection;
use crate::report::Report;
use crate::{Error, Result};

use super::groups::{evaluation_values, function_algebra, group_algebra, GroupPresentation};
use super::io::{save_braiding, save_datum, save_hopf, save_pairing, DatumDoc, Document};
use super::taft::{check_taft, cyclic_group_algebra, cyclic_pairing_values, hat_taft, taft, taft_projection};

/// Preset names with their parameter lists, for help output.
pub const PRESETS: &[(&str, &str)] = &[
    ("group-algebra", "GROUP (s3 or Z<n>)"),
    ("function-algebra", "GROUP (s3 or Z<n>)"),
    ("taft", "d c"),
    ("hat-taft", "N d c"),
    ("check-taft", "N d c"),
    ("cyclic-pairing", "N k"),
    ("rank-one", "n k"),
    ("sl21-M", "n"),
    ("sl21-N", "n"),
    ("taft-datum", "N d c"),
    ("s3-projection", ""),
    ("s3-datum", ""),
    ("nichols-datum", "sl21-M|sl21-N n i [cutoff]"),
];

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

fn nums(name: &str, params: &[String], want: usize) -> Result<Vec<usize>> {
    if params.len() != want {
        return Err(bad(format!("{name} takes {want} parameters, got {}", params.len())));
    }
    params
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| bad(format!("{name}: {p:?} is not a non-negative integer"))))
        .collect()
}

/// `s3`, or `Z<n>` for a cyclic group.
pub fn group_by_name(name: &str) -> Result<GroupPresentation> {
    if name == "s3" {
        return Ok(GroupPresentation::s3());
    }
    name.strip_prefix('Z')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .map(|n| GroupPresentation::cyclic(n, "g"))
        .ok_or_else(|| bad(format!("unknown group {name:?}")))
}

/// The rank-2 braidings of the `sl(2|1)` example by name.
pub fn sl21_by_name(name: &str, n: usize) -> Result<DiagonalBraiding> {
    let (m, nn) = sl21_braidings(n)?;
    match name {
        "sl21-M" => Ok(m),
        "sl21-N" => Ok(nn),
        _ => Err(bad(format!("unknown braiding preset {name:?}"))),
    }
}

/// The hat-Taft datum: `T̂ → ℂ[ℤ_N]` paired with `ℂ[ℤ_N]` by `ω(g^a, g^b) = ζ_N^{ab}`.
pub fn taft_datum(n: usize, d: usize, c: usize) -> Result<PartialDualizationDatum> {
    let h = hat_taft(n, d, c)?;
    let a = cyclic_group_algebra(n)?;
    let (pi, iota) = taft_projection(n, d);
    make_datum(h, a.clone(), a, pi, iota, &cyclic_pairing_values(n, 1)?)
}

/// `ℂ[S₃] → ℂ[ℤ₂]` killing the rotations, with section `s ↦ s`.
pub fn s3_projection() -> Result<(Arc<HopfAlgebra>, Arc<HopfAlgebra>, Matrix, Matrix)> {
    let g = GroupPresentation::s3();
    let q = GroupPresentation::cyclic(2, "s");
    let h = group_algebra(&g, "C[S3]")?;
    let a = group_algebra(&q, "C[Z2]")?;
    // element (n, q) has index 2n + q
    let pi = Matrix::from_columns(2, (0..g.order).map(|k| SparseVec::unit(k % 2)).collect());
    let iota = Matrix::from_columns(g.order, (0..2).map(SparseVec::unit).collect());
    check_projection(&h, &a, &pi, &iota)?;
    Ok((h, a, pi, iota))
}

/// The S₃ projection with `ℂ[ℤ₂]` paired to `ℂ^{ℤ₂}` by evaluation.
pub fn s3_datum() -> Result<PartialDualizationDatum> {
    let (h, a, pi, iota) = s3_projection()?;
    let q = GroupPresentation::cyclic(2, "s");
    let b = function_algebra(&q, "C^Z2")?;
    make_datum(h, a, b, pi, iota, &evaluation_values(&q))
}

/// Builds the named preset as a verified document.
pub fn catalog_build(name: &str, params: &[String]) -> Result<Document> {
    let hopf = |h: Arc<HopfAlgebra>| Document::Hopf(save_hopf(&h));
    Ok(match name {
        "group-algebra" | "function-algebra" => {
            let [g] = params else {
                return Err(bad(format!("{name} takes one group name")));
            };
            let grp = group_by_name(g)?;
            if name == "group-algebra" {
                hopf(group_algebra(&grp, &format!("C[{g}]"))?)
            } else {
                hopf(function_algebra(&grp, &format!("C^{g}"))?)
            }
        }
        "taft" => {
            let p = nums(name, params, 2)?;
            hopf(taft(p[0], p[1])?)
        }
        "hat-taft" | "check-taft" | "taft-datum" => {
            let p = nums(name, params, 3)?;
            match name {
                "hat-taft" => hopf(hat_taft(p[0], p[1], p[2])?),
                "check-taft" => hopf(check_taft(p[0], p[1], p[2])?),
                _ => Document::Datum(save_datum(&taft_datum(p[0], p[1], p[2])?)),
            }
        }
        "cyclic-pairing" => {
            let p = nums(name, params, 2)?;
            let a = cyclic_group_algebra(p[0])?;
            let w = cyclic_pairing_values(p[0], p[1])?;
            let pairing = HopfPairing::from_values(a.clone(), a, &w)?;
            let r = crate::hopf::verify_pairing(&pairing)?;
            if !r.passed() {
                return Err(Error::Verification(r));
            }
            Document::Pairing(save_pairing(&pairing))
        }
        "rank-one" => {
            let p = nums(name, params, 2)?;
            Document::Braiding(save_braiding(&rank_one(p[0], p[1] as i64)?))
        }
        "sl21-M" | "sl21-N" => {
            let p = nums(name, params, 1)?;
            Document::Braiding(save_braiding(&sl21_by_name(name, p[0])?))
        }
        "s3-projection" => {
            nums(name, params, 0)?;
            Document::Datum(DatumDoc {
                b: None,
                omega: None,
                ..save_datum(&s3_datum()?)
            })
        }
        "s3-datum" => {
            nums(name, params, 0)?;
            Document::Datum(save_datum(&s3_datum()?))
        }
        "nichols-datum" => {
            if params.len() < 3 || params.len() > 4 {
                return Err(bad("nichols-datum takes a braiding preset, n, i and an optional cutoff"));
            }
            let p = nums(name, &params[1..], params.len() - 1)?;
            let b = sl21_by_name(&params[0], p[0])?;
            let i = p[1].checked_sub(1).ok_or_else(|| bad("generators are numbered from 1"))?;
            let cutoff = p.get(2).copied().unwrap_or(4 * p[0]);
            Document::Datum(save_datum(&nichols_dualization_datum(&b, i, cutoff)?))
        }
        _ => return Err(bad(format!("unknown preset {name:?}"))),
    })
}

/// Compares `r(T̂)` with `Ť`: the map `x^k g^m ↦ (x⊗1)^k (1⊗g)^m` must be
/// an invertible Hopf morphism `Ť → r(T̂)`, so the structure constants agree
/// exactly under its inverse `ψ`.
pub fn taft_comparison(n: usize, d: usize, c: usize, result: &PartialDualResult) -> Result<(Matrix, Report)> {
    let target = check_taft(n, d, c)?;
    let rh = &result.rh;
    let x_in_l = result
        .l
        .labels
        .iter()
        .position(|l| l == "x")
        .ok_or_else(|| Error::Incompatible("the coinvariants contain no x".into()))?;
    // L ⋊ B has basis l_i ⊗ b_j at index i·N + j
    let xbar = SparseVec::unit(x_in_l * n);
    let gbar = SparseVec::unit(1);
    let mut cols = Vec::with_capacity(n * d);
    let mut xk = rh.unit_vector();
    for _ in 0..d {
        let mut v = xk.clone();
        for _ in 0..n {
            cols.push(v.clone());
            v = rh.mul_vec(&v, &gbar);
        }
        xk = rh.mul_vec(&xk, &xbar);
    }
    let phi = Matrix::from_columns(rh.dim, cols);
    let mut report = verify_hopf_morphism(&phi, &target, rh)?;
    report.push("invertible", inverse(&phi).is_ok(), Some("singular".into()));
    Ok((phi, report))
}
